#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "cli/polytope_file.hpp"
#include "hilbert/hilbert.hpp"

namespace hilbert::cli {
namespace {

namespace fs = std::filesystem;

const char* kSquare =
    R"({"dim":2,"facets":[{"normal":[1,0],"offset":0},{"normal":[-1,0],"offset":1},)"
    R"({"normal":[0,1],"offset":0},{"normal":[0,-1],"offset":1}]})";

ErrorCode parse_error_code(const std::string& text) {
  try {
    parse_polytope_file(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::InvalidArgument;
}

class CliRun : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hilbertctl_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    square_ = write("square.json", kSquare);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  int call(std::vector<std::string> args) {
    args.insert(args.begin(), "hilbertctl");
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  fs::path dir_;
  std::string square_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST(PolytopeFile, ParsesTheSquare) {
  const Polytope p = parse_polytope_file(kSquare);
  EXPECT_EQ(p.dim(), 2u);
  EXPECT_EQ(p.num_facets(), 4u);
}

TEST(PolytopeFile, ZeroNormalNamesTheFacet) {
  try {
    parse_polytope_file(
        R"({"dim":1,"facets":[{"normal":[1],"offset":0},{"normal":[0],"offset":1},)"
        R"({"normal":[-1],"offset":1}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroGradient);
    ASSERT_TRUE(e.index().has_value());
    EXPECT_EQ(*e.index(), 1u);
  }
}

TEST(PolytopeFile, ValidationErrors) {
  EXPECT_EQ(parse_error_code(R"({"dim":1,"facets":[{"normal":[1],"offset":0}]})"),
            ErrorCode::Unbounded);
  EXPECT_EQ(parse_error_code(
                R"({"dim":1,"facets":[{"normal":[1],"offset":-2},{"normal":[-1],"offset":1}]})"),
            ErrorCode::EmptyInterior);
}

TEST(PolytopeFile, ParseErrorsNameTheField) {
  const auto message = [](const std::string& text) {
    try {
      parse_polytope_file(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError);
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(R"({"dim":2,"facets":[{"normal":[1,0],"offset":0},{"normal":[1],"offset":1}]})")
                .find("facets[1].normal"),
            std::string::npos);
  EXPECT_NE(message(R"({"dim":1,"facets":[],"extra":1})").find("extra"), std::string::npos);
  EXPECT_NE(message(R"({"dim":1,"facets":[{"normal":[1]}]})").find("offset"), std::string::npos);
  EXPECT_NE(message(R"({"dim":1,"facets":[{"normal":["a"],"offset":0}]})").find("normal[0]"),
            std::string::npos);
  EXPECT_NE(message(R"({"facets":[]})").find("dim"), std::string::npos);
  EXPECT_NE(message(R"({"dim":1.5,"facets":[]})").find("dim"), std::string::npos);
  EXPECT_FALSE(message("{not json").empty());
}

TEST(PolytopeFile, SizeLimits) {
  EXPECT_EQ(parse_error_code(R"({"dim":9,"facets":[]})"), ErrorCode::SizeLimit);
  std::string many = R"({"dim":1,"facets":[)";
  for (int i = 0; i < 65; ++i) many += std::string(i ? "," : "") + R"({"normal":[1],"offset":1})";
  many += "]}";
  EXPECT_EQ(parse_error_code(many), ErrorCode::SizeLimit);
}

TEST(Format, SeventeenDigits) {
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_F(CliRun, Validate) {
  EXPECT_EQ(call({"validate", square_}), kExitOk);
  EXPECT_EQ(out_.str(), "valid dim 2 facets 4\n");
}

TEST_F(CliRun, ValidateWarnsAboutRedundancy) {
  const std::string f = write(
      "extra.json",
      R"({"dim":1,"facets":[{"normal":[1],"offset":0},{"normal":[-1],"offset":1},{"normal":[-1],"offset":2}]})");
  EXPECT_EQ(call({"validate", f}), kExitOk);
  EXPECT_EQ(out_.str(), "valid dim 1 facets 3\n");
  EXPECT_NE(err_.str().find("facet 2 is redundant"), std::string::npos);
}

TEST_F(CliRun, DistancePrintsHalfLogThree) {
  EXPECT_EQ(call({"distance", square_, "--x", "0.5", "0.5", "--y", "0.75", "0.5"}), kExitOk);
  EXPECT_EQ(out_.str(), "0.54930614433405489\n");
  EXPECT_EQ(std::stod(out_.str()), 0.5 * std::log(3.0));
}

TEST_F(CliRun, Norm) {
  EXPECT_EQ(call({"norm", square_, "--x", "0.5", "0.5", "--w", "1", "0"}), kExitOk);
  EXPECT_EQ(out_.str(), "2\n");
}

TEST_F(CliRun, InvertAtZero) {
  EXPECT_EQ(call({"invert", square_, "--y", "0", "0"}), kExitOk);
  EXPECT_EQ(out_.str(), "0.5 0.5\n");
}

TEST_F(CliRun, EmbedThenInvertRoundTrips) {
  for (const auto& x : std::vector<std::pair<std::string, std::string>>{
           {"0.2", "0.9"}, {"0.75", "0.5"}, {"0.001", "0.999"}}) {
    ASSERT_EQ(call({"embed", square_, "--x", x.first, x.second}), kExitOk);
    std::istringstream image(out_.str());
    std::string y0, y1;
    image >> y0 >> y1;
    ASSERT_EQ(call({"invert", square_, "--y", y0, y1}), kExitOk);
    std::istringstream back(out_.str());
    double x0 = 0, x1 = 0;
    back >> x0 >> x1;
    EXPECT_LE(std::hypot(x0 - std::stod(x.first), x1 - std::stod(x.second)), 1e-8);
  }
}

TEST_F(CliRun, CertifyIsByteStable) {
  ASSERT_EQ(call({"certify", square_, "--samples", "1000", "--seed", "7"}), kExitOk);
  const std::string first = out_.str();
  ASSERT_EQ(call({"certify", square_, "--samples", "1000", "--seed", "7"}), kExitOk);
  EXPECT_EQ(out_.str(), first);
  ASSERT_EQ(call({"certify", square_, "--samples", "1000", "--seed", "7", "--threads", "4",
                  "--out", path("report.txt")}),
            kExitOk);
  EXPECT_EQ(out_.str(), first);
  EXPECT_EQ(slurp(path("report.txt")), first);
  EXPECT_NE(first.find("seed 7\n"), std::string::npos);
  EXPECT_NE(first.find("violations 0\n"), std::string::npos);
  EXPECT_NE(first.find("input_sha256 " + sha256_hex(kSquare)), std::string::npos);
  EXPECT_EQ(first.find("elapsed"), std::string::npos);
  EXPECT_NE(err_.str().find("elapsed_seconds"), std::string::npos);
}

TEST_F(CliRun, CertifySynthesizesSeed) {
  ASSERT_EQ(call({"certify", square_, "--samples", "50"}), kExitOk);
  const std::string err = err_.str();
  ASSERT_EQ(err.rfind("seed ", 0), 0u);
  const std::string seed = err.substr(5, err.find('\n') - 5);
  EXPECT_NE(out_.str().find("seed " + seed + "\n"), std::string::npos);
}

TEST_F(CliRun, SphereCsv) {
  ASSERT_EQ(call({"sphere", square_, "--center", "0.5", "0.5", "--radius", "0.5", "--count",
                  "6", "--out", path("s.csv")}),
            kExitOk);
  std::istringstream csv(slurp(path("s.csv")));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "x0,x1");
  const Polytope p = parse_polytope_file(kSquare);
  const InteriorPoint c(p, {0.5, 0.5});
  int rows = 0;
  while (std::getline(csv, line)) {
    const auto comma = line.find(',');
    const InteriorPoint z(p, {std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
    EXPECT_NEAR(distance(p, c, z), 0.5, 1e-12);
    ++rows;
  }
  EXPECT_EQ(rows, 6);
}

TEST_F(CliRun, GeodesicCsv) {
  ASSERT_EQ(call({"geodesic", square_, "--x", "0.5", "0.5", "--y", "0.75", "0.5", "--k", "2",
                  "--out", path("g.csv")}),
            kExitOk);
  EXPECT_EQ(slurp(path("g.csv")), "x0,x1\n0.5,0.5\n0.6339745962155614,0.5\n0.75,0.5\n");
}

TEST_F(CliRun, ExitCodes) {
  EXPECT_EQ(call({}), kExitUsage);
  EXPECT_EQ(call({"frobnicate"}), kExitUsage);
  EXPECT_EQ(call({"distance", square_, "--x", "0.5"}), kExitUsage);
  EXPECT_EQ(call({"distance", square_, "--x", "0.5", "0.5", "0.5", "--y", "0.75", "0.5"}),
            kExitUsage);
  EXPECT_EQ(call({"validate", path("missing.json")}), kExitUsage);

  const std::string ray = write("ray.json", R"({"dim":1,"facets":[{"normal":[1],"offset":0}]})");
  EXPECT_EQ(call({"validate", ray}), kExitValidation);
  EXPECT_NE(err_.str().find("Unbounded"), std::string::npos);
  EXPECT_EQ(call({"validate", write("bad.json", "{")}), kExitValidation);
  EXPECT_NE(err_.str().find("ParseError"), std::string::npos);
  EXPECT_EQ(call({"distance", square_, "--x", "1.5", "0.5", "--y", "0.75", "0.5"}),
            kExitValidation);
  EXPECT_NE(err_.str().find("NotInterior"), std::string::npos);

  EXPECT_EQ(call({"invert", square_, "--y", "60", "-60", "--max-iter", "1"}), kExitNumerical);
  EXPECT_NE(err_.str().find("NoConvergence"), std::string::npos);
}

}  // namespace
}  // namespace hilbert::cli
