#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "hilbert/embedding.hpp"
#include "hilbert/error.hpp"
#include "hilbert/metric.hpp"
#include "polytope_file.hpp"

namespace hilbert::cli {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

namespace {

std::string join(std::span<const double> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += format_number(v[i]);
  }
  return s;
}

void write_csv(const std::string& path, std::size_t dim,
               const std::vector<InteriorPoint>& points) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw CLI::FileError("cannot open " + path + " for writing");
  for (std::size_t j = 0; j < dim; ++j) file << (j ? ",x" : "x") << j;
  file << '\n';
  for (const auto& p : points) {
    const auto& c = p.coords();
    for (std::size_t j = 0; j < c.size(); ++j) file << (j ? "," : "") << format_number(c[j]);
    file << '\n';
  }
  if (!file) throw CLI::FileError("failed writing " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw CLI::FileError("cannot read " + path);
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

Vector point_arg(const Polytope& p, const Vector& v, const char* name) {
  if (v.size() != p.dim()) {
    throw CLI::ValidationError(std::string("--") + name,
                               "expected " + std::to_string(p.dim()) + " values, got " +
                                   std::to_string(v.size()));
  }
  return v;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::DimensionMismatch:
      return kExitUsage;
    case ErrorCode::NoConvergence:
    case ErrorCode::NotPositiveDefinite:
    case ErrorCode::CycleLimit:
      return kExitNumerical;
    default:
      return kExitValidation;
  }
}

struct Inputs {
  std::string polytope_path;
  Vector x, y, w, center;
  double tol = 1e-10;
  std::size_t max_iter = 100;
  std::size_t samples = 1000;
  std::optional<std::uint64_t> seed;
  std::size_t threads = 1;
  double radius = 0.0;
  std::size_t count = 0;
  std::size_t k = 0;
  std::string out_path;
};

}  // namespace

std::string certify_report(const Polytope& p, const std::string& input_digest,
                           std::size_t samples, std::uint64_t seed,
                           const SamplingOptions& options) {
  const CertifiedConstants k = certified_constants(p);
  const DistortionReport d = empirical_distortion(p, samples, seed, options);

  std::ostringstream r;
  r << "command certify\n";
  r << "input_sha256 " << input_digest << '\n';
  r << "dim " << p.dim() << '\n';
  r << "facets " << p.num_facets() << '\n';
  r << "redundant_facets " << p.redundant_facets().size() << '\n';
  r << "seed " << seed << '\n';
  r << "samples " << d.samples << '\n';
  r << "pairs " << d.pairs << '\n';
  r << "R " << format_number(k.R) << '\n';
  r << "D_upper " << format_number(k.D_upper) << '\n';
  r << "M " << format_number(k.M) << '\n';
  r << "c1 " << format_number(k.c1) << '\n';
  r << "C1 " << format_number(k.C1) << '\n';
  r << "lip_upper " << format_number(k.lip_upper) << '\n';
  r << "eucl_lower " << format_number(k.eucl_lower) << '\n';
  r << "ratio_min " << format_number(d.ratio_min) << '\n';
  r << "ratio_max " << format_number(d.ratio_max) << '\n';
  r << "directional_min " << format_number(d.directional_min) << '\n';
  if (p.num_facets() <= 24) {
    r << "cp_constant " << format_number(simple_cp_constant(p)) << '\n';
  } else {
    r << "cp_constant skipped\n";
  }
  r << "lipschitz_violations " << d.lipschitz_violations << '\n';
  r << "euclidean_violations " << d.euclidean_violations << '\n';
  r << "log_ratio_violations " << d.log_ratio_violations << '\n';
  r << "directional_violations " << d.directional_violations << '\n';
  r << "violations " << d.violations << '\n';
  return r.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert geometry of convex polytopes", "hilbertctl"};
  app.require_subcommand(1);
  Inputs in;

  auto add_polytope = [&](CLI::App* sub) {
    sub->add_option("polytope", in.polytope_path, "Polytope JSON file")->required();
  };
  auto add_point = [&](CLI::App* sub, const std::string& flag, Vector& target,
                       const std::string& help) {
    sub->add_option(flag, target, help)->required()->allow_extra_args()->expected(1, -1);
  };

  auto* validate = app.add_subcommand("validate", "Check a polytope file");
  add_polytope(validate);

  auto* dist = app.add_subcommand("distance", "Hilbert distance between two points");
  add_polytope(dist);
  add_point(dist, "--x", in.x, "First point");
  add_point(dist, "--y", in.y, "Second point");

  auto* norm = app.add_subcommand("norm", "Finsler norm of a tangent vector");
  add_polytope(norm);
  add_point(norm, "--x", in.x, "Base point");
  add_point(norm, "--w", in.w, "Tangent vector");

  auto* emb = app.add_subcommand("embed", "Image of a point under the log-slack embedding");
  add_polytope(emb);
  add_point(emb, "--x", in.x, "Point");

  auto* inv = app.add_subcommand("invert", "Preimage of a target point");
  add_polytope(inv);
  add_point(inv, "--y", in.y, "Target");
  inv->add_option("--tol", in.tol, "Residual tolerance")->capture_default_str()
      ->check(CLI::PositiveNumber);
  inv->add_option("--max-iter", in.max_iter, "Newton iteration cap")->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* cert = app.add_subcommand("certify", "Certified constants and empirical distortion");
  add_polytope(cert);
  cert->add_option("--samples", in.samples, "Number of sampled points")->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
  cert->add_option("--seed", in.seed, "Random seed (printed when omitted)");
  cert->add_option("--threads", in.threads, "Sampling threads")->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  cert->add_option("--out", in.out_path, "Also write the report to this file");

  auto* sphere = app.add_subcommand("sphere", "Sample a planar metric sphere to CSV");
  add_polytope(sphere);
  add_point(sphere, "--center", in.center, "Sphere center");
  sphere->add_option("--radius", in.radius, "Hilbert radius")->required();
  sphere->add_option("--count", in.count, "Number of points")->required()
      ->check(CLI::Range(std::size_t{3}, std::size_t{1000000}));
  sphere->add_option("--out", in.out_path, "CSV output file")->required();

  auto* geo = app.add_subcommand("geodesic", "Equally spaced points on a segment to CSV");
  add_polytope(geo);
  add_point(geo, "--x", in.x, "Start point");
  add_point(geo, "--y", in.y, "End point");
  geo->add_option("--k", in.k, "Number of segments")->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
  geo->add_option("--out", in.out_path, "CSV output file")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::string text = read_file(in.polytope_path);
    const Polytope p = parse_polytope_file(text);

    if (validate->parsed()) {
      for (std::size_t i : p.redundant_facets()) {
        err << "warning: facet " << i << " is redundant\n";
      }
      out << "valid dim " << p.dim() << " facets " << p.num_facets() << '\n';
    } else if (dist->parsed()) {
      const InteriorPoint x(p, point_arg(p, in.x, "x"));
      const InteriorPoint y(p, point_arg(p, in.y, "y"));
      out << format_number(distance(p, x, y)) << '\n';
    } else if (norm->parsed()) {
      const InteriorPoint x(p, point_arg(p, in.x, "x"));
      out << format_number(finsler_norm(p, x, point_arg(p, in.w, "w"))) << '\n';
    } else if (emb->parsed()) {
      const InteriorPoint x(p, point_arg(p, in.x, "x"));
      out << join(embed(p, x).coords) << '\n';
    } else if (inv->parsed()) {
      const Inversion result =
          invert(p, EmbeddedPoint{point_arg(p, in.y, "y")}, {in.tol, in.max_iter});
      out << join(result.point.coords()) << '\n';
    } else if (cert->parsed()) {
      if (!in.seed) {
        in.seed = (std::uint64_t{std::random_device{}()} << 32) | std::random_device{}();
        err << "seed " << *in.seed << '\n';
      }
      const auto start = std::chrono::steady_clock::now();
      const std::string report =
          certify_report(p, sha256_hex(text), in.samples, *in.seed, {in.threads});
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      out << report;
      if (!in.out_path.empty()) {
        std::ofstream file(in.out_path, std::ios::binary);
        file << report;
        if (!file) throw CLI::FileError("failed writing " + in.out_path);
      }
      char seconds[32];
      std::snprintf(seconds, sizeof seconds, "%.6f", elapsed.count());
      err << "elapsed_seconds " << seconds << '\n';
      if (report.find("\nviolations 0\n") == std::string::npos) {
        err << "error: certified bound violated\n";
        return kExitNumerical;
      }
    } else if (sphere->parsed()) {
      const InteriorPoint c(p, point_arg(p, in.center, "center"));
      write_csv(in.out_path, p.dim(), metric_sphere(p, c, in.radius, in.count));
    } else if (geo->parsed()) {
      const InteriorPoint x(p, point_arg(p, in.x, "x"));
      const InteriorPoint y(p, point_arg(p, in.y, "y"));
      write_csv(in.out_path, p.dim(), geodesic_points(p, x, y, in.k));
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitOk;
}

}  // namespace hilbert::cli
