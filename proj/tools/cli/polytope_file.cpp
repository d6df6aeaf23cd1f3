#include "polytope_file.hpp"

#include <string>
#include <vector>

#include <json.hpp>

#include "hilbert/error.hpp"

namespace hilbert::cli {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, field + ": " + what);
}

void require_keys(const json& obj, const std::string& field,
                  std::initializer_list<const char*> keys) {
  if (!obj.is_object()) parse_fail(field, "expected an object");
  for (const char* k : keys) {
    if (!obj.contains(k)) parse_fail(field, std::string("missing field \"") + k + "\"");
  }
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : keys) known = known || item.key() == k;
    if (!known) parse_fail(field, "unknown field \"" + item.key() + "\"");
  }
}

double number(const json& v, const std::string& field) {
  if (!v.is_number()) parse_fail(field, "expected a number");
  return v.get<double>();
}

}  // namespace

Polytope parse_polytope_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  require_keys(doc, "<root>", {"dim", "facets"});

  const json& dim_field = doc["dim"];
  if (!dim_field.is_number_integer() || dim_field.get<long long>() < 1) {
    parse_fail("dim", "expected a positive integer");
  }
  const auto dim = static_cast<std::size_t>(dim_field.get<long long>());
  if (dim > kMaxDim) {
    throw Error(ErrorCode::SizeLimit,
                "dim " + std::to_string(dim) + " exceeds the limit " + std::to_string(kMaxDim));
  }

  const json& facets_field = doc["facets"];
  if (!facets_field.is_array()) parse_fail("facets", "expected an array");
  if (facets_field.size() > kMaxFacets) {
    throw Error(ErrorCode::SizeLimit, std::to_string(facets_field.size()) +
                                          " facets exceed the limit " +
                                          std::to_string(kMaxFacets));
  }

  std::vector<AffineFunctional> facets;
  facets.reserve(facets_field.size());
  for (std::size_t i = 0; i < facets_field.size(); ++i) {
    const std::string field = "facets[" + std::to_string(i) + "]";
    const json& f = facets_field[i];
    require_keys(f, field, {"normal", "offset"});
    const json& normal = f["normal"];
    if (!normal.is_array()) parse_fail(field + ".normal", "expected an array");
    if (normal.size() != dim) {
      parse_fail(field + ".normal", "expected " + std::to_string(dim) + " numbers, got " +
                                        std::to_string(normal.size()));
    }
    AffineFunctional af;
    af.gradient.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      af.gradient.push_back(
          number(normal[j], field + ".normal[" + std::to_string(j) + "]"));
    }
    af.offset = number(f["offset"], field + ".offset");
    facets.push_back(std::move(af));
  }
  return Polytope::validate(std::move(facets), dim);
}

}  // namespace hilbert::cli
