#include "statone/document.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

namespace statone {

namespace {

using Json = nlohmann::ordered_json;

// --- typed field access -----------------------------------------------

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

const Json& field(const Json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    fail("missing field \"" + key + "\"");
  }
  return *it;
}

int as_int(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    fail(where + " must be an integer");
  }
  auto wide = value.get<std::int64_t>();
  if (wide < std::numeric_limits<int>::min() ||
      wide > std::numeric_limits<int>::max()) {
    fail(where + " is out of range");
  }
  return static_cast<int>(wide);
}

std::vector<int> as_int_vector(const Json& value, const std::string& where) {
  if (!value.is_array()) {
    fail(where + " must be an array of integers");
  }
  std::vector<int> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(as_int(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::string> as_string_vector(const Json& value,
                                          const std::string& where) {
  if (!value.is_array()) {
    fail(where + " must be an array of strings");
  }
  std::vector<std::string> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_string()) {
      fail(where + "[" + std::to_string(i) + "] must be a string");
    }
    out.push_back(value[i].get<std::string>());
  }
  return out;
}

std::string as_string(const Json& value, const std::string& where) {
  if (!value.is_string()) {
    fail(where + " must be a string");
  }
  return value.get<std::string>();
}

bool as_bool(const Json& value, const std::string& where) {
  if (!value.is_boolean()) {
    fail(where + " must be a boolean");
  }
  return value.get<bool>();
}

// Every map entry must land inside [0, count).  Used for g, sigma, and the
// replayed certificate maps; a bad entry is a schema error, not a math one.
void require_in_range(const std::vector<int>& map, int count,
                      const std::string& where) {
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] < 0 || map[i] >= count) {
      fail(where + "[" + std::to_string(i) + "] = " + std::to_string(map[i]) +
           " is outside 0.." + std::to_string(count - 1));
    }
  }
}

// --- the five object kinds --------------------------------------------

Document parse_product(const Json& doc) {
  ProductDocument out;
  out.chains = as_int_vector(field(doc, "chains"), "chains");
  if (out.chains.empty()) {
    fail("chains must be nonempty");
  }
  for (std::size_t j = 0; j < out.chains.size(); ++j) {
    if (out.chains[j] < 1) {
      fail("chains[" + std::to_string(j) + "] must be a positive integer");
    }
  }
  if (doc.contains("sigma")) {
    std::vector<int> sigma = as_int_vector(doc["sigma"], "sigma");
    if (sigma.size() != out.chains.size()) {
      fail("sigma must have one entry per chain");
    }
    require_in_range(sigma, static_cast<int>(out.chains.size()), "sigma");
    out.sigma = std::move(sigma);
  }
  return out;
}

Document parse_table(const Json& doc) {
  TableDocument out;
  const Json& oplus = field(doc, "oplus");
  if (!oplus.is_array() || oplus.empty()) {
    fail("oplus must be a nonempty square matrix");
  }
  const int m = static_cast<int>(oplus.size());
  out.algebra.oplus.reserve(oplus.size());
  for (std::size_t i = 0; i < oplus.size(); ++i) {
    std::vector<int> row =
        as_int_vector(oplus[i], "oplus[" + std::to_string(i) + "]");
    if (static_cast<int>(row.size()) != m) {
      fail("oplus must be a square matrix");
    }
    require_in_range(row, m, "oplus[" + std::to_string(i) + "]");
    out.algebra.oplus.push_back(std::move(row));
  }
  out.algebra.star = as_int_vector(field(doc, "star"), "star");
  if (static_cast<int>(out.algebra.star.size()) != m) {
    fail("star must have one entry per element");
  }
  require_in_range(out.algebra.star, m, "star");
  out.algebra.zero = as_int(field(doc, "zero"), "zero");
  if (out.algebra.zero < 0 || out.algebra.zero >= m) {
    fail("zero is outside the carrier");
  }
  if (doc.contains("tau")) {
    std::vector<int> tau = as_int_vector(doc["tau"], "tau");
    if (static_cast<int>(tau.size()) != m) {
      fail("tau must have one entry per element");
    }
    require_in_range(tau, m, "tau");
    out.tau = std::move(tau);
  }
  return out;
}

Document parse_stone(const Json& doc) {
  StoneDocument out;
  out.points = as_string_vector(field(doc, "points"), "points");
  if (out.points.empty()) {
    fail("points must be nonempty");
  }
  std::set<std::string> seen(out.points.begin(), out.points.end());
  if (seen.size() != out.points.size()) {
    fail("points must be distinct");
  }
  out.g = as_int_vector(field(doc, "g"), "g");
  if (out.g.size() != out.points.size()) {
    fail("g must have one entry per point");
  }
  require_in_range(out.g, static_cast<int>(out.points.size()), "g");
  return out;
}

Document parse_bauer(const Json& doc) {
  BauerDocument out;
  out.vertices = as_int(field(doc, "vertices"), "vertices");
  if (out.vertices < 1) {
    fail("vertices must be a positive integer");
  }
  out.g = as_int_vector(field(doc, "g"), "g");
  if (static_cast<int>(out.g.size()) != out.vertices) {
    fail("g must have one entry per vertex");
  }
  require_in_range(out.g, out.vertices, "g");
  return out;
}

Document parse_cube(const Json& doc) {
  CubeDocument out;
  out.dim = as_int(field(doc, "dim"), "dim");
  if (out.dim < 1) {
    fail("dim must be a positive integer");
  }
  out.sigma = as_int_vector(field(doc, "sigma"), "sigma");
  if (static_cast<int>(out.sigma.size()) != out.dim) {
    fail("sigma must have one entry per coordinate");
  }
  require_in_range(out.sigma, out.dim, "sigma");
  return out;
}

// --- certificates ------------------------------------------------------

// Certificates replay from their stored fields alone, so the parser only
// enforces types; stale or corrupted cross-references are the replay
// functions' job to detect and report as failed checks.

std::vector<IdentityCheck> parse_checks(const Json& value) {
  if (!value.is_array()) {
    fail("checks must be an array");
  }
  std::vector<IdentityCheck> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    const Json& entry = value[i];
    if (!entry.is_object()) {
      fail("checks[" + std::to_string(i) + "] must be an object");
    }
    IdentityCheck check;
    check.name = as_string(field(entry, "name"),
                           "checks[" + std::to_string(i) + "].name");
    check.pass =
        as_bool(field(entry, "pass"), "checks[" + std::to_string(i) + "].pass");
    if (entry.contains("detail")) {
      check.detail = as_string(entry["detail"],
                               "checks[" + std::to_string(i) + "].detail");
    }
    out.push_back(std::move(check));
  }
  return out;
}

Json checks_json(const std::vector<IdentityCheck>& checks) {
  Json out = Json::array();
  for (const IdentityCheck& check : checks) {
    Json entry;
    entry["name"] = check.name;
    entry["pass"] = check.pass;
    if (!check.detail.empty()) {
      entry["detail"] = check.detail;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::string parse_side(const Json& doc, const char* first, const char* second) {
  std::string side = as_string(field(doc, "side"), "side");
  if (side != first && side != second) {
    fail("side must be \"" + std::string(first) + "\" or \"" + second + "\"");
  }
  return side;
}

std::vector<int> int_vector_or_empty(const Json& doc, const std::string& key) {
  if (!doc.contains(key)) {
    return {};
  }
  return as_int_vector(doc[key], key);
}

std::vector<std::string> string_vector_or_empty(const Json& doc,
                                                const std::string& key) {
  if (!doc.contains(key)) {
    return {};
  }
  return as_string_vector(doc[key], key);
}

int int_or_zero(const Json& doc, const std::string& key) {
  if (!doc.contains(key)) {
    return 0;
  }
  return as_int(doc[key], key);
}

Document parse_stone_certificate(const Json& doc) {
  StoneCertificate cert;
  cert.side = parse_side(doc, "algebra", "space");
  cert.input_orders = int_vector_or_empty(doc, "input_orders");
  cert.input_sigma = int_vector_or_empty(doc, "input_sigma");
  cert.input_points = string_vector_or_empty(doc, "input_points");
  cert.input_g = int_vector_or_empty(doc, "input_g");
  cert.dual_points = string_vector_or_empty(doc, "dual_points");
  cert.dual_g = int_vector_or_empty(doc, "dual_g");
  cert.dual_orders = int_vector_or_empty(doc, "dual_orders");
  cert.dual_sigma = int_vector_or_empty(doc, "dual_sigma");
  cert.double_map = int_vector_or_empty(doc, "double_map");
  if (doc.contains("u")) {
    const Json& u = doc["u"];
    if (!u.is_array()) {
      fail("u must be an array of integers");
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      const Json& mask = u[i];
      if (!mask.is_number_integer() || mask.get<std::int64_t>() < 0) {
        fail("u[" + std::to_string(i) + "] must be a nonnegative integer");
      }
      cert.u.push_back(mask.get<std::uint64_t>());
    }
  }
  cert.v = int_vector_or_empty(doc, "v");
  cert.checks = parse_checks(field(doc, "checks"));
  cert.pass = as_bool(field(doc, "pass"), "pass");
  return cert;
}

Document parse_bauer_certificate(const Json& doc) {
  BauerCertificate cert;
  cert.side = parse_side(doc, "algebra", "simplex");
  cert.input_dim = int_or_zero(doc, "input_dim");
  cert.input_sigma = int_vector_or_empty(doc, "input_sigma");
  cert.input_vertices = int_or_zero(doc, "input_vertices");
  cert.input_g = int_vector_or_empty(doc, "input_g");
  cert.dual_vertices = int_or_zero(doc, "dual_vertices");
  cert.dual_g = int_vector_or_empty(doc, "dual_g");
  cert.dual_dim = int_or_zero(doc, "dual_dim");
  cert.dual_sigma = int_vector_or_empty(doc, "dual_sigma");
  cert.double_map = int_vector_or_empty(doc, "double_map");
  cert.witness = int_vector_or_empty(doc, "witness");
  if (doc.contains("sample_points")) {
    const Json& rows = doc["sample_points"];
    if (!rows.is_array()) {
      fail("sample_points must be an array of arrays");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      cert.sample_points.push_back(as_string_vector(
          rows[i], "sample_points[" + std::to_string(i) + "]"));
    }
  }
  if (doc.contains("object_class")) {
    cert.object_class = as_string(doc["object_class"], "object_class");
  }
  cert.checks = parse_checks(field(doc, "checks"));
  cert.pass = as_bool(field(doc, "pass"), "pass");
  return cert;
}

// --- printing ----------------------------------------------------------

void put_if_nonempty(Json& doc, const char* key, const std::vector<int>& v) {
  if (!v.empty()) {
    doc[key] = v;
  }
}

void put_if_nonempty(Json& doc, const char* key,
                     const std::vector<std::string>& v) {
  if (!v.empty()) {
    doc[key] = v;
  }
}

void put_if_positive(Json& doc, const char* key, int n) {
  if (n > 0) {
    doc[key] = n;
  }
}

Json document_json(const Document& doc) {
  Json out;
  if (const auto* product = std::get_if<ProductDocument>(&doc)) {
    out["kind"] = "product";
    out["chains"] = product->chains;
    if (product->sigma) {
      out["sigma"] = *product->sigma;
    }
  } else if (const auto* table = std::get_if<TableDocument>(&doc)) {
    out["kind"] = "table";
    out["oplus"] = table->algebra.oplus;
    out["star"] = table->algebra.star;
    out["zero"] = table->algebra.zero;
    if (table->tau) {
      out["tau"] = *table->tau;
    }
  } else if (const auto* stone = std::get_if<StoneDocument>(&doc)) {
    out["kind"] = "stone";
    out["points"] = stone->points;
    out["g"] = stone->g;
  } else if (const auto* bauer = std::get_if<BauerDocument>(&doc)) {
    out["kind"] = "bauer";
    out["vertices"] = bauer->vertices;
    out["g"] = bauer->g;
  } else if (const auto* cube = std::get_if<CubeDocument>(&doc)) {
    out["kind"] = "cube";
    out["dim"] = cube->dim;
    out["sigma"] = cube->sigma;
  } else if (const auto* cert = std::get_if<StoneCertificate>(&doc)) {
    out["kind"] = "stone-certificate";
    out["side"] = cert->side;
    put_if_nonempty(out, "input_orders", cert->input_orders);
    put_if_nonempty(out, "input_sigma", cert->input_sigma);
    put_if_nonempty(out, "input_points", cert->input_points);
    put_if_nonempty(out, "input_g", cert->input_g);
    put_if_nonempty(out, "dual_points", cert->dual_points);
    put_if_nonempty(out, "dual_g", cert->dual_g);
    put_if_nonempty(out, "dual_orders", cert->dual_orders);
    put_if_nonempty(out, "dual_sigma", cert->dual_sigma);
    put_if_nonempty(out, "double_map", cert->double_map);
    if (!cert->u.empty()) {
      out["u"] = cert->u;
    }
    put_if_nonempty(out, "v", cert->v);
    out["checks"] = checks_json(cert->checks);
    out["pass"] = cert->pass;
  } else {
    const auto& bauer_cert = std::get<BauerCertificate>(doc);
    out["kind"] = "bauer-certificate";
    out["side"] = bauer_cert.side;
    put_if_positive(out, "input_dim", bauer_cert.input_dim);
    put_if_nonempty(out, "input_sigma", bauer_cert.input_sigma);
    put_if_positive(out, "input_vertices", bauer_cert.input_vertices);
    put_if_nonempty(out, "input_g", bauer_cert.input_g);
    put_if_positive(out, "dual_vertices", bauer_cert.dual_vertices);
    put_if_nonempty(out, "dual_g", bauer_cert.dual_g);
    put_if_positive(out, "dual_dim", bauer_cert.dual_dim);
    put_if_nonempty(out, "dual_sigma", bauer_cert.dual_sigma);
    put_if_nonempty(out, "double_map", bauer_cert.double_map);
    put_if_nonempty(out, "witness", bauer_cert.witness);
    if (!bauer_cert.sample_points.empty()) {
      out["sample_points"] = bauer_cert.sample_points;
    }
    if (!bauer_cert.object_class.empty()) {
      out["object_class"] = bauer_cert.object_class;
    }
    out["checks"] = checks_json(bauer_cert.checks);
    out["pass"] = bauer_cert.pass;
  }
  return out;
}

}  // namespace

std::string document_kind(const Document& doc) {
  static const char* names[] = {"product",           "table", "stone",
                                "bauer",             "cube",  "stone-certificate",
                                "bauer-certificate"};
  return names[doc.index()];
}

Document parse_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& error) {
    fail(std::string("invalid JSON: ") + error.what());
  }
  if (!doc.is_object()) {
    fail("document must be a JSON object");
  }
  std::string kind = as_string(field(doc, "kind"), "kind");
  if (kind == "product") {
    return parse_product(doc);
  }
  if (kind == "table") {
    return parse_table(doc);
  }
  if (kind == "stone") {
    return parse_stone(doc);
  }
  if (kind == "bauer") {
    return parse_bauer(doc);
  }
  if (kind == "cube") {
    return parse_cube(doc);
  }
  if (kind == "stone-certificate") {
    return parse_stone_certificate(doc);
  }
  if (kind == "bauer-certificate") {
    return parse_bauer_certificate(doc);
  }
  fail("unknown document kind \"" + kind + "\"");
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

std::string print_document(const Document& doc) {
  return document_json(doc).dump(2) + "\n";
}

}  // namespace statone
