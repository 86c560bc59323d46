#include "fncalc/spec_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fncalc/error.hpp"

namespace fncalc {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& doc, const char* name) {
  if (!doc.is_object()) fail("spec must be a JSON object");
  auto it = doc.find(name);
  if (it == doc.end()) fail(std::string("missing field '") + name + "'");
  return *it;
}

Chart chart_from(const json& list, const char* name) {
  if (!list.is_array()) fail(std::string("field '") + name + "' must be a list of names");
  std::vector<std::string> names;
  for (const auto& v : list) {
    if (!v.is_string()) fail(std::string("field '") + name + "' must be a list of names");
    names.push_back(v.get<std::string>());
  }
  try {
    return Chart(std::move(names));
  } catch (const Error& e) {
    fail(std::string("field '") + name + "': " + e.what());
  }
}

Poly entry_poly(const Chart& chart, const json& v) {
  if (v.is_string()) return parse_poly(chart, v.get<std::string>());
  if (v.is_number_integer()) return Poly::constant(chart, Rational(v.get<long>()));
  fail("matrix entries must be polynomial strings or integers");
}

std::vector<std::vector<Poly>> matrix_from(const Chart& chart, const json& rows, std::size_t nrows, std::size_t ncols,
                                           const char* name) {
  if (!rows.is_array() || rows.size() != nrows) {
    fail(std::string("field '") + name + "' must have " + std::to_string(nrows) + " rows");
  }
  std::vector<std::vector<Poly>> out;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != ncols) {
      fail(std::string("field '") + name + "' rows must have " + std::to_string(ncols) + " entries");
    }
    std::vector<Poly> r;
    for (const auto& v : row) r.push_back(entry_poly(chart, v));
    out.push_back(std::move(r));
  }
  return out;
}

json names_json(const Chart& chart) { return json(chart.coord_names()); }

}  // namespace

Connection parse_connection_spec(std::string_view text) {
  const json doc = parse_json(text);
  const json& dim = field(doc, "dim");
  const Chart chart = chart_from(field(doc, "coords"), "coords");
  if (!dim.is_number_integer() || dim.get<long>() != static_cast<long>(chart.dim())) {
    fail("field 'dim' must equal the number of coordinates");
  }
  const auto phi = matrix_from(chart, field(doc, "phi"), chart.dim(), chart.dim(), "phi");
  return make_connection(chart, phi);
}

std::string render_connection_spec(const Connection& conn) {
  const std::size_t n = conn.chart().dim();
  json phi = json::array();
  for (std::size_t r = 0; r < n; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < n; ++c) row.push_back(to_string(conn.phi().matrix_entry(r, c)));
    phi.push_back(row);
  }
  json doc = {{"dim", n}, {"coords", names_json(conn.chart())}, {"phi", phi}};
  return doc.dump(2) + "\n";
}

ProductBundle parse_bundle_spec(std::string_view text) {
  const json doc = parse_json(text);
  const Chart base = chart_from(field(doc, "base_coords"), "base_coords");
  const Chart fiber = chart_from(field(doc, "fiber_coords"), "fiber_coords");
  std::vector<std::string> names = base.coord_names();
  names.insert(names.end(), fiber.coord_names().begin(), fiber.coord_names().end());
  Chart total;
  try {
    total = Chart(names);
  } catch (const Error& e) {
    fail(std::string("base and fiber coordinates: ") + e.what());
  }
  auto gamma = matrix_from(total, field(doc, "gamma"), fiber.dim(), base.dim(), "gamma");
  return ProductBundle(base, fiber, std::move(gamma));
}

std::string render_bundle_spec(const ProductBundle& pb) {
  json gamma = json::array();
  for (const auto& row : pb.gamma()) {
    json r = json::array();
    for (const auto& g : row) r.push_back(to_string(g));
    gamma.push_back(r);
  }
  json doc = {{"base_coords", names_json(pb.base())}, {"fiber_coords", names_json(pb.fiber())}, {"gamma", gamma}};
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "write to '" + path + "' failed");
}

}  // namespace fncalc
