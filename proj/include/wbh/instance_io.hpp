#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wbh/hopf_modules.hpp"
#include "wbh/instances.hpp"

namespace wbh {

struct InstanceFile {
  WeakBraidedBimonad B;
  std::optional<std::vector<int>> grading;  // set when tau was written as a graded flip
  std::optional<nlohmann::json> expected;   // free-form regression pins
};

namespace detail {

using nlohmann::json;

inline std::size_t as_index(const json& v, std::size_t bound, const std::string& loc) {
  if (!v.is_number_integer()) throw SchemaError(loc, "index must be an integer");
  auto k = v.get<long long>();
  if (k < 0 || static_cast<std::size_t>(k) >= bound)
    throw IndexOutOfRange(loc, "index " + std::to_string(k) + " out of range 0.." + std::to_string(bound - 1));
  return static_cast<std::size_t>(k);
}

inline Rational as_rational(const json& v, const std::string& loc) {
  if (!v.is_string()) throw SchemaError(loc, "coefficient must be a string like \"p/q\"");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(loc, e.what());
  }
}

// Reads a sparse list of [idx..., "p/q"] rows. place(indices, value) stores it.
template <class F>
void read_entries(const json& doc, const std::string& key, const std::vector<std::size_t>& bounds, F place) {
  if (!doc.contains(key)) throw SchemaError(key, "missing field");
  const json& list = doc.at(key);
  if (!list.is_array()) throw SchemaError(key, "expected a list of entries");
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t r = 0; r < list.size(); ++r) {
    const std::string loc = key + "[" + std::to_string(r) + "]";
    const json& row = list[r];
    if (!row.is_array() || row.size() != bounds.size() + 1)
      throw SchemaError(loc, "expected " + std::to_string(bounds.size()) + " indices and a coefficient");
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < bounds.size(); ++k)
      idx.push_back(as_index(row[k], bounds[k], loc + "[" + std::to_string(k) + "]"));
    if (!seen.insert(idx).second) throw SchemaError(loc, "duplicate entry");
    place(idx, as_rational(row[bounds.size()], loc + "[" + std::to_string(bounds.size()) + "]"));
  }
}

inline std::vector<int> detect_grading(const Mat& tau, std::size_t n) {
  std::vector<int> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = tau(i * n + i, i * n + i) == Rational(-1) ? 1 : 0;
  return g;
}

inline void write_entries(std::ostream& os, const std::string& key, const std::vector<std::string>& rows, bool last) {
  os << "  \"" << key << "\": [";
  for (std::size_t k = 0; k < rows.size(); ++k) os << (k ? ",\n    " : "\n    ") << rows[k];
  os << (rows.empty() ? "]" : "\n  ]") << (last ? "\n" : ",\n");
}

inline std::string entry(std::initializer_list<std::size_t> idx, const Rational& c) {
  std::string s = "[";
  for (auto k : idx) s += std::to_string(k) + ", ";
  return s + "\"" + c.str() + "\"]";
}

inline std::vector<std::string> tau_rows(const Mat& t, std::size_t n) {
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (!t(k * n + l, i * n + j).is_zero()) rows.push_back(entry({i, j, k, l}, t(k * n + l, i * n + j)));
  return rows;
}

}  // namespace detail

inline InstanceFile parse_instance(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("$", "expected an object");
  static const std::set<std::string> known{"name", "dim", "m", "e", "delta", "eps", "tau", "tau_prime", "grading", "expected"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!known.count(it.key())) throw SchemaError(it.key(), "unknown field");
  if (!doc.contains("name") || !doc["name"].is_string()) throw SchemaError("name", "missing or not a string");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
    throw SchemaError("dim", "missing or not a positive integer");
  const std::size_t n = doc["dim"].get<std::size_t>();

  Mat m(n, n * n), e(n, 1), d(n * n, n), eps(1, n);
  detail::read_entries(doc, "m", {n, n, n}, [&](auto& i, Rational c) { m(i[2], i[0] * n + i[1]) = c; });
  detail::read_entries(doc, "e", {n}, [&](auto& i, Rational c) { e(i[0], 0) = c; });
  detail::read_entries(doc, "delta", {n, n, n}, [&](auto& i, Rational c) { d(i[1] * n + i[2], i[0]) = c; });
  detail::read_entries(doc, "eps", {n}, [&](auto& i, Rational c) { eps(0, i[0]) = c; });

  InstanceFile f;
  if (doc.contains("grading")) {
    const auto& g = doc["grading"];
    if (!g.is_array() || g.size() != n) throw SchemaError("grading", "expected a list of " + std::to_string(n) + " entries");
    std::vector<int> gr;
    for (std::size_t k = 0; k < n; ++k) {
      if (!g[k].is_number_integer() || (g[k] != 0 && g[k] != 1))
        throw SchemaError("grading[" + std::to_string(k) + "]", "must be 0 or 1");
      gr.push_back(g[k].get<int>());
    }
    f.grading = gr;
  }
  auto read_tau = [&](const std::string& key) {
    const auto& v = doc.at(key);
    if (v.is_string()) {
      if (v != "flip") throw SchemaError(key, "the only named braiding is \"flip\"");
      return f.grading ? graded_flip(*f.grading) : flip(n);
    }
    Mat t(n * n, n * n);
    detail::read_entries(doc, key, {n, n, n, n},
                         [&](auto& i, Rational c) { t(i[2] * n + i[3], i[0] * n + i[1]) = c; });
    return t;
  };
  if (!doc.contains("tau")) throw SchemaError("tau", "missing field");
  Mat tau = read_tau("tau");
  std::optional<Mat> tau_prime;
  if (doc.contains("tau_prime")) tau_prime = read_tau("tau_prime");
  if (doc.contains("expected")) {
    if (!doc["expected"].is_object()) throw SchemaError("expected", "must be an object");
    f.expected = doc["expected"];
  }
  try {
    f.B = make_bimonad(doc["name"].get<std::string>(), m, e, d, eps, tau, tau_prime);
  } catch (const InvalidSpec& ex) {
    throw SchemaError("tau_prime", ex.what());
  }
  return f;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline InstanceFile load_instance_file(const std::string& path) { return parse_instance(read_file(path)); }
inline WeakBraidedBimonad load(const std::string& path) { return load_instance_file(path).B; }

// Canonical text: fixed key order, one sparse entry per line in index order,
// zero coefficients omitted, tau written as "flip" (plus grading) when it is one,
// tau_prime omitted when it is the inverse of tau.
inline std::string serialize_instance(const WeakBraidedBimonad& B, const std::optional<nlohmann::json>& expected = std::nullopt) {
  const std::size_t n = B.dim();
  const Mat &m = B.m().matrix(), &e = B.e().matrix(), &d = B.delta().matrix(), &eps = B.eps().matrix();
  const Mat &t = B.tau().matrix(), &tp = B.tau_prime().matrix();
  std::vector<std::string> mr, er, dr, epr;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!m(k, i * n + j).is_zero()) mr.push_back(detail::entry({i, j, k}, m(k, i * n + j)));
  for (std::size_t i = 0; i < n; ++i)
    if (!e(i, 0).is_zero()) er.push_back(detail::entry({i}, e(i, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!d(j * n + k, i).is_zero()) dr.push_back(detail::entry({i, j, k}, d(j * n + k, i)));
  for (std::size_t i = 0; i < n; ++i)
    if (!eps(0, i).is_zero()) epr.push_back(detail::entry({i}, eps(0, i)));

  auto grading = detail::detect_grading(t, n);
  const bool graded = t == graded_flip(grading);
  const bool any_odd = std::count(grading.begin(), grading.end(), 1) > 0;
  std::optional<Mat> default_tp;
  try {
    default_tp = invert(t);
  } catch (const NotInvertible&) {
  }

  std::ostringstream os;
  os << "{\n";
  os << "  \"name\": " << nlohmann::json(B.name).dump() << ",\n";
  os << "  \"dim\": " << n << ",\n";
  detail::write_entries(os, "m", mr, false);
  detail::write_entries(os, "e", er, false);
  detail::write_entries(os, "delta", dr, false);
  detail::write_entries(os, "eps", epr, false);
  const bool write_tp = !default_tp || !(*default_tp == tp);
  const bool more_after_tau = write_tp || (graded && any_odd) || expected.has_value();
  if (graded) {
    os << "  \"tau\": \"flip\"" << (more_after_tau ? ",\n" : "\n");
  } else {
    detail::write_entries(os, "tau", detail::tau_rows(t, n), !more_after_tau);
  }
  if (write_tp) detail::write_entries(os, "tau_prime", detail::tau_rows(tp, n), !((graded && any_odd) || expected));
  if (graded && any_odd) {
    os << "  \"grading\": [";
    for (std::size_t k = 0; k < n; ++k) os << (k ? ", " : "") << grading[k];
    os << "]" << (expected ? ",\n" : "\n");
  }
  if (expected) os << "  \"expected\": " << expected->dump() << "\n";
  os << "}\n";
  return os.str();
}

inline void save(const WeakBraidedBimonad& B, const std::string& path, const std::optional<nlohmann::json>& expected = std::nullopt) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError(path, "cannot write file");
  out << serialize_instance(B, expected);
}

// Module files carry a mixed bimodule over a given instance: dim, h, theta.
inline MixedBimodule parse_module(const std::string& text, std::size_t n) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("$", "expected an object");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "name" && it.key() != "dim" && it.key() != "h" && it.key() != "theta")
      throw SchemaError(it.key(), "unknown field");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 0)
    throw SchemaError("dim", "missing or not a non-negative integer");
  const std::size_t d = doc["dim"].get<std::size_t>();
  Mat h(d, n * d), th(n * d, d);
  detail::read_entries(doc, "h", {n, d, d}, [&](auto& i, Rational c) { h(i[2], i[0] * d + i[1]) = c; });
  detail::read_entries(doc, "theta", {n, d, d}, [&](auto& i, Rational c) { th(i[0] * d + i[1], i[2]) = c; });
  return {{d}, TensorMap({n, d}, {d}, h), TensorMap({d}, {n, d}, th)};
}

inline MixedBimodule load_module(const std::string& path, std::size_t n) { return parse_module(read_file(path), n); }

// Flattens the carrier to a single factor.
inline std::string serialize_module(const MixedBimodule& M, const std::string& name = "") {
  const std::size_t d = volume(M.carrier);
  const std::size_t n = M.h.domain().at(0);
  const Mat& h = M.h.matrix();
  const Mat& th = M.theta.matrix();
  std::vector<std::string> hr, tr;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        if (!h(k, i * d + j).is_zero()) hr.push_back(detail::entry({i, j, k}, h(k, i * d + j)));
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!th(i * d + j, k).is_zero()) tr.push_back(detail::entry({i, j, k}, th(i * d + j, k)));
  std::ostringstream os;
  os << "{\n";
  if (!name.empty()) os << "  \"name\": " << nlohmann::json(name).dump() << ",\n";
  os << "  \"dim\": " << d << ",\n";
  detail::write_entries(os, "h", hr, false);
  detail::write_entries(os, "theta", tr, true);
  os << "}\n";
  return os.str();
}

}  // namespace wbh
