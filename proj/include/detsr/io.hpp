#pragma once

// Tensor files: JSON documents
//
//   {"r": 2, "d": 2, "q": 4, "kind": "forces" | "configuration",
//    "entries": [{"idx": [1, 2], "vec": ["3", "-1/2"]}, ...]}
//
// idx is strictly increasing and 1-based, scalars are strings holding a
// decimal integer or a "p/q" fraction. Missing tuples are zero vectors.
// Serialization is canonical: colex order, zero vectors omitted.

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "detsr/tensors.hpp"
#include "detsr/witnesses.hpp"

namespace detsr {

using json = nlohmann::json;

enum class TensorKind { forces, configuration };

inline std::string to_string(TensorKind k) { return k == TensorKind::forces ? "forces" : "configuration"; }

struct TensorFile {
  int r = 0;
  int d = 0;
  int q = 0;
  TensorKind kind = TensorKind::configuration;
  std::vector<Vector> values;  // colex rank -> vector

  static TensorFile from(const ForceSystem& f) {
    TensorFile t{f.r(), f.d(), f.q(), TensorKind::forces, {}};
    for (std::size_t i = 0; i < f.size(); ++i) t.values.push_back(f.at_rank(i));
    return t;
  }

  static TensorFile from(const VectorConfiguration& v) {
    TensorFile t{v.r(), v.d(), v.q(), TensorKind::configuration, {}};
    for (std::size_t i = 0; i < v.size(); ++i) t.values.push_back(v.at_rank(i));
    return t;
  }

  ForceSystem forces() const {
    if (kind != TensorKind::forces) throw InputError("tensor file holds a configuration, not forces");
    ForceSystem f(r, d, q);
    for (std::size_t i = 0; i < values.size(); ++i) f.set_rank(i, values[i]);
    return f;
  }

  /// Forces are converted with to_configuration.
  VectorConfiguration configuration() const {
    if (kind == TensorKind::forces) return to_configuration(forces());
    VectorConfiguration v(r, d, q);
    for (std::size_t i = 0; i < values.size(); ++i) v.set_rank(i, values[i]);
    return v;
  }

  friend bool operator==(const TensorFile&, const TensorFile&) = default;
};

namespace detail {

inline int positive_field(const json& doc, const char* name) {
  if (!doc.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  const auto& v = doc.at(name);
  if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 1000) {
    throw InputError(std::string("field \"") + name + "\" must be a positive integer");
  }
  return v.get<int>();
}

}  // namespace detail

inline TensorFile parse_tensor_json(const json& doc) {
  if (!doc.is_object()) throw InputError("tensor file must be a JSON object");
  TensorFile t;
  t.r = detail::positive_field(doc, "r");
  t.d = detail::positive_field(doc, "d");
  t.q = detail::positive_field(doc, "q");
  if (t.q < t.r) throw InputError("q must be >= r");

  if (!doc.contains("kind") || !doc.at("kind").is_string()) throw InputError("missing string field \"kind\"");
  const auto kind = doc.at("kind").get<std::string>();
  if (kind == "forces")
    t.kind = TensorKind::forces;
  else if (kind == "configuration")
    t.kind = TensorKind::configuration;
  else
    throw InputError("unknown kind \"" + kind + "\"");

  t.values.assign(binomial(t.q, t.r), Vector(static_cast<std::size_t>(t.d)));
  if (!doc.contains("entries") || !doc.at("entries").is_array()) throw InputError("missing array field \"entries\"");
  std::set<std::size_t> seen;
  for (const auto& entry : doc.at("entries")) {
    if (!entry.is_object() || !entry.contains("idx") || !entry.contains("vec"))
      throw InputError("each entry needs \"idx\" and \"vec\"");
    const auto& idx = entry.at("idx");
    const auto& vec = entry.at("vec");
    if (!idx.is_array() || static_cast<int>(idx.size()) != t.r)
      throw InputError("idx must be a list of " + std::to_string(t.r) + " integers");
    std::vector<int> elems;
    for (const auto& e : idx) {
      if (!e.is_number_integer()) throw InputError("idx entries must be integers");
      const auto x = e.get<long long>();
      if (x < 1 || x > t.q) throw InputError("idx value " + std::to_string(x) + " outside {1.." + std::to_string(t.q) + "}");
      elems.push_back(static_cast<int>(x));
    }
    SortedTuple tuple;
    try {
      tuple = SortedTuple(elems);
    } catch (const DomainError&) {
      throw InputError("idx must be strictly increasing");
    }
    const auto rank = subset_rank(tuple, t.q);
    if (!seen.insert(rank).second) throw InputError("duplicate idx " + tuple.str());
    if (!vec.is_array() || static_cast<int>(vec.size()) != t.d)
      throw InputError("vec must be a list of " + std::to_string(t.d) + " scalar strings");
    Vector x;
    for (const auto& s : vec) {
      if (!s.is_string()) throw InputError("scalars must be strings");
      x.push_back(parse_rational(s.get<std::string>()));
    }
    t.values[rank] = std::move(x);
  }
  return t;
}

inline TensorFile parse_tensor_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return parse_tensor_json(doc);
}

inline TensorFile read_tensor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_tensor_file(buf.str());
}

inline json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline json to_json(const TensorFile& t) {
  json entries = json::array();
  for (std::size_t rank = 0; rank < t.values.size(); ++rank) {
    if (is_zero(t.values[rank])) continue;
    entries.push_back({{"idx", subset_unrank(rank, t.r, t.q).elems()}, {"vec", vector_to_json(t.values[rank])}});
  }
  return {{"r", t.r}, {"d", t.d}, {"q", t.q}, {"kind", to_string(t.kind)}, {"entries", entries}};
}

inline void write_tensor_file(const TensorFile& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << to_json(t).dump(2) << '\n';
}

inline json to_json(const WitnessReport& w) {
  json out = {{"r", w.r},         {"d", w.d},   {"trials", w.trials}, {"bound", w.bound},
              {"seed", w.seed},   {"nonzero_count", w.nonzero_count}};
  if (w.first_witness) {
    out["first_witness_trial"] = *w.first_witness_trial;
    out["first_value"] = to_string(*w.first_value);
    out["first_witness"] = to_json(TensorFile::from(*w.first_witness));
  } else {
    out["first_witness"] = nullptr;
  }
  return out;
}

}  // namespace detsr
