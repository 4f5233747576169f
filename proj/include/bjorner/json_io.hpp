#pragma once

// JSON encoding of library values. Every mathematical quantity (matrix entry,
// sequence element, minor value, polynomial coefficient) is written as a
// decimal string so that arbitrary precision survives transport; counts and
// index sets are plain JSON integers.

#include "bjorner/face_vectors.hpp"
#include "bjorner/genfun.hpp"
#include "bjorner/matrices.hpp"
#include "bjorner/matrix.hpp"
#include "bjorner/poly.hpp"
#include "bjorner/tnn.hpp"

#include <json.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bjorner::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

inline Json encode(std::span<const Integer> seq) {
  Json a = Json::array();
  for (const auto& v : seq) a.push_back(to_decimal(v));
  return a;
}

inline Json encode(const ExactMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_decimal(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json encode(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_decimal(c));
  return a;
}

inline Json encode(const TnnVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["checked_minors"] = v.checked_minors;
  if (v.witness) {
    j["witness"] = {{"rows", v.witness->rows}, {"cols", v.witness->cols}, {"value", to_decimal(v.witness->value)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline Json encode(const IdentityReport& r) {
  Json fails = Json::array();
  for (const auto& f : r.failures)
    fails.push_back({{"i", f.i}, {"k", f.k}, {"lhs", to_decimal(f.lhs)}, {"rhs", to_decimal(f.rhs)}});
  return {{"n", r.n}, {"holds", r.holds()}, {"failures", std::move(fails)}};
}

inline Json encode(const FactorizationReport& r) {
  Json j;
  j["d"] = r.d;
  j["holds"] = r.holds();
  j["g_factor"] = r.g_factor_holds;
  j["gamma_factor"] = r.gamma_factor_holds;
  j["gamma_through_g"] = r.gamma_through_g_holds;
  if (r.first_mismatch) {
    const auto& m = *r.first_mismatch;
    j["first_mismatch"] = {{"route", to_string(m.route)},
                           {"row", m.row},
                           {"col", m.col},
                           {"expected", to_decimal(m.expected)},
                           {"actual", to_decimal(m.actual)}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  return j;
}

inline Json encode(const CatalogueEntry& e) {
  Json j;
  j["name"] = e.name;
  j["parameters"] = e.parameters;
  j["d"] = e.d;
  j["g"] = encode(e.g);
  j["gamma"] = e.gamma ? encode(*e.gamma) : Json(nullptr);
  j["h"] = encode(h_from_g(e.d, e.g));
  j["f"] = encode(e.expected_f);
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

/// {"kind": ..., "payload": ..., "meta": {"version": ..., "command": ...}}
inline Json envelope(std::string_view kind, Json payload, std::string_view command) {
  Json j;
  j["kind"] = kind;
  j["payload"] = std::move(payload);
  j["meta"] = {{"version", kToolVersion}, {"command", command}};
  return j;
}

inline Rational decode_rational(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a decimal string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

inline ExactMatrix decode_matrix(const Json& rows) {
  if (!rows.is_array()) throw std::invalid_argument("matrix: expected an array of rows");
  const Index r = rows.size();
  const Index c = r ? rows.front().size() : 0;
  std::vector<Rational> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != c) throw std::invalid_argument("matrix: ragged rows");
    for (const auto& v : row) e.push_back(decode_rational(v));
  }
  return ExactMatrix(r, c, std::move(e));
}

inline Sequence decode_sequence(const Json& a) {
  if (!a.is_array()) throw std::invalid_argument("sequence: expected an array");
  Sequence out;
  for (const auto& v : a) {
    if (!v.is_string()) throw std::invalid_argument("sequence: expected decimal strings");
    out.push_back(parse_integer(v.get<std::string>()));
  }
  return out;
}

}  // namespace bjorner::json
