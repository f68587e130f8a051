#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lusztig.hpp"
#include "orbits.hpp"
#include "padic.hpp"
#include "qforms.hpp"

namespace lusztig::io {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits.
inline double rounded_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

/// 12 significant digits, with round-off noise below 1e-12 flushed to zero.
inline double stable_real(double x) { return std::abs(x) < 1e-12 ? 0.0 : rounded_real(x); }

inline Json to_json(Complex z) { return Json{{"re", stable_real(z.real())}, {"im", stable_real(z.imag())}}; }

inline Json to_json(const Matrix& m) { return m.to_rows(); }

inline Json to_json(const SymplecticPartition& lambda) { return lambda.parts(); }

inline Json to_json(const FiniteFormClass& q) {
  Json j{{"dim", q.dim}};
  j["disc"] = q.is_empty() ? Json(nullptr) : Json(q.disc_sign);
  return j;
}

inline Json to_json(const PadicFormClass& q) {
  Json j{{"dim", q.dim}};
  j["disc"] = q.is_empty() ? Json(nullptr) : Json(q.disc.name());
  j["hasse"] = q.hasse;
  return j;
}

template <class Form>
Json to_json(const BasicOrbitLabel<Form>& label) {
  Json forms = Json::array();
  for (std::size_t k = 0; k < label.forms.size(); ++k) {
    Json f{{"part", 2 * static_cast<int>(k + 1)}};
    f.update(to_json(label.forms[k]));
    forms.push_back(std::move(f));
  }
  return Json{{"partition", to_json(label.partition)}, {"forms", std::move(forms)}};
}

inline Json to_json(const OrbitAtlas& atlas) {
  Json orbits = Json::array();
  for (const auto& e : atlas.entries) {
    Json j = to_json(e.label);
    j["representative"] = to_json(e.representative);
    j["size"] = e.size;
    orbits.push_back(std::move(j));
  }
  return Json{{"n", atlas.n},
              {"p", atlas.p},
              {"cone_size", atlas.cone_size},
              {"oracle_orbit_count", atlas.oracle_orbit_count},
              {"orbits", std::move(orbits)}};
}

inline Json algebra_json(const SpAlgebra& algebra) {
  return Json{{"type", algebra.is_product() ? "product" : "sp"}, {"ranks", algebra.ranks()}, {"p", algebra.p()}};
}

inline Json to_json(const ClassFunction& f) {
  Json entries = Json::array();
  for (const auto& [idx, v] : f.values) {
    const auto mats = f.algebra.point(idx);
    Json point;
    if (mats.size() == 1) {
      point = to_json(mats.front());
    } else {
      point = Json::array();
      for (const auto& m : mats) point.push_back(to_json(m));
    }
    entries.push_back(Json{{"point", std::move(point)}, {"re", stable_real(v.real())}, {"im", stable_real(v.imag())}});
  }
  return Json{{"algebra", algebra_json(f.algebra)}, {"entries", std::move(entries)}};
}

inline Json to_json(const EigenReport& r) {
  return Json{{"is_eigenfunction", r.is_eigenfunction},
              {"eigenvalue", r.eigenvalue ? to_json(*r.eigenvalue) : Json(nullptr)},
              {"max_residual", rounded_real(r.max_residual)},
              {"predicted", to_json(r.predicted)},
              {"matches_prediction", r.matches_prediction}};
}

inline Json to_json(const LusztigCoefficients& c) {
  Json terms = Json::array();
  for (const auto& [label, sign] : c.terms) {
    Json j = to_json(label);
    j["coefficient"] = sign;
    terms.push_back(std::move(j));
  }
  return Json{{"n", c.n}, {"partition", to_json(c.partition)}, {"terms", std::move(terms)}};
}

inline Json to_json(const CensusRow& r) {
  return Json{{"n", r.n},
              {"enum_count", r.enum_count},
              {"grosswald_count", r.grosswald_count},
              {"d1", r.d1},
              {"d3", r.d3},
              {"odd_square_count", r.odd_square_count},
              {"theorem_formula_value", r.theorem_formula_value},
              {"stable_dim", r.stable_dim},
              {"mismatch", r.mismatch()}};
}

inline Json to_json(const std::vector<CensusRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr;
}

inline const char* kCensusCsvHeader =
    "n,enum_count,grosswald_count,d1,d3,odd_square_count,theorem_formula_value,stable_dim,mismatch";

inline std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << kCensusCsvHeader << '\n';
  for (const auto& r : rows)
    out << r.n << ',' << r.enum_count << ',' << r.grosswald_count << ',' << r.d1 << ',' << r.d3 << ','
        << r.odd_square_count << ',' << r.theorem_formula_value << ',' << r.stable_dim << ','
        << (r.mismatch() ? "true" : "false") << '\n';
  return out.str();
}

inline Json to_json(const PadicLusztigDescriptor& d) {
  const auto [a, b] = reductive_quotient(d.vertex);
  return Json{{"vertex", d.vertex.index},
              {"hyperspecial", d.vertex.hyperspecial()},
              {"quotient", {a, b}},
              {"deltas", {d.delta1, d.delta2}}};
}

inline Json to_json(const LusztigDistribution& dist) {
  Json j = to_json(dist.descriptor);
  j["eigenvalue"] = dist.eigenvalue.name();
  j["stable"] = dist.stable;
  return j;
}

}  // namespace lusztig::io
