#ifndef FOCKDIGITS_SERIALIZE_HPP
#define FOCKDIGITS_SERIALIZE_HPP

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fockdigits/linear_operator.hpp"
#include "fockdigits/multiboson.hpp"
#include "fockdigits/register.hpp"
#include "fockdigits/tolerances.hpp"
#include "fockdigits/translation.hpp"

namespace fockdigits {

using Json = nlohmann::ordered_json;

// {"base": b, "digits": [g_0, g_1, ...]}, little-endian.
inline Json to_json(const DigitVector& d) {
  return Json{{"base", d.base()}, {"digits", d.digits()}};
}

inline DigitVector digit_vector_from_json(const Json& j) {
  return DigitVector(j.at("base").get<Natural>(),
                     j.at("digits").get<std::vector<Digit>>());
}

// Sparse triplet form {"dim": d, "entries": [[row, col, re, im], ...]},
// entries below the drop threshold omitted, ordered by (row, col).
inline Json to_json(const DenseMatrix& m, double drop = kTol.export_drop) {
  Json entries = Json::array();
  for (Natural r = 0; r < m.dim(); ++r) {
    for (Natural c = 0; c < m.dim(); ++c) {
      const Complex& a = m.at(r, c);
      if (std::abs(a) < drop) {
        continue;
      }
      entries.push_back(Json::array({r, c, a.real(), a.imag()}));
    }
  }
  return Json{{"dim", m.dim()}, {"entries", std::move(entries)}};
}

inline std::string to_csv(const DenseMatrix& m, double drop = kTol.export_drop) {
  std::ostringstream out;
  out.precision(17);
  out << "row,col,re,im\n";
  for (Natural r = 0; r < m.dim(); ++r) {
    for (Natural c = 0; c < m.dim(); ++c) {
      const Complex& a = m.at(r, c);
      if (std::abs(a) < drop) {
        continue;
      }
      out << r << ',' << c << ',' << a.real() << ',' << a.imag() << '\n';
    }
  }
  return out.str();
}

// {"k": k, "coefficients": [{"j": j, "zeta": [re, im], "C": [re, im]}]}
inline Json to_json(const ResidueCoefficients& rc) {
  Json coefficients = Json::array();
  for (const auto& entry : rc.entries()) {
    coefficients.push_back(
        Json{{"j", entry.j},
             {"zeta", Json::array({entry.zeta.real(), entry.zeta.imag()})},
             {"C", Json::array({entry.coefficient.real(),
                                entry.coefficient.imag()})}});
  }
  return Json{{"k", rc.k()}, {"coefficients", std::move(coefficients)}};
}

// Region report with null ranges where a region is absent.
inline Json region_report_json(const UnitarityRegion& region,
                               const RegisterSpec& spec, bool commutator_ok) {
  auto range_json = [](const std::optional<IndexRange>& r) -> Json {
    if (!r) {
      return nullptr;
    }
    return Json::array({r->lo, r->hi});
  };
  return Json{{"m", region.m},
              {"base", spec.base()},
              {"slots", spec.slots()},
              {"LV", Json::array({region.left_vacuum.lo, region.left_vacuum.hi})},
              {"unitary", range_json(region.unitary)},
              {"RV", range_json(region.right_vacuum)},
              {"commutator_ok", commutator_ok}};
}

}  // namespace fockdigits

#endif  // FOCKDIGITS_SERIALIZE_HPP
