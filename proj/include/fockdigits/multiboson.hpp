#ifndef FOCKDIGITS_MULTIBOSON_HPP
#define FOCKDIGITS_MULTIBOSON_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "fockdigits/error.hpp"
#include "fockdigits/linear_operator.hpp"
#include "fockdigits/register.hpp"
#include "fockdigits/state.hpp"
#include "fockdigits/tolerances.hpp"

namespace fockdigits {

enum class FloorRoute { Division, Residues };

// exp(i 2 pi r / k). Callers reduce exponents mod k first, so the argument
// never grows with n.
inline Complex unit_root(Natural k, Natural r) {
  const double theta =
      2.0 * std::numbers::pi * static_cast<double>(r % k) / static_cast<double>(k);
  return Complex(std::cos(theta), std::sin(theta));
}

// The simple-pole residues of the floor closed form: pairs (zeta_j, C_j)
// for the nontrivial k-th roots of unity, j = 1..k-1.
class ResidueCoefficients {
 public:
  struct Entry {
    std::size_t j;
    Complex zeta;
    Complex coefficient;
  };

  static ResidueCoefficients compute(Natural k) {
    if (k < 2) {
      throw Error(ErrorKind::BadK,
                  "residue coefficients need k >= 2 (the k = 1 sum is empty)");
    }
    ResidueCoefficients out;
    out.m_k = k;
    std::vector<Complex> roots(k);
    for (Natural r = 0; r < k; ++r) {
      roots[r] = unit_root(k, r);
    }
    out.m_entries.reserve(k - 1);
    for (Natural j = 1; j < k; ++j) {
      const Complex zeta = roots[j];
      // Literal product over the other nontrivial roots. Partial products
      // span hundreds of orders of magnitude once k reaches the thousands,
      // so a power-of-two exponent is tracked on the side (exact scaling,
      // same product).
      Complex c = Complex(1.0, 0.0) / ((zeta - 1.0) * (zeta - 1.0));
      int exponent = 0;
      for (Natural l = 1; l < k; ++l) {
        if (l == j) {
          continue;
        }
        c /= zeta - roots[l];
        const int magnitude = std::ilogb(std::abs(c.real()) + std::abs(c.imag()));
        if (magnitude > 256 || magnitude < -256) {
          c = Complex(std::ldexp(c.real(), -magnitude),
                      std::ldexp(c.imag(), -magnitude));
          exponent += magnitude;
        }
      }
      c = Complex(std::ldexp(c.real(), exponent), std::ldexp(c.imag(), exponent));
      out.m_entries.push_back({static_cast<std::size_t>(j), zeta, c});
    }
    return out;
  }

  // Memoized per k; the table is computed once and shared.
  static const ResidueCoefficients& lookup(Natural k) {
    static std::mutex mutex;
    static std::map<Natural, std::unique_ptr<const ResidueCoefficients>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(k);
    if (it == cache.end()) {
      it = cache.emplace(k, std::make_unique<const ResidueCoefficients>(compute(k)))
               .first;
    }
    return *it->second;
  }

  Natural k() const { return m_k; }
  const std::vector<Entry>& entries() const { return m_entries; }

 private:
  ResidueCoefficients() = default;

  Natural m_k = 0;
  std::vector<Entry> m_entries;
};

namespace detail {

// Sum over the nontrivial k-th roots of C_j zeta_j^n. The value is taken
// from conjugate pairs 2 Re(C_j zeta_j^n), which is real by construction
// and halves the rounding error; the imaginary part of the plain unpaired
// sum is reported separately as a drift diagnostic.
struct RootSum {
  double value = 0.0;
  double imag_residual = 0.0;
};

inline RootSum residue_root_sum(Natural k, Natural n) {
  RootSum out;
  if (k < 2) {
    return out;
  }
  const ResidueCoefficients& table = ResidueCoefficients::lookup(k);
  const auto& entries = table.entries();
  double paired = 0.0;
  for (Natural j = 1; 2 * j < k; ++j) {
    const Complex term = entries[j - 1].coefficient * unit_root(k, (j * n) % k);
    paired += 2.0 * term.real();
  }
  if (k % 2 == 0) {
    // Self-paired root zeta_{k/2} = -1; its coefficient is real.
    const Complex& c = entries[k / 2 - 1].coefficient;
    paired += (n % 2 == 0 ? c.real() : -c.real());
  }
  out.value = paired;

  Complex naive(0.0, 0.0);
  for (Natural j = 1; j < k; ++j) {
    naive += entries[j - 1].coefficient * unit_root(k, (j * n) % k);
  }
  out.imag_residual = std::abs(naive.imag());
  return out;
}

}  // namespace detail

struct FloorValue {
  Natural value = 0;
  double integer_distance = 0.0;
  double imag_residual = 0.0;
};

// floor(n / k) from the linear double-pole term plus the root sum. Checks
// that the reconstruction lands on an integer and that the unpaired sum is
// real, then rounds.
inline FloorValue floor_residues(Natural n, Natural k,
                                 const Tolerances& tol = kTol) {
  if (k == 0) {
    throw Error(ErrorKind::BadK, "k must be >= 1");
  }
  if (k == 1) {
    // Empty root sum; (2n - k + 1) / (2k) = n exactly.
    return FloorValue{n, 0.0, 0.0};
  }
  const detail::RootSum sum = detail::residue_root_sum(k, n);
  const double linear = (2.0 * static_cast<double>(n) -
                         static_cast<double>(k) + 1.0) /
                        (2.0 * static_cast<double>(k));
  const double value = linear + sum.value;
  const double rounded = std::round(value);
  const double distance = std::abs(value - rounded);
  // The comparisons are written to reject NaN as drift too.
  if (!(sum.imag_residual < tol.imag_residual)) {
    throw Error(ErrorKind::NumericalDrift,
                "imaginary residual " + std::to_string(sum.imag_residual) +
                    " at n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  if (!(distance < tol.integer_distance) || rounded < 0.0) {
    throw Error(ErrorKind::NumericalDrift,
                "integer distance " + std::to_string(distance) + " at n=" +
                    std::to_string(n) + " k=" + std::to_string(k));
  }
  return FloorValue{static_cast<Natural>(rounded), distance, sum.imag_residual};
}

inline Natural floor_eigenvalue(Natural n, Natural k,
                                FloorRoute route = FloorRoute::Residues,
                                const Tolerances& tol = kTol) {
  if (k == 0) {
    throw Error(ErrorKind::BadK, "k must be >= 1");
  }
  if (route == FloorRoute::Division) {
    return n / k;
  }
  return floor_residues(n, k, tol).value;
}

// Diagonal operator with entries floor(n / k).
inline LinearOperator number_operator(Natural k, const RegisterSpec& spec,
                                      FloorRoute route = FloorRoute::Division,
                                      const Tolerances& tol = kTol) {
  const Natural dim = spec.dim();
  return LinearOperator::diagonal(dim, [k, route, tol](FockIndex n) {
    return Complex(static_cast<double>(floor_eigenvalue(n, k, route, tol)), 0.0);
  });
}

// Diagonal operator with entries n - k floor(n / k), the remainder mod k.
inline LinearOperator remainder_operator(Natural k, const RegisterSpec& spec,
                                         FloorRoute route = FloorRoute::Division,
                                         const Tolerances& tol = kTol) {
  const Natural dim = spec.dim();
  return LinearOperator::diagonal(dim, [k, route, tol](FockIndex n) {
    const Natural q = floor_eigenvalue(n, k, route, tol);
    return Complex(static_cast<double>(n - k * q), 0.0);
  });
}

// --- Brandt series ----------------------------------------------------

// Factorials beyond this point lose enough extended precision to threaten
// the alternating sum; callers get a hard error instead of quiet drift.
inline constexpr std::size_t kBrandtIndexCap = 40;

namespace detail {

// The alternating series cancels catastrophically (the binomial identity
// behind it zeroes sums of terms up to ~1e12 times the result), so the
// whole computation is carried in quad precision.
using Quad = __float128;

// Double seed plus two Newton steps reaches full quad accuracy without
// pulling in libquadmath.
inline Quad sqrt_quad(Quad x) {
  if (x <= 0) {
    return 0;
  }
  Quad s = std::sqrt(static_cast<double>(x));
  s = Quad(0.5) * (s + x / s);
  s = Quad(0.5) * (s + x / s);
  return s;
}

inline Quad factorial_quad(std::size_t n) {
  static const std::vector<Quad> table = [] {
    std::vector<Quad> t(2 * kBrandtIndexCap + 1);
    t[0] = 1;
    for (std::size_t i = 1; i < t.size(); ++i) {
      t[i] = t[i - 1] * static_cast<Quad>(i);
    }
    return t;
  }();
  return table[n];
}

inline Quad brandt_alpha_quad(std::size_t j, std::size_t k) {
  if (k < 1) {
    throw Error(ErrorKind::BadK, "k must be >= 1");
  }
  if (j + k > kBrandtIndexCap) {
    throw Error(ErrorKind::Overflow,
                "series coefficient needs j + k <= " +
                    std::to_string(kBrandtIndexCap));
  }
  Quad sum = 0;
  for (std::size_t l = 0; l <= j; ++l) {
    const Quad radicand = (Quad(1) + static_cast<Quad>(l / k)) /
                          (factorial_quad(l) * factorial_quad(l + k));
    Quad term = sqrt_quad(radicand) / factorial_quad(j - l);
    if ((j - l) % 2 != 0) {
      term = -term;
    }
    sum += term;
  }
  return sum;
}

}  // namespace detail

// alpha_j^(k): the alternating factorial sum defining the normal-ordered
// series of the k-boson annihilator.
inline double brandt_alpha(std::size_t j, std::size_t k) {
  return static_cast<double>(detail::brandt_alpha_quad(j, k));
}

struct BrandtCoefficient {
  std::size_t j;
  std::size_t k;
  double value;

  static BrandtCoefficient compute(std::size_t j, std::size_t k) {
    return {j, k, brandt_alpha(j, k)};
  }
};

// Series action sum_j alpha_j^(k) a^dag^j a^(j+k) on |n>. Only terms with
// j + k <= n survive, so the sum is finite; the result is a multiple of
// |n - k| (the zero state below the threshold).
inline PureState annihilator_action_series(Natural k, Natural n) {
  PureState out(n + 1);
  if (k < 1) {
    throw Error(ErrorKind::BadK, "k must be >= 1");
  }
  if (n < k) {
    return out;
  }
  if (n > kBrandtIndexCap) {
    // The top surviving term has j + k = n, already past the series cap.
    throw Error(ErrorKind::Overflow,
                "series action needs n <= " + std::to_string(kBrandtIndexCap));
  }
  const std::size_t nn = static_cast<std::size_t>(n);
  const std::size_t kk = static_cast<std::size_t>(k);
  // a^(j+k)|n> = sqrt(n!/(n-j-k)!) |n-j-k>, then a^dag^j lifts back to
  // |n-k> with sqrt((n-k)!/(n-j-k)!).
  const detail::Quad big = detail::sqrt_quad(detail::factorial_quad(nn) *
                                             detail::factorial_quad(nn - kk));
  detail::Quad coefficient = 0;
  for (std::size_t j = 0; j + kk <= nn; ++j) {
    coefficient += detail::brandt_alpha_quad(j, kk) *
                   (big / detail::factorial_quad(nn - kk - j));
  }
  out.set(n - k, Complex(static_cast<double>(coefficient), 0.0));
  return out;
}

// Closed-form action sqrt(floor(n/k)) |n - k|, from A_k = a^k F_k(n).
inline PureState annihilator_action_closed(Natural k, Natural n) {
  PureState out(n + 1);
  if (k < 1) {
    throw Error(ErrorKind::BadK, "k must be >= 1");
  }
  if (n < k) {
    return out;
  }
  out.set(n - k, Complex(std::sqrt(static_cast<double>(n / k)), 0.0));
  return out;
}

// A_k^dag (A_k |n>) computed with the series twice; recovers the number
// operator eigenvalue floor(n/k) on |n>.
inline PureState number_action_via_series(Natural k, Natural n) {
  PureState out(n + 1);
  if (k < 1) {
    throw Error(ErrorKind::BadK, "k must be >= 1");
  }
  if (n < k) {
    return out;
  }
  if (n > kBrandtIndexCap) {
    throw Error(ErrorKind::Overflow,
                "series action needs n <= " + std::to_string(kBrandtIndexCap));
  }
  const PureState lowered = annihilator_action_series(k, n);
  const Complex c1 = lowered.amplitude(n - k);
  const std::size_t nn = static_cast<std::size_t>(n);
  const std::size_t kk = static_cast<std::size_t>(k);
  // A_k^dag on |n-k>: a^j first, then a^dag^(j+k) back up to |n>.
  const detail::Quad big = detail::sqrt_quad(detail::factorial_quad(nn - kk) *
                                             detail::factorial_quad(nn));
  detail::Quad c2 = 0;
  for (std::size_t j = 0; j + kk <= nn; ++j) {
    c2 += detail::brandt_alpha_quad(j, kk) *
          (big / detail::factorial_quad(nn - kk - j));
  }
  out.set(n, c1 * static_cast<double>(c2));
  return out;
}

// --- Stirling numbers of the first kind --------------------------------

using Int128 = __int128;

inline constexpr std::size_t kStirlingCap = 30;

// Signed s(n, k) via s(n+1, k) = s(n, k-1) - n s(n, k); values past 64 bits
// appear well before n = 30, hence the 128-bit result.
inline Int128 stirling_first(std::size_t n, std::size_t k) {
  if (k > n || n > kStirlingCap) {
    throw Error(ErrorKind::OutOfRange,
                "stirling_first needs 0 <= k <= n <= " +
                    std::to_string(kStirlingCap));
  }
  static const std::vector<std::vector<Int128>> table = [] {
    std::vector<std::vector<Int128>> t(kStirlingCap + 1);
    t[0] = {Int128(1)};
    for (std::size_t row = 1; row <= kStirlingCap; ++row) {
      t[row].assign(row + 1, Int128(0));
      for (std::size_t col = 1; col <= row; ++col) {
        const Int128 up_left = t[row - 1][col - 1];
        const Int128 up = col < row ? t[row - 1][col] : Int128(0);
        t[row][col] = up_left - static_cast<Int128>(row - 1) * up;
      }
    }
    return t;
  }();
  return table[n][k];
}

inline std::string int128_to_string(Int128 v) {
  if (v == 0) {
    return "0";
  }
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-v)
                                 : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) {
    digits.push_back('-');
  }
  return std::string(digits.rbegin(), digits.rend());
}

// --- Digit operators ----------------------------------------------------

// Eigenvalue of the digit operator at |n>: floor(n/b^l) - b floor(n/b^(l+1)).
// The residue route substitutes the root-of-unity closed form for both
// floors, leaving the constant (b-1)/2 plus two root sums.
inline Digit digit_eigenvalue(Natural b, std::size_t ell, Natural n,
                              FloorRoute route = FloorRoute::Division,
                              const Tolerances& tol = kTol) {
  if (b < 2) {
    throw Error(ErrorKind::OutOfRange, "base must be >= 2");
  }
  const Natural lower_order = checked_pow(b, ell);
  const Natural upper_order = checked_mul(lower_order, b);
  if (route == FloorRoute::Division) {
    return static_cast<Digit>(n / lower_order - b * (n / upper_order));
  }
  if (upper_order > kResidueOrderCap) {
    throw Error(ErrorKind::Overflow,
                "root order " + std::to_string(upper_order) +
                    " above residue cap " + std::to_string(kResidueOrderCap));
  }
  const detail::RootSum low = detail::residue_root_sum(lower_order, n);
  const detail::RootSum high = detail::residue_root_sum(upper_order, n);
  const double value = (static_cast<double>(b) - 1.0) / 2.0 + low.value -
                       static_cast<double>(b) * high.value;
  const double imag = low.imag_residual +
                      static_cast<double>(b) * high.imag_residual;
  if (!(imag < tol.imag_residual)) {
    throw Error(ErrorKind::NumericalDrift,
                "digit route imaginary residual " + std::to_string(imag));
  }
  const double rounded = std::round(value);
  if (!(std::abs(value - rounded) < tol.integer_distance) || rounded < 0.0 ||
      rounded >= static_cast<double>(b)) {
    throw Error(ErrorKind::NumericalDrift,
                "digit value " + std::to_string(value) + " off-integer at n=" +
                    std::to_string(n) + " b=" + std::to_string(b) +
                    " l=" + std::to_string(ell));
  }
  return static_cast<Digit>(rounded);
}

// Diagonal operator whose eigenvalue at |n> is the l-th base-b digit of n.
inline LinearOperator digit_operator(Natural b, std::size_t ell,
                                     const RegisterSpec& spec,
                                     FloorRoute route = FloorRoute::Division,
                                     const Tolerances& tol = kTol) {
  const Natural dim = spec.dim();
  return LinearOperator::diagonal(dim, [b, ell, route, tol](FockIndex n) {
    return Complex(static_cast<double>(digit_eigenvalue(b, ell, n, route, tol)),
                   0.0);
  });
}

}  // namespace fockdigits

#endif  // FOCKDIGITS_MULTIBOSON_HPP
