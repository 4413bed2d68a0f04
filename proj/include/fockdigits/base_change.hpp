#ifndef FOCKDIGITS_BASE_CHANGE_HPP
#define FOCKDIGITS_BASE_CHANGE_HPP

#include <string>
#include <vector>

#include "fockdigits/error.hpp"
#include "fockdigits/multiboson.hpp"
#include "fockdigits/register.hpp"
#include "fockdigits/translation.hpp"

namespace fockdigits {

// Quotients M_j = floor(n / b^j) for j = 0..q, ending on M_q = 0, plus the
// shifts W_l = b M_{l+1} consumed by the quantum route.
struct QuotientChain {
  Natural n = 0;
  Natural base = 0;
  std::vector<Natural> quotients;  // M_0 .. M_q
  std::vector<Natural> shifts;     // W_0 .. W_{q-1}

  std::size_t slot_count() const { return quotients.size() - 1; }
};

inline QuotientChain quotient_chain(Natural n, Natural b,
                                    FloorRoute route = FloorRoute::Division,
                                    const Tolerances& tol = kTol) {
  if (n < 1) {
    throw Error(ErrorKind::OutOfRange, "quotient chain needs n >= 1");
  }
  if (b < 2) {
    throw Error(ErrorKind::OutOfRange, "base must be >= 2");
  }
  const std::size_t q = slot_count_for(n, b);
  QuotientChain chain;
  chain.n = n;
  chain.base = b;
  chain.quotients.reserve(q + 1);
  for (std::size_t j = 0; j <= q; ++j) {
    const Natural power = checked_pow(b, j);
    if (route == FloorRoute::Residues && power > kResidueOrderCap) {
      throw Error(ErrorKind::Overflow,
                  "residue chain order " + std::to_string(power) +
                      " above cap " + std::to_string(kResidueOrderCap));
    }
    chain.quotients.push_back(floor_eigenvalue(n, power, route, tol));
  }
  chain.shifts.reserve(q);
  for (std::size_t l = 0; l < q; ++l) {
    chain.shifts.push_back(checked_mul(b, chain.quotients[l + 1]));
  }
  return chain;
}

// gamma_l = M_l - b M_{l+1}, the classical recursion.
inline DigitVector digits_classical(Natural n, Natural b) {
  if (n == 0) {
    return DigitVector(b, {0});
  }
  const QuotientChain chain = quotient_chain(n, b);
  std::vector<Digit> digits;
  digits.reserve(chain.slot_count());
  for (std::size_t l = 0; l < chain.slot_count(); ++l) {
    digits.push_back(static_cast<Digit>(chain.quotients[l] -
                                        b * chain.quotients[l + 1]));
  }
  return DigitVector(b, digits);
}

// gamma_l read off as digit-operator eigenvalues at |n>.
inline DigitVector digits_spectral(Natural n, Natural b,
                                   FloorRoute route = FloorRoute::Division,
                                   const Tolerances& tol = kTol) {
  if (b < 2) {
    throw Error(ErrorKind::OutOfRange, "base must be >= 2");
  }
  if (n == 0) {
    return DigitVector(b, {0});
  }
  const std::size_t q = slot_count_for(n, b);
  std::vector<Digit> digits;
  digits.reserve(q);
  for (std::size_t l = 0; l < q; ++l) {
    digits.push_back(digit_eigenvalue(b, l, n, route, tol));
  }
  return DigitVector(b, digits);
}

// Host register holding |M_0| = |n| with one spare slot as the guard.
inline RegisterSpec default_host_register(Natural n, Natural host_base = 10) {
  const std::size_t q = slot_count_for(n, host_base);
  return RegisterSpec::truncated_infinite(host_base, q + 1, 1);
}

// gamma_l as occupation numbers of shifted number states: prepare |M_l| on
// the host register and pull it down to |gamma_l| with T_0^(W_l).
inline DigitVector digits_quantum(Natural n, Natural b,
                                  const RegisterSpec& host,
                                  TranslationRoute route = TranslationRoute::Borrow,
                                  const Tolerances& tol = kTol) {
  if (b < 2) {
    throw Error(ErrorKind::OutOfRange, "base must be >= 2");
  }
  if (n == 0) {
    return DigitVector(b, {0});
  }
  host.check_state(n);
  const QuotientChain chain = quotient_chain(n, b);
  std::vector<Digit> digits;
  digits.reserve(chain.slot_count());
  for (std::size_t l = 0; l < chain.slot_count(); ++l) {
    const Natural quotient = chain.quotients[l];
    const Natural shift = chain.shifts[l];
    Natural occupation = 0;
    if (route == TranslationRoute::Borrow) {
      occupation = shift_T0_power(quotient, shift, host, ShiftDirection::Subtract);
    } else {
      // Literal translator sum, one application per unit of the shift.
      const LinearOperator step =
          T_operator(0, host, TranslationRoute::OperatorSum);
      PureState psi = PureState::basis(host.dim(), quotient);
      for (Natural i = 0; i < shift; ++i) {
        psi = step.apply(psi);
      }
      const auto sole = psi.sole_component(tol.state_purity);
      if (!sole || std::abs(sole->second - Complex(1.0, 0.0)) > tol.state_purity) {
        throw Error(ErrorKind::NumericalDrift,
                    "shifted state is not a unit basis state at l = " +
                        std::to_string(l));
      }
      occupation = sole->first;
    }
    if (occupation >= b) {
      throw Error(ErrorKind::NumericalDrift,
                  "occupation " + std::to_string(occupation) +
                      " is not a base-" + std::to_string(b) + " digit");
    }
    digits.push_back(static_cast<Digit>(occupation));
  }
  return DigitVector(b, digits);
}

inline DigitVector digits_quantum(Natural n, Natural b,
                                  TranslationRoute route = TranslationRoute::Borrow) {
  return digits_quantum(n, b, default_host_register(n), route);
}

}  // namespace fockdigits

#endif  // FOCKDIGITS_BASE_CHANGE_HPP
