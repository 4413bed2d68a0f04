#ifndef FOCKDIGITS_TRANSLATION_HPP
#define FOCKDIGITS_TRANSLATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fockdigits/error.hpp"
#include "fockdigits/linear_operator.hpp"
#include "fockdigits/multiboson.hpp"
#include "fockdigits/register.hpp"
#include "fockdigits/state.hpp"
#include "fockdigits/tolerances.hpp"

namespace fockdigits {

// --- Slot-level operators (dimension b) ---------------------------------

namespace detail {

inline void check_digit(Digit gamma, Natural b) {
  if (b < 2) {
    throw Error(ErrorKind::OutOfRange, "base must be >= 2");
  }
  if (gamma >= b) {
    throw Error(ErrorKind::BadDigit,
                "digit " + std::to_string(gamma) + " not below base " +
                    std::to_string(b));
  }
}

}  // namespace detail

// Lowering slot operator: |g> -> |g-1> with unit amplitude, annihilating
// the slot vacuum g = 0.
inline PureState slot_lower(Digit gamma, Natural b) {
  detail::check_digit(gamma, b);
  PureState out(b);
  if (gamma >= 1) {
    out.set(gamma - 1, Complex(1.0, 0.0));
  }
  return out;
}

// Raising slot operator with the ceiling projector: |g> -> |g+1> with unit
// amplitude, annihilating the top digit g = x.
inline PureState slot_raise(Digit gamma, Natural b) {
  detail::check_digit(gamma, b);
  PureState out(b);
  if (gamma + 1 < b) {
    out.set(gamma + 1, Complex(1.0, 0.0));
  }
  return out;
}

// Kronecker delta picking out the top digit: floor(g / x).
inline int delta_projector_eigenvalue(Digit gamma, Digit x) {
  if (x < 1) {
    throw Error(ErrorKind::BadDigit, "max digit must be >= 1");
  }
  if (gamma > x) {
    throw Error(ErrorKind::BadDigit,
                "digit " + std::to_string(gamma) + " above max " +
                    std::to_string(x));
  }
  return gamma == x ? 1 : 0;
}

// The same delta through its circle integral, (1/2pi) int e^{-i(x-g)t} dt,
// sampled at M uniform points on |z| = 1. Exact to rounding once M > x;
// the default sampling is M = 4b.
inline double delta_quadrature(Digit gamma, Digit x, std::size_t M) {
  if (x < 1 || gamma > x) {
    throw Error(ErrorKind::BadDigit, "need 0 <= gamma <= x with x >= 1");
  }
  if (M < 4 || M <= x) {
    throw Error(ErrorKind::QuadratureUnderResolved,
                "M = " + std::to_string(M) + " cannot resolve x = " +
                    std::to_string(x));
  }
  const Natural d = static_cast<Natural>(x - gamma);
  Complex sum(0.0, 0.0);
  for (std::size_t s = 0; s < M; ++s) {
    sum += std::conj(unit_root(M, (d * s) % M));
  }
  return sum.real() / static_cast<double>(M);
}

inline double delta_quadrature(Digit gamma, Digit x) {
  return delta_quadrature(gamma, x, 4 * (static_cast<std::size_t>(x) + 1));
}

// A slot operator named by base, slot index, and direction. slot_action is
// its action on one tensor factor; embed lifts it onto the whole register,
// identity on every other slot.
enum class SlotKind { Lower, Raise };

struct SlotOperatorSpec {
  Natural base;
  std::size_t slot;
  SlotKind kind;

  PureState slot_action(Digit gamma) const {
    return kind == SlotKind::Lower ? slot_lower(gamma, base)
                                   : slot_raise(gamma, base);
  }

  LinearOperator embed(const RegisterSpec& reg) const;
};

// --- Digit-wise borrow/carry procedures ----------------------------------

namespace detail {

// t_l on a digit array: decrement slot l, annihilating on the slot vacuum.
inline bool slot_t_lower(std::vector<Digit>& digits, std::size_t l) {
  if (digits[l] == 0) {
    return false;
  }
  --digits[l];
  return true;
}

// t_l^dag on a digit array: increment slot l, annihilating on the top digit.
inline bool slot_t_raise(std::vector<Digit>& digits, std::size_t l, Natural b) {
  if (digits[l] + 1 >= b) {
    return false;
  }
  ++digits[l];
  return true;
}

inline void check_guard(const std::vector<Digit>& digits,
                        const RegisterSpec& spec) {
  if (spec.is_finite()) {
    return;
  }
  for (std::size_t l = spec.guard_start(); l < digits.size(); ++l) {
    if (digits[l] != 0) {
      throw Error(ErrorKind::GuardViolation,
                  "digit produced in guard slot " + std::to_string(l));
    }
  }
}

// Subtract b^m with borrowing: the lowest nonzero slot >= m is decremented
// and the slots below it (down to m) are set to the max digit. Returns
// false when no such slot exists, i.e. n < b^m.
inline bool borrow_subtract(std::vector<Digit>& digits, std::size_t m,
                            const RegisterSpec& spec) {
  const Digit x = static_cast<Digit>(spec.max_digit());
  std::size_t j = m;
  while (j < digits.size() && digits[j] == 0) {
    ++j;
  }
  if (j == digits.size()) {
    return false;
  }
  --digits[j];
  for (std::size_t l = m; l < j; ++l) {
    digits[l] = x;
  }
  return true;
}

// Add b^m with carrying: the lowest non-maximal slot >= m is incremented
// and the maxed slots below it are cleared. Returns false when the finite
// register is saturated; raises GuardViolation when the carry would land
// in a guard slot of a truncated-infinite register.
inline bool carry_add(std::vector<Digit>& digits, std::size_t m,
                      const RegisterSpec& spec) {
  const Digit x = static_cast<Digit>(spec.max_digit());
  std::size_t j = m;
  while (j < digits.size() && digits[j] == x) {
    ++j;
  }
  if (j == digits.size()) {
    return false;
  }
  if (!spec.is_finite() && j >= spec.guard_start()) {
    throw Error(ErrorKind::GuardViolation,
                "carry into guard slot " + std::to_string(j));
  }
  ++digits[j];
  for (std::size_t l = m; l < j; ++l) {
    digits[l] = 0;
  }
  return true;
}

inline std::vector<Digit> register_digits(Natural n, const RegisterSpec& spec) {
  spec.check_state(n);
  return digits_of(n, spec.base(), spec.slots());
}

inline Natural digits_value(const std::vector<Digit>& digits,
                            const RegisterSpec& spec) {
  return decode_digits(DigitVector(spec.base(), digits));
}

inline void check_slot(std::size_t l, const RegisterSpec& spec) {
  if (l >= spec.slots()) {
    throw Error(ErrorKind::SlotOutOfRange,
                "slot " + std::to_string(l) + " outside register of " +
                    std::to_string(spec.slots()) + " slots");
  }
}

}  // namespace detail

// T_m action on a basis index through the borrow procedure; nullopt means
// the state is annihilated (n < b^m).
inline std::optional<Natural> translate_down(Natural n, std::size_t m,
                                             const RegisterSpec& spec) {
  detail::check_slot(m, spec);
  std::vector<Digit> digits = detail::register_digits(n, spec);
  if (!detail::borrow_subtract(digits, m, spec)) {
    return std::nullopt;
  }
  return detail::digits_value(digits, spec);
}

// T_m^dag action through the carry procedure; nullopt means annihilation
// (finite right vacuum). Truncated-infinite registers never annihilate
// here: an overflowing carry is a guard violation instead.
inline std::optional<Natural> translate_up(Natural n, std::size_t m,
                                           const RegisterSpec& spec) {
  detail::check_slot(m, spec);
  std::vector<Digit> digits = detail::register_digits(n, spec);
  if (!detail::carry_add(digits, m, spec)) {
    return std::nullopt;
  }
  detail::check_guard(digits, spec);
  return detail::digits_value(digits, spec);
}

// Tensor embedding of the slot operator: the slot's digit goes through
// slot_action, every other slot is untouched.
inline LinearOperator SlotOperatorSpec::embed(const RegisterSpec& reg) const {
  if (reg.base() != base) {
    throw Error(ErrorKind::DimMismatch,
                "slot operator base " + std::to_string(base) +
                    " vs register base " + std::to_string(reg.base()));
  }
  detail::check_slot(slot, reg);
  const Natural dim = reg.dim();
  const SlotOperatorSpec op = *this;
  return LinearOperator(dim, [op, reg, dim](FockIndex n) {
    std::vector<Digit> digits = detail::register_digits(n, reg);
    const PureState slot_state = op.slot_action(digits[op.slot]);
    PureState out(dim);
    for (const auto& [g, amplitude] : slot_state.amplitudes()) {
      digits[op.slot] = static_cast<Digit>(g);
      if (op.kind == SlotKind::Raise) {
        detail::check_guard(digits, reg);
      }
      out.accumulate(detail::digits_value(digits, reg), amplitude);
    }
    return out;
  });
}

// --- Single-slot translators t_l ------------------------------------------

// t_l: |n> -> |n - b^l| when the l-th digit is nonzero, zero state otherwise.
inline LinearOperator t_operator(std::size_t ell, const RegisterSpec& spec) {
  detail::check_slot(ell, spec);
  const Natural dim = spec.dim();
  return LinearOperator(dim, [ell, spec, dim](FockIndex n) {
    std::vector<Digit> digits = detail::register_digits(n, spec);
    PureState out(dim);
    if (detail::slot_t_lower(digits, ell)) {
      out.set(detail::digits_value(digits, spec), Complex(1.0, 0.0));
    }
    return out;
  });
}

// t_l^dag: |n> -> |n + b^l| when the l-th digit is below the max, zero
// state otherwise.
inline LinearOperator t_operator_adjoint(std::size_t ell,
                                         const RegisterSpec& spec) {
  detail::check_slot(ell, spec);
  const Natural dim = spec.dim();
  return LinearOperator(dim, [ell, spec, dim](FockIndex n) {
    std::vector<Digit> digits = detail::register_digits(n, spec);
    PureState out(dim);
    if (detail::slot_t_raise(digits, ell, spec.base())) {
      detail::check_guard(digits, spec);
      out.set(detail::digits_value(digits, spec), Complex(1.0, 0.0));
    }
    return out;
  });
}

// --- Borrow-chain translators T_m -----------------------------------------

enum class TranslationRoute { Borrow, OperatorSum };

namespace detail {

// (t_j^dag)^x as an x-fold composition, kept literal so each factor is one
// slot operator.
inline LinearOperator t_adjoint_power(std::size_t j, const RegisterSpec& spec) {
  const Natural x = spec.max_digit();
  LinearOperator power = t_operator_adjoint(j, spec);
  for (Natural i = 1; i < x; ++i) {
    power = compose(t_operator_adjoint(j, spec), power);
  }
  return power;
}

// The operator sum t_m + sum_k prod_j (t_j^dag)^x t_{k+1} assembled from
// slot translators. The verification reference; the borrow procedure is
// the workhorse.
inline LinearOperator T_sum_of_translators(std::size_t m,
                                           const RegisterSpec& spec) {
  LinearOperator total = t_operator(m, spec);
  if (spec.slots() >= 2) {
    for (std::size_t k = m; k <= spec.slots() - 2; ++k) {
      LinearOperator summand = t_operator(k + 1, spec);
      for (std::size_t j = m; j <= k; ++j) {
        summand = compose(t_adjoint_power(j, spec), summand);
      }
      total = add(total, summand);
    }
  }
  return total;
}

// Literal adjoint of the sum: t_m^dag + sum_k t_{k+1}^dag prod_j (t_j)^x.
inline LinearOperator T_adjoint_sum_of_translators(std::size_t m,
                                                   const RegisterSpec& spec) {
  const Natural x = spec.max_digit();
  LinearOperator total = t_operator_adjoint(m, spec);
  if (spec.slots() >= 2) {
    for (std::size_t k = m; k <= spec.slots() - 2; ++k) {
      LinearOperator summand = LinearOperator::identity(spec.dim());
      for (std::size_t j = m; j <= k; ++j) {
        for (Natural i = 0; i < x; ++i) {
          summand = compose(t_operator(j, spec), summand);
        }
      }
      summand = compose(t_operator_adjoint(k + 1, spec), summand);
      total = add(total, summand);
    }
  }
  return total;
}

}  // namespace detail

// Subtraction translator realizing |n> -> |n - b^m| across digit borrows.
inline LinearOperator T_operator(std::size_t m, const RegisterSpec& spec,
                                 TranslationRoute route = TranslationRoute::Borrow) {
  detail::check_slot(m, spec);
  if (route == TranslationRoute::OperatorSum) {
    return detail::T_sum_of_translators(m, spec);
  }
  const Natural dim = spec.dim();
  return LinearOperator(dim, [m, spec, dim](FockIndex n) {
    PureState out(dim);
    if (auto target = translate_down(n, m, spec)) {
      out.set(*target, Complex(1.0, 0.0));
    }
    return out;
  });
}

// Addition translator |n> -> |n + b^m|, annihilating the finite right
// vacuum and guard-erroring past a truncated-infinite register.
inline LinearOperator T_operator_adjoint(
    std::size_t m, const RegisterSpec& spec,
    TranslationRoute route = TranslationRoute::Borrow) {
  detail::check_slot(m, spec);
  if (route == TranslationRoute::OperatorSum) {
    return detail::T_adjoint_sum_of_translators(m, spec);
  }
  const Natural dim = spec.dim();
  return LinearOperator(dim, [m, spec, dim](FockIndex n) {
    PureState out(dim);
    if (auto target = translate_up(n, m, spec)) {
      out.set(*target, Complex(1.0, 0.0));
    }
    return out;
  });
}

// --- Exactly-one-summand witness ------------------------------------------

struct SummandWitness {
  bool direct;                 // the plain t_m term acted
  std::size_t chain_end_slot;  // slot k + 1 drained by the acting chain
  std::size_t acting_count;    // always 1 on success

  bool operator==(const SummandWitness& other) const = default;
};

namespace detail {

// Applies one summand of the translator sum step by step; nullopt when any
// factor annihilates.
inline std::optional<Natural> summand_action(std::size_t m,
                                             std::optional<std::size_t> chain_end,
                                             Natural n,
                                             const RegisterSpec& spec) {
  std::vector<Digit> digits = register_digits(n, spec);
  if (!chain_end) {
    if (!slot_t_lower(digits, m)) {
      return std::nullopt;
    }
    return digits_value(digits, spec);
  }
  if (!slot_t_lower(digits, *chain_end)) {
    return std::nullopt;
  }
  const Natural x = spec.max_digit();
  for (std::size_t j = m; j < *chain_end; ++j) {
    for (Natural i = 0; i < x; ++i) {
      if (!slot_t_raise(digits, j, spec.base())) {
        return std::nullopt;
      }
    }
  }
  return digits_value(digits, spec);
}

}  // namespace detail

// Identifies the unique summand of T_m that acts on |n>, checking that all
// others annihilate it and that the actor lands on n - b^m.
inline SummandWitness single_summand_witness(std::size_t m, Natural n,
                                             const RegisterSpec& spec) {
  detail::check_slot(m, spec);
  const Natural step = checked_pow(spec.base(), m);
  std::optional<SummandWitness> witness;
  std::size_t actors = 0;

  auto consider = [&](std::optional<std::size_t> chain_end) {
    const auto target = detail::summand_action(m, chain_end, n, spec);
    if (!target) {
      return;
    }
    ++actors;
    if (n < step || *target != n - step) {
      throw Error(ErrorKind::AllSummandsVanish,
                  "summand landed on " + std::to_string(*target) +
                      " instead of n - b^m");
    }
    witness = SummandWitness{!chain_end.has_value(),
                             chain_end.value_or(m), 1};
  };

  consider(std::nullopt);
  if (spec.slots() >= 2) {
    for (std::size_t k = m; k <= spec.slots() - 2; ++k) {
      consider(k + 1);
    }
  }
  if (actors != 1 || !witness) {
    throw Error(ErrorKind::AllSummandsVanish,
                std::to_string(actors) + " summands acted on n = " +
                    std::to_string(n) + " (expected exactly one)");
  }
  return *witness;
}

// --- Composite shifts -------------------------------------------------------

enum class ShiftDirection { Subtract, Add };

namespace detail {

inline void check_shift_range(Natural n, Natural w, const RegisterSpec& spec,
                              ShiftDirection direction) {
  spec.check_state(n);
  const Natural top =
      spec.is_finite() ? spec.capacity() : spec.usable_capacity();
  if (direction == ShiftDirection::Subtract) {
    if (w > n) {
      throw Error(ErrorKind::ShiftOutOfRange,
                  "subtraction shift w = " + std::to_string(w) +
                      " exceeds n = " + std::to_string(n));
    }
  } else {
    if (w > top || n > top - w) {
      throw Error(ErrorKind::ShiftOutOfRange,
                  "addition shift w = " + std::to_string(w) +
                      " pushes n = " + std::to_string(n) + " past " +
                      std::to_string(top));
    }
  }
}

}  // namespace detail

// |n -+ w| via the full translator family, T_r applied beta_r times where
// beta is the digit expansion of w.
inline FockIndex shift_all_ops(Natural n, Natural w, const RegisterSpec& spec,
                               ShiftDirection direction) {
  detail::check_shift_range(n, w, spec, direction);
  std::vector<Digit> digits = detail::register_digits(n, spec);
  const DigitVector beta = encode_digits(w, spec);
  for (std::size_t r = 0; r < beta.size(); ++r) {
    for (Digit i = 0; i < beta.digits()[r]; ++i) {
      const bool acted = direction == ShiftDirection::Subtract
                             ? detail::borrow_subtract(digits, r, spec)
                             : detail::carry_add(digits, r, spec);
      if (!acted) {
        throw Error(ErrorKind::ShiftOutOfRange,
                    "translator annihilated mid-shift (unexpected)");
      }
    }
  }
  detail::check_guard(digits, spec);
  return detail::digits_value(digits, spec);
}

// |n -+ w| using only T_0 (or its adjoint), applied w times.
inline FockIndex shift_T0_power(Natural n, Natural w, const RegisterSpec& spec,
                                ShiftDirection direction) {
  detail::check_shift_range(n, w, spec, direction);
  std::vector<Digit> digits = detail::register_digits(n, spec);
  for (Natural i = 0; i < w; ++i) {
    const bool acted = direction == ShiftDirection::Subtract
                           ? detail::borrow_subtract(digits, 0, spec)
                           : detail::carry_add(digits, 0, spec);
    if (!acted) {
      throw Error(ErrorKind::ShiftOutOfRange,
                  "translator annihilated mid-shift (unexpected)");
    }
  }
  detail::check_guard(digits, spec);
  return detail::digits_value(digits, spec);
}

// --- Unitarity ranges --------------------------------------------------------

struct IndexRange {
  Natural lo;
  Natural hi;

  bool contains(Natural n) const { return lo <= n && n <= hi; }
  Natural size() const { return hi - lo + 1; }

  bool operator==(const IndexRange& other) const = default;
};

// Partition of the register for T_m: the left vacuum where only addition
// acts, the unitary middle, and (finite registers only) the right vacuum.
struct UnitarityRegion {
  std::size_t m = 0;
  IndexRange left_vacuum{0, 0};
  std::optional<IndexRange> unitary;
  std::optional<IndexRange> right_vacuum;
};

inline UnitarityRegion unitarity_region(std::size_t m, const RegisterSpec& spec) {
  detail::check_slot(m, spec);
  const Natural step = checked_pow(spec.base(), m);
  UnitarityRegion out;
  out.m = m;
  out.left_vacuum = IndexRange{0, step - 1};
  if (spec.is_finite()) {
    const Natural N = spec.capacity();
    if (step <= N - step) {
      out.unitary = IndexRange{step, N - step};
    }
    out.right_vacuum = IndexRange{N + 1 - step, N};
  } else {
    const Natural top = spec.usable_capacity();
    if (step <= top) {
      out.unitary = IndexRange{step, top};
    }
  }
  return out;
}

// Eigen-action of [T_m, T_m^dag] on every basis state of the materialized
// commutator: +1 on the left vacuum, -1 on the right, 0 in between.
inline std::vector<int> commutator_classification(
    std::size_t m, const RegisterSpec& spec, Natural cap = kDefaultMatrixCap) {
  detail::check_slot(m, spec);
  const LinearOperator sub = T_operator(m, spec);
  const LinearOperator adj = T_operator_adjoint(m, spec);
  const LinearOperator comm = commutator(sub, adj, cap);
  const DenseMatrix& matrix = comm.materialize(cap);
  std::vector<int> actions;
  actions.reserve(static_cast<std::size_t>(matrix.dim()));
  for (Natural n = 0; n < matrix.dim(); ++n) {
    for (Natural r = 0; r < matrix.dim(); ++r) {
      if (r != n && std::abs(matrix.at(r, n)) > kTol.materialization) {
        throw Error(ErrorKind::NumericalDrift,
                    "commutator not diagonal at column " + std::to_string(n));
      }
    }
    actions.push_back(static_cast<int>(std::lround(matrix.at(n, n).real())));
  }
  return actions;
}

}  // namespace fockdigits

#endif  // FOCKDIGITS_TRANSLATION_HPP
