#ifndef FOCKDIGITS_VERIFY_HPP
#define FOCKDIGITS_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fockdigits/base_change.hpp"
#include "fockdigits/multiboson.hpp"
#include "fockdigits/register.hpp"
#include "fockdigits/serialize.hpp"
#include "fockdigits/translation.hpp"

namespace fockdigits {

// Deterministic seed for the sampled sweeps; the CLI --seed flag is
// reserved but not yet wired to anything.
inline constexpr std::uint64_t kSweepSeed = 0x0f0c5d161755eedULL;

struct VerificationFailure {
  std::string input;
  std::string expected;
  std::string actual;
  double residual = 0.0;
};

struct VerificationReport {
  std::string suite;
  Json ranges = Json::object();
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  std::vector<VerificationFailure> failures;  // first kMaxRecorded only
  double max_residual = 0.0;
  double wall_time_s = 0.0;

  static constexpr std::size_t kMaxRecorded = 100;

  bool passed() const { return failure_count == 0; }

  void fail(std::string input, std::string expected, std::string actual,
            double residual = 0.0) {
    ++failure_count;
    if (failures.size() < kMaxRecorded) {
      failures.push_back({std::move(input), std::move(expected),
                          std::move(actual), residual});
    }
  }

  void observe(double residual) {
    max_residual = std::max(max_residual, residual);
  }

  Json to_json() const {
    Json failure_list = Json::array();
    for (const auto& f : failures) {
      failure_list.push_back(Json{{"input", f.input},
                                  {"expected", f.expected},
                                  {"actual", f.actual},
                                  {"residual", f.residual}});
    }
    return Json{{"suite", suite},
                {"ranges", ranges},
                {"cases", cases},
                {"failures", failure_list},
                {"failure_count", failure_count},
                {"max_residual", max_residual},
                {"wall_time_s", wall_time_s}};
  }
};

namespace detail {

class SweepTimer {
 public:
  explicit SweepTimer(VerificationReport& report)
      : m_report(report), m_start(std::chrono::steady_clock::now()) {}
  ~SweepTimer() {
    m_report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - m_start)
            .count();
  }

 private:
  VerificationReport& m_report;
  std::chrono::steady_clock::time_point m_start;
};

template <typename... Parts>
std::string cat(Parts&&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

inline std::string digits_string(const DigitVector& d) {
  std::string out = "[";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) {
      out += ",";
    }
    out += std::to_string(d.digits()[i]);
  }
  return out + "]";
}

}  // namespace detail

// Floor closed form against integer division, with residual bounds.
inline VerificationReport verify_floor(Natural max_n = 5000, Natural max_k = 64,
                                       const Tolerances& tol = kTol) {
  VerificationReport report;
  report.suite = "floor";
  report.ranges = Json{{"max_n", max_n}, {"max_k", max_k}};
  detail::SweepTimer timer(report);
  for (Natural k = 1; k <= max_k; ++k) {
    for (Natural n = 0; n <= max_n; ++n) {
      ++report.cases;
      try {
        const FloorValue v = floor_residues(n, k, tol);
        report.observe(v.integer_distance);
        report.observe(v.imag_residual);
        if (v.value != n / k) {
          report.fail(detail::cat("n=", n, " k=", k), std::to_string(n / k),
                      std::to_string(v.value), v.integer_distance);
        }
      } catch (const Error& e) {
        report.fail(detail::cat("n=", n, " k=", k), std::to_string(n / k),
                    e.what());
      }
    }
  }
  return report;
}

// Remainder identity k floor(n/k) + (n mod k) = n from operator
// eigenvalues: exact on the integer route, within tolerance on the
// pre-rounding residue value.
inline VerificationReport verify_remainder(Natural max_n = 5000,
                                           Natural max_k = 64,
                                           const Tolerances& tol = kTol) {
  VerificationReport report;
  report.suite = "remainder";
  report.ranges = Json{{"max_n", max_n}, {"max_k", max_k}};
  detail::SweepTimer timer(report);
  for (Natural k = 1; k <= max_k; ++k) {
    for (Natural n = 0; n <= max_n; ++n) {
      ++report.cases;
      try {
        const Natural floor_int = floor_eigenvalue(n, k, FloorRoute::Division);
        const Natural rem_int = n - k * floor_int;
        if (k * floor_int + rem_int != n || rem_int >= k) {
          report.fail(detail::cat("n=", n, " k=", k, " route=division"),
                      std::to_string(n),
                      std::to_string(k * floor_int + rem_int));
          continue;
        }
        const FloorValue v = floor_residues(n, k, tol);
        const Natural rem_res = n - k * v.value;
        // k * (pre-rounding floor value) + remainder differs from n by
        // exactly k times the rounding distance.
        const double residual = static_cast<double>(k) * v.integer_distance;
        report.observe(residual);
        if (v.value != n / k || residual >= tol.integer_distance ||
            rem_res >= k) {
          report.fail(detail::cat("n=", n, " k=", k, " route=residues"),
                      std::to_string(n),
                      detail::cat(k, "*", v.value, "+", rem_res), residual);
        }
      } catch (const Error& e) {
        report.fail(detail::cat("n=", n, " k=", k), std::to_string(n), e.what());
      }
    }
  }
  return report;
}

// Series vs closed-form annihilator actions and the spectral number
// operator recovered through the series applied twice.
inline VerificationReport verify_multiboson(Natural max_k = 8, Natural max_n = 30,
                                            const Tolerances& tol = kTol) {
  VerificationReport report;
  report.suite = "multiboson";
  report.ranges = Json{{"max_k", max_k}, {"max_n", max_n}};
  detail::SweepTimer timer(report);
  for (Natural k = 1; k <= max_k; ++k) {
    for (Natural n = 0; n <= max_n; ++n) {
      ++report.cases;
      try {
        const PureState series = annihilator_action_series(k, n);
        const PureState closed = annihilator_action_closed(k, n);
        for (Natural idx = 0; idx <= n; ++idx) {
          const double diff =
              std::abs(series.amplitude(idx) - closed.amplitude(idx));
          report.observe(diff);
          if (diff >= tol.amplitude_match) {
            report.fail(detail::cat("A_", k, "|", n, "> amplitude ", idx),
                        detail::cat(closed.amplitude(idx).real()),
                        detail::cat(series.amplitude(idx).real()), diff);
          }
        }
        const PureState number = number_action_via_series(k, n);
        const double expected = static_cast<double>(n / k);
        const double diff = std::abs(number.amplitude(n) - Complex(expected, 0.0));
        report.observe(diff);
        if (diff >= tol.amplitude_match) {
          report.fail(detail::cat("Adag_", k, " A_", k, "|", n, ">"),
                      detail::cat(expected), detail::cat(number.amplitude(n).real()),
                      diff);
        }
      } catch (const Error& e) {
        report.fail(detail::cat("k=", k, " n=", n), "action", e.what());
      }
    }
  }
  return report;
}

// Literal translator sum vs the borrow procedure on every basis state,
// plus the exactly-one-summand witness.
inline VerificationReport verify_translation(
    const std::vector<std::pair<Natural, std::size_t>>& shapes = {
        {2, 3}, {2, 4}, {3, 3}, {5, 2}, {10, 2}}) {
  VerificationReport report;
  report.suite = "translation";
  Json shape_list = Json::array();
  for (const auto& [b, q] : shapes) {
    shape_list.push_back(Json::array({b, q}));
  }
  report.ranges = Json{{"shapes", shape_list}};
  detail::SweepTimer timer(report);
  for (const auto& [b, q] : shapes) {
    const RegisterSpec spec = RegisterSpec::finite(b, q);
    for (std::size_t m = 0; m < q; ++m) {
      const Natural step = checked_pow(b, m);
      const LinearOperator borrow = T_operator(m, spec, TranslationRoute::Borrow);
      const LinearOperator literal =
          T_operator(m, spec, TranslationRoute::OperatorSum);
      const LinearOperator borrow_adj =
          T_operator_adjoint(m, spec, TranslationRoute::Borrow);
      const LinearOperator literal_adj =
          T_operator_adjoint(m, spec, TranslationRoute::OperatorSum);
      for (Natural n = 0; n < spec.dim(); ++n) {
        ++report.cases;
        const auto describe = [&](const PureState& s) {
          const auto sole = s.sole_component();
          if (s.is_zero()) {
            return std::string("0");
          }
          if (!sole) {
            return std::string("mixed");
          }
          return detail::cat("|", sole->first, "> x ", sole->second.real());
        };
        const PureState lhs = borrow.column(n);
        const PureState rhs = literal.column(n);
        PureState diff = lhs;
        diff += Complex(-1.0, 0.0) * rhs;
        diff.prune(kTol.materialization);
        if (!diff.is_zero()) {
          report.fail(detail::cat("T_", m, "|", n, "> b=", b, " q=", q),
                      describe(lhs), describe(rhs));
        }
        const PureState lhs_adj = borrow_adj.column(n);
        const PureState rhs_adj = literal_adj.column(n);
        PureState diff_adj = lhs_adj;
        diff_adj += Complex(-1.0, 0.0) * rhs_adj;
        diff_adj.prune(kTol.materialization);
        if (!diff_adj.is_zero()) {
          report.fail(detail::cat("Tdag_", m, "|", n, "> b=", b, " q=", q),
                      describe(lhs_adj), describe(rhs_adj));
        }
        // Action contract, both clauses.
        if (n >= step) {
          const auto sole = lhs.sole_component();
          if (!sole || sole->first != n - step ||
              std::abs(sole->second - Complex(1.0, 0.0)) > kTol.state_purity) {
            report.fail(detail::cat("T_", m, "|", n, "> contract"),
                        detail::cat("|", n - step, ">"), describe(lhs));
          }
          try {
            single_summand_witness(m, n, spec);
          } catch (const Error& e) {
            report.fail(detail::cat("witness m=", m, " n=", n, " b=", b,
                                    " q=", q),
                        "exactly one summand", e.what());
          }
        } else if (!lhs.is_zero()) {
          report.fail(detail::cat("T_", m, "|", n, "> contract"), "0",
                      describe(lhs));
        }
      }
    }
  }
  return report;
}

// Commutator trichotomy against the region bounds.
inline VerificationReport verify_unitarity(
    const std::vector<std::pair<Natural, std::size_t>>& shapes = {
        {2, 3}, {2, 4}, {3, 3}, {5, 2}, {10, 2}}) {
  VerificationReport report;
  report.suite = "unitarity";
  Json shape_list = Json::array();
  for (const auto& [b, q] : shapes) {
    shape_list.push_back(Json::array({b, q}));
  }
  report.ranges = Json{{"shapes", shape_list}};
  detail::SweepTimer timer(report);
  for (const auto& [b, q] : shapes) {
    const RegisterSpec spec = RegisterSpec::finite(b, q);
    for (std::size_t m = 0; m < q; ++m) {
      const UnitarityRegion region = unitarity_region(m, spec);
      const bool expect_empty_unitary = (b == 2 && m == q - 1);
      if (region.unitary.has_value() == expect_empty_unitary) {
        report.fail(detail::cat("unitary range b=", b, " q=", q, " m=", m),
                    expect_empty_unitary ? "empty" : "nonempty",
                    region.unitary ? "nonempty" : "empty");
      }
      std::vector<int> actions;
      try {
        actions = commutator_classification(m, spec);
      } catch (const Error& e) {
        report.fail(detail::cat("classification b=", b, " q=", q, " m=", m),
                    "diagonal commutator", e.what());
        continue;
      }
      for (Natural n = 0; n < spec.dim(); ++n) {
        ++report.cases;
        int expected = 0;
        if (region.left_vacuum.contains(n)) {
          expected = 1;
        } else if (region.right_vacuum && region.right_vacuum->contains(n)) {
          expected = -1;
        } else if (!(region.unitary && region.unitary->contains(n))) {
          report.fail(detail::cat("coverage b=", b, " q=", q, " m=", m, " n=", n),
                      "in exactly one region", "uncovered");
          continue;
        }
        if (actions[static_cast<std::size_t>(n)] != expected) {
          report.fail(
              detail::cat("[T_", m, ",Tdag_", m, "]|", n, "> b=", b, " q=", q),
              std::to_string(expected),
              std::to_string(actions[static_cast<std::size_t>(n)]));
        }
      }
    }
  }
  return report;
}

// Composite shifts: every-translator route vs the T_0 power route.
inline VerificationReport verify_shifts(
    const std::vector<std::pair<Natural, std::size_t>>& shapes = {
        {2, 3}, {2, 4}, {3, 3}, {5, 2}, {10, 2}},
    std::size_t samples_per_spec = 200, std::uint64_t seed = kSweepSeed) {
  VerificationReport report;
  report.suite = "shifts";
  report.ranges = Json{{"samples_per_spec", samples_per_spec}, {"seed", seed}};
  detail::SweepTimer timer(report);
  std::mt19937_64 rng(seed);
  for (const auto& [b, q] : shapes) {
    const RegisterSpec spec = RegisterSpec::finite(b, q);
    const Natural N = spec.capacity();
    std::uniform_int_distribution<Natural> pick(0, N);
    for (std::size_t s = 0; s < samples_per_spec; ++s) {
      ++report.cases;
      const Natural a = pick(rng);
      const Natural c = pick(rng);
      const Natural n = std::max(a, c);
      const Natural w = std::min(a, c);
      try {
        const Natural down_all =
            shift_all_ops(n, w, spec, ShiftDirection::Subtract);
        const Natural down_pow =
            shift_T0_power(n, w, spec, ShiftDirection::Subtract);
        if (down_all != n - w || down_pow != n - w) {
          report.fail(detail::cat("subtract n=", n, " w=", w, " b=", b, " q=", q),
                      std::to_string(n - w),
                      detail::cat(down_all, " / ", down_pow));
        }
        const Natural up_all =
            shift_all_ops(n - w, w, spec, ShiftDirection::Add);
        const Natural up_pow =
            shift_T0_power(n - w, w, spec, ShiftDirection::Add);
        if (up_all != n || up_pow != n) {
          report.fail(detail::cat("add n=", n - w, " w=", w, " b=", b, " q=", q),
                      std::to_string(n), detail::cat(up_all, " / ", up_pow));
        }
      } catch (const Error& e) {
        report.fail(detail::cat("shift n=", n, " w=", w, " b=", b, " q=", q),
                    "in-range shift", e.what());
      }
    }
  }
  return report;
}

// Three-route digit agreement and positional reconstruction.
inline VerificationReport verify_digits(Natural max_n = 10000, Natural min_base = 2,
                                        Natural max_base = 10,
                                        const Tolerances& tol = kTol) {
  VerificationReport report;
  report.suite = "digits";
  report.ranges =
      Json{{"max_n", max_n}, {"min_base", min_base}, {"max_base", max_base}};
  detail::SweepTimer timer(report);
  for (Natural b = min_base; b <= max_base; ++b) {
    for (Natural n = 0; n <= max_n; ++n) {
      ++report.cases;
      try {
        const DigitVector reference =
            n == 0 ? DigitVector(b, {0}) : encode_digits(n, b);
        const DigitVector classical = digits_classical(n, b);
        const DigitVector spectral = digits_spectral(n, b);
        const DigitVector quantum = digits_quantum(n, b);
        if (classical != reference) {
          report.fail(detail::cat("classical n=", n, " b=", b),
                      detail::digits_string(reference),
                      detail::digits_string(classical));
        }
        if (spectral != reference) {
          report.fail(detail::cat("spectral n=", n, " b=", b),
                      detail::digits_string(reference),
                      detail::digits_string(spectral));
        }
        if (quantum != reference) {
          report.fail(detail::cat("quantum n=", n, " b=", b),
                      detail::digits_string(reference),
                      detail::digits_string(quantum));
        }
        if (decode_digits(classical) != n) {
          report.fail(detail::cat("reconstruction n=", n, " b=", b),
                      std::to_string(n),
                      std::to_string(decode_digits(classical)));
        }
        // Explicit root-of-unity spectral route wherever the order cap allows.
        const std::size_t q = slot_count_for(n, b);
        if (checked_pow(b, q) <= kResidueOrderCap) {
          const DigitVector spectral_res =
              digits_spectral(n, b, FloorRoute::Residues, tol);
          if (spectral_res != reference) {
            report.fail(detail::cat("spectral-residues n=", n, " b=", b),
                        detail::digits_string(reference),
                        detail::digits_string(spectral_res));
          }
        }
      } catch (const Error& e) {
        report.fail(detail::cat("n=", n, " b=", b), "three-route agreement",
                    e.what());
      }
    }
  }
  return report;
}

// Slot-level raise/lower algebra and the quadrature form of the ceiling
// projector.
inline VerificationReport verify_slots(Natural min_base = 2, Natural max_base = 16,
                                       const Tolerances& tol = kTol) {
  VerificationReport report;
  report.suite = "slots";
  report.ranges = Json{{"min_base", min_base}, {"max_base", max_base}};
  detail::SweepTimer timer(report);
  for (Natural b = min_base; b <= max_base; ++b) {
    const Digit x = static_cast<Digit>(b - 1);
    for (Digit g = 0; g <= x; ++g) {
      ++report.cases;
      const PureState lowered = slot_lower(g, b);
      const PureState raised = slot_raise(g, b);
      if (g == 0 && !lowered.is_zero()) {
        report.fail(detail::cat("S|0> b=", b), "0", "nonzero");
      }
      if (g == x && !raised.is_zero()) {
        report.fail(detail::cat("Sdag|x> b=", b), "0", "nonzero");
      }
      if (g >= 1) {
        // Raise after lower must restore |g> with amplitude exactly 1.
        const PureState back = slot_raise(g - 1, b);
        if (lowered.amplitude(g - 1) != Complex(1.0, 0.0) ||
            back.amplitude(g) != Complex(1.0, 0.0)) {
          report.fail(detail::cat("Sdag S|", g, "> b=", b), "|g> exactly",
                      "off-unit amplitude");
        }
      }
      if (g < x) {
        const PureState back = slot_lower(g + 1, b);
        if (raised.amplitude(g + 1) != Complex(1.0, 0.0) ||
            back.amplitude(g) != Complex(1.0, 0.0)) {
          report.fail(detail::cat("S Sdag|", g, "> b=", b), "|g> exactly",
                      "off-unit amplitude");
        }
      }
      const std::size_t M = static_cast<std::size_t>(4 * b);
      const double quad = delta_quadrature(g, x, M);
      const int delta = delta_projector_eigenvalue(g, x);
      const double residual = std::abs(quad - static_cast<double>(delta));
      report.observe(residual);
      if (residual >= tol.quadrature) {
        report.fail(detail::cat("delta quadrature g=", g, " x=", x, " M=", M),
                    std::to_string(delta), std::to_string(quad), residual);
      }
    }
  }
  return report;
}

// Finite vs truncated-infinite translator agreement and the absence of a
// right vacuum on the truncated-infinite register.
inline VerificationReport verify_infinite(std::size_t samples = 500,
                                          std::uint64_t seed = kSweepSeed) {
  VerificationReport report;
  report.suite = "infinite";
  report.ranges = Json{{"samples", samples}, {"seed", seed}};
  detail::SweepTimer timer(report);
  std::mt19937_64 rng(seed);
  const std::vector<std::pair<Natural, std::size_t>> shapes = {
      {2, 4}, {3, 3}, {5, 3}, {10, 2}};
  std::uniform_int_distribution<std::size_t> pick_shape(0, shapes.size() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    ++report.cases;
    const auto [b, q] = shapes[pick_shape(rng)];
    const RegisterSpec finite = RegisterSpec::finite(b, q);
    const RegisterSpec truncated =
        RegisterSpec::truncated_infinite(b, q + 2, 2);
    std::uniform_int_distribution<std::size_t> pick_m(0, q - 1);
    const std::size_t m = pick_m(rng);
    const Natural step = checked_pow(b, m);
    std::uniform_int_distribution<Natural> pick_n(0, finite.capacity());
    const Natural n = pick_n(rng);
    try {
      const auto down_fin = translate_down(n, m, finite);
      const auto down_inf = translate_down(n, m, truncated);
      if (down_fin != down_inf) {
        report.fail(detail::cat("T_", m, "|", n, "> b=", b, " q=", q),
                    down_fin ? std::to_string(*down_fin) : "0",
                    down_inf ? std::to_string(*down_inf) : "0");
      }
      if (n + step <= truncated.usable_capacity()) {
        const auto up_inf = translate_up(n, m, truncated);
        if (!up_inf) {
          report.fail(detail::cat("Tdag_", m, "|", n, "> truncated b=", b),
                      std::to_string(n + step), "annihilated (right vacuum)");
        } else if (*up_inf != n + step) {
          report.fail(detail::cat("Tdag_", m, "|", n, "> truncated b=", b),
                      std::to_string(n + step), std::to_string(*up_inf));
        }
        const auto up_fin = translate_up(n, m, finite);
        if (up_fin && *up_fin != *up_inf) {
          report.fail(detail::cat("Tdag_", m, "|", n, "> finite-vs-truncated"),
                      std::to_string(*up_inf), std::to_string(*up_fin));
        }
      }
      const UnitarityRegion region = unitarity_region(m, truncated);
      if (region.right_vacuum.has_value()) {
        report.fail(detail::cat("region m=", m, " b=", b, " truncated"),
                    "no right vacuum", "right vacuum present");
      }
    } catch (const Error& e) {
      report.fail(detail::cat("b=", b, " q=", q, " m=", m, " n=", n),
                  "agreement within truncation minus guard", e.what());
    }
  }
  return report;
}

}  // namespace fockdigits

#endif  // FOCKDIGITS_VERIFY_HPP
