#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fockdigits/translation.hpp"

#include "matchers.hpp"
#include "oracles.hpp"

using namespace fockdigits;

TEST_CASE("slot lowering: unit amplitude down, annihilation at the vacuum") {
  CHECK(slot_lower(0, 2).is_zero());
  CHECK(slot_lower(1, 2).amplitude(0) == Complex(1.0, 0.0));
  CHECK(slot_lower(9, 10).amplitude(8) == Complex(1.0, 0.0));
  CHECK_THROWS_MATCHES(slot_lower(4, 3), Error, kind_is(ErrorKind::BadDigit));
}

TEST_CASE("slot raising: unit amplitude up, annihilation at the top digit") {
  CHECK(slot_raise(1, 2).is_zero());   // x = 1 for b = 2
  CHECK(slot_raise(9, 10).is_zero());  // x = 9 for b = 10
  CHECK(slot_raise(0, 2).amplitude(1) == Complex(1.0, 0.0));
  CHECK(slot_raise(3, 10).amplitude(4) == Complex(1.0, 0.0));
}

TEST_CASE("slot operators match their ladder-built form") {
  // Independent construction: (gamma+1)^(-1/2) a for lowering and
  // a^dag (gamma+1)^(-1/2) (I - P_x) for raising.
  for (Natural b = 2; b <= 16; ++b) {
    const auto lower = oracle::ladder_built_lower(b);
    const auto raise = oracle::ladder_built_raise(b);
    for (Digit g = 0; g < b; ++g) {
      const PureState down = slot_lower(g, b);
      const PureState up = slot_raise(g, b);
      for (Digit r = 0; r < b; ++r) {
        CAPTURE(b, g, r);
        REQUIRE(std::abs(down.amplitude(r) - lower[r][g]) < 1e-14);
        REQUIRE(std::abs(up.amplitude(r) - raise[r][g]) < 1e-14);
      }
    }
  }
}

TEST_CASE("slot algebra: raise-lower identities on interior digits") {
  for (Natural b = 2; b <= 16; ++b) {
    const Digit x = static_cast<Digit>(b - 1);
    for (Digit g = 1; g <= x; ++g) {
      const auto lowered = slot_lower(g, b).sole_component();
      REQUIRE(lowered.has_value());
      CHECK(slot_raise(static_cast<Digit>(lowered->first), b).amplitude(g) ==
            Complex(1.0, 0.0));
    }
    for (Digit g = 0; g < x; ++g) {
      const auto raised = slot_raise(g, b).sole_component();
      REQUIRE(raised.has_value());
      CHECK(slot_lower(static_cast<Digit>(raised->first), b).amplitude(g) ==
            Complex(1.0, 0.0));
    }
  }
}

TEST_CASE("delta projector eigenvalue is the Kronecker delta at the top digit") {
  CHECK(delta_projector_eigenvalue(9, 9) == 1);
  CHECK(delta_projector_eigenvalue(0, 1) == 0);
  CHECK(delta_projector_eigenvalue(3, 9) == 0);
  CHECK_THROWS_MATCHES(delta_projector_eigenvalue(5, 4), Error,
                       kind_is(ErrorKind::BadDigit));
}

TEST_CASE("delta quadrature reproduces the delta once resolved") {
  CHECK(std::abs(delta_quadrature(1, 1, 8) - 1.0) < kTol.quadrature);
  CHECK(std::abs(delta_quadrature(0, 1, 8)) < kTol.quadrature);
  CHECK(std::abs(delta_quadrature(3, 9, 40)) < kTol.quadrature);
  for (Natural b = 2; b <= 16; ++b) {
    const Digit x = static_cast<Digit>(b - 1);
    for (Digit g = 0; g <= x; ++g) {
      CAPTURE(b, g);
      REQUIRE(std::abs(delta_quadrature(g, x, 4 * b) -
                       delta_projector_eigenvalue(g, x)) < kTol.quadrature);
    }
  }
}

TEST_CASE("delta quadrature refuses under-resolved sampling") {
  CHECK_THROWS_MATCHES(delta_quadrature(3, 9, 9), Error,
                       kind_is(ErrorKind::QuadratureUnderResolved));
  CHECK_THROWS_MATCHES(delta_quadrature(0, 1, 3), Error,
                       kind_is(ErrorKind::QuadratureUnderResolved));
}

TEST_CASE("tensor-embedded slot operators reproduce the translators") {
  for (const auto& [b, q] : std::vector<std::pair<Natural, std::size_t>>{
           {2, 3}, {3, 2}, {5, 2}}) {
    const RegisterSpec spec = RegisterSpec::finite(b, q);
    for (std::size_t l = 0; l < q; ++l) {
      const LinearOperator lowered =
          SlotOperatorSpec{b, l, SlotKind::Lower}.embed(spec);
      const LinearOperator raised =
          SlotOperatorSpec{b, l, SlotKind::Raise}.embed(spec);
      const LinearOperator t = t_operator(l, spec);
      const LinearOperator tdag = t_operator_adjoint(l, spec);
      for (Natural n = 0; n < spec.dim(); ++n) {
        CAPTURE(b, q, l, n);
        PureState down = lowered.column(n);
        down += Complex(-1.0, 0.0) * t.column(n);
        REQUIRE(down.is_zero());
        PureState up = raised.column(n);
        up += Complex(-1.0, 0.0) * tdag.column(n);
        REQUIRE(up.is_zero());
      }
    }
  }
  const SlotOperatorSpec mismatched{3, 0, SlotKind::Lower};
  CHECK_THROWS_MATCHES(mismatched.embed(RegisterSpec::finite(2, 2)), Error,
                       kind_is(ErrorKind::DimMismatch));
}

TEST_CASE("single-slot translators act only within their digit") {
  const RegisterSpec spec = RegisterSpec::finite(2, 3);
  CHECK(t_operator(0, spec).column(4).is_zero());  // 4 = [0,0,1]
  CHECK(t_operator(1, spec).column(7).amplitude(5) == Complex(1.0, 0.0));
  CHECK(t_operator_adjoint(0, spec).column(3).is_zero());  // gamma_0 = x
  CHECK_THROWS_MATCHES(t_operator(3, spec), Error,
                       kind_is(ErrorKind::SlotOutOfRange));
}

TEST_CASE("borrow translator on the frozen examples") {
  const RegisterSpec spec = RegisterSpec::finite(2, 3);
  const LinearOperator T0 = T_operator(0, spec);
  const auto hop = T0.column(4).sole_component();
  REQUIRE(hop.has_value());
  CHECK(hop->first == 3);  // 100 -> 011
  CHECK(T_operator(2, spec).column(3).is_zero());
  CHECK(T_operator_adjoint(0, spec).column(7).is_zero());
}

TEST_CASE("T_m matrix for the binary register is the subdiagonal") {
  const RegisterSpec spec = RegisterSpec::finite(2, 3);
  const DenseMatrix m = materialized(T_operator(0, spec));
  for (Natural r = 0; r < 8; ++r) {
    for (Natural c = 0; c < 8; ++c) {
      const bool expected = c == r + 1;
      REQUIRE(m.at(r, c) == (expected ? Complex(1.0, 0.0) : Complex(0.0, 0.0)));
    }
  }
}

TEST_CASE("operator-sum and borrow routes agree on whole registers") {
  for (const auto& [b, q] : std::vector<std::pair<Natural, std::size_t>>{
           {2, 3}, {3, 2}, {5, 2}}) {
    const RegisterSpec spec = RegisterSpec::finite(b, q);
    for (std::size_t m = 0; m < q; ++m) {
      const LinearOperator borrow = T_operator(m, spec);
      const LinearOperator literal =
          T_operator(m, spec, TranslationRoute::OperatorSum);
      const Natural step = checked_pow(b, m);
      for (Natural n = 0; n < spec.dim(); ++n) {
        CAPTURE(b, q, m, n);
        PureState diff = borrow.column(n);
        diff += Complex(-1.0, 0.0) * literal.column(n);
        diff.prune(1e-12);
        REQUIRE(diff.is_zero());
        if (n >= step) {
          REQUIRE(borrow.column(n).amplitude(n - step) == Complex(1.0, 0.0));
        } else {
          REQUIRE(borrow.column(n).is_zero());
        }
      }
    }
  }
}

TEST_CASE("adjoint translator equals the conjugate transpose") {
  for (const auto& [b, q] : std::vector<std::pair<Natural, std::size_t>>{
           {2, 3}, {3, 3}, {10, 2}}) {
    const RegisterSpec spec = RegisterSpec::finite(b, q);
    for (std::size_t m = 0; m < q; ++m) {
      const DenseMatrix transposed =
          materialized(T_operator(m, spec)).conjugate_transpose();
      const DenseMatrix direct = materialized(T_operator_adjoint(m, spec));
      for (Natural r = 0; r < spec.dim(); ++r) {
        for (Natural c = 0; c < spec.dim(); ++c) {
          CAPTURE(b, q, m, r, c);
          REQUIRE(direct.at(r, c) == transposed.at(r, c));
        }
      }
    }
  }
}

TEST_CASE("exactly one summand acts, and the witness names it") {
  const RegisterSpec spec = RegisterSpec::finite(2, 3);

  const SummandWitness direct = single_summand_witness(0, 1, spec);
  CHECK(direct.direct);

  const SummandWitness chain = single_summand_witness(0, 4, spec);
  CHECK_FALSE(chain.direct);
  CHECK(chain.chain_end_slot == 2);  // digits [0,0,1] force the k = 1 summand

  const SummandWitness mid = single_summand_witness(1, 4, spec);
  CHECK_FALSE(mid.direct);
  CHECK(mid.chain_end_slot == 2);

  CHECK_THROWS_MATCHES(single_summand_witness(2, 3, spec), Error,
                       kind_is(ErrorKind::AllSummandsVanish));

  // Full grid of small registers: every n either has exactly one acting
  // summand (n >= b^m) or none at all.
  for (Natural b : {2ull, 3ull, 5ull, 10ull}) {
    for (std::size_t q = 1; q <= 4; ++q) {
      const RegisterSpec shape = RegisterSpec::finite(b, q);
      for (std::size_t m = 0; m < q; ++m) {
        const Natural step = checked_pow(b, m);
        for (Natural n = step; n <= shape.capacity(); ++n) {
          CAPTURE(b, q, m, n);
          REQUIRE(single_summand_witness(m, n, shape).acting_count == 1);
        }
        CHECK_THROWS_MATCHES(single_summand_witness(m, step - 1, shape), Error,
                             kind_is(ErrorKind::AllSummandsVanish));
      }
    }
  }
}

TEST_CASE("composite shifts by both routes") {
  const RegisterSpec spec = RegisterSpec::finite(2, 3);
  CHECK(shift_all_ops(5, 3, spec, ShiftDirection::Subtract) == 2);
  CHECK(shift_T0_power(5, 3, spec, ShiftDirection::Subtract) == 2);
  CHECK(shift_all_ops(6, 0, spec, ShiftDirection::Subtract) == 6);
  CHECK(shift_T0_power(6, 0, spec, ShiftDirection::Add) == 6);
  CHECK(shift_all_ops(2, 5, spec, ShiftDirection::Add) == 7);
  CHECK(shift_T0_power(2, 5, spec, ShiftDirection::Add) == 7);
}

TEST_CASE("shifts outside the register range are errors") {
  const RegisterSpec spec = RegisterSpec::finite(2, 3);
  CHECK_THROWS_MATCHES(shift_all_ops(2, 5, spec, ShiftDirection::Subtract), Error,
                       kind_is(ErrorKind::ShiftOutOfRange));
  CHECK_THROWS_MATCHES(shift_T0_power(5, 3, spec, ShiftDirection::Add), Error,
                       kind_is(ErrorKind::ShiftOutOfRange));
}

TEST_CASE("unitarity regions on the frozen examples") {
  const RegisterSpec b2q3 = RegisterSpec::finite(2, 3);

  const UnitarityRegion m0 = unitarity_region(0, b2q3);
  CHECK(m0.left_vacuum == IndexRange{0, 0});
  REQUIRE(m0.unitary.has_value());
  CHECK(*m0.unitary == IndexRange{1, 6});
  REQUIRE(m0.right_vacuum.has_value());
  CHECK(*m0.right_vacuum == IndexRange{7, 7});

  // b = 2, m = q-1: the register is just the two vacua.
  const UnitarityRegion top = unitarity_region(2, b2q3);
  CHECK(top.left_vacuum == IndexRange{0, 3});
  CHECK_FALSE(top.unitary.has_value());
  REQUIRE(top.right_vacuum.has_value());
  CHECK(*top.right_vacuum == IndexRange{4, 7});

  const UnitarityRegion b3 = unitarity_region(0, RegisterSpec::finite(3, 2));
  CHECK(b3.left_vacuum == IndexRange{0, 0});
  CHECK(*b3.unitary == IndexRange{1, 7});
  CHECK(*b3.right_vacuum == IndexRange{8, 8});
}

TEST_CASE("the three regions partition the register exactly once") {
  for (const auto& [b, q] : std::vector<std::pair<Natural, std::size_t>>{
           {2, 3}, {2, 4}, {3, 3}, {5, 2}, {10, 2}}) {
    const RegisterSpec spec = RegisterSpec::finite(b, q);
    for (std::size_t m = 0; m < q; ++m) {
      const UnitarityRegion region = unitarity_region(m, spec);
      for (Natural n = 0; n <= spec.capacity(); ++n) {
        int covering = region.left_vacuum.contains(n) ? 1 : 0;
        covering += region.unitary && region.unitary->contains(n) ? 1 : 0;
        covering += region.right_vacuum && region.right_vacuum->contains(n) ? 1 : 0;
        CAPTURE(b, q, m, n);
        REQUIRE(covering == 1);
      }
    }
  }
}

TEST_CASE("commutator classification matches the region trichotomy") {
  for (const auto& [b, q] : std::vector<std::pair<Natural, std::size_t>>{
           {2, 3}, {3, 2}, {5, 2}}) {
    const RegisterSpec spec = RegisterSpec::finite(b, q);
    for (std::size_t m = 0; m < q; ++m) {
      const UnitarityRegion region = unitarity_region(m, spec);
      const std::vector<int> actions = commutator_classification(m, spec);
      for (Natural n = 0; n < spec.dim(); ++n) {
        int expected = 0;
        if (region.left_vacuum.contains(n)) {
          expected = 1;
        } else if (region.right_vacuum->contains(n)) {
          expected = -1;
        }
        CAPTURE(b, q, m, n);
        REQUIRE(actions[static_cast<std::size_t>(n)] == expected);
      }
    }
  }
}

TEST_CASE("truncated-infinite registers: agreement and no right vacuum") {
  const RegisterSpec finite = RegisterSpec::finite(3, 3);
  const RegisterSpec truncated = RegisterSpec::truncated_infinite(3, 5, 2);
  REQUIRE(truncated.usable_capacity() == finite.capacity());

  for (std::size_t m = 0; m < 3; ++m) {
    const Natural step = checked_pow(3, m);
    for (Natural n = 0; n <= finite.capacity(); ++n) {
      CAPTURE(m, n);
      REQUIRE(translate_down(n, m, finite) == translate_down(n, m, truncated));
      if (n + step <= truncated.usable_capacity()) {
        const auto up = translate_up(n, m, truncated);
        REQUIRE(up.has_value());  // the infinite register has no right vacuum
        REQUIRE(*up == n + step);
      }
    }
  }

  CHECK_FALSE(unitarity_region(1, truncated).right_vacuum.has_value());
}

TEST_CASE("carries past the usable range violate the guard") {
  const RegisterSpec truncated = RegisterSpec::truncated_infinite(10, 3, 1);
  // usable capacity 99; adding 1 to 99 carries into the guard slot
  CHECK_THROWS_MATCHES(translate_up(99, 0, truncated), Error,
                       kind_is(ErrorKind::GuardViolation));
  CHECK(translate_up(98, 0, truncated) == 99);
  // raising a guard slot directly is also a violation
  CHECK_THROWS_MATCHES(t_operator_adjoint(2, truncated).column(5), Error,
                       kind_is(ErrorKind::GuardViolation));
}

TEST_CASE("guard-occupying inputs are rejected outright") {
  const RegisterSpec truncated = RegisterSpec::truncated_infinite(10, 3, 1);
  CHECK_THROWS_MATCHES(translate_down(100, 0, truncated), Error,
                       kind_is(ErrorKind::GuardViolation));
}
