// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "prismforge/algebra/parser.hpp"
#include "prismforge/delta.hpp"
#include "prismforge/errors.hpp"
#include "properties.hpp"

using namespace prismforge;

namespace {

RingPtr zz(std::vector<std::string> v, std::uint64_t p) {
  return RingContext::make(std::move(v), CoefficientDomain::integers(), p);
}

}  // namespace

TEST(Delta, SmallValues) {
  auto r = zz({"X", "Y"}, 2);
  auto L = FrobeniusLift::monomial(2);
  EXPECT_EQ(delta_of(parse_poly("X + Y", r), L).to_string(), "-X*Y");
  auto t = zz({"T"}, 2);
  EXPECT_EQ(delta_of(parse_poly("2 - T", t), L), parse_poly("-1 + 2*T - T^2", t));
  EXPECT_TRUE(delta_of(parse_poly("X", r), L).is_zero());
  EXPECT_EQ(delta_of(parse_poly("3", r), L).to_string(), "-3");
  EXPECT_EQ(phi_pow(parse_poly("X + 1", r), 2, L).to_string(), "X^4 + 1");
}

TEST(Delta, CustomLift) {
  auto r = zz({"X", "Y"}, 3);
  auto X = Polynomial::variable(r, "X"), Y = Polynomial::variable(r, "Y");
  auto L = FrobeniusLift::custom(3, {{"X", X.pow(3) + Polynomial::constant(r, 3) * Y}});
  validate_frobenius_lift(L, r);
  EXPECT_EQ(delta_of(X, L), Y);
  EXPECT_EQ(L.image_of("Y", r), Y.pow(3));
  auto bad = FrobeniusLift::custom(3, {{"X", X.pow(3) + Y}});
  try {
    validate_frobenius_lift(bad, r);
    FAIL() << "lift should be rejected";
  } catch (const InvalidLift& e) {
    EXPECT_EQ(e.variable(), "X");
    EXPECT_EQ(e.witness(), "1");
  }
  EXPECT_THROW(validate_frobenius_lift(FrobeniusLift::custom(3, {{"Z", X}}), r), InputError);
  EXPECT_THROW(FrobeniusLift::monomial(4), InputError);
}

TEST(Delta, PhiMonomialDecomposition) {
  auto r = zz({"X", "Y", "Z"}, 2);
  auto f = parse_poly("3*X^3 + Y^4 - 5*Z^5", r);
  auto dec = phi_monomial_decomposition(f, FrobeniusLift::monomial(2));
  EXPECT_EQ(dec.parts.size(), 3U);
  EXPECT_EQ(dec.reconstruct(), f);
  auto X = Polynomial::variable(r, "X");
  auto L = FrobeniusLift::custom(2, {{"X", X.pow(2) + Polynomial::constant(r, 2) * Polynomial::variable(r, "Y")}});
  EXPECT_THROW(phi_monomial_decomposition(f, L), NotPhiMonomial);
  EXPECT_EQ(delta_height_bound(fermat_sum(2, {3, 4, 5}), FrobeniusLift::monomial(2)), 1U);
  EXPECT_GE(delta_height_bound(parse_poly("X^2 + 2*X*Y + X", zz({"X", "Y"}, 2)), FrobeniusLift::monomial(2)), 2U);
}

TEST(Delta, StabilizationExamples) {
  auto L = FrobeniusLift::monomial(2);
  auto r = zz({"X", "Y"}, 2);
  auto res = delta_stabilize(Ideal(r, {parse_poly("X^2 + 2*X*Y + X", r)}), L);
  EXPECT_TRUE(ideal_equal(res.ideal, Ideal(r, {parse_poly("X^2", r), parse_poly("X*(2*Y + 1)", r)}),
                          MembershipMode::ZpLocal));
  EXPECT_TRUE(is_delta_stable(res.ideal, L));
  EXPECT_FALSE(res.trace.empty());

  auto s = zz({"X", "Y", "Z"}, 2);
  auto sq = delta_stabilize(Ideal(s, {parse_poly("X*Y", s), parse_poly("Y*Z", s)}), L);
  EXPECT_EQ(sq.delta_height, 0U);
  EXPECT_TRUE(delta_stabilize(Ideal(s), L).ideal.is_zero());
}

TEST(Delta, NotStabilizedWithinCap) {
  auto r = zz({"X", "Y"}, 2);
  auto L = FrobeniusLift::monomial(2);
  // delta(X + Y) = -XY; delta(XY) = 0, so height 1 and a cap of 0 fails.
  EXPECT_THROW(delta_stabilize(Ideal(r, {parse_poly("X + Y", r)}), L, 0), NotStabilized);
  EXPECT_EQ(delta_stabilize(Ideal(r, {parse_poly("X + Y", r)}), L, 1).delta_height, 1U);
}

TEST(Delta, InputChecks) {
  auto L = FrobeniusLift::monomial(2);
  auto q = RingContext::make({"X"}, CoefficientDomain::rationals(), 2);
  EXPECT_THROW(delta_stabilize(Ideal(q, {Polynomial::variable(q, 0)}), L), InputError);
  auto r3 = zz({"X"}, 3);
  EXPECT_THROW(delta_stabilize(Ideal(r3, {Polynomial::variable(r3, 0)}), L), InputError);
  EXPECT_THROW(beta_poly(2, 2, {1}), InputError);
  EXPECT_THROW(beta_poly(2, 3, {1}), InputError);
  EXPECT_THROW(beta_poly(2, 3, {0, 1}), InputError);
}

TEST(Beta, MatchesDisplayAndDeltaModF) {
  for (std::uint64_t p : {2, 3}) {
    const unsigned m = static_cast<unsigned>(p) + 1;
    std::vector<unsigned> n(m, 1);
    for (unsigned trial = 0; trial < 20; ++trial) {
      for (unsigned j = 0; j < m; ++j) n[j] = 1 + (trial * (j + 3) + j) % 4;
      auto f = fermat_sum(p, n);
      auto beta = beta_poly(p, m, std::vector<unsigned>(n.begin() + 1, n.end()));
      auto shown = oracle::beta_display(p, std::vector<unsigned>(n.begin() + 1, n.end()));
      if (p == 2) {
        EXPECT_EQ(beta, shown);
      } else {
        EXPECT_EQ(beta, -shown);
      }
      auto rem = oracle::reduce_by_monic(delta_of(f, FrobeniusLift::monomial(p)) - embed(beta, f.ring()), f, 0, n[0]);
      EXPECT_TRUE(rem.is_zero()) << rem.to_string();
    }
  }
}

TEST(Beta, FivePrimeAgreesModF) {
  std::vector<unsigned> n{1, 2, 1, 1, 2, 1};
  auto f = fermat_sum(5, n);
  auto beta = beta_poly(5, 6, std::vector<unsigned>(n.begin() + 1, n.end()));
  auto rem = oracle::reduce_by_monic(delta_of(f, FrobeniusLift::monomial(5)) - embed(beta, f.ring()), f, 0, 1);
  EXPECT_TRUE(rem.is_zero());
}

TEST(DeltaProperties, RingLaws) {
  auto o = props::delta_ring_laws(500, 3);
  EXPECT_TRUE(o.ok) << o.failure;
  EXPECT_EQ(o.cases, 500U);
}
