// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "prismforge/algebra/parser.hpp"
#include "prismforge/errors.hpp"
#include "prismforge/prism.hpp"
#include "properties.hpp"

using namespace prismforge;

namespace {

RingPtr zz(std::vector<std::string> v, std::uint64_t p) {
  return RingContext::make(std::move(v), CoefficientDomain::integers(), p);
}

PrismSpec square_free(const char* d) {
  auto r = zz({"X", "Y", "Z", "W"}, 2);
  return make_prism(r, {parse_poly("X*Y", r)}, FrobeniusLift::monomial(2), parse_poly(d, r));
}

}  // namespace

TEST(Prism, Preprism) {
  EXPECT_TRUE(validate_preprism(t_prism(2)).overall);
  EXPECT_TRUE(validate_preprism(square_free("2 - Z*W")).overall);
  auto r = zz({"X"}, 2);
  auto zero = make_prism(r, {}, FrobeniusLift::monomial(2), Polynomial(r));
  auto c = validate_preprism(zero);
  EXPECT_FALSE(c.orientation.pass);
  EXPECT_FALSE(c.overall);
  auto inside = make_prism(r, {parse_poly("X", r)}, FrobeniusLift::monomial(2), parse_poly("3*X", r));
  EXPECT_FALSE(validate_preprism(inside).orientation.pass);
  auto unstable = make_prism(r, {parse_poly("X + 1", r)}, FrobeniusLift::monomial(2), parse_poly("2", r));
  auto u = validate_preprism(unstable);
  // delta(X + 1) = -X, which is not a multiple of X + 1.
  EXPECT_FALSE(u.delta_stable.pass);
}

TEST(Prism, DeltaStabilityWitness) {
  auto r = zz({"X", "Y"}, 2);
  auto spec = make_prism(r, {parse_poly("X + Y", r)}, FrobeniusLift::monomial(2), parse_poly("2", r));
  auto c = validate_preprism(spec);
  EXPECT_FALSE(c.delta_stable.pass);
  EXPECT_EQ(c.delta_stable.witness, "-X*Y");
}

TEST(Prism, DistinguishedUnits) {
  auto t = distinguished_unit_check(t_prism(2));
  EXPECT_TRUE(t.pass);
  EXPECT_NE(t.detail.find("residue 1"), std::string::npos);
  EXPECT_TRUE(distinguished_unit_check(q_prism(2)).pass);
  EXPECT_TRUE(distinguished_unit_check(q_prism(3)).pass);
  auto r = zz({"T"}, 2);
  EXPECT_FALSE(distinguished_unit_check(make_prism(r, {}, FrobeniusLift::monomial(2), parse_poly("T", r))).pass);
  // Without the shift, [2]_q = 1 + q is judged at q = 0 where delta(d) = -q vanishes.
  auto q = zz({"q"}, 2);
  EXPECT_FALSE(distinguished_unit_check(make_prism(q, {}, FrobeniusLift::monomial(2), parse_poly("1 + q", q))).pass);
}

TEST(Prism, Transversality) {
  auto r = zz({"X", "Y"}, 2);
  auto path = make_prism(r, {parse_poly("X^2", r), parse_poly("X*(2*Y + 1)", r)}, FrobeniusLift::monomial(2),
                         std::nullopt, PrismFlavor::Crystalline);
  auto [tf, nzd] = transversal_check(path);
  EXPECT_TRUE(tf.pass);
  EXPECT_TRUE(nzd.pass);
  auto tors = make_prism(r, {parse_poly("2*X", r)}, FrobeniusLift::monomial(2), parse_poly("2 - Y", r));
  auto t2 = transversal_check(tors).first;
  EXPECT_FALSE(t2.pass);
  EXPECT_EQ(t2.witness, "X");
  auto sq = transversal_check(square_free("2 - Z*W"));
  EXPECT_TRUE(sq.first.pass);
  EXPECT_TRUE(sq.second.pass);
}

TEST(Prism, TheoremHypotheses) {
  EXPECT_TRUE(theorem_hypotheses(square_free("2 - Z*W"), 3).overall);
  EXPECT_TRUE(theorem_hypotheses(t_prism(2), 3).overall);
  EXPECT_TRUE(theorem_hypotheses(q_prism(2), 3).overall);
  auto bad = theorem_hypotheses(square_free("2 - X"), 3);
  EXPECT_FALSE(bad.overall);
  ASSERT_TRUE(bad.first_failure());
  EXPECT_EQ(bad.first_failure()->name, "d_nzd_mod_p");
  EXPECT_EQ(bad.first_failure()->witness, "Y");

  auto x = zz({"X"}, 2);
  EXPECT_TRUE(theorem_hypotheses(make_prism(x, {}, FrobeniusLift::monomial(2), std::nullopt, PrismFlavor::Crystalline), 3)
                  .overall);
}

TEST(Prism, HypothesesMonotoneInLevels) {
  auto spec = square_free("2 - Z*W");
  auto hi = theorem_hypotheses(spec, 3);
  for (unsigned k = 0; k < 3; ++k) {
    auto lo = theorem_hypotheses(spec, k);
    ASSERT_EQ(lo.verdicts().size(), hi.verdicts().size());
    for (std::size_t i = 0; i + 1 < lo.verdicts().size(); ++i) EXPECT_EQ(lo.verdicts()[i].pass, hi.verdicts()[i].pass);
    EXPECT_TRUE(lo.overall);
  }
}

TEST(Prism, SpecValidation) {
  auto r = zz({"X"}, 2);
  EXPECT_THROW(make_prism(r, {}, FrobeniusLift::monomial(2), std::nullopt), InputError);
  EXPECT_THROW(make_prism(r, {}, FrobeniusLift::monomial(3), parse_poly("2 - X", r)), InputError);
  EXPECT_THROW(make_prism(r, {}, FrobeniusLift::monomial(2), parse_poly("X", r), PrismFlavor::Crystalline), InputError);
  auto q = RingContext::make({"X"}, CoefficientDomain::rationals(), 2);
  EXPECT_THROW(make_prism(q, {}, FrobeniusLift::monomial(2), parse_poly("2 - X", q)), InputError);
  EXPECT_THROW(make_prism(r, {}, FrobeniusLift::monomial(2), parse_poly("2 - X", r), PrismFlavor::Zariskian, {{"Y", "1"}}),
               InputError);
}

TEST(Toric, Examples) {
  auto cusp = toric_ideal(make_semigroup({{2}, {3}}, {"s"}), 2);
  ASSERT_EQ(cusp.ideal.generators().size(), 1U);
  EXPECT_EQ(cusp.ideal.generators()[0].to_string(), "u1^3 - u2^2");
  auto sg = make_semigroup({{1, 0}, {1, 1}, {1, 3}, {1, 4}}, {"s", "t"});
  auto nc = toric_ideal(sg, 2);
  EXPECT_TRUE(is_delta_stable(nc.ideal, nc.lift));
  auto amb = nc.parametrization.begin()->second.ring();
  for (const auto& g : nc.ideal.generators()) EXPECT_TRUE(substitute(g, nc.parametrization, amb).is_zero());
  // Known generators of the kernel, checked by membership both ways.
  auto u = nc.ring;
  Ideal expected(u, {parse_poly("u1*u4 - u2*u3", u), parse_poly("u1^2*u3 - u2^3", u), parse_poly("u2*u4^2 - u3^3", u),
                     parse_poly("u1*u3^2 - u2^2*u4", u)});
  EXPECT_TRUE(ideal_equal(nc.ideal, expected, MembershipMode::Z));
  EXPECT_TRUE(toric_ideal(make_semigroup({{1, 0}, {0, 1}}), 3).ideal.is_zero());
}

TEST(Toric, SimplicialRank) {
  auto a = simplicial_rank(make_semigroup({{1, 0}, {1, 1}, {1, 3}, {1, 4}}));
  EXPECT_EQ(a.rank, 2U);
  EXPECT_TRUE(a.simplicial);
  EXPECT_EQ(a.extremal, (std::vector<std::size_t>{0, 3}));
  auto b = simplicial_rank(make_semigroup({{2}, {3}}));
  EXPECT_EQ(b.rank, 1U);
  EXPECT_TRUE(b.simplicial);
  EXPECT_TRUE(simplicial_rank(make_semigroup({{1, 0}, {0, 1}})).simplicial);
  // The cone over a square is not simplicial.
  auto sq = simplicial_rank(make_semigroup({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}}));
  EXPECT_EQ(sq.rank, 3U);
  EXPECT_FALSE(sq.simplicial);
  std::vector<std::vector<long>> many(9, {1});
  EXPECT_THROW(simplicial_rank(make_semigroup(many)), ResourceExceeded);
  EXPECT_THROW(make_semigroup({{1, -1}}), InputError);
  EXPECT_THROW(make_semigroup({{0, 0}}), InputError);
}

TEST(Toric, GenericDegree) {
  auto r = zz({"X", "Y", "Z"}, 3);
  auto full = make_prism(r, {}, FrobeniusLift::monomial(3), std::nullopt, PrismFlavor::Crystalline);
  EXPECT_EQ(generic_degree_monomial(full).degree, 27);
  auto g = generic_degree_monomial(make_semigroup({{2}, {3}}), 5);
  EXPECT_EQ(g.degree, 5);
  EXPECT_EQ(g.transition, 25);
  EXPECT_EQ(generic_degree_monomial(make_semigroup({{1, 0}, {1, 1}, {1, 3}, {1, 4}}), 2).degree, 4);
  auto sq = make_prism(zz({"X", "Y", "Z", "W"}, 2), {parse_poly("X*Y", zz({"X", "Y", "Z", "W"}, 2))},
                       FrobeniusLift::monomial(2), parse_poly("2 - Z*W", zz({"X", "Y", "Z", "W"}, 2)));
  EXPECT_THROW(generic_degree_monomial(sq), UnsupportedError);
}
