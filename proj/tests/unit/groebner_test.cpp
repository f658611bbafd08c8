// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "prismforge/algebra/parser.hpp"
#include "prismforge/errors.hpp"
#include "prismforge/groebner/ideal.hpp"
#include "properties.hpp"

using namespace prismforge;

namespace {

Ideal ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(parse_poly(s, r));
  return Ideal(r, g);
}

std::vector<std::string> strs(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST(Groebner, TwistedCubicOverQ) {
  auto r = RingContext::make({"X", "Y", "Z"}, CoefficientDomain::rationals());
  auto I = ideal(r, {"X^2 - Y", "X^3 - Z"});
  auto G = I.basis(MonomialOrder::lex(), {}, true);
  EXPECT_TRUE(props::check_basis(I, *G).ok);
  EXPECT_EQ(strs(G->elements), (std::vector<std::string>{"Y^3 - Z^2", "-Y^2 + X*Z", "X*Y - Z", "X^2 - Y"}));
}

TEST(Groebner, StrongIntegerBasis) {
  auto r = RingContext::make({"X"}, CoefficientDomain::integers());
  auto I = ideal(r, {"2*X", "3*X^2 + 1"});
  auto G = I.basis(MonomialOrder::grevlex(), {}, true);
  EXPECT_TRUE(G->strong);
  EXPECT_TRUE(props::check_basis(I, *G).ok);
  // 2X and 3X^2 + 1 generate (X + 2, ... ); over ZZ the ideal contains 2*(3X^2+1) - 3X*(2X) = 2.
  EXPECT_TRUE(membership(parse_poly("2", r), I, MembershipMode::Z).member);
  EXPECT_FALSE(membership(parse_poly("1", r), I, MembershipMode::Z).member);
  EXPECT_TRUE(membership(parse_poly("1", r), I, MembershipMode::Q).member);
}

TEST(Groebner, MembershipTiersAndCertificates) {
  auto r = RingContext::make({"X", "Y"}, CoefficientDomain::integers(), 2);
  auto I = ideal(r, {"3*X", "Y^2"});
  auto c = membership(parse_poly("X*Y + Y^3", r), I, MembershipMode::ZpLocal, {}, true);
  EXPECT_TRUE(c.member);
  EXPECT_EQ(c.tier, MembershipTier::ZpLocal);
  EXPECT_EQ(c.denominator, 3);
  EXPECT_TRUE(c.verify());
  auto z = membership(parse_poly("6*X*Y + Y^3", r), I, MembershipMode::ZpLocal, {}, true);
  EXPECT_EQ(z.tier, MembershipTier::Z);
  EXPECT_TRUE(z.verify());
  auto two = ideal(r, {"2*X"});
  auto n = membership(parse_poly("X", r), two, MembershipMode::ZpLocal);
  EXPECT_FALSE(n.member);
  EXPECT_EQ(n.tier, MembershipTier::ZpLocal);
  EXPECT_FALSE(membership(parse_poly("Y", r), two, MembershipMode::ZpLocal).member);
  auto f2 = membership(parse_poly("X", r), ideal(r, {"3*X"}), MembershipMode::Fp);
  EXPECT_TRUE(f2.member);
  EXPECT_EQ(f2.tier, MembershipTier::Fp);
}

TEST(Groebner, NormalFormQuotients) {
  auto r = RingContext::make({"X", "Y"}, CoefficientDomain::rationals());
  auto I = ideal(r, {"X^2 - Y", "X*Y - 1"});
  auto G = I.basis(MonomialOrder::grevlex());
  auto f = parse_poly("X^3*Y + X^2 + 5", r);
  std::vector<Polynomial> q;
  auto rem = normal_form(f, *G, q);
  Polynomial s = rem;
  for (std::size_t k = 0; k < q.size(); ++k) s = s + q[k] * G->elements[k];
  EXPECT_EQ(s, f);
  EXPECT_EQ(rem, normal_form(f, *G));
}

TEST(Groebner, EliminateIntersectColon) {
  auto q = RingContext::make({"T", "X", "Y"}, CoefficientDomain::rationals());
  auto E = eliminate(ideal(q, {"X - T^2", "Y - T^3"}), {"T"});
  EXPECT_EQ(strs(E.generators()), (std::vector<std::string>{"X^3 - Y^2"}));

  auto r = RingContext::make({"X", "Y"}, CoefficientDomain::rationals());
  auto meet = intersect(ideal(r, {"X"}), ideal(r, {"Y"}));
  EXPECT_TRUE(ideal_equal(meet, ideal(r, {"X*Y"}), MembershipMode::Q));
  auto col = colon(ideal(r, {"X*Y", "X^2"}), parse_poly("X", r));
  EXPECT_TRUE(ideal_equal(col, ideal(r, {"X", "Y"}), MembershipMode::Q));

  auto z = RingContext::make({"X"}, CoefficientDomain::integers());
  auto cz = colon(ideal(z, {"2*X"}), parse_poly("2", z));
  EXPECT_TRUE(ideal_equal(cz, ideal(z, {"X"}), MembershipMode::Z));
  auto zero = colon(Ideal(z), parse_poly("X", z));
  EXPECT_TRUE(zero.is_zero());
}

TEST(Groebner, InitialIdealAndEquality) {
  auto r = RingContext::make({"X", "Y"}, CoefficientDomain::prime_field(2));
  auto I = ideal(r, {"X^2 + X*Y + Y^2", "X*Y^2"});
  auto in = initial_ideal(I, MonomialOrder::lex());
  for (const auto& g : in.generators()) EXPECT_EQ(g.size(), 1U);
  EXPECT_TRUE(ideal_contains(in, ideal(r, {"X^2"}), MembershipMode::Fp));
  EXPECT_TRUE(ideal_equal(I, ideal(r, {"X*Y^2", "X^2 + X*Y + Y^2", "Y^4"}), MembershipMode::Fp));
  EXPECT_FALSE(ideal_equal(I, ideal(r, {"X", "Y"}), MembershipMode::Fp));
}

TEST(Groebner, ContractToPthPowers) {
  auto r = RingContext::make({"X", "Y"}, CoefficientDomain::prime_field(2));
  EXPECT_TRUE(ideal_equal(contract_to_pth_powers(ideal(r, {"X^2"})), ideal(r, {"X"}), MembershipMode::Fp));
  EXPECT_TRUE(ideal_equal(contract_to_pth_powers(ideal(r, {"X^2 + X*Y + Y^2"})), ideal(r, {"X^2 + X*Y + Y^2"}),
                          MembershipMode::Fp));
  EXPECT_THROW(contract_to_pth_powers(Ideal(RingContext::make({"X"}, CoefficientDomain::rationals()))), InputError);
}

TEST(Groebner, ResourceLimits) {
  auto r = RingContext::make({"X", "Y", "Z"}, CoefficientDomain::rationals());
  auto I = ideal(r, {"X^3 - Y*Z + 1", "Y^3 - X*Z", "Z^3 - X*Y + 2"});
  Limits lim;
  lim.max_pairs = 2;
  EXPECT_THROW(groebner_field(I, MonomialOrder::lex(), lim), ResourceExceeded);
  Limits deg;
  deg.max_degree = 3;
  EXPECT_THROW(groebner_field(I, MonomialOrder::lex(), deg), ResourceExceeded);
  lim.max_pairs = 50000;
  lim.stats = std::make_shared<Stats>();
  groebner_field(I, MonomialOrder::lex(), lim);
  EXPECT_GT(lim.stats->pairs.load(), 0U);
}

TEST(Groebner, ContextChecks) {
  auto a = RingContext::make({"X"}, CoefficientDomain::rationals());
  auto b = RingContext::make({"Y"}, CoefficientDomain::rationals());
  EXPECT_THROW(membership(parse_poly("Y", b), ideal(a, {"X"}), MembershipMode::Q), ContextMismatch);
  EXPECT_THROW(ideal_equal(ideal(a, {"X"}), ideal(b, {"Y"}), MembershipMode::Q), ContextMismatch);
}

TEST(GroebnerProperties, EveryBasisSatisfiesCriterionAndPreservesIdeal) {
  auto o = props::groebner_bases(60, 11);
  EXPECT_TRUE(o.ok) << o.failure;
  EXPECT_EQ(o.cases, 120U);
}

TEST(GroebnerProperties, StrongIntegerMembershipOracle) {
  auto o = props::strong_z_membership(60, 5);
  EXPECT_TRUE(o.ok) << o.failure;
  EXPECT_GT(o.cases, 30U);
}
