// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "prismforge/prism.hpp"

#include <algorithm>
#include <functional>
#include <regex>
#include <set>

#include "prismforge/algebra/parser.hpp"
#include "prismforge/errors.hpp"

namespace prismforge {

std::string to_string(PrismFlavor f) {
  return f == PrismFlavor::Crystalline ? "crystalline" : "zariskian";
}

PrismSpec make_prism(RingPtr ring, std::vector<Polynomial> J, FrobeniusLift lift,
                     std::optional<Polynomial> d, PrismFlavor flavor,
                     const std::map<std::string, std::string>& shift) {
  if (ring->domain().kind() != DomainKind::IntegerZ || ring->prime() == 0) {
    throw InputError("prism rings are ZZ with a prime, got " + ring->describe());
  }
  if (lift.prime() != ring->prime()) throw InputError("lift prime differs from ring prime");
  validate_frobenius_lift(lift, ring);
  for (const auto& g : J) require_same_ring(ring, g.ring(), "prism relations");

  Polynomial orient = Polynomial::constant(ring, mpz_class(static_cast<unsigned long>(ring->prime())));
  if (flavor == PrismFlavor::Zariskian) {
    if (!d) throw InputError("a zariskian prism needs an orientation");
    require_same_ring(ring, d->ring(), "prism orientation");
    orient = *d;
  } else if (d && *d != orient) {
    throw InputError("a crystalline prism has orientation p, got " + d->to_string());
  }

  std::vector<std::string> names = ring->variables();
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  for (const auto& [var, text] : shift) {
    if (!ring->index_of(var)) throw InputError("shift of unknown variable " + var);
    for (std::sregex_iterator it(text.begin(), text.end(), ident), end; it != end; ++it) {
      const std::string id = it->str();
      if (id != "p" && std::find(names.begin(), names.end(), id) == names.end()) names.push_back(id);
    }
  }
  RingPtr sring = ring->with_variables(names);
  std::map<std::string, Polynomial> images;
  for (const auto& [var, text] : shift) images.emplace(var, parse_poly(text, sring));

  return PrismSpec{ring, Ideal(ring, std::move(J)), std::move(lift), orient, flavor,
                   std::move(images), sring};
}

PrismSpec t_prism(std::uint64_t p) {
  RingPtr ring = RingContext::make({"T"}, CoefficientDomain::integers(), p);
  return make_prism(ring, {}, FrobeniusLift::monomial(p), parse_poly("p - T", ring));
}

PrismSpec q_prism(std::uint64_t p) {
  RingPtr ring = RingContext::make({"q"}, CoefficientDomain::integers(), p);
  Polynomial d(ring);
  for (std::uint64_t i = 0; i < p; ++i) d = d + Polynomial::variable(ring, 0).pow(static_cast<long long>(i));
  return make_prism(ring, {}, FrobeniusLift::monomial(p), d, PrismFlavor::Zariskian, {{"q", "1 + u"}});
}

std::vector<Verdict> HypothesisCertificate::verdicts() const {
  std::vector<Verdict> out{delta_stable, orientation};
  for (const auto* v : {&distinguished, &p_torsion_free, &d_nzd_mod_p})
    if (*v) out.push_back(**v);
  if (root_closed) {
    Verdict v{"root_closed", root_closed->verdict == RootClosureVerdict::CertifiedUpTo,
              root_closed->verdict_string(),
              root_closed->witness ? root_closed->witness->to_string() : std::string(),
              "p-th power injectivity, levels 0.." + std::to_string(root_closed->levels_checked)};
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Verdict> HypothesisCertificate::first_failure() const {
  for (auto& v : verdicts())
    if (!v.pass) return v;
  return std::nullopt;
}

Ideal reduce_ideal(const Ideal& J, std::uint64_t p) {
  auto dom = CoefficientDomain::prime_field(p);
  std::vector<Polynomial> g;
  for (const auto& x : J.generators()) g.push_back(reduce_mod(x, dom));
  return Ideal(J.ring()->with_domain(dom), std::move(g));
}

HypothesisCertificate validate_preprism(const PrismSpec& spec, const Limits& limits) {
  HypothesisCertificate cert;
  cert.delta_stable = {"delta_stable", true, "", "", "delta of each relation, membership over ZZ then ZZ_(p)"};
  for (const auto& g : spec.J.generators()) {
    Polynomial dg = delta_of(g, spec.lift);
    if (dg.is_zero()) continue;
    auto m = membership(dg, spec.J, MembershipMode::ZpLocal, limits);
    if (!m.member) {
      cert.delta_stable.pass = false;
      cert.delta_stable.detail = "delta(" + g.to_string() + ") is not in J";
      cert.delta_stable.witness = dg.to_string();
      break;
    }
  }
  cert.orientation = {"orientation", true, "", "", "d nonzero and d not in J over ZZ_(p)"};
  if (spec.d.is_zero()) {
    cert.orientation.pass = false;
    cert.orientation.detail = "orientation degenerate: d = 0";
    cert.orientation.witness = "0";
  } else if (membership(spec.d, spec.J, MembershipMode::ZpLocal, limits).member) {
    cert.orientation.pass = false;
    cert.orientation.detail = "orientation degenerate: d lies in J";
    cert.orientation.witness = spec.d.to_string();
  }
  cert.overall = cert.delta_stable.pass && cert.orientation.pass;
  return cert;
}

mpz_class local_residue(const Polynomial& f, const PrismSpec& spec) {
  std::map<std::string, Polynomial> img;
  for (const auto& v : spec.ring->variables()) {
    auto it = spec.shift.find(v);
    img.emplace(v, it != spec.shift.end() ? it->second : Polynomial::variable(spec.shift_ring, v));
  }
  mpq_class c = substitute(f, img, spec.shift_ring).constant_term();
  mpz_class r = c.get_num() % mpz_class(static_cast<unsigned long>(spec.prime()));
  if (r < 0) r += spec.prime();
  return r;
}

Verdict distinguished_unit_check(const PrismSpec& spec) {
  Verdict v{"distinguished", true, "", "", "residue of delta(d) at (p, variables)"};
  if (!spec.shift.empty()) v.method += " after shift";
  for (const auto& g : spec.J.generators()) {
    if (local_residue(g, spec) != 0) {
      v.pass = false;
      v.detail = "maximal ideal does not contain J";
      v.witness = g.to_string();
      return v;
    }
  }
  Polynomial dd = delta_of(spec.d, spec.lift);
  mpz_class r = local_residue(dd, spec);
  v.detail = "delta(d) = " + dd.to_string() + ", residue " + r.get_str();
  if (r == 0) {
    v.pass = false;
    v.witness = dd.to_string();
  }
  return v;
}

std::pair<Verdict, Verdict> transversal_check(const PrismSpec& spec, const Limits& limits) {
  const std::uint64_t p = spec.prime();
  Verdict tf{"p_torsion_free", true, "", "", "colon(J, p) in J over ZZ_(p)"};
  if (!spec.J.is_zero()) {
    Ideal K = colon(spec.J, Polynomial::constant(spec.ring, mpz_class(static_cast<unsigned long>(p))), limits);
    for (const auto& g : K.generators()) {
      if (!membership(g, spec.J, MembershipMode::ZpLocal, limits).member) {
        tf.pass = false;
        tf.detail = "p kills a nonzero class modulo J";
        tf.witness = g.to_string();
        break;
      }
    }
  }
  Verdict nzd{"d_nzd_mod_p", true, "", "", "colon(J mod p, d) in J mod p over GF(p)"};
  if (spec.flavor == PrismFlavor::Crystalline) {
    nzd.method = "crystalline orientation, nothing to check";
    return {tf, nzd};
  }
  Ideal Jb = reduce_ideal(spec.J, p);
  Polynomial db = reduce_mod(spec.d, CoefficientDomain::prime_field(p));
  if (membership(db, Jb, MembershipMode::Fp, limits).member) {
    nzd.pass = false;
    nzd.detail = "d vanishes modulo (p, J)";
    nzd.witness = db.to_string();
    return {tf, nzd};
  }
  Ideal K = colon(Jb, db, limits);
  for (const auto& g : K.generators()) {
    if (!membership(g, Jb, MembershipMode::Fp, limits).member) {
      nzd.pass = false;
      nzd.detail = "d is a zero-divisor modulo (p, J)";
      nzd.witness = g.to_string();
      break;
    }
  }
  return {tf, nzd};
}

HypothesisCertificate theorem_hypotheses(const PrismSpec& spec, unsigned k, const Limits& limits) {
  HypothesisCertificate cert = validate_preprism(spec, limits);
  cert.distinguished = distinguished_unit_check(spec);
  auto [tf, nzd] = transversal_check(spec, limits);
  cert.p_torsion_free = tf;
  cert.d_nzd_mod_p = nzd;

  const std::uint64_t p = spec.prime();
  Ideal Jb = reduce_ideal(spec.J, p);
  if (spec.flavor == PrismFlavor::Crystalline) {
    RootClosureCertificate rc;
    rc.levels_checked = k;
    auto r = pth_power_injective(Jb, Jb, limits);
    rc.per_level.push_back({0, r.injective, r.witness});
    if (!r.injective) {
      rc.verdict = RootClosureVerdict::FailedAt;
      rc.witness = r.witness;
    }
    cert.root_closed = rc;
    cert.notes.push_back("crystalline: the quotient chain is constant, root closedness reduces to J mod p being reduced");
  } else {
    cert.root_closed =
        p_root_closed_certificate(Jb, reduce_mod(spec.d, CoefficientDomain::prime_field(p)), k, limits);
    cert.notes.push_back("regular sequence checked in the order p, d only");
  }
  cert.notes.push_back("root closedness certified at polynomial level for levels 0.." + std::to_string(k));
  cert.overall = !cert.first_failure().has_value();
  return cert;
}

std::vector<std::string> SemigroupSpec::ambient_names() const {
  if (!ambient.empty()) return ambient;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back("t" + std::to_string(i + 1));
  return out;
}

SemigroupSpec make_semigroup(std::vector<std::vector<long>> generators, std::vector<std::string> ambient) {
  if (generators.empty()) throw InputError("a semigroup needs generators");
  const std::size_t n = generators.front().size();
  if (n == 0) throw InputError("semigroup vectors must be nonempty");
  for (const auto& a : generators) {
    if (a.size() != n) throw InputError("semigroup vectors have different lengths");
    bool nonzero = false;
    for (long x : a) {
      if (x < 0) throw InputError("semigroup vectors must be nonnegative");
      nonzero = nonzero || x != 0;
    }
    if (!nonzero) throw InputError("semigroup vectors must be nonzero");
  }
  if (!ambient.empty() && ambient.size() != n) throw InputError("ambient names do not match the dimension");
  return SemigroupSpec{n, std::move(generators), std::move(ambient)};
}

ToricPresentation toric_ideal(const SemigroupSpec& sg, std::uint64_t p, const Limits& limits) {
  const auto tnames = sg.ambient_names();
  std::vector<std::string> unames;
  for (std::size_t j = 0; j < sg.generators.size(); ++j) unames.push_back("u" + std::to_string(j + 1));
  for (const auto& u : unames)
    if (std::find(tnames.begin(), tnames.end(), u) != tnames.end())
      throw InputError("ambient name " + u + " clashes with the toric variables");

  std::vector<std::string> all = tnames;
  all.insert(all.end(), unames.begin(), unames.end());
  RingPtr big = RingContext::make(all, CoefficientDomain::rationals());
  RingPtr tring = RingContext::make(tnames, CoefficientDomain::integers(), p);
  RingPtr uring = RingContext::make(unames, CoefficientDomain::integers(), p);

  std::vector<Polynomial> gens;
  std::map<std::string, Polynomial> param;
  for (std::size_t j = 0; j < sg.generators.size(); ++j) {
    std::vector<unsigned> e(sg.generators[j].begin(), sg.generators[j].end());
    Monomial t(tnames.size(), e);
    param.emplace(unames[j], Polynomial::monomial(tring, t));
    e.resize(all.size(), 0);
    gens.push_back(Polynomial::variable(big, tnames.size() + j) - Polynomial::monomial(big, Monomial(all.size(), e)));
  }
  Ideal K = eliminate(Ideal(big, gens), tnames, limits);
  std::vector<Polynomial> out;
  for (const auto& g : K.generators()) {
    mpz_class den = 1;
    for (const auto& t : g.terms()) den = lcm(den, t.coeff.get_den());
    out.push_back(embed(g.scaled(den), uring));
  }
  return ToricPresentation{uring, Ideal(uring, std::move(out)), FrobeniusLift::monomial(p), std::move(param)};
}

namespace {

using Matrix = std::vector<std::vector<mpq_class>>;

/// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < m.size(); ++c) {
    std::size_t r = row;
    while (r < m.size() && m[r][c] == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[row]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[row][c];
      for (std::size_t k = c; k < m[i].size(); ++k) m[i][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

unsigned rank_of(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return 0;
  Matrix m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return static_cast<unsigned>(echelon(m, rows.front().size()).size());
}

/// Coordinates of a in the basis cols (assumed independent), if a lies in their span.
std::optional<std::vector<mpq_class>> coordinates(const std::vector<const std::vector<long>*>& cols,
                                                  const std::vector<long>& a) {
  const std::size_t n = a.size();
  const std::size_t r = cols.size();
  Matrix m(n, std::vector<mpq_class>(r + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i][j] = (*cols[j])[i];
    m[i][r] = a[i];
  }
  auto piv = echelon(m, r + 1);
  if (!piv.empty() && piv.back() == r) return std::nullopt;
  std::vector<mpq_class> x(r);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = m[i][r] / m[i][piv[i]];
  return x;
}

}  // namespace

SimplicialRank simplicial_rank(const SemigroupSpec& sg) {
  constexpr std::size_t kMaxGenerators = 8;
  if (sg.generators.empty()) throw InputError("simplicial_rank needs generators");
  if (sg.generators.size() > kMaxGenerators) {
    throw ResourceExceeded("simplicial test enumerates subsets of at most " + std::to_string(kMaxGenerators) +
                           " generators");
  }
  SimplicialRank out;
  out.rank = rank_of(sg.generators);
  const std::size_t r = sg.generators.size();
  std::vector<std::size_t> idx(out.rank);
  std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t pos, std::size_t from) -> bool {
    if (pos == idx.size()) {
      std::vector<std::vector<long>> rows;
      std::vector<const std::vector<long>*> cols;
      for (auto i : idx) {
        rows.push_back(sg.generators[i]);
        cols.push_back(&sg.generators[i]);
      }
      if (rank_of(rows) != out.rank) return false;
      for (const auto& a : sg.generators) {
        auto x = coordinates(cols, a);
        if (!x) return false;
        for (const auto& c : *x)
          if (c < 0) return false;
      }
      return true;
    }
    for (std::size_t i = from; i < r; ++i) {
      idx[pos] = i;
      if (pick(pos + 1, i + 1)) return true;
    }
    return false;
  };
  if (pick(0, 0)) {
    out.simplicial = true;
    out.extremal = idx;
  }
  return out;
}

namespace {

GenericDegree degree_for_rank(unsigned rank, std::uint64_t p) {
  GenericDegree g;
  g.rank = rank;
  mpz_ui_pow_ui(g.degree.get_mpz_t(), p, rank);
  g.transition = g.degree * static_cast<unsigned long>(p);
  return g;
}

}  // namespace

GenericDegree generic_degree_monomial(const PrismSpec& spec) {
  if (!spec.lift.is_monomial()) throw UnsupportedError("generic degree needs the monomial lift");
  if (!spec.J.is_zero()) throw UnsupportedError("generic degree of a quotient; pass the semigroup instead");
  return degree_for_rank(static_cast<unsigned>(spec.ring->nvars()), spec.prime());
}

GenericDegree generic_degree_monomial(const SemigroupSpec& sg, std::uint64_t p) {
  return degree_for_rank(rank_of(sg.generators), p);
}

}  // namespace prismforge
