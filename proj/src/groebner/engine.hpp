// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// Buchberger over GF(p) and QQ, strong bases over ZZ. Internal only; the
// public surface is prismforge/groebner/ideal.hpp.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "prismforge/algebra/order.hpp"
#include "prismforge/errors.hpp"
#include "prismforge/groebner/limits.hpp"

namespace prismforge::detail {

struct FpCoeffs {
  static constexpr bool is_field = true;
  using T = std::uint64_t;
  std::uint64_t p;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(T a) const { return a == 0; }
  bool is_one(T a) const { return a == 1; }
  T add(T a, T b) const { T s = a + b; return s >= p ? s - p : s; }
  T sub(T a, T b) const { return a >= b ? a - b : a + p - b; }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T mul(T a, T b) const { return (a * b) % p; }
  T inv(T a) const {
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<T>(t);
  }
  T div(T a, T b) const { return mul(a, inv(b)); }
  T from(const mpq_class& q) const {
    mpz_class m(static_cast<unsigned long>(p));
    mpz_class n = q.get_num() % m;
    if (n < 0) n += m;
    mpz_class d = q.get_den() % m;
    T r = mul(static_cast<T>(n.get_ui()), inv(static_cast<T>(d.get_ui())));
    return r;
  }
  mpq_class to(T a) const { return mpq_class(static_cast<unsigned long>(a)); }
};

struct QCoeffs {
  static constexpr bool is_field = true;
  using T = mpq_class;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  bool is_one(const T& a) const { return a == 1; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T neg(const T& a) const { return -a; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
  T div(const T& a, const T& b) const { return a / b; }
  T from(const mpq_class& q) const { return q; }
  mpq_class to(const T& a) const { return a; }
};

struct ZCoeffs {
  static constexpr bool is_field = false;
  using T = mpz_class;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  bool is_one(const T& a) const { return a == 1; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T neg(const T& a) const { return -a; }
  T mul(const T& a, const T& b) const { return a * b; }
  bool divides(const T& a, const T& b) const { return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0; }
  T divexact(const T& a, const T& b) const {
    T r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  T from(const mpq_class& q) const {
    if (q.get_den() != 1) throw InputError("non-integral coefficient in ZZ computation");
    return q.get_num();
  }
  mpq_class to(const T& a) const { return mpq_class(a); }
};

template <class R>
struct Poly {
  std::vector<Monomial> m;
  std::vector<typename R::T> c;
  std::size_t size() const { return m.size(); }
  bool empty() const { return m.empty(); }
};

/// a*f[fs..] + b*mono*g[gs..], merged in `ord`.
template <class R>
Poly<R> lincomb(const R& ring, const MonomialOrder& ord, const typename R::T& a, bool a_one,
                const Poly<R>& f, std::size_t fs, const typename R::T& b, const Monomial& mono,
                const Poly<R>& g, std::size_t gs) {
  Poly<R> out;
  out.m.reserve(f.size() - fs + g.size() - gs);
  out.c.reserve(f.size() - fs + g.size() - gs);
  std::size_t i = fs, j = gs;
  Monomial mg;
  bool have = false;
  while (i < f.size() && j < g.size()) {
    if (!have) {
      mg = mono * g.m[j];
      have = true;
    }
    int cmp = ord.compare(f.m[i], mg);
    if (cmp > 0) {
      out.m.push_back(f.m[i]);
      out.c.push_back(a_one ? f.c[i] : ring.mul(a, f.c[i]));
      ++i;
    } else if (cmp < 0) {
      out.m.push_back(mg);
      out.c.push_back(ring.mul(b, g.c[j]));
      ++j;
      have = false;
    } else {
      auto v = ring.add(a_one ? f.c[i] : ring.mul(a, f.c[i]), ring.mul(b, g.c[j]));
      if (!ring.is_zero(v)) {
        out.m.push_back(mg);
        out.c.push_back(std::move(v));
      }
      ++i;
      ++j;
      have = false;
    }
  }
  for (; i < f.size(); ++i) {
    out.m.push_back(f.m[i]);
    out.c.push_back(a_one ? f.c[i] : ring.mul(a, f.c[i]));
  }
  for (; j < g.size(); ++j) {
    out.m.push_back(mono * g.m[j]);
    out.c.push_back(ring.mul(b, g.c[j]));
  }
  return out;
}

template <class R>
void scale_inplace(const R& ring, Poly<R>& f, const typename R::T& a) {
  for (auto& x : f.c) x = ring.mul(a, x);
}

/// Called for every reduction step h -= coeff * mono * G[k].
template <class R>
using StepFn = std::function<void(std::size_t k, const typename R::T& coeff, const Monomial& mono)>;

/// First element of G whose leading monomial divides m, or -1.
template <class R>
long find_divisor(const std::vector<const Poly<R>*>& G, const Monomial& m, std::size_t from = 0) {
  for (std::size_t k = from; k < G.size(); ++k) {
    if (G[k]->m[0].divides(m)) return static_cast<long>(k);
  }
  return -1;
}

/// Full reduction over a field. With top_only, stops at the first
/// irreducible leading term.
template <class R>
Poly<R> reduce_field(const R& ring, const MonomialOrder& ord, Poly<R> h,
                     const std::vector<const Poly<R>*>& G, bool top_only, const StepFn<R>& step) {
  Poly<R> rem;
  std::size_t start = 0;
  while (start < h.size()) {
    const Monomial& lt = h.m[start];
    long k = find_divisor<R>(G, lt);
    if (k < 0) {
      if (top_only) {
        Poly<R> out;
        out.m.assign(h.m.begin() + start, h.m.end());
        out.c.assign(h.c.begin() + start, h.c.end());
        return out;
      }
      rem.m.push_back(lt);
      rem.c.push_back(h.c[start]);
      ++start;
      continue;
    }
    const Poly<R>& g = *G[k];
    auto q = ring.div(h.c[start], g.c[0]);
    Monomial mono = lt / g.m[0];
    if (step) step(static_cast<std::size_t>(k), q, mono);
    h = lincomb(ring, ord, ring.one(), true, h, start + 1, ring.neg(q), mono, g, 1);
    start = 0;
  }
  return rem;
}

/// Strong reduction over ZZ: leading terms are removed only when some
/// leading term of G divides them, coefficient included. With canonical set,
/// every term is additionally reduced into [0, |lc|) by each candidate.
inline Poly<ZCoeffs> reduce_integer(const ZCoeffs& ring, const MonomialOrder& ord, Poly<ZCoeffs> h,
                                    const std::vector<const Poly<ZCoeffs>*>& G, bool top_only,
                                    bool canonical, const StepFn<ZCoeffs>& step) {
  Poly<ZCoeffs> rem;
  std::size_t start = 0;
  while (start < h.size()) {
    const Monomial lt = h.m[start];
    bool changed = false;
    // exact division first
    for (std::size_t k = 0; k < G.size(); ++k) {
      const auto& g = *G[k];
      if (!g.m[0].divides(lt) || !ring.divides(g.c[0], h.c[start])) continue;
      mpz_class q = ring.divexact(h.c[start], g.c[0]);
      Monomial mono = lt / g.m[0];
      if (step) step(k, q, mono);
      h = lincomb(ring, ord, ring.one(), true, h, start + 1, mpz_class(-q), mono, g, 1);
      start = 0;
      changed = true;
      break;
    }
    if (changed) continue;
    if (canonical) {
      for (std::size_t k = 0; k < G.size(); ++k) {
        const auto& g = *G[k];
        if (!g.m[0].divides(lt)) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), h.c[start].get_mpz_t(), g.c[0].get_mpz_t());
        if (q == 0) continue;
        Monomial mono = lt / g.m[0];
        if (step) step(k, q, mono);
        // the leading coefficient becomes the nonnegative remainder
        h = lincomb(ring, ord, ring.one(), true, h, start, mpz_class(-q), mono, g, 0);
        start = 0;
        changed = true;
        break;
      }
      if (changed) continue;
    }
    if (top_only) {
      Poly<ZCoeffs> out;
      out.m.assign(h.m.begin() + start, h.m.end());
      out.c.assign(h.c.begin() + start, h.c.end());
      return out;
    }
    rem.m.push_back(lt);
    rem.c.push_back(h.c[start]);
    ++start;
  }
  return rem;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

inline std::size_t select_pair(const std::vector<Pair>& B, const MonomialOrder& ord) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < B.size(); ++k) {
    const auto& a = B[k];
    const auto& b = B[best];
    if (a.lcm.degree() != b.lcm.degree()) {
      if (a.lcm.degree() < b.lcm.degree()) best = k;
      continue;
    }
    int c = ord.compare(a.lcm, b.lcm);
    if (c < 0 || (c == 0 && (a.j < b.j || (a.j == b.j && a.i < b.i)))) best = k;
  }
  return best;
}

template <class R>
struct EngineResult {
  std::vector<Poly<R>> basis;
  std::vector<std::vector<Poly<R>>> reps;  // empty unless tracking
  std::size_t pairs = 0;
};

template <class R>
struct Elem {
  Poly<R> p;
  std::vector<Poly<R>> reps;
};

template <class R>
void reps_axpy(const R& ring, const MonomialOrder& ord, std::vector<Poly<R>>& dst,
               const typename R::T& a, bool a_one, const typename R::T& b, const Monomial& mono,
               const std::vector<Poly<R>>& src) {
  for (std::size_t t = 0; t < dst.size(); ++t) {
    dst[t] = lincomb(ring, ord, a, a_one, dst[t], 0, b, mono, src[t], 0);
  }
}

template <class R>
std::vector<Poly<R>> unit_reps(const R& ring, std::size_t n, std::size_t k, const typename R::T& c,
                               std::size_t nvars) {
  std::vector<Poly<R>> reps(n);
  if (!ring.is_zero(c)) {
    reps[k].m.push_back(Monomial(nvars));
    reps[k].c.push_back(c);
  }
  return reps;
}

inline void check_limits(std::size_t pairs, const Monomial& lcm, const Limits& lim, unsigned degree_cap) {
  if (pairs > lim.max_pairs) {
    throw ResourceExceeded("more than " + std::to_string(lim.max_pairs) + " S-pairs");
  }
  if (lcm.degree() > degree_cap) {
    throw ResourceExceeded("S-pair degree " + std::to_string(lcm.degree()) + " above cap " +
                           std::to_string(degree_cap));
  }
}

inline unsigned degree_cap_for(const Limits& lim, unsigned input_degree) {
  return std::max(lim.max_degree, input_degree);
}

/// Buchberger with the Gebauer-Moeller installation of criteria.
template <class R>
EngineResult<R> buchberger_field(const R& ring, const MonomialOrder& ord, const std::vector<Poly<R>>& gens,
                                 bool track, const Limits& lim) {
  const std::size_t ngens = gens.size();
  std::vector<Elem<R>> E;
  std::vector<bool> active;
  std::vector<Pair> B;
  unsigned input_degree = 0;
  for (const auto& g : gens)
    for (const auto& m : g.m) input_degree = std::max(input_degree, m.degree());
  const unsigned cap = degree_cap_for(lim, input_degree);

  auto active_ptrs = [&](std::vector<std::size_t>* idx) {
    std::vector<const Poly<R>*> G;
    for (std::size_t k = 0; k < E.size(); ++k) {
      if (!active[k]) continue;
      G.push_back(&E[k].p);
      if (idx) idx->push_back(k);
    }
    return G;
  };

  auto reduce_tracked = [&](Elem<R> h) -> Elem<R> {
    std::vector<std::size_t> idx;
    auto G = active_ptrs(&idx);
    StepFn<R> step;
    if (track) {
      step = [&](std::size_t k, const typename R::T& q, const Monomial& mono) {
        reps_axpy(ring, ord, h.reps, ring.one(), true, ring.neg(q), mono, E[idx[k]].reps);
      };
    }
    h.p = reduce_field(ring, ord, std::move(h.p), G, false, step);
    return h;
  };

  auto make_monic = [&](Elem<R>& h) {
    auto inv = ring.inv(h.p.c[0]);
    if (ring.is_one(inv)) return;
    scale_inplace(ring, h.p, inv);
    for (auto& r : h.reps) scale_inplace(ring, r, inv);
  };

  auto update = [&](Elem<R> h) {
    make_monic(h);
    const std::size_t hi = E.size();
    const Monomial hlm = h.p.m[0];
    E.push_back(std::move(h));
    active.push_back(true);

    std::vector<Pair> C;
    for (std::size_t k = 0; k < hi; ++k)
      if (active[k]) C.push_back({k, hi, hlm.lcm(E[k].p.m[0])});
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const auto& pa = C[a];
      bool coprime = hlm.coprime(E[pa.i].p.m[0]);
      bool keep = coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(pa.lcm)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (D[b].lcm.divides(pa.lcm)) keep = false;
      }
      if (keep) D.push_back(pa);
    }
    std::vector<Pair> Bn;
    Bn.reserve(B.size() + D.size());
    for (auto& pr : B) {
      bool drop = hlm.divides(pr.lcm) && hlm.lcm(E[pr.i].p.m[0]) != pr.lcm &&
                  hlm.lcm(E[pr.j].p.m[0]) != pr.lcm;
      if (!drop) Bn.push_back(std::move(pr));
    }
    for (auto& pr : D)
      if (!hlm.coprime(E[pr.i].p.m[0])) Bn.push_back(std::move(pr));
    B = std::move(Bn);
    for (std::size_t k = 0; k < hi; ++k)
      if (active[k] && hlm.divides(E[k].p.m[0])) active[k] = false;
  };

  for (std::size_t k = 0; k < ngens; ++k) {
    if (gens[k].empty()) continue;
    Elem<R> h{gens[k], track ? unit_reps(ring, ngens, k, ring.one(), gens[k].m[0].nvars()) : std::vector<Poly<R>>{}};
    h = reduce_tracked(std::move(h));
    if (!h.p.empty()) update(std::move(h));
  }

  std::size_t processed = 0;
  while (!B.empty()) {
    std::size_t s = select_pair(B, ord);
    Pair pr = B[s];
    B[s] = B.back();
    B.pop_back();
    ++processed;
    check_limits(processed, pr.lcm, lim, cap);
    const auto& gi = E[pr.i];
    const auto& gj = E[pr.j];
    Monomial mi = pr.lcm / gi.p.m[0];
    Monomial mj = pr.lcm / gj.p.m[0];
    // both monic: S = mi*gi - mj*gj
    Poly<R> left = lincomb(ring, ord, ring.zero(), false, Poly<R>{}, 0, ring.one(), mi, gi.p, 1);
    Elem<R> h;
    h.p = lincomb(ring, ord, ring.one(), true, left, 0, ring.neg(ring.one()), mj, gj.p, 1);
    if (track) {
      h.reps.assign(ngens, Poly<R>{});
      reps_axpy(ring, ord, h.reps, ring.one(), true, ring.one(), mi, gi.reps);
      reps_axpy(ring, ord, h.reps, ring.one(), true, ring.neg(ring.one()), mj, gj.reps);
    }
    h = reduce_tracked(std::move(h));
    if (!h.p.empty()) update(std::move(h));
  }
  if (lim.stats) lim.stats->pairs += processed;

  // interreduce the (already minimal) active set
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < E.size(); ++k)
    if (active[k]) idx.push_back(k);
  std::vector<Elem<R>> out;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    std::vector<const Poly<R>*> others;
    std::vector<std::size_t> oidx;
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (b == a) continue;
      others.push_back(&E[idx[b]].p);
      oidx.push_back(idx[b]);
    }
    Elem<R> h = E[idx[a]];
    Poly<R> tail;
    tail.m.assign(h.p.m.begin() + 1, h.p.m.end());
    tail.c.assign(h.p.c.begin() + 1, h.p.c.end());
    StepFn<R> step;
    if (track) {
      step = [&](std::size_t k, const typename R::T& q, const Monomial& mono) {
        reps_axpy(ring, ord, h.reps, ring.one(), true, ring.neg(q), mono, E[oidx[k]].reps);
      };
    }
    Poly<R> red = reduce_field(ring, ord, std::move(tail), others, false, step);
    h.p.m.resize(1);
    h.p.c.resize(1);
    h.p.m.insert(h.p.m.end(), red.m.begin(), red.m.end());
    h.p.c.insert(h.p.c.end(), red.c.begin(), red.c.end());
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(),
            [&](const Elem<R>& a, const Elem<R>& b) { return ord.compare(a.p.m[0], b.p.m[0]) < 0; });
  EngineResult<R> res;
  res.pairs = processed;
  for (auto& e : out) {
    res.basis.push_back(std::move(e.p));
    if (track) res.reps.push_back(std::move(e.reps));
  }
  return res;
}

/// Strong Groebner basis over ZZ from S-polynomials and G-polynomials.
inline EngineResult<ZCoeffs> buchberger_integer(const ZCoeffs& ring, const MonomialOrder& ord,
                                                const std::vector<Poly<ZCoeffs>>& gens, bool track,
                                                const Limits& lim) {
  using R = ZCoeffs;
  const std::size_t ngens = gens.size();
  std::vector<Elem<R>> E;
  std::vector<Pair> B;
  unsigned input_degree = 0;
  for (const auto& g : gens)
    for (const auto& m : g.m) input_degree = std::max(input_degree, m.degree());
  const unsigned cap = degree_cap_for(lim, input_degree);

  auto reduce_tracked = [&](Elem<R> h, bool top_only) -> Elem<R> {
    std::vector<const Poly<R>*> G;
    for (auto& e : E) G.push_back(&e.p);
    StepFn<R> step;
    if (track) {
      step = [&](std::size_t k, const mpz_class& q, const Monomial& mono) {
        reps_axpy(ring, ord, h.reps, ring.one(), true, mpz_class(-q), mono, E[k].reps);
      };
    }
    h.p = reduce_integer(ring, ord, std::move(h.p), G, top_only, false, step);
    return h;
  };

  auto add = [&](Elem<R> h) {
    if (sgn(h.p.c[0]) < 0) {
      scale_inplace(ring, h.p, mpz_class(-1));
      for (auto& r : h.reps) scale_inplace(ring, r, mpz_class(-1));
    }
    const std::size_t hi = E.size();
    const Monomial hlm = h.p.m[0];
    const bool hunit = h.p.c[0] == 1;
    E.push_back(std::move(h));
    for (std::size_t k = 0; k < hi; ++k) {
      const auto& g = E[k].p;
      if (hunit && g.c[0] == 1 && hlm.coprime(g.m[0])) continue;
      B.push_back({k, hi, hlm.lcm(g.m[0])});
    }
  };

  for (std::size_t k = 0; k < ngens; ++k) {
    if (gens[k].empty()) continue;
    Elem<R> h{gens[k], track ? unit_reps(ring, ngens, k, ring.one(), gens[k].m[0].nvars()) : std::vector<Poly<R>>{}};
    h = reduce_tracked(std::move(h), true);
    if (!h.p.empty()) add(std::move(h));
  }

  std::size_t processed = 0;
  while (!B.empty()) {
    std::size_t s = select_pair(B, ord);
    Pair pr = B[s];
    B[s] = B.back();
    B.pop_back();
    ++processed;
    check_limits(processed, pr.lcm, lim, cap);
    const mpz_class a = E[pr.i].p.c[0];
    const mpz_class b = E[pr.j].p.c[0];
    const Monomial mi = pr.lcm / E[pr.i].p.m[0];
    const Monomial mj = pr.lcm / E[pr.j].p.m[0];

    auto combo = [&](const mpz_class& ca, const mpz_class& cb) {
      Elem<R> h;
      const auto& gi = E[pr.i];
      const auto& gj = E[pr.j];
      Poly<R> left = lincomb(ring, ord, ring.zero(), false, Poly<R>{}, 0, ca, mi, gi.p, 0);
      h.p = lincomb(ring, ord, ring.one(), true, left, 0, cb, mj, gj.p, 0);
      if (track) {
        h.reps.assign(ngens, Poly<R>{});
        reps_axpy(ring, ord, h.reps, ring.one(), true, ca, mi, gi.reps);
        reps_axpy(ring, ord, h.reps, ring.one(), true, cb, mj, gj.reps);
      }
      return h;
    };

    if (!ring.divides(a, b) && !ring.divides(b, a)) {
      mpz_class g, s1, t1;
      mpz_gcdext(g.get_mpz_t(), s1.get_mpz_t(), t1.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Elem<R> gp = reduce_tracked(combo(s1, t1), true);
      if (!gp.p.empty()) add(std::move(gp));
    }
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Elem<R> sp = reduce_tracked(combo(l / a, mpz_class(-(l / b))), true);
    if (!sp.p.empty()) add(std::move(sp));
  }
  if (lim.stats) lim.stats->pairs += processed;

  // minimize: drop elements whose leading term is strongly divisible by another's
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < E.size(); ++k) {
    bool redundant = false;
    for (std::size_t o = 0; o < E.size() && !redundant; ++o) {
      if (o == k) continue;
      const auto& gk = E[k].p;
      const auto& go = E[o].p;
      if (!go.m[0].divides(gk.m[0]) || !ring.divides(go.c[0], gk.c[0])) continue;
      bool equal_lt = go.m[0] == gk.m[0] && go.c[0] == gk.c[0];
      if (!equal_lt || o < k) redundant = true;
    }
    if (!redundant) keep.push_back(k);
  }
  std::vector<Elem<R>> out;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    std::vector<const Poly<R>*> others;
    std::vector<std::size_t> oidx;
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (b == a) continue;
      others.push_back(&E[keep[b]].p);
      oidx.push_back(keep[b]);
    }
    Elem<R> h = E[keep[a]];
    Poly<R> tail;
    tail.m.assign(h.p.m.begin() + 1, h.p.m.end());
    tail.c.assign(h.p.c.begin() + 1, h.p.c.end());
    StepFn<R> step;
    if (track) {
      step = [&](std::size_t k, const mpz_class& q, const Monomial& mono) {
        reps_axpy(ring, ord, h.reps, ring.one(), true, mpz_class(-q), mono, E[oidx[k]].reps);
      };
    }
    Poly<R> red = reduce_integer(ring, ord, std::move(tail), others, false, true, step);
    h.p.m.resize(1);
    h.p.c.resize(1);
    h.p.m.insert(h.p.m.end(), red.m.begin(), red.m.end());
    h.p.c.insert(h.p.c.end(), red.c.begin(), red.c.end());
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [&](const Elem<R>& x, const Elem<R>& y) {
    int c = ord.compare(x.p.m[0], y.p.m[0]);
    if (c != 0) return c < 0;
    return x.p.c[0] < y.p.c[0];
  });
  EngineResult<R> res;
  res.pairs = processed;
  for (auto& e : out) {
    res.basis.push_back(std::move(e.p));
    if (track) res.reps.push_back(std::move(e.reps));
  }
  return res;
}

}  // namespace prismforge::detail
