// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "prismforge/algebra/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "prismforge/errors.hpp"

namespace prismforge {

namespace {

const MonomialOrder kCanonical = MonomialOrder::grevlex();

bool canonical_greater(const Term& a, const Term& b) {
  return kCanonical.compare(a.mono, b.mono) > 0;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.mono.nvars() != ring_->nvars()) throw InputError("monomial arity mismatch");
  }
  canonicalize();
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), canonical_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  const auto& dom = ring_->domain();
  std::vector<Term> kept;
  kept.reserve(out.size());
  for (auto& t : out) {
    if (dom.kind() != DomainKind::RationalQ) t.coeff = dom.normalize(t.coeff);
    if (t.coeff != 0) kept.push_back(std::move(t));
  }
  terms_ = std::move(kept);
}

Polynomial Polynomial::constant(RingPtr ring, const mpq_class& c) {
  std::size_t n = ring->nvars();
  return Polynomial(std::move(ring), {Term{Monomial(n), c}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  std::size_t n = ring->nvars();
  if (index >= n) throw InputError("variable index out of range");
  return Polynomial(std::move(ring), {Term{Monomial::variable(n, index), 1}});
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  auto idx = ring->index_of(name);
  if (!idx) throw InputError("unknown variable '" + name + "'");
  return variable(std::move(ring), *idx);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const mpq_class& c) {
  return Polynomial(std::move(ring), {Term{m, c}});
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

mpq_class Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

mpq_class Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

unsigned Polynomial::degree() const noexcept { return terms_.empty() ? 0 : terms_[0].mono.degree(); }

std::vector<std::size_t> Polynomial::support() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_) mask |= t.mono.support();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring_->nvars(); ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coeff = -x.coeff;
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coeff *= c;
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::times_monomial(const Monomial& m, const mpq_class& c) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back({x.mono * m, x.coeff * c});
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::pow(long long k) const {
  if (k < 0) throw InputError("negative exponent in pow");
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& order) const {
  std::vector<Term> t = terms_;
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return t;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw InputError("leading term of zero polynomial");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "add");
  std::vector<Term> t;
  t.reserve(a.terms_.size() + b.terms_.size());
  t.insert(t.end(), a.terms_.begin(), a.terms_.end());
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return Polynomial(a.ring_, std::move(t));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "mul");
  std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) acc[x.mono * y.mono] += x.coeff * y.coeff;
  std::vector<Term> t;
  t.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) t.push_back({m, std::move(c)});
  return Polynomial(a.ring_, std::move(t));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string format_monomial(const Monomial& m, const RingContext& ring) {
  mpz_class denom = 1;
  if (ring.level() > 0) mpz_ui_pow_ui(denom.get_mpz_t(), ring.prime(), ring.level());
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.variables()[i];
    mpq_class e(mpz_class(m[i]), denom);
    e.canonicalize();
    if (e.get_den() == 1) {
      if (e.get_num() != 1) s += "^" + e.get_num().get_str();
    } else {
      s += "^{" + e.get_str() + "}";
    }
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    bool neg = t.coeff < 0;
    mpq_class mag = neg ? mpq_class(-t.coeff) : t.coeff;
    std::string body;
    if (t.mono.is_one()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = format_monomial(t.mono, *ring_);
    } else {
      body = mag.get_str() + "*" + format_monomial(t.mono, *ring_);
    }
    if (i == 0) {
      s = neg ? "-" + body : body;
    } else {
      s += neg ? " - " : " + ";
      s += body;
    }
  }
  return s;
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images,
                      const RingPtr& target) {
  const auto& vars = f.ring()->variables();
  std::vector<const Polynomial*> img(vars.size(), nullptr);
  for (std::size_t v : f.support()) {
    auto it = images.find(vars[v]);
    if (it == images.end()) throw InputError("substitute: missing image for variable " + vars[v]);
    require_same_ring(it->second.ring(), target, "substitute");
    img[v] = &it->second;
  }
  std::vector<std::map<unsigned, Polynomial>> powers(vars.size());
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
    auto& cache = powers[v];
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    return cache.emplace(e, img[v]->pow(e)).first->second;
  };
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (t.mono[v] == 0) continue;
      term = term * power(v, t.mono[v]);
    }
    result = result + term;
  }
  return result;
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images) {
  return substitute(f, images, f.ring());
}

Polynomial exact_div_int(const Polynomial& f, const mpz_class& n) {
  if (n == 0) throw InputError("division by zero");
  const auto kind = f.ring()->domain().kind();
  if (kind != DomainKind::IntegerZ && kind != DomainKind::RationalQ) {
    throw InputError("exact_div_int needs ZZ or QQ coefficients");
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    mpq_class q = t.coeff / mpq_class(n);
    if (kind == DomainKind::IntegerZ && q.get_den() != 1) {
      throw NotDivisible(t.coeff.get_str(), format_monomial(t.mono, *f.ring()));
    }
    out.push_back({t.mono, q});
  }
  return Polynomial(f.ring(), std::move(out));
}

Polynomial reduce_mod(const Polynomial& f, const CoefficientDomain& target) {
  RingPtr ring = f.ring()->with_domain(target);
  return Polynomial(ring, f.terms());
}

Polynomial fractional_relabel(const Polynomial& f, int delta_level) {
  long long lvl = static_cast<long long>(f.ring()->level()) + delta_level;
  if (lvl < 0) throw InputError("fractional_relabel: level would become negative");
  return Polynomial(f.ring()->with_level(static_cast<unsigned>(lvl)), f.terms());
}

Polynomial embed(const Polynomial& f, const RingPtr& target) {
  const auto& vars = f.ring()->variables();
  std::vector<std::size_t> map(vars.size(), 0);
  std::vector<bool> present(vars.size(), false);
  for (std::size_t v : f.support()) {
    auto idx = target->index_of(vars[v]);
    if (!idx) throw ContextMismatch("variable " + vars[v] + " missing in " + target->describe());
    map[v] = *idx;
    present[v] = true;
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t v = 0; v < vars.size(); ++v)
      if (present[v] && t.mono[v]) m.set(map[v], t.mono[v]);
    out.push_back({m, t.coeff});
  }
  return Polynomial(target, std::move(out));
}

}  // namespace prismforge
