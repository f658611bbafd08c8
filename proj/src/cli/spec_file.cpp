// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "prismforge/algebra/parser.hpp"
#include "prismforge/cli.hpp"
#include "prismforge/errors.hpp"

namespace prismforge::cli {

namespace {

struct Value {
  enum Kind { Int, Str, Arr, Table } kind = Int;
  long i = 0;
  std::string s;
  std::vector<Value> arr;
  std::vector<std::pair<std::string, Value>> table;
  unsigned line = 0;
};

class Reader {
 public:
  explicit Reader(const std::string& text) : t_(text) {}

  std::vector<std::pair<std::string, Value>> document() {
    std::vector<std::pair<std::string, Value>> out;
    std::set<std::string> seen;
    for (;;) {
      skip(true);
      if (pos_ >= t_.size()) return out;
      std::string key = parse_key();
      skip(false);
      expect('=');
      skip(false);
      const unsigned start = line_;
      Value v = parse_value();
      v.line = start;
      skip(false);
      if (pos_ < t_.size() && t_[pos_] != '\n') fail("expected end of line");
      if (!seen.insert(key).second) fail("duplicate key '" + key + "'");
      out.emplace_back(std::move(key), std::move(v));
    }
  }

  Value value_only() {
    skip(true);
    Value v = parse_value();
    skip(true);
    if (pos_ != t_.size()) fail("trailing characters");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("spec line " + std::to_string(line_) + ": " + what);
  }

  void skip(bool newlines) {
    while (pos_ < t_.size()) {
      char c = t_[pos_];
      if (c == '#') {
        while (pos_ < t_.size() && t_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else if (c == '\n' && newlines) {
        ++pos_;
        ++line_;
      } else {
        return;
      }
    }
  }

  void expect(char c) {
    if (pos_ >= t_.size() || t_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string parse_key() {
    if (pos_ < t_.size() && t_[pos_] == '"') return parse_string();
    std::size_t start = pos_;
    while (pos_ < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[pos_])) || t_[pos_] == '_' || t_[pos_] == '-'))
      ++pos_;
    if (start == pos_) fail("expected a key");
    return t_.substr(start, pos_ - start);
  }

  std::string parse_string() {
    expect('"');
    std::string s;
    while (pos_ < t_.size() && t_[pos_] != '"') {
      if (t_[pos_] == '\n') fail("unterminated string");
      if (t_[pos_] == '\\' && pos_ + 1 < t_.size()) ++pos_;
      s += t_[pos_++];
    }
    expect('"');
    return s;
  }

  Value parse_value() {
    if (pos_ >= t_.size()) fail("expected a value");
    Value v;
    char c = t_[pos_];
    if (c == '"') {
      v.kind = Value::Str;
      v.s = parse_string();
    } else if (c == '[') {
      v.kind = Value::Arr;
      ++pos_;
      skip(true);
      while (pos_ < t_.size() && t_[pos_] != ']') {
        v.arr.push_back(parse_value());
        skip(true);
        if (pos_ < t_.size() && t_[pos_] == ',') {
          ++pos_;
          skip(true);
        } else {
          break;
        }
      }
      expect(']');
    } else if (c == '{') {
      v.kind = Value::Table;
      ++pos_;
      skip(false);
      while (pos_ < t_.size() && t_[pos_] != '}') {
        std::string key = parse_key();
        skip(false);
        expect('=');
        skip(false);
        v.table.emplace_back(std::move(key), parse_value());
        skip(false);
        if (pos_ < t_.size() && t_[pos_] == ',') {
          ++pos_;
          skip(false);
        } else {
          break;
        }
      }
      expect('}');
    } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_++;
      while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
      v.kind = Value::Int;
      try {
        v.i = std::stol(t_.substr(start, pos_ - start));
      } catch (const std::exception&) {
        fail("bad integer");
      }
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    return v;
  }

  const std::string& t_;
  std::size_t pos_ = 0;
  unsigned line_ = 1;
};

const std::string& as_string(const Value& v, const std::string& key) {
  if (v.kind != Value::Str) throw InputError("spec key '" + key + "' must be a string");
  return v.s;
}

std::vector<std::string> as_strings(const Value& v, const std::string& key) {
  if (v.kind != Value::Arr) throw InputError("spec key '" + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : v.arr) out.push_back(as_string(x, key));
  return out;
}

std::map<std::string, std::string> as_table(const Value& v, const std::string& key) {
  if (v.kind != Value::Table) throw InputError("spec key '" + key + "' must be an inline table");
  std::map<std::string, std::string> out;
  for (const auto& [k, x] : v.table)
    if (!out.emplace(k, as_string(x, key)).second) throw InputError("duplicate entry " + k + " in " + key);
  return out;
}

std::vector<std::vector<long>> as_matrix(const Value& v) {
  if (v.kind != Value::Arr || v.arr.empty()) throw InputError("semigroup must be a nonempty array");
  std::vector<std::vector<long>> out;
  for (const auto& row : v.arr) {
    std::vector<long> r;
    if (row.kind == Value::Int) {
      r.push_back(row.i);
    } else if (row.kind == Value::Arr) {
      for (const auto& x : row.arr) {
        if (x.kind != Value::Int) throw InputError("semigroup entries must be integers");
        r.push_back(x.i);
      }
    } else {
      throw InputError("semigroup rows must be integers or arrays");
    }
    if (!out.empty() && r.size() != out.front().size()) throw InputError("semigroup rows differ in length");
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

SpecFile parse_spec(const std::string& text) {
  SpecFile s;
  bool have_p = false;
  for (const auto& [key, v] : Reader(text).document()) try {
    if (key == "p") {
      if (v.kind != Value::Int || v.i < 2) throw InputError("spec key 'p' must be an integer prime");
      s.p = static_cast<std::uint64_t>(v.i);
      have_p = true;
    } else if (key == "vars") {
      s.vars = as_strings(v, key);
    } else if (key == "frobenius") {
      if (v.kind == Value::Str) {
        if (v.s != "monomial") throw InputError("frobenius must be \"monomial\" or an inline table");
      } else {
        s.frobenius = as_table(v, key);
      }
    } else if (key == "ideal") {
      s.ideal = as_strings(v, key);
    } else if (key == "orientation") {
      s.orientation = as_string(v, key);
    } else if (key == "flavor") {
      const auto& f = as_string(v, key);
      if (f == "zariskian") {
        s.flavor = PrismFlavor::Zariskian;
      } else if (f == "crystalline") {
        s.flavor = PrismFlavor::Crystalline;
      } else {
        throw InputError("flavor must be \"zariskian\" or \"crystalline\"");
      }
    } else if (key == "semigroup") {
      s.semigroup = as_matrix(v);
    } else if (key == "shift") {
      s.shift = as_table(v, key);
    } else {
      throw InputError("unknown spec key '" + key + "'");
    }
  } catch (const InputError& e) {
    throw InputError("spec line " + std::to_string(v.line) + ": " + e.what());
  }
  if (!have_p) throw InputError("spec is missing 'p'");
  if (!is_prime(s.p)) throw InputError("p = " + std::to_string(s.p) + " is not prime");
  if (s.semigroup && !s.ideal.empty()) throw InputError("a semigroup spec takes no 'ideal'");
  return s;
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::vector<std::vector<long>> parse_matrix(const std::string& text) { return as_matrix(Reader(text).value_only()); }

namespace {

std::optional<ToricPresentation> spec_toric(const SpecFile& spec) {
  if (!spec.semigroup) return std::nullopt;
  return toric_ideal(make_semigroup(*spec.semigroup, spec.vars), spec.p);
}

}  // namespace

RingPtr spec_ring(const SpecFile& spec) {
  if (auto t = spec_toric(spec)) return t->ring;
  return RingContext::make(spec.vars, CoefficientDomain::integers(), spec.p);
}

FrobeniusLift spec_lift(const SpecFile& spec, const RingPtr& ring) {
  if (spec.frobenius.empty()) return FrobeniusLift::monomial(spec.p);
  std::map<std::string, Polynomial> images;
  for (const auto& [var, text] : spec.frobenius) images.emplace(var, parse_poly(text, ring));
  auto lift = FrobeniusLift::custom(spec.p, std::move(images));
  validate_frobenius_lift(lift, ring);
  return lift;
}

Ideal spec_ideal(const SpecFile& spec, const RingPtr& ring) {
  if (auto t = spec_toric(spec)) return t->ideal;
  std::vector<Polynomial> gens;
  for (const auto& g : spec.ideal) gens.push_back(parse_poly(g, ring));
  return Ideal(ring, std::move(gens));
}

PrismSpec spec_prism(const SpecFile& spec) {
  RingPtr ring = spec_ring(spec);
  std::optional<Polynomial> d;
  if (spec.orientation) d = parse_poly(*spec.orientation, ring);
  if (!d && spec.flavor == PrismFlavor::Zariskian) throw InputError("spec has no orientation");
  return make_prism(ring, spec_ideal(spec, ring).generators(), spec_lift(spec, ring), d, spec.flavor, spec.shift);
}

}  // namespace prismforge::cli
