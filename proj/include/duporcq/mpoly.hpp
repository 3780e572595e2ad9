#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "duporcq/errors.hpp"
#include "duporcq/gauss_rational.hpp"

namespace duporcq {

// Sparse multivariate polynomial over Q(i).
//
// Variables are kept sorted by name and restricted to those that actually
// occur, so two equal polynomials always have identical representations.
// Terms are ordered lexicographically with the first variable most
// significant; the first stored term is the leading term.
class MPoly {
 public:
  using Exponents = std::vector<std::uint16_t>;
  struct Greater {
    bool operator()(const Exponents& a, const Exponents& b) const { return a > b; }
  };
  using TermMap = std::map<Exponents, GaussRational, Greater>;
  using Assignment = std::map<std::string, GaussRational>;

  MPoly() = default;
  MPoly(int c) : MPoly(GaussRational(static_cast<long>(c))) {}  // NOLINT
  MPoly(long c) : MPoly(GaussRational(c)) {}                    // NOLINT
  MPoly(const Rational& c) : MPoly(GaussRational(c)) {}         // NOLINT
  MPoly(const GaussRational& c) {                               // NOLINT
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
  }

  static MPoly var(const std::string& name) {
    if (name.empty() || name == "i") throw ParseError("invalid variable name '" + name + "'");
    MPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, GaussRational(1));
    return p;
  }

  // Builds a polynomial from arbitrary (possibly unsorted, unused) variables.
  static MPoly from_terms(const std::vector<std::string>& vars, const TermMap& terms) {
    std::vector<std::string> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("duplicate variable");
    std::vector<size_t> pos(vars.size());
    for (size_t k = 0; k < vars.size(); ++k)
      pos[k] = static_cast<size_t>(std::find(sorted.begin(), sorted.end(), vars[k]) - sorted.begin());
    MPoly p;
    p.vars_ = sorted;
    for (const auto& [e, c] : terms) {
      if (c.is_zero()) continue;
      Exponents ne(sorted.size(), 0);
      for (size_t k = 0; k < vars.size(); ++k) ne[pos[k]] = e[k];
      p.terms_[ne] += c;
    }
    p.normalize();
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  bool has_var(const std::string& v) const { return index_of(v).has_value(); }

  // Constant term (zero if absent).
  GaussRational constant_value() const {
    if (terms_.empty()) return GaussRational(0);
    auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? GaussRational(0) : it->second;
  }

  GaussRational leading_coefficient() const {
    return terms_.empty() ? GaussRational(0) : terms_.begin()->second;
  }

  int degree(const std::string& v) const {
    if (is_zero()) return -1;
    auto idx = index_of(v);
    if (!idx) return 0;
    int d = 0;
    for (const auto& kv : terms_) d = std::max<int>(d, kv.first[*idx]);
    return d;
  }

  int total_degree() const {
    if (is_zero()) return -1;
    int d = 0;
    for (const auto& kv : terms_) {
      int s = 0;
      for (auto x : kv.first) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  // Coefficient of the monomial given as var->exponent (unlisted vars: 0).
  GaussRational coefficient(const std::map<std::string, int>& monomial) const {
    Exponents e(vars_.size(), 0);
    for (const auto& [v, k] : monomial) {
      auto idx = index_of(v);
      if (!idx) {
        if (k != 0) return GaussRational(0);
        continue;
      }
      e[*idx] = static_cast<std::uint16_t>(k);
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussRational(0) : it->second;
  }

  // Coefficients with respect to one variable: result[k] multiplies v^k.
  std::vector<MPoly> coefficients(const std::string& v) const {
    auto idx = index_of(v);
    if (!idx) return {*this};
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + static_cast<long>(*idx));
    std::vector<TermMap> buckets(static_cast<size_t>(degree(v)) + 1);
    for (const auto& [e, c] : terms_) {
      Exponents ne = e;
      ne.erase(ne.begin() + static_cast<long>(*idx));
      buckets[e[*idx]].emplace_hint(buckets[e[*idx]].end(), std::move(ne), c);
    }
    std::vector<MPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) {
      MPoly p;
      p.vars_ = rest;
      p.terms_ = std::move(b);
      p.trim();
      out.push_back(std::move(p));
    }
    return out;
  }

  // Coefficient of v^k as a polynomial in the remaining variables.
  MPoly coefficient_of(const std::string& v, int k) const {
    auto cs = coefficients(v);
    return k >= 0 && static_cast<size_t>(k) < cs.size() ? cs[static_cast<size_t>(k)] : MPoly();
  }

  static MPoly from_coefficients(const std::string& v, const std::vector<MPoly>& cs) {
    MPoly x = var(v), out;
    for (size_t k = cs.size(); k-- > 0;) out = out * x + cs[k];
    return out;
  }

  // Partial evaluation. Every key must be a variable of the polynomial.
  MPoly evaluate(const Assignment& assignment) const {
    for (const auto& kv : assignment)
      if (!has_var(kv.first)) throw UnknownVariable("evaluate: unknown variable '" + kv.first + "'");
    return specialize(assignment);
  }

  // Like evaluate, but silently ignores keys that are not variables.
  MPoly specialize(const Assignment& assignment) const {
    std::vector<int> slot(vars_.size(), -1);
    std::vector<const GaussRational*> values;
    std::vector<std::string> rest;
    for (size_t k = 0; k < vars_.size(); ++k) {
      auto it = assignment.find(vars_[k]);
      if (it == assignment.end()) {
        rest.push_back(vars_[k]);
      } else {
        slot[k] = static_cast<int>(values.size());
        values.push_back(&it->second);
      }
    }
    if (values.empty()) return *this;
    std::vector<std::vector<GaussRational>> powers(values.size(), std::vector<GaussRational>{GaussRational(1)});
    auto power = [&](size_t s, size_t e) -> const GaussRational& {
      auto& pw = powers[s];
      while (pw.size() <= e) pw.push_back(pw.back() * *values[s]);
      return pw[e];
    };
    MPoly out;
    out.vars_ = rest;
    for (const auto& [e, c] : terms_) {
      GaussRational coef = c;
      Exponents ne;
      ne.reserve(rest.size());
      for (size_t k = 0; k < vars_.size(); ++k) {
        if (slot[k] < 0) {
          ne.push_back(e[k]);
        } else if (e[k] != 0) {
          coef *= power(static_cast<size_t>(slot[k]), e[k]);
        }
      }
      if (!coef.is_zero()) out.terms_[std::move(ne)] += coef;
    }
    out.normalize();
    return out;
  }

  // Replaces variable v by the polynomial value.
  MPoly substitute(const std::string& v, const MPoly& value) const {
    if (!has_var(v)) return *this;
    auto cs = coefficients(v);
    MPoly out;
    for (size_t k = cs.size(); k-- > 0;) out = out * value + cs[k];
    return out;
  }

  MPoly scaled(const GaussRational& s) const {
    if (s.is_zero()) return MPoly();
    MPoly out = *this;
    for (auto& kv : out.terms_) kv.second *= s;
    return out;
  }

  // Divides by the leading coefficient; zero stays zero.
  MPoly monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
  }

  MPoly operator-() const { return scaled(GaussRational(-1)); }

  friend MPoly operator+(const MPoly& a, const MPoly& b) { return combine(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return combine(a, b, true); }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    if (a.is_constant()) return b.scaled(a.constant_value());
    if (b.is_constant()) return a.scaled(b.constant_value());
    auto vars = merge_vars(a.vars_, b.vars_);
    TermMap ta = a.remapped(vars), tb = b.remapped(vars);
    MPoly out;
    out.vars_ = vars;
    Exponents e(vars.size());
    for (const auto& [ea, ca] : ta) {
      for (const auto& [eb, cb] : tb) {
        for (size_t k = 0; k < e.size(); ++k) {
          unsigned s = static_cast<unsigned>(ea[k]) + eb[k];
          if (s > 0xFFFFU) throw std::overflow_error("MPoly exponent overflow");
          e[k] = static_cast<std::uint16_t>(s);
        }
        out.terms_[e] += ca * cb;
      }
    }
    out.normalize();
    return out;
  }
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  // Deterministic text form, e.g. "x^2*y - 3/4*x + (1/2+i)".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (size_t k = 0; k < vars_.size(); ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[k];
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      std::string term;
      if (mono.empty()) {
        term = duporcq::to_string(c);
      } else if (c.is_one()) {
        term = mono;
      } else if (c == GaussRational(-1)) {
        term = "-" + mono;
      } else {
        term = duporcq::to_string(c) + "*" + mono;
      }
      if (first) {
        out = term;
      } else if (term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
      first = false;
    }
    return out;
  }

  // Inverse of to_string; also accepts parentheses, '^', unary minus and
  // division by constants.
  static MPoly parse(std::string_view text) {
    Parser p{text, 0};
    MPoly out = p.expr();
    p.skip();
    if (p.pos != text.size()) throw ParseError("unexpected '" + std::string(text.substr(p.pos)) + "'");
    return out;
  }

  // Exponent vector of the leading term, keyed by variable name.
  std::map<std::string, int> leading_monomial() const {
    std::map<std::string, int> m;
    if (is_zero()) return m;
    const auto& e = terms_.begin()->first;
    for (size_t k = 0; k < vars_.size(); ++k)
      if (e[k]) m[vars_[k]] = e[k];
    return m;
  }

  friend std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  std::optional<size_t> index_of(const std::string& v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) return std::nullopt;
    return static_cast<size_t>(it - vars_.begin());
  }

  static std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                             const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  TermMap remapped(const std::vector<std::string>& to) const {
    if (to == vars_) return terms_;
    std::vector<size_t> pos(vars_.size());
    for (size_t k = 0; k < vars_.size(); ++k)
      pos[k] = static_cast<size_t>(std::lower_bound(to.begin(), to.end(), vars_[k]) - to.begin());
    TermMap out;
    for (const auto& [e, c] : terms_) {
      Exponents ne(to.size(), 0);
      for (size_t k = 0; k < e.size(); ++k) ne[pos[k]] = e[k];
      out.emplace_hint(out.end(), std::move(ne), c);
    }
    return out;
  }

  static MPoly combine(const MPoly& a, const MPoly& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    auto vars = merge_vars(a.vars_, b.vars_);
    MPoly out;
    out.vars_ = vars;
    out.terms_ = a.remapped(vars);
    for (auto& [e, c] : b.remapped(vars)) {
      auto [it, inserted] = out.terms_.try_emplace(e, GaussRational(0));
      if (subtract) {
        it->second -= c;
      } else {
        it->second += c;
      }
      if (it->second.is_zero()) out.terms_.erase(it);
    }
    out.trim();
    return out;
  }

  void normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second.is_zero()) {
        it = terms_.erase(it);
      } else {
        ++it;
      }
    }
    trim();
  }

  // Drops variables that no longer occur.
  void trim() {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& kv : terms_)
      for (size_t k = 0; k < vars_.size(); ++k)
        if (kv.first[k]) used[k] = true;
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
    std::vector<std::string> nv;
    for (size_t k = 0; k < vars_.size(); ++k)
      if (used[k]) nv.push_back(vars_[k]);
    TermMap nt;
    for (auto& [e, c] : terms_) {
      Exponents ne;
      ne.reserve(nv.size());
      for (size_t k = 0; k < vars_.size(); ++k)
        if (used[k]) ne.push_back(e[k]);
      nt.emplace_hint(nt.end(), std::move(ne), std::move(c));
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
  }

  struct Parser {
    std::string_view s;
    size_t pos;

    void skip() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool accept(char c) {
      skip();
      if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }
    MPoly expr() {
      MPoly out;
      bool neg = accept('-');
      if (!neg) accept('+');
      out = term();
      if (neg) out = -out;
      while (true) {
        if (accept('+')) {
          out = out + term();
        } else if (accept('-')) {
          out = out - term();
        } else {
          return out;
        }
      }
    }
    MPoly term() {
      MPoly out = unary();
      while (true) {
        if (accept('*')) {
          out = out * unary();
        } else if (accept('/')) {
          MPoly d = unary();
          if (!d.is_constant() || d.is_zero()) throw ParseError("division by a non-constant or zero");
          out = out.scaled(d.constant_value().inverse());
        } else {
          return out;
        }
      }
    }
    MPoly unary() {
      if (accept('-')) return -unary();
      return power();
    }
    MPoly power() {
      MPoly base = primary();
      if (accept('^')) {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected exponent");
        unsigned e = static_cast<unsigned>(std::stoul(std::string(s.substr(start, pos - start))));
        MPoly r(1);
        for (unsigned k = 0; k < e; ++k) r = r * base;
        return r;
      }
      return base;
    }
    MPoly primary() {
      skip();
      if (pos >= s.size()) throw ParseError("unexpected end of input");
      char c = s[pos];
      if (c == '(') {
        ++pos;
        MPoly inner = expr();
        if (!accept(')')) throw ParseError("expected ')'");
        return inner;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return MPoly(Rational(mpz_class(std::string(s.substr(start, pos - start)), 10)));
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        std::string name(s.substr(start, pos - start));
        if (name == "i") return MPoly(GaussRational::I());
        return var(name);
      }
      throw ParseError(std::string("unexpected character '") + c + "'");
    }
  };
};

inline std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

inline MPoly pow(const MPoly& base, unsigned e) {
  MPoly r(1), b = base;
  while (e) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e) b = b * b;
  }
  return r;
}

// Exact multivariate division; nullopt when b does not divide a.
inline std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return MPoly();
  if (b.is_constant()) return a.scaled(b.constant_value().inverse());
  for (const auto& v : b.vars_)
    if (!a.has_var(v)) return std::nullopt;
  const auto& vars = a.vars_;
  MPoly::TermMap rem = a.terms_;
  MPoly::TermMap div = b.remapped(vars);
  const auto& [lead_e, lead_c] = *div.begin();
  GaussRational inv = lead_c.inverse();
  MPoly q;
  q.vars_ = vars;
  MPoly::Exponents qe(vars.size()), key(vars.size());
  while (!rem.empty()) {
    const auto& [re, rc] = *rem.begin();
    for (size_t k = 0; k < vars.size(); ++k) {
      if (re[k] < lead_e[k]) return std::nullopt;
      qe[k] = static_cast<std::uint16_t>(re[k] - lead_e[k]);
    }
    GaussRational qc = rc * inv;
    for (const auto& [de, dc] : div) {
      for (size_t k = 0; k < vars.size(); ++k) key[k] = static_cast<std::uint16_t>(de[k] + qe[k]);
      auto [it, inserted] = rem.try_emplace(key, GaussRational(0));
      it->second -= qc * dc;
      if (it->second.is_zero()) rem.erase(it);
    }
    q.terms_.emplace(qe, std::move(qc));
  }
  q.trim();
  return q;
}

// Exact quotient; throws NotDivisible otherwise.
inline MPoly exact_quotient(const MPoly& a, const MPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw NotDivisible("polynomial division is not exact");
  return *q;
}

inline GaussRational parse_gauss_rational(std::string_view text) {
  MPoly p = MPoly::parse(text);
  if (!p.is_constant()) throw ParseError("not a constant: " + std::string(text));
  return p.constant_value();
}

}  // namespace duporcq
