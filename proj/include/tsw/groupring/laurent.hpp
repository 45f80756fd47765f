#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tsw/error.hpp"
#include "tsw/exactnum/cyclotomic.hpp"

namespace tsw {

// Sparse Laurent polynomial. Exponents are stored doubled, so t^(1/2) is
// the stored exponent 1; a polynomial is integral iff every stored
// exponent is even.
template <class C>
class LaurentPoly {
 public:
  using Exponents = std::vector<long>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static LaurentPoly constant(std::vector<std::string> vars, const C& c) {
    LaurentPoly p(std::move(vars));
    p.add_doubled(Exponents(p.arity(), 0), c);
    return p;
  }
  static LaurentPoly monomial(std::vector<std::string> vars, const std::vector<long>& exps, const C& c) {
    LaurentPoly p(std::move(vars));
    p.add(exps, c);
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  const std::map<Exponents, C>& doubled_terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_doubled(const Exponents& e, const C& c) {
    ensure(e.size() == arity(), ErrorKind::Assertion, "exponent vector has wrong arity");
    if (tsw::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (tsw::is_zero(it->second)) terms_.erase(it);
  }
  void add(const std::vector<long>& e, const C& c) { add_doubled(doubled(e), c); }

  static Exponents doubled(const std::vector<long>& e) {
    Exponents d(e);
    for (auto& x : d) x *= 2;
    return d;
  }

  bool is_integral() const {
    for (const auto& [e, c] : terms_)
      for (long x : e)
        if (x % 2 != 0) return false;
    return true;
  }

  C coefficient(const std::vector<long>& e) const {
    auto it = terms_.find(doubled(e));
    return it == terms_.end() ? C() * Rational(0) : it->second;
  }

  // Terms with exponents on the original lattice; requires integrality.
  std::vector<std::pair<std::vector<long>, C>> integral_terms() const {
    ensure(is_integral(), ErrorKind::HalfIntegerExponent, "polynomial has half-integer exponents");
    std::vector<std::pair<std::vector<long>, C>> out;
    for (const auto& [e, c] : terms_) {
      std::vector<long> h(e);
      for (auto& x : h) x /= 2;
      out.emplace_back(h, c);
    }
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_doubled(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_doubled(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_vars(b);
    LaurentPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_doubled(e, C(ca * cb));
      }
    return r;
  }
  template <class S>
  LaurentPoly scaled(const S& s) const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.add_doubled(e, C(c * s));
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // t_i -> t_i^{-1} with coefficient conjugation.
  LaurentPoly bar() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      Exponents n(e);
      for (auto& x : n) x = -x;
      r.add_doubled(n, conj(c));
    }
    return r;
  }

  // t_i -> t_i^{1/2}; needs integral input.
  LaurentPoly half_substitution() const {
    ensure(is_integral(), ErrorKind::HalfIntegerExponent, "square-root substitution of a non-integral polynomial");
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      Exponents n(e);
      for (auto& x : n) x /= 2;
      r.add_doubled(n, c);
    }
    return r;
  }

  // t_i -> t_i^2.
  LaurentPoly square_substitution() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.add_doubled(doubled(e), c);
    return r;
  }

  // Multiply by the monomial with the given doubled exponents.
  LaurentPoly shifted_doubled(const Exponents& d) const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      Exponents n(e);
      for (std::size_t i = 0; i < n.size(); ++i) n[i] += d[i];
      r.terms_.emplace(n, c);
    }
    return r;
  }

  // Set variable i to 1, removing it.
  LaurentPoly set_to_one(std::size_t i) const {
    std::vector<std::string> nv(vars_);
    nv.erase(nv.begin() + static_cast<long>(i));
    LaurentPoly r(nv);
    for (const auto& [e, c] : terms_) {
      Exponents n(e);
      n.erase(n.begin() + static_cast<long>(i));
      r.add_doubled(n, c);
    }
    return r;
  }

  // Set every variable to one common variable named `name`.
  LaurentPoly diagonal(const std::string& name) const {
    LaurentPoly r(std::vector<std::string>{name});
    for (const auto& [e, c] : terms_) {
      long s = 0;
      for (long x : e) s += x;
      r.add_doubled(Exponents{s}, c);
    }
    return r;
  }

  // Per-variable min and max of stored (doubled) exponents; needs nonzero.
  std::pair<Exponents, Exponents> doubled_extent() const {
    Exponents lo(arity(), 0), hi(arity(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        lo[i] = first ? e[i] : std::min(lo[i], e[i]);
        hi[i] = first ? e[i] : std::max(hi[i], e[i]);
      }
      first = false;
    }
    return {lo, hi};
  }

  // Sum of coefficients (every variable set to 1).
  C value_at_one() const {
    C s = C() * Rational(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) out << " + ";
      first = false;
      out << coeff_string(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        out << "*" << vars_[i] << "^";
        if (e[i] % 2 == 0) out << e[i] / 2;
        else out << "(" << e[i] << "/2)";
      }
    }
    return out.str();
  }

 private:
  static std::string coeff_string(const Rational& r) { return r.get_str(); }
  static std::string coeff_string(const Cyclotomic& c) { return "(" + c.to_string() + ")"; }
  void check_vars(const LaurentPoly& o) const {
    ensure(vars_ == o.vars_, ErrorKind::Assertion, "Laurent polynomials over different variables");
  }

  std::vector<std::string> vars_;
  std::map<Exponents, C> terms_;
};

using RatLaurent = LaurentPoly<Rational>;
using CycLaurent = LaurentPoly<Cyclotomic>;

// q with q * (c * x^v - 1) = a, v given on the doubled lattice and nonzero.
// Greedy elimination from the lowest height <e, v>; reports NotDivisible
// once the remainder's lowest term is above the highest admissible height.
template <class C>
LaurentPoly<C> divide_binomial(const LaurentPoly<C>& a, const std::vector<long>& v, const C& c) {
  auto height = [&](const std::vector<long>& e) {
    long s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * v[i];
    return s;
  };
  long step = height(v);
  ensure(step > 0, ErrorKind::Assertion, "binomial division needs a nonzero direction");
  LaurentPoly<C> q(a.variables());
  if (a.is_zero()) return q;
  long top = 0;
  bool first = true;
  std::map<std::pair<long, std::vector<long>>, C> rem;
  for (const auto& [e, x] : a.doubled_terms()) {
    long hgt = height(e);
    top = first ? hgt : std::max(top, hgt);
    first = false;
    rem.emplace(std::make_pair(hgt, e), x);
  }
  while (!rem.empty()) {
    auto it = rem.begin();
    auto [key, x] = *it;
    rem.erase(it);
    if (key.first + step > top) fail(ErrorKind::NotDivisible, "binomial does not divide the polynomial");
    q.add_doubled(key.second, -x);
    std::vector<long> up(key.second);
    for (std::size_t i = 0; i < up.size(); ++i) up[i] += v[i];
    auto k2 = std::make_pair(key.first + step, up);
    C add = x * c;
    auto jt = rem.find(k2);
    if (jt == rem.end()) {
      rem.emplace(k2, add);
    } else {
      jt->second += add;
      if (tsw::is_zero(jt->second)) rem.erase(jt);
    }
  }
  return q;
}

}  // namespace tsw
