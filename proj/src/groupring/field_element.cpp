#include "tsw/groupring/field_element.hpp"

#include <algorithm>
#include <sstream>

#include "tsw/error.hpp"
#include "tsw/groupring/characters.hpp"

namespace tsw {

namespace {

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

bool is_constant(const MonomialValue& v) {
  return std::all_of(v.exps.begin(), v.exps.end(), [](long x) { return x == 0; });
}

bool leading_negative(const std::vector<long>& e) {
  for (long x : e)
    if (x != 0) return x < 0;
  return false;
}

CycLaurent monomial_poly(long n, const std::vector<std::string>& vars, const MonomialValue& v, const Rational& c) {
  Cyclotomic z = Cyclotomic::root_of_unity(n, v.root);
  z *= c;
  return CycLaurent::monomial(vars, v.exps, z);
}

std::vector<MonomialValue> missing(const std::vector<MonomialValue>& a, const std::vector<MonomialValue>& b) {
  std::vector<MonomialValue> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Valuation::Valuation(GroupPtr source, long conductor, std::size_t variables, std::vector<MonomialValue> images)
    : source_(std::move(source)), n_(conductor), b_(variables), images_(std::move(images)) {
  ensure(images_.size() == source_->generator_count(), ErrorKind::Assertion, "valuation needs one image per generator");
  for (auto& v : images_) {
    ensure(v.exps.size() == b_, ErrorKind::Assertion, "valuation image has wrong arity");
    v.root = mod(v.root, n_);
  }
  const IntMatrix& rel = source_->relations();
  for (std::size_t r = 0; r < rel.rows(); ++r)
    ensure(is_one(compose(rel.row(r))), ErrorKind::Assertion, "valuation does not respect a relation");
}

MonomialValue Valuation::compose(const std::vector<long>& word) const {
  MonomialValue v{0, std::vector<long>(b_, 0)};
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == 0) continue;
    v.root = mod(v.root + mod(checked_mul(word[i], images_[i].root), n_), n_);
    for (std::size_t j = 0; j < b_; ++j) v.exps[j] = checked_add(v.exps[j], checked_mul(word[i], images_[i].exps[j]));
  }
  return v;
}

MonomialValue Valuation::operator()(const GroupElement& g) const { return compose(source_->word(g)); }

bool Valuation::is_one(const MonomialValue& v) const { return mod(v.root, n_) == 0 && is_constant(v); }

CycLaurent binomial_polynomial(long n, const std::vector<std::string>& vars, const MonomialValue& v) {
  CycLaurent p = monomial_poly(n, vars, v, 1);
  p.add(std::vector<long>(vars.size(), 0), Cyclotomic(n, -1));
  return p;
}

CycFraction::CycFraction(long conductor, std::vector<std::string> vars) : n_(conductor), num_(std::move(vars)) {}

CycFraction::CycFraction(long conductor, CycLaurent numerator, std::vector<MonomialValue> denominator)
    : n_(conductor), num_(std::move(numerator)) {
  for (MonomialValue v : denominator) {
    ensure(!is_constant(v), ErrorKind::Assertion, "constant denominator factor in a field fraction");
    v.root = mod(v.root, n_);
    if (leading_negative(v.exps)) {
      // 1/(w - 1) = -w^{-1} / (w^{-1} - 1)
      for (auto& x : v.exps) x = -x;
      v.root = mod(-v.root, n_);
      num_ = num_ * monomial_poly(n_, num_.variables(), v, -1);
    }
    den_.push_back(v);
  }
  std::sort(den_.begin(), den_.end());
  if (num_.is_zero()) den_.clear();
}

CycFraction CycFraction::monomial(long conductor, const std::vector<std::string>& vars, const MonomialValue& v) {
  return CycFraction(conductor, monomial_poly(conductor, vars, v, 1));
}

CycFraction& CycFraction::operator+=(const CycFraction& o) {
  const auto& vars = num_.variables();
  auto here = missing(o.den_, den_);
  auto there = missing(den_, o.den_);
  CycLaurent a = num_, b = o.num_;
  for (const auto& v : here) a = a * binomial_polynomial(n_, vars, v);
  for (const auto& v : there) b = b * binomial_polynomial(n_, vars, v);
  std::vector<MonomialValue> d = den_;
  d.insert(d.end(), here.begin(), here.end());
  *this = CycFraction(n_, a + b, d);
  return *this;
}

CycFraction operator*(const CycFraction& a, const CycFraction& b) {
  std::vector<MonomialValue> d = a.den_;
  d.insert(d.end(), b.den_.begin(), b.den_.end());
  return CycFraction(a.n_, a.num_ * b.num_, d);
}

CycFraction CycFraction::scaled(const Cyclotomic& c) const {
  return CycFraction(n_, num_.scaled(c), den_);
}

CycFraction CycFraction::scaled(const Rational& c) const { return CycFraction(n_, num_.scaled(c), den_); }

CycFraction CycFraction::inverse_binomial(long n, const std::vector<std::string>& vars, const MonomialValue& v) {
  if (is_constant(v)) {
    ensure(mod(v.root, n) != 0, ErrorKind::DivisionByZero, "inverse of phi(h) - 1 = 0");
    Cyclotomic z = Cyclotomic::root_of_unity(n, v.root) - Cyclotomic(n, 1);
    return CycFraction(n, CycLaurent::constant(vars, z.inverse()));
  }
  return CycFraction(n, CycLaurent::constant(vars, Cyclotomic(n, 1)), {v});
}

CycFraction CycFraction::times_binomial(const MonomialValue& v) const {
  CycFraction f(n_, num_.variables());
  f.num_ = num_;
  f.den_ = den_;
  MonomialValue w = v;
  w.root = mod(w.root, n_);
  if (!is_constant(w)) {
    bool flip = leading_negative(w.exps);
    MonomialValue key = w;
    if (flip) {
      for (auto& x : key.exps) x = -x;
      key.root = mod(-key.root, n_);
    }
    auto it = std::find(f.den_.begin(), f.den_.end(), key);
    if (it != f.den_.end()) {
      f.den_.erase(it);
      // (w - 1) = -w (w^{-1} - 1) when the stored key is w^{-1}
      if (flip) f.num_ = f.num_ * monomial_poly(n_, num_.variables(), w, -1);
      return f;
    }
  }
  f.num_ = f.num_ * binomial_polynomial(n_, num_.variables(), w);
  if (f.num_.is_zero()) f.den_.clear();
  return f;
}

CycLaurent CycFraction::as_polynomial() const {
  CycLaurent p = num_;
  for (const auto& v : den_)
    p = divide_binomial(p, CycLaurent::doubled(v.exps), Cyclotomic::root_of_unity(n_, v.root));
  return p;
}

bool operator==(const CycFraction& a, const CycFraction& b) {
  CycLaurent x = a.num_, y = b.num_;
  const auto& vars = a.num_.variables();
  for (const auto& v : b.den_) x = x * binomial_polynomial(a.n_, vars, v);
  for (const auto& v : a.den_) y = y * binomial_polynomial(a.n_, vars, v);
  return x == y;
}

std::string CycFraction::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::ostringstream out;
  out << "(" << num_.to_string() << ")";
  for (const auto& v : den_) {
    CycLaurent b = binomial_polynomial(n_, num_.variables(), v);
    out << " / (" << b.to_string() << ")";
  }
  return out.str();
}

CycLaurent apply_phi(const GroupAlgebraElement& a, const Valuation& phi) {
  CycLaurent p(free_variable_names(phi.variables()));
  for (const auto& [g, c] : a.terms()) p += monomial_poly(phi.conductor(), p.variables(), phi(g), c);
  return p;
}

CycFraction apply_phi_sharp(const QHFraction& x, const Valuation& phi, const std::vector<GroupElement>& alternatives) {
  const GroupPtr& h = x.group();
  GroupAlgebraElement num = x.numerator();
  std::vector<GroupElement> kept;
  for (const auto& g : x.denominator()) {
    if (!phi.is_one(phi(g))) {
      kept.push_back(g);
      continue;
    }
    if (auto q = try_exact_divide(num, g)) {
      num = std::move(*q);
      continue;
    }
    bool done = false;
    for (const auto& alt : alternatives) {
      if (phi.is_one(phi(alt))) continue;
      if (auto q = try_exact_divide(num * GroupAlgebraElement::binomial(h, alt), g)) {
        num = std::move(*q);
        kept.push_back(alt);
        done = true;
        break;
      }
    }
    if (!done) fail(ErrorKind::NotInDomain, "denominator factor (" + h->render(g) + " - 1) vanishes under phi");
  }
  CycLaurent p = apply_phi(num, phi);
  CycFraction r(phi.conductor(), p);
  for (const auto& g : kept) r = r * CycFraction::inverse_binomial(phi.conductor(), p.variables(), phi(g));
  return r;
}

}  // namespace tsw
