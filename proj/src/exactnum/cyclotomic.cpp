#include "tsw/exactnum/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "tsw/error.hpp"

namespace tsw {

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  auto digits = [&](bool allow_sign) {
    std::size_t start = i;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t first = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return i > first && start <= first;
  };
  bool ok = digits(true);
  if (ok && i < text.size() && text[i] == '/') {
    ++i;
    ok = digits(false);
  }
  ensure(ok && i == text.size(), ErrorKind::InvalidInput, "not a rational: '" + text + "'");
  std::string t = text[0] == '+' ? text.substr(1) : text;
  Rational r;
  ensure(r.set_str(t, 10) == 0, ErrorKind::InvalidInput, "not a rational: '" + text + "'");
  ensure(r.get_den() != 0, ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

namespace {

using IntPoly = std::vector<long>;

IntPoly exact_div_monic(IntPoly a, const IntPoly& b) {
  std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {0};
  IntPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    long c = a[k];
    q[k - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  return q;
}

struct FieldData {
  long n;
  long degree;
  IntPoly phi;
  std::vector<std::vector<long>> power;  // z^j reduced, j in [0, n)
};

std::mutex cache_mutex;
std::map<long, IntPoly> phi_cache;
std::map<long, std::shared_ptr<const FieldData>> field_cache;

IntPoly phi_locked(long n) {
  auto it = phi_cache.find(n);
  if (it != phi_cache.end()) return it->second;
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = exact_div_monic(p, phi_locked(d));
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  phi_cache[n] = p;
  return p;
}

std::shared_ptr<const FieldData> field(long n) {
  ensure(n >= 1, ErrorKind::InvalidInput, "conductor must be positive");
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = field_cache.find(n);
  if (it != field_cache.end()) return it->second;
  auto f = std::make_shared<FieldData>();
  f->n = n;
  f->phi = phi_locked(n);
  f->degree = static_cast<long>(f->phi.size()) - 1;
  std::size_t d = static_cast<std::size_t>(f->degree);
  std::vector<long> cur(d, 0);
  cur[0] = 1;
  for (long j = 0; j < n; ++j) {
    f->power.push_back(cur);
    // multiply by z and reduce with the monic Phi_N
    long top = cur[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < d; ++i) cur[i] -= top * f->phi[i];
  }
  field_cache[n] = f;
  return f;
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(long n) {
  ensure(n >= 1, ErrorKind::InvalidInput, "cyclotomic_polynomial needs n >= 1");
  std::lock_guard<std::mutex> lock(cache_mutex);
  return phi_locked(n);
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic::Cyclotomic() : Cyclotomic(1) {}

Cyclotomic::Cyclotomic(long conductor) : n_(conductor) {
  c_.assign(static_cast<std::size_t>(field(conductor)->degree), Rational(0));
}

Cyclotomic::Cyclotomic(long conductor, const Rational& value) : Cyclotomic(conductor) {
  c_[0] = value;
}

Cyclotomic Cyclotomic::root_of_unity(long conductor, long exponent) {
  auto f = field(conductor);
  Cyclotomic r(conductor);
  const auto& p = f->power[static_cast<std::size_t>(mod(exponent, conductor))];
  for (std::size_t i = 0; i < p.size(); ++i) r.c_[i] = p[i];
  return r;
}

Cyclotomic Cyclotomic::from_powers(long conductor, const std::vector<Rational>& c) {
  auto f = field(conductor);
  Cyclotomic r(conductor);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (sgn(c[j]) == 0) continue;
    const auto& p = f->power[static_cast<std::size_t>(mod(static_cast<long>(j), conductor))];
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != 0) r.c_[i] += c[j] * p[i];
  }
  return r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0] == 1; }

Rational Cyclotomic::rational_value() const {
  ensure(is_rational(), ErrorKind::Assertion, "cyclotomic value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::embed(long m) const {
  ensure(m % n_ == 0, ErrorKind::Assertion, "embedding needs a multiple of the conductor");
  if (m == n_) return *this;
  std::vector<Rational> p(static_cast<std::size_t>(m), Rational(0));
  long step = m / n_;
  for (std::size_t i = 0; i < c_.size(); ++i) p[i * static_cast<std::size_t>(step)] = c_[i];
  return from_powers(m, p);
}

void Cyclotomic::coerce(Cyclotomic& other) {
  if (other.n_ == n_) return;
  long l = std::lcm(n_, other.n_);
  if (n_ != l) *this = embed(l);
  if (other.n_ != l) other = other.embed(l);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  Cyclotomic b = o;
  coerce(b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  Cyclotomic b = o;
  coerce(b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  Cyclotomic b = o;
  coerce(b);
  if (c_.size() == 1) {
    c_[0] *= b.c_[0];
    return *this;
  }
  std::vector<Rational> prod(static_cast<std::size_t>(n_), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      prod[(i + j) % static_cast<std::size_t>(n_)] += c_[i] * b.c_[j];
    }
  }
  *this = from_powers(n_, prod);
  return *this;
}

Cyclotomic Cyclotomic::times_root(long exponent) const {
  std::vector<Rational> p(static_cast<std::size_t>(n_), Rational(0));
  long e = mod(exponent, n_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    p[static_cast<std::size_t>(mod(static_cast<long>(i) + e, n_))] = c_[i];
  return from_powers(n_, p);
}

Cyclotomic Cyclotomic::conjugate() const {
  std::vector<Rational> p(static_cast<std::size_t>(n_), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    p[static_cast<std::size_t>(mod(-static_cast<long>(i), n_))] = c_[i];
  return from_powers(n_, p);
}

// Solve (multiplication by *this) u = 1 by Gaussian elimination over Q.
Cyclotomic Cyclotomic::inverse() const {
  ensure(!is_zero(), ErrorKind::DivisionByZero, "inverse of zero cyclotomic");
  std::size_t d = c_.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, Rational(0)));
  for (std::size_t j = 0; j < d; ++j) {
    Cyclotomic col = times_root(static_cast<long>(j));
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.c_[i];
  }
  m[0][d] = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && sgn(m[piv][col]) == 0) ++piv;
    ensure(piv < d, ErrorKind::Assertion, "singular multiplication matrix");
    std::swap(m[piv], m[col]);
    Rational inv = 1 / m[col][col];
    for (std::size_t k = col; k <= d; ++k) m[col][k] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (std::size_t k = col; k <= d; ++k) m[r][k] -= f * m[col][k];
    }
  }
  Cyclotomic r(n_);
  for (std::size_t i = 0; i < d; ++i) r.c_[i] = m[i][d];
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  Cyclotomic x = a, y = b;
  x.coerce(y);
  return x.c_ == y.c_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << c_[i].get_str();
    if (i == 1) out << "*z";
    if (i > 1) out << "*z^" << i;
  }
  if (first) return "0";
  if (n_ > 2) out << " (z=zeta_" << n_ << ")";
  return out.str();
}

}  // namespace tsw
