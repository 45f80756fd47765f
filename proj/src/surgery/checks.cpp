#include "tsw/surgery/checks.hpp"

#include "tsw/error.hpp"
#include "tsw/groupring/characters.hpp"
#include "tsw/surgery/torsion.hpp"
#include "tsw/util/parallel.hpp"

namespace tsw {

namespace {

CheckReport report(std::string name, bool ok, std::string detail = "") { return {std::move(name), ok, std::move(detail)}; }

// Field involution: conjugate coefficients, invert the variables.
CycFraction bar(const CycFraction& x) {
  const auto& vars = x.numerator().variables();
  CycFraction r(x.conductor(), x.numerator().bar());
  for (const auto& v : x.denominator())
    r = r * CycFraction::monomial(x.conductor(), vars, v).scaled(Rational(-1));
  return CycFraction(x.conductor(), r.numerator(), x.denominator());
}

MonomialValue inverse(const MonomialValue& v) {
  MonomialValue r{-v.root, v.exps};
  for (auto& e : r.exps) e = -e;
  return r;
}

std::vector<long> dual_charge(const std::vector<long>& k) {
  std::vector<long> out(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) out[i] = 2 - k[i];
  return out;
}

bool character_excluded(const SurgeryPresentation& p, const TorsionCharacter& chi) {
  return p.b1 == 0 && chi.is_trivial();
}

}  // namespace

int det0(const IntMatrix& b) {
  ensure(b.is_symmetric(), ErrorKind::NotSymmetric, "det0 needs a symmetric matrix");
  std::size_t n = b.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = b(r, c);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(a[piv][piv]) == 0) ++piv;
    if (piv == n) {
      // no usable diagonal entry: add a row/column with an off-diagonal hit
      std::size_t pr = n, pc = n;
      for (std::size_t r = k; r < n && pr == n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
          if (sgn(a[r][c]) != 0) {
            pr = r;
            pc = c;
            break;
          }
      if (pr == n) break;
      for (std::size_t c = 0; c < n; ++c) a[pr][c] += a[pc][c];
      for (std::size_t r = 0; r < n; ++r) a[r][pr] += a[r][pc];
      piv = pr;
    }
    std::swap(a[k], a[piv]);
    for (auto& row : a) std::swap(row[k], row[piv]);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a[r][k]) == 0) continue;
      Rational f = a[r][k] / a[k][k];
      for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
      for (std::size_t c = k; c < n; ++c) a[c][r] = a[r][c];
    }
    if (sgn(a[k][k]) < 0) sign = -sign;
  }
  return sign;
}

int orientation_sign(const FramedLink& l) {
  std::size_t m = l.size();
  std::size_t b1 = m - rank(l.linking_matrix());
  int s = (b1 + m + 1) % 2 == 0 ? 1 : -1;
  return s * det0(l.linking_matrix());
}

CheckReport duality_check(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k) {
  auto k2 = dual_charge(k);
  QHFraction t = tau(p, table, k);
  QHFraction t2 = tau(p, table, k2);
  if (!(t.bar() == t2))
    return report("duality", false, "bar(tau(k)) = " + t.bar().to_string() + " but tau(2-k) = " + t2.to_string());
  EulerClasses eul(p);
  GroupElement c = eul.chern(k);
  for (const auto& chi : p.h->torsion_characters()) {
    if (character_excluded(p, chi)) continue;
    Valuation phi = character_valuation(p, chi);
    CycFraction a = tau_at(p, table, k, phi);
    CycFraction a2 = tau_at(p, table, k2, phi);
    CycFraction shifted =
        CycFraction::monomial(phi.conductor(), a.numerator().variables(), inverse(phi(c))) * a;
    CycFraction b = bar(a);
    if (!(b == a2) || !(b == shifted))
      return report("duality", false, "character component fails: bar = " + b.to_string() + ", tau(2-k) = " +
                                          a2.to_string() + ", phi(c)^-1 tau = " + shifted.to_string());
  }
  return report("duality", true);
}

CheckReport cross_check(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k) {
  QHFraction t = tau(p, table, k);
  std::vector<GroupElement> clear;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!contains(p.i0, i)) clear.push_back(p.meridians[i]);
  if (auto n = p.lone_free_component()) clear.push_back(p.meridians[*n]);
  GroupAlgebraElement target = t.cleared(clear);

  auto chars = p.h->torsion_characters();
  auto vars = free_variable_names(p.b1);
  auto comps = parallel_map<CycLaurent>(chars.size(), [&](std::size_t c) {
    if (character_excluded(p, chars[c])) return CycLaurent(vars);
    Valuation phi = character_valuation(p, chars[c]);
    CycFraction x = tau_at(p, table, k, phi);
    for (const auto& g : clear)
      x = x * CycFraction(phi.conductor(), binomial_polynomial(phi.conductor(), vars, phi(g)));
    return x.as_polynomial();
  });
  GroupAlgebraElement assembled = character_reassemble(p.h, comps);
  if (!(assembled == target))
    return report("cross_check", false,
                  "reassembled " + assembled.to_string() + " but direct evaluation gives " + target.to_string());
  return report("cross_check", true);
}

CheckReport equivariance_check(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k,
                               const std::vector<long>& v) {
  ensure(v.size() == k.size(), ErrorKind::InvalidInput, "shift vector has the wrong length");
  std::vector<long> k2(k);
  for (std::size_t i = 0; i < k.size(); ++i) k2[i] = checked_add(k[i], checked_mul(2, v[i]));
  QHFraction lhs = tau(p, table, k2);
  QHFraction rhs = tau(p, table, k).times(GroupAlgebraElement::unit(p.h, p.meridian_word(v)));
  if (!(lhs == rhs)) return report("equivariance", false, lhs.to_string() + " vs " + rhs.to_string());
  return report("equivariance", true);
}

CheckReport projection_check(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k) {
  QHFraction d = delta(p, table, k);
  QHFraction img = map_fraction(tau(p, table, k), free_projection(p)).normalized();
  if (!(d == img)) return report("projection", false, "delta " + d.to_string() + " vs image " + img.to_string());
  return report("projection", true);
}

CheckReport fast_path_check(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k) {
  QHFraction g = tau_general(p, table, k);
  QHFraction s = tau_split(p, table, k);
  if (!(g == s)) return report("fast_path", false, "general " + g.to_string() + " vs split " + s.to_string());
  return report("fast_path", true);
}

}  // namespace tsw
