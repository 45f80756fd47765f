#include "tsw/groupring/group_algebra.hpp"

#include <set>
#include <sstream>

#include "tsw/error.hpp"
#include "tsw/groupring/characters.hpp"

namespace tsw {

GroupAlgebraElement::GroupAlgebraElement(GroupPtr group) : group_(std::move(group)) {}

GroupAlgebraElement GroupAlgebraElement::unit(GroupPtr group, const GroupElement& h, const Rational& c) {
  GroupAlgebraElement a(std::move(group));
  a.add_term(h, c);
  return a;
}

GroupAlgebraElement GroupAlgebraElement::scalar(GroupPtr group, const Rational& c) {
  GroupElement e = group->identity();
  return unit(std::move(group), e, c);
}

GroupAlgebraElement GroupAlgebraElement::binomial(GroupPtr group, const GroupElement& h) {
  GroupAlgebraElement a = unit(group, h);
  a.add_term(group->identity(), -1);
  return a;
}

void GroupAlgebraElement::add_term(const GroupElement& h, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(h);
  if (it == terms_.end()) {
    terms_.emplace(h, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Rational GroupAlgebraElement::coefficient(const GroupElement& h) const {
  auto it = terms_.find(h);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool GroupAlgebraElement::is_integral() const {
  for (const auto& [h, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

bool GroupAlgebraElement::is_torsion_supported() const {
  for (const auto& [h, c] : terms_)
    if (!group_->is_torsion(h)) return false;
  return true;
}

void GroupAlgebraElement::check_group(const GroupAlgebraElement& o) const {
  ensure(group_ == o.group_ || group_->same_structure(*o.group_), ErrorKind::Assertion,
         "group algebra elements over different groups");
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  check_group(o);
  for (const auto& [h, c] : o.terms_) add_term(h, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  check_group(o);
  for (const auto& [h, c] : o.terms_) add_term(h, -c);
  return *this;
}

GroupAlgebraElement GroupAlgebraElement::operator-() const { return scaled(-1); }

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  a.check_group(b);
  GroupAlgebraElement r(a.group_);
  for (const auto& [ha, ca] : a.terms_)
    for (const auto& [hb, cb] : b.terms_) r.add_term(a.group_->add(ha, hb), ca * cb);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rational& c) const {
  GroupAlgebraElement r(group_);
  if (sgn(c) == 0) return r;
  for (const auto& [h, x] : terms_) r.terms_.emplace(h, x * c);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::shifted(const GroupElement& g) const {
  GroupAlgebraElement r(group_);
  for (const auto& [h, x] : terms_) r.terms_.emplace(group_->add(h, g), x);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::bar() const {
  GroupAlgebraElement r(group_);
  for (const auto& [h, x] : terms_) r.terms_.emplace(group_->negate(h), x);
  return r;
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return a.group_->same_structure(*b.group_) && a.terms_ == b.terms_;
}

std::string GroupAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [h, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str() << "*" << group_->render(h);
  }
  return out.str();
}

GroupAlgebraElement push_to_group_algebra(const RatLaurent& p, const GroupPtr& h,
                                          const std::vector<GroupElement>& assignment) {
  ensure(assignment.size() == p.arity(), ErrorKind::Assertion, "assignment arity mismatch");
  GroupAlgebraElement r(h);
  for (const auto& [e, c] : p.integral_terms()) {
    GroupElement g = h->identity();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) g = h->add(g, h->scale(assignment[i], e[i]));
    r.add_term(g, c);
  }
  return r;
}

GroupAlgebraElement map_along(const GroupAlgebraElement& a, const GroupHom& f) {
  GroupAlgebraElement r(f.target());
  for (const auto& [h, c] : a.terms()) r.add_term(f(h), c);
  return r;
}

namespace {

long height(const GroupElement& g, const GroupElement& dir) {
  long s = 0;
  for (std::size_t i = 0; i < g.free.size(); ++i) s = checked_add(s, checked_mul(g.free[i], dir.free[i]));
  return s;
}

}  // namespace

std::optional<GroupAlgebraElement> try_exact_divide(const GroupAlgebraElement& a, const GroupElement& h) {
  const GroupPtr& grp = a.group();
  ensure(!grp->is_torsion(h), ErrorKind::Assertion, "exact_divide needs an element of infinite order");
  long step = height(h, h);
  GroupAlgebraElement q(grp);
  if (a.is_zero()) return q;
  std::map<std::pair<long, GroupElement>, Rational> rem;
  long top = 0;
  bool first = true;
  for (const auto& [g, c] : a.terms()) {
    long hg = height(g, h);
    top = first ? hg : std::max(top, hg);
    first = false;
    rem.emplace(std::make_pair(hg, g), c);
  }
  while (!rem.empty()) {
    auto it = rem.begin();
    auto key = it->first;
    Rational c = it->second;
    rem.erase(it);
    if (key.first + step > top) return std::nullopt;
    q.add_term(key.second, -c);
    auto up = std::make_pair(key.first + step, grp->add(key.second, h));
    auto jt = rem.find(up);
    if (jt == rem.end()) {
      rem.emplace(up, c);
    } else {
      jt->second += c;
      if (sgn(jt->second) == 0) rem.erase(jt);
    }
  }
  return q;
}

GroupAlgebraElement exact_divide(const GroupAlgebraElement& a, const GroupElement& h) {
  auto q = try_exact_divide(a, h);
  if (!q) fail(ErrorKind::NotDivisible, "(" + a.group()->render(h) + " - 1) does not divide " + a.to_string());
  return *q;
}

GroupAlgebraElement reduced_inverse(const GroupAlgebraElement& a) {
  ensure(a.is_torsion_supported(), ErrorKind::Assertion, "reduced_inverse needs torsion-supported input");
  const GroupPtr& h = a.group();
  std::vector<Cyclotomic> values = torsion_transform(a);
  for (auto& v : values) v = v.is_zero() ? v : v.inverse();
  return inverse_torsion_transform(h, values);
}

GroupAlgebraElement reduced_inverse_of_binomial(const GroupPtr& h, const GroupElement& t) {
  auto n = h->order(t);
  ensure(n.has_value(), ErrorKind::Assertion, "reduced inverse of (t-1) needs t of finite order");
  GroupAlgebraElement r(h);
  GroupElement p = h->identity();
  for (long j = 0; j < *n; ++j) {
    r.add_term(p, ratio(2 * j + 1 - *n, 2 * *n));
    p = h->add(p, t);
  }
  return r;
}

GroupAlgebraElement average(const GroupPtr& h, const std::vector<GroupElement>& elements) {
  GroupAlgebraElement r(h);
  Rational w(1, static_cast<long>(elements.size()));
  w.canonicalize();
  for (const auto& g : elements) r.add_term(g, w);
  return r;
}

GroupAlgebraElement geometric_sum(const GroupPtr& h, const GroupElement& g, long n) {
  GroupAlgebraElement r(h);
  GroupElement p = h->identity();
  for (long j = 0; j < n; ++j) {
    r.add_term(p, 1);
    p = h->add(p, g);
  }
  return r;
}

GroupAlgebraElement transfer(const GroupAlgebraElement& a, const GroupPtr& h,
                             const std::vector<GroupElement>& generator_images,
                             const std::vector<GroupElement>& kill) {
  const GroupPtr& src = a.group();
  ensure(generator_images.size() == src->generator_count(), ErrorKind::Assertion, "transfer needs one image per generator");
  std::vector<GroupElement> kernel = finite_subgroup(*h, kill);
  std::set<GroupElement> in_kernel(kernel.begin(), kernel.end());
  auto push = [&](const std::vector<long>& w) {
    GroupElement g = h->identity();
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != 0) g = h->add(g, h->scale(generator_images[i], w[i]));
    return g;
  };
  const IntMatrix& rel = src->relations();
  for (std::size_t r = 0; r < rel.rows(); ++r)
    ensure(in_kernel.count(push(rel.row(r))) == 1, ErrorKind::Assertion,
           "transfer: a relation of the source group does not die in the quotient");
  GroupAlgebraElement pushed(h);
  for (const auto& [g, c] : a.terms()) pushed.add_term(push(src->word(g)), c);
  return pushed * average(h, kernel);
}

}  // namespace tsw
