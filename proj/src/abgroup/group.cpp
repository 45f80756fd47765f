#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "tsw/abgroup/group.hpp"
#include "tsw/error.hpp"

namespace tsw {

namespace {

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

long dot(const std::vector<long>& a, const std::vector<long>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

}  // namespace

TorsionCharacter::TorsionCharacter(std::vector<long> residues, std::vector<long> invariants, long exponent)
    : c_(std::move(residues)), n_(exponent) {
  ensure(c_.size() == invariants.size(), ErrorKind::Assertion, "character arity mismatch");
  for (std::size_t j = 0; j < c_.size(); ++j) {
    ensure(n_ % invariants[j] == 0, ErrorKind::Assertion, "invariant factor must divide the exponent");
    weight_.push_back(n_ / invariants[j]);
  }
}

long TorsionCharacter::value(const GroupElement& g) const {
  long s = 0;
  for (std::size_t j = 0; j < c_.size(); ++j) s = mod(s + mod(c_[j] * g.tors[j], n_) * weight_[j], n_);
  return s;
}

bool TorsionCharacter::is_trivial() const {
  return std::all_of(c_.begin(), c_.end(), [](long x) { return x == 0; });
}

FgAbelianGroup FgAbelianGroup::from_relations(const IntMatrix& relations) {
  FgAbelianGroup h;
  h.n_ = relations.cols();
  h.relations_ = relations;
  SmithDecomposition s = smith_normal_form(relations);
  std::size_t diag = std::min(relations.rows(), relations.cols());
  for (std::size_t j = 0; j < h.n_; ++j) {
    long d = j < diag ? s.D(j, j) : 0;
    std::vector<long> to = s.V.col(j);
    std::vector<long> from = s.V_inverse.row(j);
    if (d == 1) continue;
    if (d == 0) {
      h.to_free_.push_back(to);
      h.from_free_.push_back(from);
    } else {
      h.invariants_.push_back(d);
      h.to_tors_.push_back(to);
      h.from_tors_.push_back(from);
    }
  }
  h.free_rank_ = h.to_free_.size();
  return h;
}

FgAbelianGroup FgAbelianGroup::free(std::size_t rank) {
  return from_relations(IntMatrix(0, rank));
}

long FgAbelianGroup::torsion_order() const {
  long p = 1;
  for (long d : invariants_) p = checked_mul(p, d);
  return p;
}

long FgAbelianGroup::torsion_exponent() const { return invariants_.empty() ? 1 : invariants_.back(); }

GroupElement FgAbelianGroup::identity() const {
  return GroupElement{std::vector<long>(free_rank_, 0), std::vector<long>(invariants_.size(), 0)};
}

GroupElement FgAbelianGroup::element(const std::vector<long>& w) const {
  ensure(w.size() == n_, ErrorKind::Assertion, "generator word has wrong length");
  GroupElement g = identity();
  for (std::size_t k = 0; k < free_rank_; ++k) g.free[k] = dot(to_free_[k], w);
  for (std::size_t k = 0; k < invariants_.size(); ++k) g.tors[k] = mod(dot(to_tors_[k], w), invariants_[k]);
  return g;
}

GroupElement FgAbelianGroup::generator(std::size_t i) const {
  std::vector<long> w(n_, 0);
  w[i] = 1;
  return element(w);
}

std::vector<long> FgAbelianGroup::word(const GroupElement& g) const {
  std::vector<long> w(n_, 0);
  for (std::size_t k = 0; k < free_rank_; ++k)
    for (std::size_t i = 0; i < n_; ++i) w[i] = checked_add(w[i], checked_mul(g.free[k], from_free_[k][i]));
  for (std::size_t k = 0; k < invariants_.size(); ++k)
    for (std::size_t i = 0; i < n_; ++i) w[i] = checked_add(w[i], checked_mul(g.tors[k], from_tors_[k][i]));
  return w;
}

GroupElement FgAbelianGroup::reduce(GroupElement g) const {
  ensure(g.free.size() == free_rank_ && g.tors.size() == invariants_.size(), ErrorKind::Assertion,
         "group element does not match group shape");
  for (std::size_t k = 0; k < invariants_.size(); ++k) g.tors[k] = mod(g.tors[k], invariants_[k]);
  return g;
}

GroupElement FgAbelianGroup::from_coordinates(const std::vector<long>& free, const std::vector<long>& tors) const {
  return reduce(GroupElement{free, tors});
}

GroupElement FgAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement r = a;
  for (std::size_t k = 0; k < free_rank_; ++k) r.free[k] = checked_add(r.free[k], b.free[k]);
  for (std::size_t k = 0; k < invariants_.size(); ++k) r.tors[k] = mod(r.tors[k] + b.tors[k], invariants_[k]);
  return r;
}

GroupElement FgAbelianGroup::negate(const GroupElement& a) const { return scale(a, -1); }

GroupElement FgAbelianGroup::scale(const GroupElement& a, long k) const {
  GroupElement r = a;
  for (auto& x : r.free) x = checked_mul(x, k);
  for (std::size_t j = 0; j < invariants_.size(); ++j)
    r.tors[j] = mod(checked_mul(mod(k, invariants_[j]), r.tors[j]), invariants_[j]);
  return r;
}

bool FgAbelianGroup::is_identity(const GroupElement& a) const { return a == identity(); }

bool FgAbelianGroup::is_torsion(const GroupElement& a) const {
  return std::all_of(a.free.begin(), a.free.end(), [](long x) { return x == 0; });
}

std::optional<long> FgAbelianGroup::order(const GroupElement& a) const {
  if (!is_torsion(a)) return std::nullopt;
  long o = 1;
  for (std::size_t j = 0; j < invariants_.size(); ++j) {
    long d = invariants_[j];
    o = std::lcm(o, d / std::gcd(d, a.tors[j]));
  }
  return o;
}

std::vector<GroupElement> FgAbelianGroup::torsion_elements() const {
  std::vector<GroupElement> out;
  GroupElement g = identity();
  for (;;) {
    out.push_back(g);
    std::size_t j = invariants_.size();
    while (j > 0) {
      --j;
      if (++g.tors[j] < invariants_[j]) break;
      g.tors[j] = 0;
      if (j == 0) return out;
    }
    if (invariants_.empty()) return out;
  }
}

std::vector<TorsionCharacter> FgAbelianGroup::torsion_characters() const {
  std::vector<TorsionCharacter> out;
  for (const auto& g : torsion_elements()) out.emplace_back(g.tors, invariants_, torsion_exponent());
  return out;
}

std::string FgAbelianGroup::render(const GroupElement& g) const {
  std::ostringstream out;
  bool first = true;
  auto put = [&](const char* name, std::size_t k, long e) {
    if (e == 0) return;
    if (!first) out << "*";
    first = false;
    out << name << (k + 1) << "^" << e;
  };
  for (std::size_t k = 0; k < g.free.size(); ++k) put("t", k, g.free[k]);
  for (std::size_t k = 0; k < g.tors.size(); ++k) put("s", k, g.tors[k]);
  return first ? "1" : out.str();
}

std::string FgAbelianGroup::describe() const {
  std::ostringstream out;
  bool first = true;
  if (free_rank_ > 0) {
    out << "Z";
    if (free_rank_ > 1) out << "^" << free_rank_;
    first = false;
  }
  for (long d : invariants_) {
    out << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return first ? "0" : out.str();
}

std::vector<GroupElement> finite_subgroup(const FgAbelianGroup& h, const std::vector<GroupElement>& gens) {
  for (const auto& g : gens)
    ensure(h.is_torsion(g), ErrorKind::InfiniteKernel, "generator " + h.render(g) + " has infinite order");
  std::set<GroupElement> seen{h.identity()};
  std::vector<GroupElement> frontier{h.identity()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        GroupElement y = h.add(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return std::vector<GroupElement>(seen.begin(), seen.end());
}

GroupElement Quotient::project(const GroupElement& g) const {
  std::vector<long> w = g.free;
  w.insert(w.end(), g.tors.begin(), g.tors.end());
  return group->element(w);
}

GroupElement Quotient::preimage(const GroupElement& y) const {
  std::vector<long> w = group->word(y);
  std::size_t b = source->free_rank();
  return source->from_coordinates(std::vector<long>(w.begin(), w.begin() + static_cast<long>(b)),
                                  std::vector<long>(w.begin() + static_cast<long>(b), w.end()));
}

Quotient quotient_and_kernel(const GroupPtr& h, const std::vector<GroupElement>& kill) {
  std::size_t b = h->free_rank(), r = h->invariant_factors().size();
  std::vector<std::vector<long>> rows;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<long> row(b + r, 0);
    row[b + j] = h->invariant_factors()[j];
    rows.push_back(row);
  }
  for (const auto& g : kill) {
    std::vector<long> row = g.free;
    row.insert(row.end(), g.tors.begin(), g.tors.end());
    rows.push_back(row);
  }
  Quotient q;
  q.source = h;
  q.kernel = finite_subgroup(*h, kill);
  q.group = std::make_shared<FgAbelianGroup>(FgAbelianGroup::from_relations(IntMatrix::from_rows(rows, b + r)));
  return q;
}

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<GroupElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  ensure(images_.size() == source_->generator_count(), ErrorKind::Assertion, "homomorphism needs one image per generator");
  const IntMatrix& rel = source_->relations();
  for (std::size_t r = 0; r < rel.rows(); ++r) {
    GroupElement acc = target_->identity();
    for (std::size_t i = 0; i < rel.cols(); ++i) acc = target_->add(acc, target_->scale(images_[i], rel(r, i)));
    ensure(target_->is_identity(acc), ErrorKind::Assertion, "homomorphism does not respect relation " + std::to_string(r));
  }
}

GroupElement GroupHom::operator()(const GroupElement& g) const {
  std::vector<long> w = source_->word(g);
  GroupElement acc = target_->identity();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) acc = target_->add(acc, target_->scale(images_[i], w[i]));
  return acc;
}

}  // namespace tsw
