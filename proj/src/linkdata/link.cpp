#include "tsw/linkdata/link.hpp"

#include <sstream>

#include "tsw/error.hpp"

namespace tsw {

std::vector<std::size_t> members(Subset s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; s != 0; ++i, s >>= 1)
    if (s & 1U) out.push_back(i);
  return out;
}

Subset full_subset(std::size_t m) { return m >= 32 ? ~Subset(0) : (Subset(1) << m) - 1; }

std::string subset_key(Subset s) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i : members(s)) {
    out << (first ? "" : ",") << i + 1;
    first = false;
  }
  return out.str();
}

Subset parse_subset_key(const std::string& key, std::size_t m) {
  Subset s = 0;
  std::stringstream in(key);
  std::string item;
  while (std::getline(in, item, ',')) {
    long i = 0;
    try {
      std::size_t used = 0;
      i = std::stol(item, &used);
      ensure(used == item.size(), ErrorKind::InvalidInput, "bad subset key '" + key + "'");
    } catch (const std::logic_error&) {
      fail(ErrorKind::InvalidInput, "bad subset key '" + key + "'");
    }
    ensure(i >= 1 && static_cast<std::size_t>(i) <= m, ErrorKind::InvalidInput, "subset key '" + key + "' out of range");
    ensure(!contains(s, static_cast<std::size_t>(i - 1)), ErrorKind::InvalidInput, "repeated index in '" + key + "'");
    s |= Subset(1) << (i - 1);
  }
  ensure(s != 0, ErrorKind::InvalidInput, "empty subset key");
  return s;
}

FramedLink::FramedLink(std::vector<std::string> names, IntMatrix linking)
    : names_(std::move(names)), lambda_(std::move(linking)) {
  ensure(!names_.empty(), ErrorKind::InvalidInput, "a link needs at least one component");
  ensure(names_.size() <= kMaxComponents, ErrorKind::InvalidInput, "too many components");
  ensure(lambda_.rows() == names_.size() && lambda_.cols() == names_.size(), ErrorKind::InvalidInput,
         "linking matrix size does not match the component count");
  ensure(lambda_.is_symmetric(), ErrorKind::NotSymmetric, "linking matrix is not symmetric");
}

long FramedLink::lk_with(std::size_t i, Subset s) const {
  long sum = 0;
  for (std::size_t j : members(s))
    if (j != i) sum = checked_add(sum, lk(i, j));
  return sum;
}

bool FramedLink::algebraically_split() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (lk(i, j) != 0) return false;
  return true;
}

FramedLink FramedLink::with_split_component(const std::string& name, long f) const {
  std::size_t m = size();
  IntMatrix a(m + 1, m + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = lk(i, j);
  a(m, m) = f;
  std::vector<std::string> n = names_;
  n.push_back(name);
  return FramedLink(n, a);
}

std::vector<long> parity_base(const FramedLink& l) {
  std::vector<long> k0(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    long r = (1 + l.lk_with(i, full_subset(l.size()))) % 2;
    k0[i] = r < 0 ? r + 2 : r;
  }
  return k0;
}

std::vector<long> validate_charge(const FramedLink& l, const std::vector<long>& k) {
  ensure(k.size() == l.size(), ErrorKind::InvalidInput, "charge length does not match the component count");
  auto k0 = parity_base(l);
  for (std::size_t i = 0; i < k.size(); ++i)
    if ((k[i] - k0[i]) % 2 != 0)
      fail(ErrorKind::BadParity, "charge violates the parity condition at component " + std::to_string(i + 1));
  return k;
}

std::vector<long> restrict_charge(const FramedLink& l, const std::vector<long>& k, Subset s) {
  return restrict_charge_within(l, full_subset(l.size()), k, s);
}

std::vector<long> restrict_charge_within(const FramedLink& l, Subset sub, const std::vector<long>& k_sub, Subset s) {
  ensure((s & ~sub) == 0, ErrorKind::Assertion, "restriction to a set outside the sublink");
  auto sm = members(sub);
  ensure(k_sub.size() == sm.size(), ErrorKind::Assertion, "charge length does not match the sublink");
  Subset rest = sub & ~s;
  std::vector<long> out;
  for (std::size_t idx = 0; idx < sm.size(); ++idx) {
    std::size_t i = sm[idx];
    if (contains(s, i)) out.push_back(k_sub[idx] - l.lk_with(i, rest));
  }
  return out;
}

LinkingSubmatrix linking_submatrix(const FramedLink& l, Subset s) {
  auto idx = members(s);
  Subset rest = full_subset(l.size()) & ~s;
  IntMatrix a(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c)
      a(r, c) = r == c ? checked_add(l.framing(idx[r]), l.lk_with(idx[r], rest)) : l.lk(idx[r], idx[c]);
  return {a, determinant(a)};
}

GroupPtr relative_group(const FramedLink& l, Subset sub, Subset rel) {
  ensure((rel & ~sub) == 0, ErrorKind::Assertion, "relative subset outside the sublink");
  auto gens = members(sub);
  std::vector<std::vector<long>> rows;
  for (std::size_t i : members(rel)) {
    std::vector<long> row(gens.size(), 0);
    std::size_t pos_i = 0;
    long total = 0;
    for (std::size_t c = 0; c < gens.size(); ++c) {
      if (gens[c] == i) {
        pos_i = c;
        continue;
      }
      row[c] = l.lk(i, gens[c]);
      total = checked_add(total, row[c]);
    }
    row[pos_i] = -total;
    rows.push_back(row);
  }
  return std::make_shared<FgAbelianGroup>(FgAbelianGroup::from_relations(IntMatrix::from_rows(rows, gens.size())));
}

}  // namespace tsw
