#include <functional>

#include "tsw/diagram/diagram.hpp"
#include "tsw/error.hpp"

namespace tsw {

namespace {

constexpr std::size_t kMaxMinor = 24;

// Laplace expansion along rows, memoized on the set of used columns.
RatLaurent sparse_determinant(const std::vector<std::map<std::size_t, RatLaurent>>& rows, std::size_t n,
                              const std::vector<std::string>& vars) {
  std::map<std::uint32_t, RatLaurent> dp{{0U, RatLaurent::constant(vars, Rational(1))}};
  for (std::size_t r = 0; r < n; ++r) {
    std::map<std::uint32_t, RatLaurent> next;
    for (const auto& [mask, acc] : dp)
      for (const auto& [c, entry] : rows[r]) {
        if ((mask >> c) & 1U) continue;
        int above = __builtin_popcount(mask >> c);
        RatLaurent term = acc * entry;
        if (above % 2) term = -term;
        auto [it, fresh] = next.emplace(mask | (1U << c), term);
        if (!fresh) it->second += term;
      }
    dp.clear();
    for (auto& [mask, p] : next)
      if (!p.is_zero()) dp.emplace(mask, std::move(p));
  }
  auto it = dp.find(n == 0 ? 0U : static_cast<std::uint32_t>((1ULL << n) - 1));
  return it == dp.end() ? RatLaurent(vars) : it->second;
}

}  // namespace

RatLaurent fox_alexander(const Diagram& d) {
  std::size_t m = d.size();
  ensure(m >= 1, ErrorKind::DegenerateDiagram, "diagram without components");
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < m; ++i) vars.push_back("t" + std::to_string(i + 1));
  RatLaurent zero(vars), one = RatLaurent::constant(vars, Rational(1));
  if (d.crossings.empty()) return m == 1 ? one : zero;
  for (const auto& c : d.components)
    if (c.empty()) return zero;  // a circle off the diagram splits the link

  std::map<long, long> parent;
  std::function<long(long)> find = [&](long e) {
    auto it = parent.find(e);
    if (it == parent.end() || it->second == e) return e;
    return it->second = find(it->second);
  };
  for (const auto& x : d.crossings) {
    long a = find(x.over_in()), b = find(x.over_out());
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<long, std::size_t> arc;
  std::vector<std::size_t> arc_component;
  for (const auto& comp : d.components)
    for (long e : comp)
      if (arc.emplace(find(e), arc_component.size()).second) arc_component.push_back(d.component_of.at(e));
  std::size_t n = d.crossings.size();
  // a component that never passes under is one closed arc lying on top
  if (arc_component.size() != n) return zero;
  ensure(n - 1 <= kMaxMinor, ErrorKind::ResourceLimit, "diagram too large for the Fox minor");

  auto var = [&](std::size_t comp, long power) {
    std::vector<long> e(m, 0);
    e[comp] = power;
    return RatLaurent::monomial(vars, e, Rational(1));
  };
  std::size_t drop = arc.at(find(d.components.back().back()));
  std::vector<std::map<std::size_t, RatLaurent>> rows;
  for (std::size_t r = 0; r + 1 < n; ++r) {
    const auto& x = d.crossings[r];
    std::size_t o = arc.at(find(x.over_in())), i = arc.at(find(x.under_in())), k = arc.at(find(x.under_out()));
    std::size_t tu = d.component_of.at(x.under_in()), to = d.component_of.at(x.over_in());
    std::map<std::size_t, RatLaurent> row;
    auto put = [&](std::size_t col, const RatLaurent& p) {
      if (col == drop) return;
      std::size_t c = col > drop ? col - 1 : col;
      auto [it, fresh] = row.emplace(c, p);
      if (!fresh) it->second += p;
    };
    if (x.sign() > 0) {
      put(o, one - var(tu, 1));
      put(i, var(to, 1));
      put(k, -one);
    } else {
      put(o, var(tu, 1) - one);
      put(i, one);
      put(k, -var(to, 1));
    }
    for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);
    rows.push_back(std::move(row));
  }
  RatLaurent minor = sparse_determinant(rows, n - 1, vars);
  if (m == 1) return minor;
  std::vector<long> v(m, 0);
  v[m - 1] = 2;
  try {
    return divide_binomial(minor, v, Rational(1));
  } catch (const Error&) {
    fail(ErrorKind::DegenerateDiagram, "Fox minor is not divisible by (t" + std::to_string(m) + " - 1)");
  }
}

}  // namespace tsw
