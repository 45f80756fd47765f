#include <tuple>

#include "tsw/diagram/diagram.hpp"
#include "tsw/error.hpp"

namespace tsw {

namespace {

using Terms = std::vector<std::pair<std::vector<long>, long>>;

RatLaurent poly(Subset s, const Terms& terms) {
  RatLaurent p(subset_variables(s));
  for (const auto& [e, c] : terms) p.add(e, Rational(c));
  return p;
}

RatLaurent knot(const Terms& terms) {
  RatLaurent p(std::vector<std::string>{"t"});
  for (const auto& [e, c] : terms) p.add(e, Rational(c));
  return p;
}

FramedLink unframed(std::size_t m, const std::vector<std::tuple<std::size_t, std::size_t, long>>& lk) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("L" + std::to_string(i + 1));
  IntMatrix a(m, m);
  for (const auto& [i, j, v] : lk) a(i, j) = a(j, i) = v;
  return FramedLink(names, a);
}

// prod over the members of (t_i - t_i^{-1})
RatLaurent product_of_differences(Subset s) {
  auto vars = subset_variables(s);
  RatLaurent p = RatLaurent::constant(vars, Rational(1));
  for (std::size_t c = 0; c < vars.size(); ++c) {
    std::vector<long> up(vars.size(), 0), down(vars.size(), 0);
    up[c] = 1;
    down[c] = -1;
    p = p * (RatLaurent::monomial(vars, up, Rational(1)) - RatLaurent::monomial(vars, down, Rational(1)));
  }
  return p;
}

std::vector<BuiltinLink> build() {
  std::vector<BuiltinLink> out;
  const RatLaurent one = knot({{{0}, 1}});
  auto add = [&](std::string name, std::string pd, FramedLink l, ConwayTable t) {
    out.push_back({std::move(name), std::move(pd), std::move(l), std::move(t)});
  };

  {
    ConwayTable t(1);
    t.set_knot(0, one);
    add("unknot", "O", unframed(1, {}), t);
  }
  {
    ConwayTable t(2);
    t.set_knot(0, one);
    t.set_knot(1, one);
    t.set_poly(3, poly(3, {{{0, 0}, 1}}));
    add("hopf", "X(1,2,3,4) X(2,1,4,3)", unframed(2, {{0, 1, 1}}), t);
  }
  {
    ConwayTable t(1);
    t.set_knot(0, knot({{{-1}, 1}, {{0}, -1}, {{1}, 1}}));
    add("trefoil", "X(1,2,3,4) X(2,5,6,3) X(5,1,4,6)", unframed(1, {}), t);
  }
  {
    ConwayTable t(1);
    t.set_knot(0, knot({{{-1}, -1}, {{0}, 3}, {{1}, -1}}));
    add("figure8", "X(1,2,3,4) X(2,5,6,7) X(7,8,4,3) X(8,6,5,1)", unframed(1, {}), t);
  }
  {
    ConwayTable t(2);
    t.set_knot(0, one);
    t.set_knot(1, one);
    t.set_poly(3, product_of_differences(3));
    add("whitehead", "X(6,1,7,2) X(10,7,5,8) X(4,5,1,6) X(2,10,3,9) X(8,4,9,3)", unframed(2, {}), t);
  }
  {
    ConwayTable t(2);
    t.set_knot(0, one);
    t.set_knot(1, one);
    t.set_poly(3, poly(3, {{{1, 1}, 1}, {{-1, -1}, 1}}));
    add("torus24", "X(1,2,3,4) X(2,5,6,3) X(5,7,8,6) X(7,1,4,8)", unframed(2, {{0, 1, 2}}), t);
  }
  {
    ConwayTable t(3);
    for (std::size_t i = 0; i < 3; ++i) t.set_knot(i, one);
    for (Subset s : {3U, 5U, 6U}) t.set_poly(s, RatLaurent(subset_variables(s)));
    t.set_poly(7, product_of_differences(7));
    add("borromean", "X(1,2,3,4) X(2,5,6,7) X(7,8,9,3) X(8,6,10,11) X(11,12,4,9) X(12,10,5,1)", unframed(3, {}),
        t);
  }
  return out;
}

}  // namespace

const std::vector<BuiltinLink>& builtin_links() {
  static const std::vector<BuiltinLink> links = build();
  return links;
}

const BuiltinLink& builtin_link(const std::string& name) {
  for (const auto& b : builtin_links())
    if (b.name == name) return b;
  fail(ErrorKind::InvalidInput, "unknown builtin link '" + name + "'");
}

}  // namespace tsw
