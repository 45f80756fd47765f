#include "tsw/groupring/series.hpp"

#include <map>

#include "tsw/error.hpp"

namespace tsw {

Rational series_coefficient(const QHFraction& x, const GroupElement& direction, const GroupElement& target) {
  const GroupPtr& h = x.group();
  ensure(h->free_rank() == 1, ErrorKind::DirectionNotPrimitive, "series expansion needs b1 = 1");
  long d = direction.free.at(0);
  ensure(d == 1 || d == -1, ErrorKind::DirectionNotPrimitive,
         "direction " + h->render(direction) + " does not generate H/Tors");
  auto degree = [&](const GroupElement& g) { return checked_mul(g.free[0], d); };

  if (x.numerator().is_zero()) return 0;
  long low = 0;
  bool first = true;
  for (const auto& [g, c] : x.numerator().terms()) {
    low = first ? degree(g) : std::min(low, degree(g));
    first = false;
  }
  // every expansion only raises the degree, so nothing above this matters
  long budget = degree(target) - low;
  if (budget < 0) return 0;

  std::map<GroupElement, Rational> series{{h->identity(), Rational(1)}};
  for (const auto& g : x.denominator()) {
    long step = degree(g);
    GroupElement unit = step > 0 ? g : h->negate(g);
    Rational sign = step > 0 ? Rational(-1) : Rational(1);
    long start = step > 0 ? 0 : 1;
    long s = step > 0 ? step : -step;
    std::map<GroupElement, Rational> next;
    for (const auto& [e, c] : series) {
      long base = degree(e);
      GroupElement p = h->add(e, h->scale(unit, start));
      for (long j = start; base + j * s <= budget; ++j) {
        next[p] += c * sign;
        p = h->add(p, unit);
      }
    }
    series.clear();
    for (auto& [e, c] : next)
      if (sgn(c) != 0) series.emplace(e, c);
  }
  Rational out = 0;
  for (const auto& [g, c] : x.numerator().terms()) {
    GroupElement need = h->add(target, h->negate(g));
    auto it = series.find(need);
    if (it != series.end()) out += c * it->second;
  }
  return out;
}

}  // namespace tsw
