#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "tsw/diagram/diagram.hpp"
#include "tsw/error.hpp"

namespace tsw {

namespace {

const std::vector<std::string> kZ{"z"};

PdCrossing switched(const PdCrossing& x) {
  const auto& e = x.e;
  if (x.over_from_d) return {{e[3], e[0], e[1], e[2]}, false};
  return {{e[1], e[2], e[3], e[0]}, true};
}

struct Smoothing {
  std::vector<PdCrossing> crossings;
  std::size_t new_circles = 0;
};

// Oriented resolution: the incoming under-edge joins the outgoing
// over-edge and vice versa.
Smoothing smoothed(const std::vector<PdCrossing>& xs, std::size_t at) {
  std::map<long, long> parent;
  std::function<long(long)> find = [&](long e) {
    auto it = parent.find(e);
    if (it == parent.end() || it->second == e) return e;
    return it->second = find(it->second);
  };
  auto unite = [&](long a, long b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  const PdCrossing& x = xs[at];
  unite(x.under_in(), x.over_out());
  unite(x.over_in(), x.under_out());
  Smoothing s;
  std::set<long> alive;
  for (std::size_t c = 0; c < xs.size(); ++c) {
    if (c == at) continue;
    PdCrossing y = xs[c];
    for (auto& e : y.e) {
      e = find(e);
      alive.insert(e);
    }
    s.crossings.push_back(y);
  }
  std::set<long> classes{find(x.under_in()), find(x.over_in())};
  for (long r : classes)
    if (!alive.count(r)) ++s.new_circles;
  return s;
}

class Resolver {
 public:
  explicit Resolver(std::size_t budget) : budget_(budget) {}

  RatLaurent conway(const std::vector<PdCrossing>& xs, std::size_t circles) {
    if (++nodes_ > budget_) fail(ErrorKind::ResourceLimit, "skein resolution exceeded its node budget");
    RatLaurent zero(kZ);
    if (xs.empty()) return circles == 1 ? RatLaurent::constant(kZ, Rational(1)) : zero;
    if (circles > 0) return zero;
    std::string key = key_of(xs);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;

    RatLaurent out = zero;
    auto wrong = first_wrong(xs);
    if (!wrong) {
      Diagram d = make_diagram(xs);
      if (d.size() == 1) out = RatLaurent::constant(kZ, Rational(1));
    } else {
      std::size_t c = *wrong;
      std::vector<PdCrossing> sw = xs;
      sw[c] = switched(xs[c]);
      Smoothing sm = smoothed(xs, c);
      RatLaurent z = RatLaurent::monomial(kZ, {1}, Rational(xs[c].sign()));
      out = conway(sw, 0) + z * conway(sm.crossings, sm.new_circles);
    }
    memo_.emplace(key, out);
    return out;
  }

 private:
  static std::string key_of(const std::vector<PdCrossing>& xs) {
    std::ostringstream k;
    for (const auto& x : xs) k << x.e[0] << ',' << x.e[1] << ',' << x.e[2] << ',' << x.e[3] << (x.over_from_d ? '+' : '-');
    return k.str();
  }

  // First crossing met from below when walking the components in order
  // from their smallest edge; none means the diagram is descending.
  static std::optional<std::size_t> first_wrong(const std::vector<PdCrossing>& xs) {
    Diagram d = make_diagram(xs);
    std::map<long, std::pair<std::size_t, bool>> enters;
    for (std::size_t c = 0; c < xs.size(); ++c) {
      enters[xs[c].under_in()] = {c, true};
      enters[xs[c].over_in()] = {c, false};
    }
    std::vector<bool> seen(xs.size(), false);
    for (const auto& comp : d.components)
      for (long e : comp) {
        auto [c, under] = enters.at(e);
        if (seen[c]) continue;
        if (under) return c;
        seen[c] = true;
      }
    return std::nullopt;
  }

  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::unordered_map<std::string, RatLaurent> memo_;
};

}  // namespace

RatLaurent skein_conway(const Diagram& d, std::size_t budget) {
  std::size_t circles = 0;
  for (const auto& c : d.components)
    if (c.empty()) ++circles;
  Resolver r(budget);
  return r.conway(d.crossings, circles);
}

}  // namespace tsw
