#pragma once

#include <random>
#include <vector>

#include "tsw/diagram/diagram.hpp"
#include "tsw/surgery/presentation.hpp"

namespace tsw::test {

struct Case {
  FramedLink link;
  ConwayTable table;
};

inline Case framed(const std::string& name, const std::vector<long>& f) {
  const BuiltinLink& b = builtin_link(name);
  IntMatrix a = b.link.linking_matrix();
  for (std::size_t i = 0; i < f.size(); ++i) a(i, i) = f[i];
  return {FramedLink(b.link.names(), a), b.table};
}

inline RatLaurent one_var(const std::vector<std::pair<long, long>>& terms, const std::string& var = "t") {
  RatLaurent p(std::vector<std::string>{var});
  for (const auto& [e, c] : terms) p.add({e}, Rational(c));
  return p;
}

// A charge of the right parity with entries in [-r, r] shifted to parity.
inline std::vector<long> random_charge(const FramedLink& l, std::mt19937& rng, long r = 4) {
  auto k = parity_base(l);
  std::uniform_int_distribution<long> d(-r, r);
  for (auto& x : k) x += 2 * d(rng);
  return k;
}

inline std::vector<long> random_framings(std::size_t m, std::mt19937& rng, long r = 3) {
  std::uniform_int_distribution<long> d(-r, r);
  std::vector<long> f(m);
  for (auto& x : f) x = d(rng);
  return f;
}

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{"unknot", "hopf", "trefoil", "figure8", "whitehead", "torus24", "borromean"};
  return names;
}

}  // namespace tsw::test
