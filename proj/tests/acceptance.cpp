// One line per acceptance criterion. Exit status is nonzero when a criterion
// fails for a reason other than a recorded deviation (see README).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "tsw/error.hpp"
#include "tsw/surgery/checks.hpp"
#include "tsw/surgery/torsion.hpp"
#include "tsw/sw/sw.hpp"

using namespace tsw;
using namespace tsw::test;

namespace {

struct Outcome {
  bool ok = true;
  bool deviation = false;  // known false statement, reported but not fatal
  std::string detail;
};

int hard_failures = 0;

void report(int n, const std::string& what, const std::function<Outcome()>& f) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    o = f();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream line;
  line << (o.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
  if (!o.detail.empty()) line << " [" << o.detail << "]";
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.2fs)", sec);
  line << buf;
  if (!o.ok && o.deviation) line << " (recorded deviation)";
  std::cout << line.str() << std::endl;
  if (!o.ok && !o.deviation) ++hard_failures;
}

std::optional<GroupElement> free_direction(const SurgeryPresentation& p) {
  if (p.b1 != 1) return std::nullopt;
  return p.h->from_coordinates({1}, std::vector<long>(p.h->invariant_factors().size(), 0));
}

std::vector<long> random_v(std::size_t m, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  std::vector<long> v(m);
  for (auto& x : v) x = d(rng);
  return v;
}

Outcome borromean_basic() {
  Outcome o;
  std::ostringstream s;
  for (long f : {0, 1, -1, 2}) {
    auto t0 = std::chrono::steady_clock::now();
    auto c = framed("borromean", {f, 0, 0});
    auto p = surgered_homology(c.link);
    SwTable t = sw_table(p, c.table, 2);
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool unit = true;
    for (const auto& e : t.entries)
      if (e.value != 0 && abs(e.value) != 1) unit = false;
    if (t.support_size() != 1 || !unit || sec >= 1.0) o.ok = false;
    s << "f=" << f << ":" << t.support_size() << "/" << t.entries.size() << " ";
  }
  o.detail = s.str() + "nonzero classes";
  return o;
}

Outcome trefoil_values() {
  auto c = framed("trefoil", {0});
  auto p = surgered_homology(c.link);
  std::vector<Integer> got;
  for (long k : {1, 3, 5, 7}) got.push_back(sw_value(p, c.table, {k}));
  Integer s = got[0];
  Outcome o;
  o.ok = abs(s) == 1 && got[1] * s == 1 && got[2] * s == 2 && got[3] * s == 3;
  std::ostringstream d;
  d << "k=1,3,5,7 -> " << got[0] << "," << got[1] << "," << got[2] << "," << got[3];
  o.detail = d.str();
  return o;
}

Outcome cross_checks() {
  std::mt19937 rng(101);
  int n = 0;
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& name : corpus_names()) {
    for (int trial = 0; trial < 2; ++trial) {
      auto c = framed(name, random_framings(builtin_link(name).link.size(), rng));
      auto p = surgered_homology(c.link);
      for (int j = 0; j < 3; ++j) {
        auto r = cross_check(p, c.table, random_charge(c.link, rng));
        ++n;
        if (!r.ok) {
          o.ok = false;
          o.detail = name + ": " + r.detail;
        }
      }
    }
  }
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (sec >= 60) o.ok = false;
  if (o.ok) o.detail = std::to_string(n) + " cases";
  return o;
}

Outcome dualities() {
  std::mt19937 rng(102);
  Outcome o;
  int n = 0;
  for (const auto& name : corpus_names()) {
    for (int trial = 0; trial < 3; ++trial) {
      auto c = framed(name, random_framings(builtin_link(name).link.size(), rng));
      auto p = surgered_homology(c.link);
      auto k = random_charge(c.link, rng);
      auto a = duality_check(p, c.table, k);
      auto b = torsion_duality_check(p, c.table, k, free_direction(p));
      n += 2;
      if (!a.ok || !b.ok) {
        o.ok = false;
        o.detail = name + ": " + a.detail + b.detail;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " checks";
  return o;
}

Outcome equivariance() {
  std::mt19937 rng(103);
  Outcome o;
  int n = 0;
  for (const auto& name : corpus_names()) {
    auto c = framed(name, random_framings(builtin_link(name).link.size(), rng));
    auto p = surgered_homology(c.link);
    auto k = random_charge(c.link, rng);
    for (int j = 0; j < 20; ++j) {
      auto r = equivariance_check(p, c.table, k, random_v(k.size(), rng));
      ++n;
      if (!r.ok) {
        o.ok = false;
        o.detail = name + ": " + r.detail;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " shifts";
  return o;
}

// b1 >= 2: integral polynomial. b1 = 1: (t - 1)^2 tau integral. b1 = 0: the
// claim that |Tors| tau is integral; lens spaces refute it.
Outcome integrality() {
  std::mt19937 rng(104);
  Outcome o;
  bool upper = true;
  int n = 0;
  for (auto [name, f] : std::vector<std::pair<std::string, std::vector<long>>>{
           {"unknot", {0}}, {"trefoil", {0}}, {"figure8", {0}}, {"whitehead", {0, 0}}, {"whitehead", {3, 0}},
           {"torus24", {2, 2}}, {"torus24", {0, 0}}, {"hopf", {0, 0}}, {"borromean", {0, 0, 0}},
           {"borromean", {1, 0, 0}}, {"borromean", {2, 3, 0}}}) {
    auto c = framed(name, f);
    auto p = surgered_homology(c.link);
    if (p.b1 == 0) continue;
    for (int trial = 0; trial < 4; ++trial) {
      QHFraction t = tau(p, c.table, random_charge(c.link, rng));
      ++n;
      if (p.b1 >= 2) {
        if (!t.is_polynomial() || !t.as_polynomial().is_integral()) upper = false;
      } else {
        GroupElement h = *free_direction(p);
        if (!t.cleared({h, h}).is_integral()) upper = false;
      }
    }
  }
  auto lens = framed("unknot", {2});
  auto lp = surgered_homology(lens.link);
  GroupAlgebraElement a = tau(lp, lens.table, {1}).as_polynomial();
  bool lower = a.scaled(Rational(2)).is_integral();
  o.ok = upper && lower;
  o.deviation = upper && !lower;
  std::ostringstream d;
  d << "b1>=1 clauses " << (upper ? "hold" : "FAIL") << " on " << n << " inputs; b1=0 clause false: L(2,1) tau = "
    << a.to_string() << ", times |Tors| = 2 is not integral";
  o.detail = d.str();
  return o;
}

Outcome split_paths() {
  Outcome o;
  int n = 0;
  for (auto [name, f] : std::vector<std::pair<std::string, std::vector<long>>>{{"whitehead", {0, 0}},
                                                                               {"whitehead", {2, 0}},
                                                                               {"whitehead", {-1, 3}},
                                                                               {"borromean", {0, 0, 0}},
                                                                               {"borromean", {1, 0, 0}},
                                                                               {"borromean", {2, -1, 0}},
                                                                               {"unknot", {0}},
                                                                               {"trefoil", {0}}}) {
    auto c = framed(name, f);
    auto p = surgered_homology(c.link);
    EulerClasses e(p);
    auto charges = p.b1 == 0 ? e.enumerate() : e.enumerate(1);
    for (const auto& k : charges) {
      auto r = fast_path_check(p, c.table, k);
      ++n;
      if (!r.ok) {
        o.ok = false;
        o.detail = name + ": " + r.detail;
      }
      if (p.b1 == 0) continue;
      Integer a = sw_value(p, c.table, k), b = sw_split_value(p, c.table, k);
      if (a != (c.link.size() % 2 == 0 ? -b : b)) {
        o.ok = false;
        o.detail = name + ": split SW disagrees";
      }
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " classes";
  return o;
}

Outcome lens_spaces() {
  Outcome o;
  int n = 0;
  for (long p = 2; p <= 7; ++p) {
    auto c = framed("unknot", {p});
    auto sp = surgered_homology(c.link);
    EulerClasses e(sp);
    for (const auto& k : e.enumerate()) {
      for (const auto& chi : sp.h->torsion_characters()) {
        long r = chi.value(sp.meridians[0]) % p;
        if (r == 0) continue;
        long ex = (((k[0] + 1) / 2 * r) % p + p) % p;
        Cyclotomic d = Cyclotomic::root_of_unity(p, r) - Cyclotomic(p, Rational(1));
        Cyclotomic v = Cyclotomic::root_of_unity(p, ex) * Rational(-1) * (d * d).inverse();
        ++n;
        if (!(tau_character(sp, c.table, k, chi) == CycFraction(p, CycLaurent::constant({}, v)))) {
          o.ok = false;
          o.detail = "p=" + std::to_string(p) + " closed form mismatch";
        }
      }
      if (!cross_check(sp, c.table, k).ok) {
        o.ok = false;
        o.detail = "p=" + std::to_string(p) + " reassembly mismatch";
      }
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " character values";
  return o;
}

Case stabilize(const Case& c, long f) {
  std::size_t m = c.link.size();
  Case s{c.link.with_split_component("u", f), ConwayTable(m + 1)};
  for (const auto& [sub, poly] : c.table.entries()) {
    if (cardinality(sub) == 1)
      s.table.set_knot(members(sub)[0], poly);
    else
      s.table.set_poly(sub, poly);
  }
  s.table.set_knot(m, RatLaurent::constant({"t"}, Rational(1)));
  for (Subset sub = 1; sub < (Subset(1) << (m + 1)); ++sub)
    if ((sub >> m) & 1 && cardinality(sub) >= 2) s.table.set_poly(sub, RatLaurent(subset_variables(sub)));
  return s;
}

// Adding a split +-1 framed unknot leaves the manifold unchanged: T must agree
// class by class once both sides carry their orientation signs.
Outcome stabilization() {
  Outcome o;
  int inputs = 0;
  for (auto [name, f] : std::vector<std::pair<std::string, std::vector<long>>>{{"trefoil", {0}},
                                                                               {"unknot", {3}},
                                                                               {"hopf", {1, 2}},
                                                                               {"whitehead", {0, 0}},
                                                                               {"borromean", {0, 0, 0}},
                                                                               {"figure8", {-2}}}) {
    for (long e : {1, -1}) {
      auto c = framed(name, f);
      auto s = stabilize(c, e);
      auto p = surgered_homology(c.link), ps = surgered_homology(s.link);
      EulerClasses ec(p);
      auto charges = p.b1 == 0 ? ec.enumerate() : ec.enumerate(2);
      int os = orientation_sign(c.link), oss = orientation_sign(s.link);
      std::vector<Rational> a, b;
      bool signs = true;
      for (const auto& k : charges) {
        std::vector<long> ks(k);
        ks.push_back(parity_base(s.link).back());
        std::optional<GroupElement> d, ds;
        if (p.b1 == 1) {
          d = default_direction(p);
          ds = default_direction(ps);
        }
        Rational x = torsion_function(p, c.table, k, d), y = torsion_function(ps, s.table, ks, ds);
        a.push_back(abs(x));
        b.push_back(abs(y));
        if (x * os != y * oss) signs = false;
      }
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      ++inputs;
      if (a != b || !signs) {
        o.ok = false;
        o.detail += name + (e > 0 ? "+1" : "-1") + (a != b ? " values" : " sign") + " ";
      }
    }
  }
  if (o.ok) o.detail = std::to_string(inputs) + " stabilizations";
  return o;
}

Outcome mutations() {
  std::mt19937 rng(105);
  auto c = framed("borromean", {0, 0, 0});
  auto p = surgered_homology(c.link);
  std::uniform_int_distribution<long> ex(-2, 2), mag(1, 3);
  int caught = 0, total = 0;
  for (int trial = 0; trial < 24; ++trial) {
    ConwayTable bad = c.table;
    Subset s = static_cast<Subset>(1 + rng() % 7);
    std::vector<long> e(cardinality(s));
    for (auto& x : e) x = ex(rng);
    Rational old = bad.entry(s).coefficient(e);
    bad.set_coefficient(s, e, old + Rational(mag(rng) * (rng() % 2 ? 1 : -1)));
    ++total;
    if (!conway_table_validate(c.link, bad).ok()) {
      ++caught;
      continue;
    }
    try {
      tau(p, bad, {1, 1, 1});
    } catch (const Error&) {
      ++caught;
    }
  }
  Outcome o;
  o.ok = caught == total && total >= 20;
  o.detail = std::to_string(caught) + "/" + std::to_string(total) + " caught";
  return o;
}

}  // namespace

int main() {
  report(1, "Borromean (f,0,0) has one basic class with value +-1", borromean_basic);
  report(2, "trefoil framing 0 gives (1,1,2,3) up to sign", trefoil_values);
  report(3, "per-character reassembly matches tau on the builtins", cross_checks);
  report(4, "charge conjugation duality for tau and T", dualities);
  report(5, "equivariance under 20 random shifts per link", equivariance);
  report(6, "integrality ladder", integrality);
  report(7, "split fast path and split SW agree with the general path", split_paths);
  report(8, "lens spaces p=2..7 per character and reassembly", lens_spaces);
  report(9, "stabilization by a split +-1 unknot", stabilization);
  report(10, "random single-coefficient mutations are caught", mutations);
  return hard_failures == 0 ? 0 : 1;
}
