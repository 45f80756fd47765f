#include "tsw/sw/suite.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "tsw/error.hpp"
#include "tsw/surgery/torsion.hpp"
#include "tsw/sw/sw.hpp"

namespace tsw {

namespace {

std::string charge_string(const std::vector<long>& k) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
  out << ")";
  return out.str();
}

CheckReport guarded(const std::string& name, const std::function<CheckReport()>& f) {
  try {
    CheckReport r = f();
    r.name = name;
    return r;
  } catch (const Error& e) {
    return {name, false, std::string(to_string(e.kind())) + ": " + e.what()};
  }
}

}  // namespace

std::vector<CheckReport> check_suite(const FramedLink& l, const ConwayTable& table, const SuiteOptions& opt) {
  std::vector<CheckReport> out;
  ValidationReport v = conway_table_validate(l, table);
  std::string why;
  for (const auto& f : v.failures) why += (why.empty() ? "" : "; ") + f;
  out.push_back({"table", v.ok(), why});
  if (!v.ok()) return out;

  SurgeryPresentation p = surgered_homology(l);
  EulerClasses eul(p);
  std::vector<std::vector<long>> charges = opt.charges;
  if (charges.empty()) {
    auto all = eul.enumerate(p.b1 == 0 ? std::nullopt : std::optional<long>(1));
    for (std::size_t i = 0; i < all.size() && i < 4; ++i) charges.push_back(all[i]);
  }
  std::mt19937 rng(opt.seed);
  std::uniform_int_distribution<long> shift(-2, 2);
  std::optional<GroupElement> dir;
  if (p.b1 == 1) dir = p.h->from_coordinates({1}, std::vector<long>(p.h->invariant_factors().size(), 0));
  bool split = l.algebraically_split();

  for (const auto& k : charges) {
    std::string at = " k=" + charge_string(k);
    auto add = [&](const std::string& name, const std::function<CheckReport()>& f) {
      out.push_back(guarded(name + at, f));
    };
    add("charge", [&] {
      validate_charge(l, k);
      return CheckReport{};
    });
    if (!out.back().ok) continue;
    add("integrality", [&] {
      assert_integrality(p, tau(p, table, k));
      return CheckReport{};
    });
    add("duality", [&] { return duality_check(p, table, k); });
    add("cross_check", [&] { return cross_check(p, table, k); });
    for (std::size_t s = 0; s < opt.shifts; ++s) {
      std::vector<long> vec(k.size());
      for (auto& x : vec) x = shift(rng);
      add("equivariance", [&] { return equivariance_check(p, table, k, vec); });
    }
    add("torsion_duality", [&] { return torsion_duality_check(p, table, k, dir); });
    if (p.b1 >= 1) add("projection", [&] { return projection_check(p, table, k); });
    if (split) add("fast_path", [&] { return fast_path_check(p, table, k); });
    if (split && p.b1 >= 1)
      add("split_sw", [&] {
        Integer a = sw_value(p, table, k), b = sw_split_value(p, table, k);
        if (p.size() % 2 == 0) b = -b;
        if (a == b) return CheckReport{};
        return CheckReport{"", false, "series " + a.get_str() + " vs closed form " + b.get_str()};
      });
  }
  return out;
}

}  // namespace tsw
