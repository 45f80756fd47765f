// tsw: torsion, Alexander function and SW invariants of surgered manifolds.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tsw/diagram/diagram.hpp"
#include "tsw/error.hpp"
#include "tsw/io/json_io.hpp"
#include "tsw/surgery/checks.hpp"
#include "tsw/surgery/torsion.hpp"
#include "tsw/sw/suite.hpp"
#include "tsw/sw/sw.hpp"

using namespace tsw;

namespace {

constexpr int kOk = 0, kInvalid = 2, kInternal = 3;

bool g_json = false;

std::vector<long> parse_ints(const std::string& text, const std::string& what) {
  std::vector<long> v;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stol(item, &used));
      ensure(used == item.size(), ErrorKind::InvalidInput, "bad " + what + " '" + text + "'");
    } catch (const std::logic_error&) {
      fail(ErrorKind::InvalidInput, "bad " + what + " '" + text + "'");
    }
  }
  ensure(!v.empty(), ErrorKind::InvalidInput, "empty " + what);
  return v;
}

std::string charge_text(const std::vector<long>& k) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
  out << ")";
  return out.str();
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// --charge wins over the input's "charge"; the parity base otherwise.
std::vector<long> pick_charge(const LinkInput& in, const std::string& flag) {
  std::vector<long> k = !flag.empty() ? parse_ints(flag, "charge") : in.charge ? *in.charge : parity_base(in.link);
  return validate_charge(in.link, k);
}

std::optional<GroupElement> pick_direction(const SurgeryPresentation& p, const std::string& flag) {
  if (flag.empty()) return std::nullopt;
  auto v = parse_ints(flag, "direction");
  ensure(v.size() == p.size(), ErrorKind::InvalidInput, "direction needs one exponent per meridian");
  return p.meridian_word(v);
}

int cmd_validate(const LinkInput& in, const std::string& charge) {
  ValidationReport rep = conway_table_validate(in.link, in.table);
  Json j{{"table_ok", rep.ok()}, {"failures", rep.failures}, {"notes", rep.notes}};
  bool ok = rep.ok();
  if (!charge.empty() || in.charge) {
    try {
      j["charge"] = pick_charge(in, charge);
      j["charge_ok"] = true;
    } catch (const Error& e) {
      j["charge_ok"] = false;
      j["charge_error"] = std::string(e.what());
      ok = false;
    }
  }
  j["ok"] = ok;
  if (g_json) {
    emit(j);
  } else {
    std::cout << "table: " << (rep.ok() ? "ok" : "FAILED") << "\n";
    for (const auto& f : rep.failures) std::cout << "  failure: " << f << "\n";
    for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
    if (j.contains("charge_ok"))
      std::cout << "charge: " << (j["charge_ok"].get<bool>() ? "ok" : j["charge_error"].get<std::string>()) << "\n";
  }
  return ok ? kOk : kInvalid;
}

int cmd_homology(const LinkInput& in) {
  SurgeryPresentation p = surgered_homology(in.link);
  Json mer = Json::array();
  for (const auto& g : p.meridians) mer.push_back(p.h->render(g));
  Json i0 = Json::array();
  for (std::size_t i : members(p.i0)) i0.push_back(i + 1);
  Json j{{"group", group_to_json(*p.h)},
         {"b1", p.b1},
         {"torsion_order", p.h->torsion_order()},
         {"finite_order_components", i0},
         {"meridians", mer},
         {"orientation_sign", orientation_sign(in.link)}};
  if (g_json) {
    emit(j);
    return kOk;
  }
  std::cout << "H = " << p.h->describe() << "\nb1 = " << p.b1 << "\n|Tors H| = " << p.h->torsion_order() << "\n";
  std::cout << "finite-order meridians: {" << subset_key(p.i0) << "}\n";
  for (std::size_t i = 0; i < p.meridians.size(); ++i)
    std::cout << "[" << in.link.names()[i] << "] = " << p.h->render(p.meridians[i]) << "\n";
  return kOk;
}

int cmd_euler(const LinkInput& in, long window) {
  SurgeryPresentation p = surgered_homology(in.link);
  EulerClasses eul(p);
  auto classes = eul.enumerate(p.b1 == 0 ? std::nullopt : std::optional<long>(window));
  Json arr = Json::array();
  for (const auto& k : classes) arr.push_back({{"charge", k}, {"chern", p.h->render(eul.chern(k))}});
  if (g_json) {
    emit({{"base", eul.base()}, {"window", p.b1 == 0 ? 0 : window}, {"classes", arr}});
    return kOk;
  }
  std::cout << classes.size() << " classes" << (p.b1 ? " in window " + std::to_string(window) : "") << "\n";
  for (const auto& k : classes) std::cout << "k=" << charge_text(k) << "  c = " << p.h->render(eul.chern(k)) << "\n";
  return kOk;
}

int cmd_tau(const LinkInput& in, const std::string& charge, const std::string& orientation) {
  ensure(orientation == "link" || orientation == "canonical", ErrorKind::InvalidInput,
         "--orientation is 'link' or 'canonical'");
  SurgeryPresentation p = surgered_homology(in.link);
  auto k = pick_charge(in, charge);
  QHFraction t = tau(p, in.table, k);
  int sign = orientation == "canonical" ? orientation_sign(in.link) : 1;
  if (sign < 0) t = -t;
  if (g_json) {
    emit({{"charge", k}, {"orientation", orientation}, {"sign", sign}, {"group", group_to_json(*p.h)},
          {"tau", fraction_to_json(t)}});
    return kOk;
  }
  std::cout << "tau(k=" << charge_text(k) << ") = " << t.to_string() << "\n";
  return kOk;
}

int cmd_delta(const LinkInput& in, const std::string& charge) {
  SurgeryPresentation p = surgered_homology(in.link);
  auto k = pick_charge(in, charge);
  QHFraction d = delta(p, in.table, k);
  if (g_json) {
    emit({{"charge", k}, {"group", group_to_json(*d.group())}, {"delta", fraction_to_json(d)}});
    return kOk;
  }
  std::cout << "delta(k=" << charge_text(k) << ") = " << d.to_string() << "\n";
  return kOk;
}

int cmd_sw(const LinkInput& in, const std::string& charge, bool all, long window, const std::string& direction) {
  SurgeryPresentation p = surgered_homology(in.link);
  auto dir = pick_direction(p, direction);
  if (all) {
    SwTable t = sw_table(p, in.table, window, dir);
    if (g_json) {
      emit(sw_table_to_json(t));
      return kOk;
    }
    for (const auto& e : t.entries) std::cout << "k=" << charge_text(e.charge) << "  SW = " << e.value.get_str() << "\n";
    std::cout << "nonzero classes: " << t.support_size() << " of " << t.entries.size() << "\n";
    if (!t.direction.empty()) std::cout << "direction t = " << t.direction << "\n";
    std::cout << "values are determined up to one global sign\n";
    return kOk;
  }
  auto k = pick_charge(in, charge);
  Integer v = sw_value(p, in.table, k, dir);
  if (g_json) {
    emit({{"charge", k}, {"value", rational_to_json(Rational(v))}, {"global_sign_undetermined", true}});
    return kOk;
  }
  std::cout << "SW(k=" << charge_text(k) << ") = " << v.get_str() << " (up to a global sign)\n";
  return kOk;
}

int cmd_selftest(const std::vector<std::string>& files, const std::string& charge) {
  bool table_bad = false, check_bad = false;
  Json all = Json::array();
  for (const auto& f : files) {
    std::vector<CheckReport> reps;
    try {
      LinkInput in = load_input(f);
      SuiteOptions opt;
      if (!charge.empty() || in.charge) opt.charges.push_back(pick_charge(in, charge));
      reps = check_suite(in.link, in.table, opt);
    } catch (const Error& e) {
      reps.push_back({"load", false, std::string(e.what())});
    }
    for (const auto& r : reps) {
      if (!r.ok && (r.name == "table" || r.name == "load")) table_bad = true;
      else if (!r.ok) check_bad = true;
      if (g_json) {
        all.push_back({{"file", f}, {"check", r.name}, {"ok", r.ok}, {"detail", r.detail}});
      } else {
        std::cout << (r.ok ? "PASS " : "FAIL ") << f << " " << r.name;
        if (!r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << "\n";
      }
    }
  }
  if (g_json) emit(all);
  return table_bad ? kInvalid : check_bad ? kInternal : kOk;
}

int cmd_table(const LinkInput& in) {
  Json j = input_to_json(in);
  if (g_json) {
    emit(j);
    return kOk;
  }
  for (const auto& [s, p] : in.table.entries()) std::cout << "{" << subset_key(s) << "}: " << p.to_string() << "\n";
  for (Subset s : in.table.sign_ambiguous()) std::cout << "sign of {" << subset_key(s) << "} is not determined\n";
  return kOk;
}

int cmd_builtin(const std::string& name, const std::string& framings) {
  if (name.empty()) {
    for (const auto& b : builtin_links()) std::cout << b.name << "  " << b.pd << "\n";
    return kOk;
  }
  const BuiltinLink& b = builtin_link(name);
  IntMatrix a = b.link.linking_matrix();
  if (!framings.empty()) {
    auto f = parse_ints(framings, "framings");
    ensure(f.size() == a.rows(), ErrorKind::InvalidInput, "one framing per component");
    for (std::size_t i = 0; i < f.size(); ++i) a(i, i) = f[i];
  }
  emit(input_to_json({FramedLink(b.link.names(), a), b.table, std::nullopt, std::nullopt}));
  return kOk;
}

int report_error(ErrorKind kind, const std::string& what) {
  if (g_json) emit({{"error", {{"kind", to_string(kind)}, {"message", what}}}});
  else std::cerr << "error: " << to_string(kind) << ": " << what << "\n";
  return is_internal(kind) ? kInternal : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion, Alexander function and Seiberg-Witten invariants of surgered manifolds"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_json, "machine-readable output");

  std::string file, charge, orientation = "link", direction, name, framings;
  std::vector<std::string> files;
  long window = 3;
  bool all = false;

  auto with_file = [&](const char* cmd, const char* help) {
    auto* c = app.add_subcommand(cmd, help);
    c->add_option("input", file, "input JSON")->required();
    return c;
  };
  auto* validate = with_file("validate", "check the Conway table and the charge");
  validate->add_option("--charge", charge, "comma-separated charge");
  auto* homology = with_file("homology", "H_1 of the surgered manifold");
  auto* euler = with_file("euler", "Euler classes and their Chern classes");
  euler->add_option("--window", window, "bound on free coordinates (b1 > 0)");
  auto* tau_cmd = with_file("tau", "the torsion function");
  tau_cmd->add_option("--charge", charge, "comma-separated charge");
  tau_cmd->add_option("--orientation", orientation, "link or canonical");
  auto* delta_cmd = with_file("delta", "the Alexander function");
  delta_cmd->add_option("--charge", charge, "comma-separated charge");
  auto* sw = with_file("sw", "Seiberg-Witten invariant");
  sw->add_option("--charge", charge, "comma-separated charge");
  sw->add_flag("--all", all, "every class in the window");
  sw->add_option("--window", window, "bound on free coordinates");
  sw->add_option("--direction", direction, "meridian exponents of t when b1 = 1");
  auto* table = with_file("table", "the Conway table in input form");
  auto* selftest = app.add_subcommand("selftest", "identity suite on each input");
  selftest->add_option("inputs", files, "input JSON files")->required();
  selftest->add_option("--charge", charge, "comma-separated charge");
  auto* builtin = app.add_subcommand("builtin", "list builtin links or print one as input JSON");
  builtin->add_option("name", name, "builtin link");
  builtin->add_option("--framings", framings, "comma-separated framings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }

  try {
    if (selftest->parsed()) return cmd_selftest(files, charge);
    if (builtin->parsed()) return cmd_builtin(name, framings);
    LinkInput in = load_input(file);
    if (validate->parsed()) return cmd_validate(in, charge);
    if (homology->parsed()) return cmd_homology(in);
    if (euler->parsed()) return cmd_euler(in, window);
    if (tau_cmd->parsed()) return cmd_tau(in, charge, orientation);
    if (delta_cmd->parsed()) return cmd_delta(in, charge);
    if (sw->parsed()) return cmd_sw(in, charge, all, window, direction);
    if (table->parsed()) return cmd_table(in);
  } catch (const Error& e) {
    return report_error(e.kind(), e.message());
  } catch (const std::exception& e) {
    return report_error(ErrorKind::Assertion, e.what());
  }
  return kInternal;
}
