#include <functional>
#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "tsw/diagram/diagram.hpp"
#include "tsw/error.hpp"

namespace tsw {

namespace {

struct Slot {
  std::size_t crossing;
  int pos;
};

// Where each edge enters (head) and leaves (tail) a crossing.
struct EdgeEnds {
  std::map<long, Slot> head, tail;
};

EdgeEnds edge_ends(const std::vector<PdCrossing>& xs) {
  EdgeEnds ends;
  auto put = [](std::map<long, Slot>& m, long e, Slot s, const char* what) {
    if (!m.emplace(e, s).second)
      fail(ErrorKind::MalformedPD, "edge " + std::to_string(e) + " " + what + " crossing " +
                                       std::to_string(s.crossing + 1) + " a second time");
  };
  for (std::size_t c = 0; c < xs.size(); ++c) {
    const auto& x = xs[c];
    int in_over = x.over_from_d ? 3 : 1;
    put(ends.head, x.e[0], {c, 0}, "enters");
    put(ends.tail, x.e[2], {c, 2}, "leaves");
    put(ends.head, x.e[in_over], {c, in_over}, "enters");
    put(ends.tail, x.e[4 - in_over], {c, 4 - in_over}, "leaves");
  }
  for (const auto& [e, s] : ends.head)
    if (!ends.tail.count(e)) fail(ErrorKind::MalformedPD, "edge " + std::to_string(e) + " never leaves a crossing");
  for (const auto& [e, s] : ends.tail)
    if (!ends.head.count(e)) fail(ErrorKind::MalformedPD, "edge " + std::to_string(e) + " never enters a crossing");
  return ends;
}

class Scanner {
 public:
  explicit Scanner(const std::string& s) : s_(s) {}

  void skip() {
    while (i_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[i_])) || s_[i_] == ',')) ++i_;
  }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(const std::string& tok) {
    skip();
    if (s_.compare(i_, tok.size(), tok) != 0) return false;
    i_ += tok.size();
    return true;
  }
  void expect(char c) {
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++i_;
  }
  long integer() {
    skip();
    std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_ || !std::isdigit(static_cast<unsigned char>(s_[i_ - 1]))) error("expected an edge label");
    try {
      return std::stol(s_.substr(start, i_ - start));
    } catch (const std::out_of_range&) {
      error("edge label out of range");
    }
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::MalformedPD, what + " at offset " + std::to_string(i_));
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

// Over-strand directions. 0 = unknown, 1 = enters, -1 = leaves.
std::vector<bool> orient(const std::vector<std::array<long, 4>>& raw) {
  std::map<long, std::vector<Slot>> occ;
  for (std::size_t c = 0; c < raw.size(); ++c)
    for (int p = 0; p < 4; ++p) occ[raw[c][p]].push_back({c, p});
  for (const auto& [e, v] : occ)
    if (v.size() != 2)
      fail(ErrorKind::MalformedPD, "edge " + std::to_string(e) + " appears " + std::to_string(v.size()) +
                                       " times (first in crossing " + std::to_string(v[0].crossing + 1) + ")");

  std::vector<std::array<int, 4>> role(raw.size(), {1, 0, -1, 0});
  auto set = [&](Slot s, int r) {
    int& cur = role[s.crossing][s.pos];
    if (cur == r) return false;
    if (cur != 0)
      fail(ErrorKind::MalformedPD, "edge " + std::to_string(raw[s.crossing][s.pos]) +
                                       " is oriented inconsistently at crossing " + std::to_string(s.crossing + 1));
    cur = r;
    return true;
  };
  auto propagate = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [e, v] : occ) {
        int a = role[v[0].crossing][v[0].pos], b = role[v[1].crossing][v[1].pos];
        if (a != 0) changed |= set(v[1], -a);
        if (b != 0) changed |= set(v[0], -b);
      }
      for (std::size_t c = 0; c < raw.size(); ++c) {
        if (role[c][1] != 0) changed |= set({c, 3}, -role[c][1]);
        if (role[c][3] != 0) changed |= set({c, 1}, -role[c][3]);
      }
    }
  };
  propagate();
  for (std::size_t c = 0; c < raw.size(); ++c) {
    if (role[c][1] != 0) continue;
    long b = raw[c][1], d = raw[c][3];
    bool from_d = b - d == 1 || d - b > 1;
    set({c, 3}, from_d ? 1 : -1);
    propagate();
  }
  std::vector<bool> from_d(raw.size());
  for (std::size_t c = 0; c < raw.size(); ++c) from_d[c] = role[c][3] == 1;
  return from_d;
}

}  // namespace

long Diagram::linking_number(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  long twice = 0;
  for (const auto& x : crossings) {
    std::size_t a = component_of.at(x.under_in()), b = component_of.at(x.over_in());
    if ((a == i && b == j) || (a == j && b == i)) twice += x.sign();
  }
  return twice / 2;
}

IntMatrix Diagram::linking_matrix() const {
  IntMatrix a(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) a(i, j) = linking_number(i, j);
  return a;
}

Diagram make_diagram(std::vector<PdCrossing> crossings, std::size_t free_circles,
                     const std::optional<std::vector<std::optional<long>>>& seeds) {
  Diagram d;
  d.crossings = std::move(crossings);
  EdgeEnds ends = edge_ends(d.crossings);

  auto trace = [&](long start) {
    std::vector<long> edges;
    long e = start;
    do {
      if (d.component_of.count(e))
        fail(ErrorKind::Assertion, "component seeds share edge " + std::to_string(e));
      d.component_of[e] = d.components.size();
      edges.push_back(e);
      Slot h = ends.head.at(e);
      e = d.crossings[h.crossing].e[(h.pos + 2) % 4];
    } while (e != start);
    d.components.push_back(edges);
  };

  if (seeds) {
    for (const auto& s : *seeds) {
      if (!s) {
        d.components.emplace_back();
        continue;
      }
      ensure(ends.head.count(*s) != 0, ErrorKind::Assertion, "component seed is not an edge");
      trace(*s);
    }
    ensure(d.component_of.size() == ends.head.size(), ErrorKind::Assertion, "component seeds miss some edges");
    return d;
  }
  for (const auto& [e, s] : ends.head)
    if (!d.component_of.count(e)) trace(e);
  for (std::size_t i = 0; i < free_circles; ++i) d.components.emplace_back();
  return d;
}

Diagram parse_pd(const std::string& text) {
  Scanner in(text);
  in.accept("PD");
  bool bracketed = in.peek() == '[';
  if (bracketed) in.expect('[');
  std::vector<std::array<long, 4>> raw;
  std::size_t circles = 0;
  while (!in.done() && !(bracketed && in.peek() == ']')) {
    if (in.accept("O")) {
      ++circles;
      continue;
    }
    if (!in.accept("X")) in.error("expected 'X' or 'O'");
    char open = in.peek();
    if (open != '(' && open != '[') in.error("expected '(' or '['");
    in.expect(open);
    std::array<long, 4> x{};
    for (auto& v : x) v = in.integer();
    in.expect(open == '(' ? ')' : ']');
    raw.push_back(x);
  }
  if (bracketed) in.expect(']');
  if (!in.done()) in.error("trailing input");
  if (raw.empty() && circles == 0) fail(ErrorKind::MalformedPD, "empty PD code");

  auto from_d = orient(raw);
  std::vector<PdCrossing> xs;
  for (std::size_t c = 0; c < raw.size(); ++c) xs.push_back({raw[c], from_d[c]});
  Diagram d = make_diagram(std::move(xs), circles);
  ensure(d.size() <= kMaxComponents, ErrorKind::MalformedPD, "too many components");
  return d;
}

std::string to_pd(const Diagram& d) {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : d.crossings) {
    out << (first ? "" : " ") << "X(" << x.e[0] << "," << x.e[1] << "," << x.e[2] << "," << x.e[3] << ")";
    first = false;
  }
  for (const auto& c : d.components)
    if (c.empty()) {
      out << (first ? "" : " ") << "O";
      first = false;
    }
  return out.str();
}

Diagram sub_diagram(const Diagram& d, Subset keep) {
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
  auto kept = [&](long e) { return contains(keep, d.component_of.at(e)); };

  std::vector<PdCrossing> xs;
  for (const auto& x : d.crossings) {
    bool u = kept(x.under_in()), o = kept(x.over_in());
    if (u && o) xs.push_back(x);
    else if (u) unite(x.under_in(), x.under_out());
    else if (o) unite(x.over_in(), x.over_out());
  }
  std::set<long> alive;
  for (auto& x : xs)
    for (auto& e : x.e) {
      e = find(e);
      alive.insert(e);
    }
  std::vector<std::optional<long>> seeds;
  for (std::size_t i : members(keep)) {
    if (i >= d.size()) break;
    if (d.components[i].empty()) {
      seeds.push_back(std::nullopt);
      continue;
    }
    long s = find(d.components[i].front());
    seeds.push_back(alive.count(s) ? std::optional<long>(s) : std::nullopt);
  }
  return make_diagram(std::move(xs), 0, seeds);
}

}  // namespace tsw
