#include "welded/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "welded/error.hpp"

namespace welded {

namespace {

template <class T>
const T* find_by_id(const std::vector<T>& v, std::string_view id) {
  for (const auto& x : v) {
    if (x.id == id) return &x;
  }
  return nullptr;
}

template <class T>
T* find_by_id(std::vector<T>& v, std::string_view id) {
  for (auto& x : v) {
    if (x.id == id) return &x;
  }
  return nullptr;
}

}  // namespace

const Arc* WeldedDiagram::find_arc(std::string_view id) const { return find_by_id(arcs, id); }
Arc* WeldedDiagram::find_arc(std::string_view id) { return find_by_id(arcs, id); }
const Crossing* WeldedDiagram::find_crossing(std::string_view id) const { return find_by_id(crossings, id); }
Crossing* WeldedDiagram::find_crossing(std::string_view id) { return find_by_id(crossings, id); }
const Point* WeldedDiagram::find_point(std::string_view id) const { return find_by_id(points, id); }
Point* WeldedDiagram::find_point(std::string_view id) { return find_by_id(points, id); }

int boundary_index(std::string_view anchor) {
  if (anchor.size() < 2 || anchor[0] != 'b') return 0;
  int v = 0;
  for (std::size_t k = 1; k < anchor.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(anchor[k]))) return 0;
    v = v * 10 + (anchor[k] - '0');
    if (v > 1000000) return 0;
  }
  return v;
}

std::string boundary_anchor(int index) { return "b" + std::to_string(index); }

// ---------------------------------------------------------------------------
// Line format

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    if (line[k] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[k]))) {
      ++k;
      continue;
    }
    const std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k])) && line[k] != '#') ++k;
    out.push_back({line.substr(start, k - start), static_cast<int>(start) + 1});
  }
  return out;
}

class LineReader {
 public:
  LineReader(std::vector<Token> tokens, int line) : tokens_(std::move(tokens)), line_(line) {}

  [[noreturn]] void fail(const std::string& what, int column) const { throw ParseError(what, line_, column); }

  const Token& at(std::size_t k, const char* what) const {
    if (k >= tokens_.size()) {
      const int col = tokens_.empty() ? 1 : tokens_.back().column + static_cast<int>(tokens_.back().text.size());
      fail(std::string("missing ") + what, col);
    }
    return tokens_[k];
  }

  /// Value of `key=value` tokens from position `first` on.
  std::string value(std::size_t first, const std::string& key) const {
    for (std::size_t k = first; k < tokens_.size(); ++k) {
      const auto& t = tokens_[k].text;
      if (t.size() > key.size() && t.compare(0, key.size(), key) == 0 && t[key.size()] == '=') {
        std::string v = t.substr(key.size() + 1);
        if (v.empty()) fail("empty value for '" + key + "'", tokens_[k].column);
        return v;
      }
    }
    const int col = tokens_.back().column + static_cast<int>(tokens_.back().text.size());
    fail("missing '" + key + "='", col);
  }

  void expect_keys(std::size_t first, std::initializer_list<const char*> keys) const {
    for (std::size_t k = first; k < tokens_.size(); ++k) {
      const auto& t = tokens_[k].text;
      const auto eq = t.find('=');
      const std::string key = t.substr(0, eq);
      if (eq == std::string::npos ||
          std::none_of(keys.begin(), keys.end(), [&](const char* s) { return key == s; })) {
        fail("unexpected token '" + t + "'", tokens_[k].column);
      }
    }
  }

  int to_int(const std::string& s, int column) const {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) fail("expected an integer, got '" + s + "'", column);
      return v;
    } catch (const std::logic_error&) {
      fail("expected an integer, got '" + s + "'", column);
    }
  }

  std::size_t size() const { return tokens_.size(); }

 private:
  std::vector<Token> tokens_;
  int line_;
};

}  // namespace

WeldedDiagram parse_diagram(std::string_view text, bool check) {
  WeldedDiagram d;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    LineReader r(tokens, lineno);
    const std::string kw = tokens[0].text;
    if (!header) {
      if (kw != "tangle") r.fail("expected 'tangle <name> boundary=2n'", tokens[0].column);
      d.name = r.at(1, "tangle name").text;
      r.expect_keys(2, {"boundary"});
      d.boundary = r.to_int(r.value(2, "boundary"), r.at(2, "boundary=").column);
      header = true;
      continue;
    }
    if (kw == "color") {
      const std::string id = r.at(1, "arc id").text;
      const Token& c = r.at(2, "color index");
      if (r.size() > 3) r.fail("unexpected token '" + tokens[3].text + "'", tokens[3].column);
      std::string v = c.text;
      if (!v.empty() && v[0] == 't') v = v.size() == 1 ? "1" : v.substr(1);
      d.colors[id] = r.to_int(v, c.column);
    } else if (kw == "arc") {
      r.expect_keys(2, {"from", "to"});
      d.arcs.push_back({r.at(1, "arc id").text, r.value(2, "from"), r.value(2, "to")});
    } else if (kw == "xing") {
      r.expect_keys(2, {"sign", "over", "in", "out"});
      Crossing c;
      c.id = r.at(1, "crossing id").text;
      const std::string s = r.value(2, "sign");
      if (s != "+" && s != "-") r.fail("sign must be + or -", r.at(2, "sign=").column);
      c.sign = s == "+" ? 1 : -1;
      c.over = r.value(2, "over");
      c.in = r.value(2, "in");
      c.out = r.value(2, "out");
      d.crossings.push_back(std::move(c));
    } else if (kw == "vxing") {
      r.expect_keys(2, {"a", "b"});
      d.vcrossings.push_back({r.at(1, "virtual crossing id").text, r.value(2, "a"), r.value(2, "b")});
    } else if (kw == "point") {
      r.expect_keys(2, {"in", "out"});
      d.points.push_back({r.at(1, "point id").text, r.value(2, "in"), r.value(2, "out")});
    } else if (kw == "tangle") {
      r.fail("duplicate 'tangle' header", tokens[0].column);
    } else {
      r.fail("unknown keyword '" + kw + "'", tokens[0].column);
    }
  }
  if (!header) throw ParseError("empty diagram: expected 'tangle <name> boundary=2n'", std::max(lineno, 1), 1);
  if (check) require_valid(d);
  return d;
}

std::string serialize_diagram(const WeldedDiagram& d) {
  std::ostringstream os;
  os << "tangle " << d.name << " boundary=" << d.boundary << "\n";
  for (const auto& a : d.arcs) os << "arc " << a.id << " from=" << a.from << " to=" << a.to << "\n";
  for (const auto& c : d.crossings) {
    os << "xing " << c.id << " sign=" << (c.sign > 0 ? "+" : "-") << " over=" << c.over << " in=" << c.in
       << " out=" << c.out << "\n";
  }
  for (const auto& v : d.vcrossings) os << "vxing " << v.id << " a=" << v.a << " b=" << v.b << "\n";
  for (const auto& p : d.points) os << "point " << p.id << " in=" << p.in << " out=" << p.out << "\n";
  for (const auto& [arc, c] : d.colors) os << "color " << arc << " " << c << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// JSON mirror

nlohmann::json diagram_to_json(const WeldedDiagram& d) {
  using nlohmann::json;
  json j;
  j["tangle"] = d.name;
  j["boundary"] = d.boundary;
  j["arcs"] = json::array();
  for (const auto& a : d.arcs) j["arcs"].push_back({{"id", a.id}, {"from", a.from}, {"to", a.to}});
  j["crossings"] = json::array();
  for (const auto& c : d.crossings) {
    j["crossings"].push_back(
        {{"id", c.id}, {"sign", c.sign > 0 ? "+" : "-"}, {"over", c.over}, {"in", c.in}, {"out", c.out}});
  }
  j["vcrossings"] = json::array();
  for (const auto& v : d.vcrossings) j["vcrossings"].push_back({{"id", v.id}, {"a", v.a}, {"b", v.b}});
  j["points"] = json::array();
  for (const auto& p : d.points) j["points"].push_back({{"id", p.id}, {"in", p.in}, {"out", p.out}});
  j["colors"] = json::object();
  for (const auto& [arc, c] : d.colors) j["colors"][arc] = c;
  return j;
}

WeldedDiagram diagram_from_json(const nlohmann::json& j, bool check) {
  WeldedDiagram d;
  try {
    d.name = j.value("tangle", std::string("tangle"));
    d.boundary = j.at("boundary").get<int>();
    for (const auto& a : j.value("arcs", nlohmann::json::array())) {
      d.arcs.push_back({a.at("id").get<std::string>(), a.at("from").get<std::string>(), a.at("to").get<std::string>()});
    }
    for (const auto& c : j.value("crossings", nlohmann::json::array())) {
      const auto s = c.at("sign").get<std::string>();
      if (s != "+" && s != "-") throw ParseError("crossing sign must be + or -", 1, 1);
      d.crossings.push_back({c.at("id").get<std::string>(), s == "+" ? 1 : -1, c.at("over").get<std::string>(),
                             c.at("in").get<std::string>(), c.at("out").get<std::string>()});
    }
    for (const auto& v : j.value("vcrossings", nlohmann::json::array())) {
      d.vcrossings.push_back({v.at("id").get<std::string>(), v.at("a").get<std::string>(), v.at("b").get<std::string>()});
    }
    for (const auto& p : j.value("points", nlohmann::json::array())) {
      d.points.push_back({p.at("id").get<std::string>(), p.at("in").get<std::string>(), p.at("out").get<std::string>()});
    }
    const auto colors = j.value("colors", nlohmann::json::object());
    for (const auto& [arc, c] : colors.items()) d.colors[arc] = c.get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed diagram JSON: ") + e.what(), 1, 1);
  }
  if (check) require_valid(d);
  return d;
}

WeldedDiagram load_diagram(std::string_view text, bool check) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.what(), 1, static_cast<int>(e.byte));
    }
    return diagram_from_json(j, check);
  }
  return parse_diagram(text, check);
}

// ---------------------------------------------------------------------------
// Validation and strand structure

namespace {

// Arc following `a` along its strand, or nullptr at a boundary.
const Arc* successor(const WeldedDiagram& d, const Arc& a) {
  if (const Crossing* c = d.find_crossing(a.to)) return d.find_arc(c->out);
  if (const Point* p = d.find_point(a.to)) return d.find_arc(p->out);
  return nullptr;
}

std::vector<Component> trace_components(const WeldedDiagram& d) {
  std::vector<Component> out;
  std::set<std::string> seen;
  std::vector<std::pair<int, const Arc*>> starts;
  for (const auto& a : d.arcs) {
    if (int b = boundary_index(a.from)) starts.emplace_back(b, &a);
  }
  std::sort(starts.begin(), starts.end());
  for (const auto& [b, a] : starts) {
    Component c;
    for (const Arc* cur = a; cur && !seen.count(cur->id); cur = successor(d, *cur)) {
      seen.insert(cur->id);
      c.arcs.push_back(cur->id);
    }
    out.push_back(std::move(c));
  }
  for (const auto& a : d.arcs) {
    if (seen.count(a.id)) continue;
    Component c;
    c.closed = true;
    for (const Arc* cur = &a; cur && !seen.count(cur->id); cur = successor(d, *cur)) {
      seen.insert(cur->id);
      c.arcs.push_back(cur->id);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<Violation> validate(const WeldedDiagram& d) {
  std::vector<Violation> v;
  auto add = [&](const std::string& inv, const std::string& ent, const std::string& msg) {
    v.push_back({inv, ent, msg});
  };

  if (d.boundary < 0 || d.boundary % 2 != 0) {
    add("odd-boundary", d.name, "boundary=" + std::to_string(d.boundary) + " is not an even count 2n");
  }

  std::set<std::string> arc_ids, node_ids;
  for (const auto& a : d.arcs) {
    if (!arc_ids.insert(a.id).second) add("unique-id", a.id, "arc id declared twice");
    if (boundary_index(a.id)) add("reserved-id", a.id, "ids of the form bN are reserved for boundary points");
  }
  auto node = [&](const std::string& id) {
    if (!node_ids.insert(id).second || arc_ids.count(id)) add("unique-id", id, "id declared twice");
    if (boundary_index(id)) add("reserved-id", id, "ids of the form bN are reserved for boundary points");
  };
  for (const auto& c : d.crossings) node(c.id);
  for (const auto& x : d.vcrossings) node(x.id);
  for (const auto& p : d.points) node(p.id);
  const std::size_t structural_start = v.size();

  std::vector<int> boundary_use(static_cast<std::size_t>(std::max(d.boundary, 0)) + 1, 0);
  auto check_end = [&](const Arc& a, const std::string& anchor, bool is_from) {
    const char* role = is_from ? "from" : "to";
    if (int b = boundary_index(anchor)) {
      if (b > d.boundary) {
        add("boundary", a.id, "arc " + std::string(role) + "=" + anchor + " exceeds boundary=" + std::to_string(d.boundary));
      } else {
        ++boundary_use[static_cast<std::size_t>(b)];
      }
    } else if (const Crossing* c = d.find_crossing(anchor)) {
      if ((is_from ? c->out : c->in) != a.id) {
        add("dangling-arc", a.id, "arc " + std::string(role) + "=" + anchor + " but crossing " + anchor + " has " +
                                      (is_from ? "out=" + c->out : "in=" + c->in));
      }
    } else if (const Point* p = d.find_point(anchor)) {
      if ((is_from ? p->out : p->in) != a.id) {
        add("dangling-arc", a.id, "arc " + std::string(role) + "=" + anchor + " but point " + anchor + " has " +
                                      (is_from ? "out=" + p->out : "in=" + p->in));
      }
    } else {
      add("dangling-arc", a.id, "arc " + std::string(role) + "=" + anchor + " names no boundary point, crossing or point");
    }
  };
  for (const auto& a : d.arcs) {
    check_end(a, a.from, true);
    check_end(a, a.to, false);
  }
  for (int b = 1; b <= d.boundary; ++b) {
    if (boundary_use[static_cast<std::size_t>(b)] != 1) {
      add("boundary", boundary_anchor(b),
          "boundary point used by " + std::to_string(boundary_use[static_cast<std::size_t>(b)]) + " arc ends");
    }
  }

  auto check_ref = [&](const std::string& owner, const std::string& role, const std::string& arc,
                       const std::string& expect_anchor, bool at_from) {
    const Arc* a = d.find_arc(arc);
    if (!a) {
      add("dangling-arc", owner, role + "=" + arc + " names no arc");
      return;
    }
    if (!expect_anchor.empty() && (at_from ? a->from : a->to) != expect_anchor) {
      add("arity", owner, role + " arc " + arc + " does not " + (at_from ? "start" : "end") + " here");
    }
  };
  for (const auto& c : d.crossings) {
    if (c.sign != 1 && c.sign != -1) add("sign", c.id, "crossing sign must be +1 or -1");
    check_ref(c.id, "over", c.over, "", false);
    check_ref(c.id, "in", c.in, c.id, false);
    check_ref(c.id, "out", c.out, c.id, true);
  }
  for (const auto& p : d.points) {
    check_ref(p.id, "in", p.in, p.id, false);
    check_ref(p.id, "out", p.out, p.id, true);
  }
  for (const auto& x : d.vcrossings) {
    check_ref(x.id, "a", x.a, "", false);
    check_ref(x.id, "b", x.b, "", false);
  }
  for (const auto& [arc, c] : d.colors) {
    if (!d.find_arc(arc)) add("dangling-arc", arc, "color declared for an unknown arc");
    if (c < 1) add("color", arc, "color index must be at least 1");
  }

  if (v.size() == structural_start) {
    int strands = 0;
    for (const auto& comp : trace_components(d)) {
      if (!comp.closed) {
        ++strands;
        const Arc* last = d.find_arc(comp.arcs.back());
        if (!boundary_index(last->to)) add("strand", comp.arcs.front(), "strand does not end on the boundary");
      }
      int color = 0;
      std::string first;
      for (const auto& id : comp.arcs) {
        auto it = d.colors.find(id);
        if (it == d.colors.end()) continue;
        if (color && it->second != color) {
          add("color-continuity", id,
              "arc colored " + std::to_string(it->second) + " but arc " + first + " of the same component is colored " +
                  std::to_string(color));
        } else if (!color) {
          color = it->second;
          first = id;
        }
      }
    }
    if (d.boundary % 2 == 0 && 2 * strands != d.boundary) {
      add("boundary", d.name, std::to_string(strands) + " strands for " + std::to_string(d.boundary) + " boundary points");
    }
  }
  return v;
}

void require_valid(const WeldedDiagram& d) {
  const auto v = validate(d);
  if (v.empty()) return;
  std::string msg = "invalid diagram '" + d.name + "':";
  for (const auto& x : v) msg += "\n  [" + x.invariant + "] " + x.entity + ": " + x.message;
  throw ValidationError(msg);
}

std::vector<Component> components(const WeldedDiagram& d) {
  auto comps = trace_components(d);
  for (auto& c : comps) {
    for (const auto& id : c.arcs) {
      auto it = d.colors.find(id);
      if (it != d.colors.end()) {
        c.color = it->second;
        break;
      }
    }
  }
  return comps;
}

std::map<std::string, int> arc_colors(const WeldedDiagram& d) {
  std::map<std::string, int> out;
  for (const auto& c : components(d)) {
    for (const auto& id : c.arcs) out[id] = c.color;
  }
  return out;
}

int color_count(const WeldedDiagram& d) {
  int mu = 1;
  for (const auto& [arc, c] : d.colors) mu = std::max(mu, c);
  return mu;
}

bool boundary_is_in(const WeldedDiagram& d, int index) {
  const std::string anchor = boundary_anchor(index);
  return std::any_of(d.arcs.begin(), d.arcs.end(), [&](const Arc& a) { return a.from == anchor; });
}

std::string fresh_id(const WeldedDiagram& d, const std::string& stem) {
  auto used = [&](const std::string& id) {
    return d.find_arc(id) || d.find_crossing(id) || d.find_point(id) || find_by_id(d.vcrossings, id) ||
           boundary_index(id);
  };
  if (!used(stem)) return stem;
  for (int k = 2;; ++k) {
    std::string id = stem + "_" + std::to_string(k);
    if (!used(id)) return id;
  }
}

WeldedDiagram with_division_points(const WeldedDiagram& d) {
  WeldedDiagram r = d;
  // Boundary-to-boundary arcs.
  const std::size_t narcs = r.arcs.size();
  for (std::size_t k = 0; k < narcs; ++k) {
    if (!boundary_index(r.arcs[k].from) || !boundary_index(r.arcs[k].to)) continue;
    const std::string pid = fresh_id(r, "p." + r.arcs[k].id);
    const std::string aid = fresh_id(r, r.arcs[k].id + ".2");
    r.arcs.push_back({aid, pid, r.arcs[k].to});
    r.arcs[k].to = pid;
    r.points.push_back({pid, r.arcs[k].id, aid});
  }
  // Crossing-free circles need two points.
  for (const auto& comp : trace_components(r)) {
    if (!comp.closed || comp.arcs.size() != 1) continue;
    Arc* a = r.find_arc(comp.arcs.front());
    if (r.find_crossing(a->to)) continue;
    const std::string pid = fresh_id(r, "p." + a->id);
    const std::string aid = fresh_id(r, a->id + ".2");
    Point* old = r.find_point(a->to);
    old->in = aid;
    const std::string back = a->to;
    a->to = pid;
    r.points.push_back({pid, a->id, aid});
    r.arcs.push_back({aid, pid, back});
  }
  return r;
}

// ---------------------------------------------------------------------------

WirtingerPresentation wirtinger(const WeldedDiagram& d) {
  require_valid(d);
  WirtingerPresentation w;
  for (const auto& a : d.arcs) w.generators.push_back(a.id);
  for (const auto& c : d.crossings) {
    const int s = c.sign;
    w.relators.push_back({c.id, {{c.over, s}, {c.in, 1}, {c.over, -s}, {c.out, -1}}});
  }
  for (const auto& p : d.points) w.relators.push_back({p.id, {{p.out, 1}, {p.in, -1}}});
  return w;
}

}  // namespace welded
