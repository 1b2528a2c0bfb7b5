#include "welded/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "welded/error.hpp"

namespace welded {

namespace {

std::string port_name(const CircuitDiagram& c, const Port& p) {
  const std::string disk = p.disk == 0 ? "outer" : c.disks[static_cast<std::size_t>(p.disk - 1)].id;
  return disk + "." + std::to_string(p.point);
}

int disk_index(const CircuitDiagram& c, std::string_view id) {
  if (id == "outer") return 0;
  for (std::size_t k = 0; k < c.disks.size(); ++k) {
    if (c.disks[k].id == id) return static_cast<int>(k) + 1;
  }
  return -1;
}

int disk_arity(const CircuitDiagram& c, int disk) {
  return disk == 0 ? c.outer : c.disks[static_cast<std::size_t>(disk - 1)].arity;
}

}  // namespace

// ---------------------------------------------------------------------------
// Text format

CircuitDiagram parse_circuit(std::string_view text, bool check) {
  CircuitDiagram c;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool header = false;

  struct PendingCurve {
    Curve curve;
    std::string from, to;
    int line;
    int column;
  };
  std::vector<PendingCurve> pending;

  auto to_int = [](const std::string& s, int line, int col) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw ParseError("expected an integer, got '" + s + "'", line, col);
    return v;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<std::pair<std::string, int>> tok;
    for (std::size_t k = 0; k < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[k]))) {
        ++k;
        continue;
      }
      const std::size_t s = k;
      while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
      tok.emplace_back(line.substr(s, k - s), static_cast<int>(s) + 1);
    }
    if (tok.empty()) continue;
    auto value = [&](const std::string& key, bool required) -> std::pair<std::string, int> {
      for (std::size_t k = 2; k < tok.size(); ++k) {
        if (tok[k].first.rfind(key + "=", 0) == 0) return {tok[k].first.substr(key.size() + 1), tok[k].second};
      }
      if (required) throw ParseError("missing '" + key + "='", lineno, static_cast<int>(line.size()) + 1);
      return {"", 0};
    };
    if (tok.size() < 2) throw ParseError("missing id after '" + tok[0].first + "'", lineno, tok[0].second);
    const std::string& kw = tok[0].first;
    if (!header) {
      if (kw != "circuit") throw ParseError("expected 'circuit <name> outer=2n'", lineno, tok[0].second);
      c.name = tok[1].first;
      auto [v, col] = value("outer", true);
      c.outer = to_int(v, lineno, col);
      header = true;
    } else if (kw == "disk") {
      if (tok[1].first == "outer") throw ParseError("'outer' is reserved", lineno, tok[1].second);
      auto [v, col] = value("arity", true);
      c.disks.push_back({tok[1].first, to_int(v, lineno, col)});
    } else if (kw == "curve") {
      PendingCurve pc;
      pc.curve.id = tok[1].first;
      pc.line = lineno;
      pc.column = tok[0].second;
      if (auto [v, col] = value("color", false); !v.empty()) {
        if (v[0] == 't') v = v.size() == 1 ? "1" : v.substr(1);
        pc.curve.color = to_int(v, lineno, col);
      }
      const bool loop = std::any_of(tok.begin() + 2, tok.end(), [](const auto& t) { return t.first == "loop"; });
      if (!loop) {
        pc.from = value("from", true).first;
        pc.to = value("to", true).first;
      }
      for (std::size_t k = 2; k < tok.size(); ++k) {
        const auto& t = tok[k].first;
        if (t != "loop" && t.rfind("color=", 0) && t.rfind("from=", 0) && t.rfind("to=", 0)) {
          throw ParseError("unexpected token '" + t + "'", lineno, tok[k].second);
        }
      }
      pending.push_back(std::move(pc));
    } else {
      throw ParseError("unknown keyword '" + kw + "'", lineno, tok[0].second);
    }
  }
  if (!header) throw ParseError("empty circuit: expected 'circuit <name> outer=2n'", std::max(lineno, 1), 1);

  for (auto& pc : pending) {
    auto port = [&](const std::string& s) {
      const auto dot = s.rfind('.');
      if (dot == std::string::npos) throw ParseError("port '" + s + "' is not <disk>.<point>", pc.line, pc.column);
      const int disk = disk_index(c, s.substr(0, dot));
      if (disk < 0) throw ParseError("unknown disk '" + s.substr(0, dot) + "'", pc.line, pc.column);
      return Port{disk, to_int(s.substr(dot + 1), pc.line, pc.column)};
    };
    if (!pc.from.empty()) {
      pc.curve.from = port(pc.from);
      pc.curve.to = port(pc.to);
    }
    c.curves.push_back(std::move(pc.curve));
  }
  if (check) validate_circuit(c);
  return c;
}

std::string serialize_circuit(const CircuitDiagram& c) {
  std::ostringstream os;
  os << "circuit " << c.name << " outer=" << c.outer << "\n";
  for (const auto& d : c.disks) os << "disk " << d.id << " arity=" << d.arity << "\n";
  for (const auto& cv : c.curves) {
    os << "curve " << cv.id << " color=" << cv.color;
    if (cv.from) {
      os << " from=" << port_name(c, *cv.from) << " to=" << port_name(c, *cv.to) << "\n";
    } else {
      os << " loop\n";
    }
  }
  return os.str();
}

nlohmann::json circuit_to_json(const CircuitDiagram& c) {
  using nlohmann::json;
  json j;
  j["circuit"] = c.name;
  j["outer"] = c.outer;
  j["disks"] = json::array();
  for (const auto& d : c.disks) j["disks"].push_back({{"id", d.id}, {"arity", d.arity}});
  j["curves"] = json::array();
  for (const auto& cv : c.curves) {
    json x = {{"id", cv.id}, {"color", cv.color}};
    if (cv.from) {
      x["from"] = port_name(c, *cv.from);
      x["to"] = port_name(c, *cv.to);
    } else {
      x["loop"] = true;
    }
    j["curves"].push_back(std::move(x));
  }
  return j;
}

CircuitDiagram circuit_from_json(const nlohmann::json& j, bool check) {
  // Reuse the line parser so both formats share one set of port rules.
  std::ostringstream os;
  try {
    os << "circuit " << j.value("circuit", std::string("circuit")) << " outer=" << j.at("outer").get<int>() << "\n";
    for (const auto& d : j.value("disks", nlohmann::json::array())) {
      os << "disk " << d.at("id").get<std::string>() << " arity=" << d.at("arity").get<int>() << "\n";
    }
    for (const auto& cv : j.value("curves", nlohmann::json::array())) {
      os << "curve " << cv.at("id").get<std::string>() << " color=" << cv.value("color", 1);
      if (cv.value("loop", false)) {
        os << " loop\n";
      } else {
        os << " from=" << cv.at("from").get<std::string>() << " to=" << cv.at("to").get<std::string>() << "\n";
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed circuit JSON: ") + e.what(), 1, 1);
  }
  return parse_circuit(os.str(), check);
}

CircuitDiagram load_circuit(std::string_view text, bool check) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    try {
      return circuit_from_json(nlohmann::json::parse(text), check);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.what(), 1, static_cast<int>(e.byte));
    }
  }
  return parse_circuit(text, check);
}

// ---------------------------------------------------------------------------

Wiring wiring(const CircuitDiagram& c) {
  Wiring w;
  w.outer_points = c.outer;
  for (const auto& d : c.disks) w.inner_points.push_back(d.arity);
  for (const auto& cv : c.curves) w.wires.push_back({cv.from, cv.to});
  return w;
}

void validate_circuit(const CircuitDiagram& c) {
  std::set<std::string> ids;
  for (const auto& d : c.disks) {
    if (!ids.insert(d.id).second) throw WiringError("disk id " + d.id + " declared twice");
  }
  ids.clear();
  for (const auto& cv : c.curves) {
    if (!ids.insert(cv.id).second) throw WiringError("curve id " + cv.id + " declared twice");
    if (cv.color < 1) throw WiringError("curve " + cv.id + " has color " + std::to_string(cv.color));
  }
  check_wiring(wiring(c));
}

std::vector<bool> entering_points(const CircuitDiagram& c, int disk) {
  std::vector<bool> out(static_cast<std::size_t>(disk_arity(c, disk)), false);
  for (const auto& cv : c.curves) {
    if (!cv.from) continue;
    if (disk == 0 && cv.from->disk == 0) out[static_cast<std::size_t>(cv.from->point - 1)] = true;
    if (disk != 0 && cv.to->disk == disk) out[static_cast<std::size_t>(cv.to->point - 1)] = true;
  }
  return out;
}

std::vector<int> point_colors(const CircuitDiagram& c, int disk) {
  std::vector<int> out(static_cast<std::size_t>(disk_arity(c, disk)), 0);
  for (const auto& cv : c.curves) {
    for (const auto& p : {cv.from, cv.to}) {
      if (p && p->disk == disk) out[static_cast<std::size_t>(p->point - 1)] = cv.color;
    }
  }
  return out;
}

CircuitDiagram identity_circuit(const std::vector<bool>& entering, const std::vector<int>& colors) {
  CircuitDiagram c;
  c.name = "identity";
  c.outer = static_cast<int>(entering.size());
  c.disks.push_back({"D1", c.outer});
  for (int k = 1; k <= c.outer; ++k) {
    Curve cv;
    cv.id = "w" + std::to_string(k);
    cv.color = colors.empty() ? 1 : colors[static_cast<std::size_t>(k - 1)];
    if (entering[static_cast<std::size_t>(k - 1)]) {
      cv.from = Port{0, k};
      cv.to = Port{1, k};
    } else {
      cv.from = Port{1, k};
      cv.to = Port{0, k};
    }
    c.curves.push_back(std::move(cv));
  }
  validate_circuit(c);
  return c;
}

// ---------------------------------------------------------------------------

CircuitDiagram compose_circuits(const CircuitDiagram& p1, int i, const CircuitDiagram& p2) {
  validate_circuit(p1);
  validate_circuit(p2);
  if (i < 1 || i > static_cast<int>(p1.disks.size())) {
    throw CompositionError("disk index " + std::to_string(i) + " out of range 1.." + std::to_string(p1.disks.size()));
  }
  const int arity = p1.disks[static_cast<std::size_t>(i - 1)].arity;
  if (arity != p2.outer) {
    throw CompositionError("disk " + p1.disks[static_cast<std::size_t>(i - 1)].id + " has arity " +
                           std::to_string(arity) + " but the inserted circuit has outer=" + std::to_string(p2.outer));
  }
  const auto enter1 = entering_points(p1, i);
  const auto enter2 = entering_points(p2, 0);
  const auto color1 = point_colors(p1, i);
  const auto color2 = point_colors(p2, 0);
  for (int k = 0; k < arity; ++k) {
    if (enter1[static_cast<std::size_t>(k)] != enter2[static_cast<std::size_t>(k)]) {
      throw CompositionError("orientation mismatch at point " + std::to_string(k + 1));
    }
    if (color1[static_cast<std::size_t>(k)] != color2[static_cast<std::size_t>(k)]) {
      throw CompositionError("color mismatch at point " + std::to_string(k + 1));
    }
  }

  const int q = static_cast<int>(p2.disks.size());
  CircuitDiagram r;
  r.name = p1.name + "." + p2.name;
  r.outer = p1.outer;
  std::set<std::string> disk_ids;
  auto add_disk = [&](CircuitDisk d) {
    std::string id = d.id;
    for (int k = 2; disk_ids.count(id) || id == "outer"; ++k) id = d.id + "_" + std::to_string(k);
    d.id = id;
    disk_ids.insert(id);
    r.disks.push_back(std::move(d));
  };
  for (int k = 1; k < i; ++k) add_disk(p1.disks[static_cast<std::size_t>(k - 1)]);
  for (const auto& d : p2.disks) add_disk(d);
  for (int k = i + 1; k <= static_cast<int>(p1.disks.size()); ++k) add_disk(p1.disks[static_cast<std::size_t>(k - 1)]);

  // Endpoints: terminal ports of the result, or interface point k (disk -1).
  struct Segment {
    std::string id;
    int color;
    std::optional<Port> from, to;
  };
  auto map1 = [&](const Port& p) -> Port {
    if (p.disk == 0) return p;
    if (p.disk == i) return {-1, p.point};
    return {p.disk < i ? p.disk : p.disk + q - 1, p.point};
  };
  auto map2 = [&](const Port& p) -> Port {
    if (p.disk == 0) return {-1, p.point};
    return {p.disk + i - 1, p.point};
  };
  std::vector<Segment> segs;
  for (const auto& cv : p1.curves) {
    if (cv.from) segs.push_back({cv.id, cv.color, map1(*cv.from), map1(*cv.to)});
    else segs.push_back({cv.id, cv.color, std::nullopt, std::nullopt});
  }
  for (const auto& cv : p2.curves) {
    if (cv.from) segs.push_back({cv.id, cv.color, map2(*cv.from), map2(*cv.to)});
    else segs.push_back({cv.id, cv.color, std::nullopt, std::nullopt});
  }
  std::map<int, std::size_t> starts_at;  // interface point -> segment leaving it
  for (std::size_t s = 0; s < segs.size(); ++s) {
    if (segs[s].from && segs[s].from->disk == -1) starts_at[segs[s].from->point] = s;
  }

  std::set<std::string> curve_ids;
  auto add_curve = [&](Curve cv) {
    std::string id = cv.id;
    for (int k = 2; curve_ids.count(id); ++k) id = cv.id + "_" + std::to_string(k);
    cv.id = id;
    curve_ids.insert(id);
    r.curves.push_back(std::move(cv));
  };
  std::vector<bool> used(segs.size(), false);
  for (std::size_t s = 0; s < segs.size(); ++s) {
    if (!segs[s].from) {
      used[s] = true;
      add_curve({segs[s].id, segs[s].color, std::nullopt, std::nullopt});
      continue;
    }
    if (segs[s].from->disk == -1) continue;
    std::size_t cur = s;
    used[cur] = true;
    while (segs[cur].to->disk == -1) {
      cur = starts_at.at(segs[cur].to->point);
      used[cur] = true;
    }
    add_curve({segs[s].id, segs[s].color, segs[s].from, segs[cur].to});
  }
  // Whatever remains runs through the interface only: closed loops.
  for (std::size_t s = 0; s < segs.size(); ++s) {
    if (used[s]) continue;
    std::size_t cur = s;
    while (!used[cur]) {
      used[cur] = true;
      cur = starts_at.at(segs[cur].to->point);
    }
    add_curve({segs[s].id, segs[s].color, std::nullopt, std::nullopt});
  }
  validate_circuit(r);
  return r;
}

InvariantTensor gamma(const CircuitDiagram& p, const std::vector<InvariantTensor>& inputs, Execution exec, int nvars) {
  validate_circuit(p);
  return contract_matched(inputs, wiring(p), exec, nvars);
}

// ---------------------------------------------------------------------------

WeldedDiagram glue_tangles(const CircuitDiagram& p, const std::vector<WeldedDiagram>& tangles) {
  validate_circuit(p);
  if (tangles.size() != p.disks.size()) {
    throw CompositionError("circuit has " + std::to_string(p.disks.size()) + " disks but " +
                           std::to_string(tangles.size()) + " tangles were given");
  }
  WeldedDiagram g;
  g.name = p.name;
  g.boundary = p.outer;
  // arc_at[d][k]: glued id of the arc touching boundary point k of tangle d.
  std::vector<std::vector<std::string>> arc_at(tangles.size());
  for (std::size_t d = 0; d < tangles.size(); ++d) {
    const WeldedDiagram& t = tangles[d];
    require_valid(t);
    const CircuitDisk& disk = p.disks[d];
    if (t.boundary != disk.arity) {
      throw CompositionError("tangle " + t.name + " has " + std::to_string(t.boundary) + " boundary points, disk " +
                             disk.id + " has arity " + std::to_string(disk.arity));
    }
    const auto enter = entering_points(p, static_cast<int>(d) + 1);
    const auto colors = point_colors(p, static_cast<int>(d) + 1);
    const auto tcolors = arc_colors(t);
    const std::string pre = disk.id + "/";
    arc_at[d].resize(static_cast<std::size_t>(t.boundary) + 1);
    for (const auto& a : t.arcs) {
      for (const auto& end : {a.from, a.to}) {
        if (const int b = boundary_index(end)) {
          arc_at[d][static_cast<std::size_t>(b)] = pre + a.id;
          const bool in = end == a.from;
          if (in != enter[static_cast<std::size_t>(b - 1)]) {
            throw CompositionError("orientation mismatch at " + disk.id + "." + std::to_string(b));
          }
          if (tcolors.at(a.id) != colors[static_cast<std::size_t>(b - 1)]) {
            throw CompositionError("color mismatch at " + disk.id + "." + std::to_string(b));
          }
        }
      }
      auto anchor = [&](const std::string& s) { return boundary_index(s) ? s : pre + s; };
      g.arcs.push_back({pre + a.id, anchor(a.from), anchor(a.to)});
    }
    for (const auto& c : t.crossings) g.crossings.push_back({pre + c.id, c.sign, pre + c.over, pre + c.in, pre + c.out});
    for (const auto& v : t.vcrossings) g.vcrossings.push_back({pre + v.id, pre + v.a, pre + v.b});
    for (const auto& pt : t.points) g.points.push_back({pre + pt.id, pre + pt.in, pre + pt.out});
    for (const auto& [arc, c] : tcolors) {
      if (c != 1) g.colors[pre + arc] = c;
    }
  }

  for (const auto& cv : p.curves) {
    auto color = [&](const std::string& arc) {
      if (cv.color != 1) g.colors[arc] = cv.color;
    };
    const std::string pid = fresh_id(g, "q." + cv.id);
    if (!cv.from) {
      const std::string pid2 = fresh_id(g, "q." + cv.id + ".2");
      const std::string a1 = fresh_id(g, cv.id);
      const std::string a2 = fresh_id(g, cv.id + ".2");
      g.points.push_back({pid, a2, a1});
      g.points.push_back({pid2, a1, a2});
      g.arcs.push_back({a1, pid, pid2});
      g.arcs.push_back({a2, pid2, pid});
      color(a1);
      continue;
    }
    const Port f = *cv.from;
    const Port t = *cv.to;
    std::string in_arc, out_arc;
    if (f.disk == 0) {
      in_arc = fresh_id(g, cv.id);
      g.arcs.push_back({in_arc, boundary_anchor(f.point), pid});
      color(in_arc);
    } else {
      in_arc = arc_at[static_cast<std::size_t>(f.disk - 1)][static_cast<std::size_t>(f.point)];
      g.find_arc(in_arc)->to = pid;
    }
    if (t.disk == 0) {
      out_arc = fresh_id(g, f.disk == 0 ? cv.id + ".2" : cv.id);
      g.arcs.push_back({out_arc, pid, boundary_anchor(t.point)});
      color(out_arc);
    } else {
      out_arc = arc_at[static_cast<std::size_t>(t.disk - 1)][static_cast<std::size_t>(t.point)];
      g.find_arc(out_arc)->from = pid;
    }
    g.points.push_back({pid, in_arc, out_arc});
  }
  // Colors: keep one declaration per component.
  std::map<std::string, int> declared;
  for (const auto& comp : components(g)) {
    int color = 1;
    for (const auto& id : comp.arcs) {
      if (auto it = g.colors.find(id); it != g.colors.end()) color = it->second;
    }
    if (color != 1) declared[comp.arcs.front()] = color;
  }
  g.colors = declared;
  require_valid(g);
  return g;
}

}  // namespace welded
