#include "welded/moves.hpp"

#include <algorithm>
#include <set>

#include "welded/error.hpp"

namespace welded {

std::string move_name(Move m) {
  switch (m) {
    case Move::R1: return "R1";
    case Move::R2: return "R2";
    case Move::R3: return "R3";
    case Move::V1: return "V1";
    case Move::V2: return "V2";
    case Move::V3: return "V3";
    case Move::mixed: return "mixed";
    case Move::OC: return "OC";
  }
  return "?";
}

std::string MoveSite::to_string() const {
  std::string s = move_name(move);
  if (move == Move::R1 || move == Move::R2 || move == Move::V1 || move == Move::V2) {
    s += dir == Direction::insert ? "-insert" : "-remove";
  }
  s += "(";
  for (std::size_t k = 0; k < ids.size(); ++k) s += (k ? "," : "") + ids[k];
  s += ")";
  if (dir == Direction::insert && (move == Move::R1 || move == Move::R2)) s += sign > 0 ? " sign=+" : " sign=-";
  if (dir == Direction::insert && move == Move::R1) s += over_first ? " over=in" : " over=out";
  return s;
}

namespace {

[[noreturn]] void no_match(const MoveSite& site, const std::string& why) {
  throw PatternError(site.to_string() + ": " + why);
}

// Points the anchor's incoming reference at `arc`.
void retarget_in(WeldedDiagram& d, const std::string& anchor, const std::string& arc) {
  if (Crossing* c = d.find_crossing(anchor)) c->in = arc;
  else if (Point* p = d.find_point(anchor)) p->in = arc;
}

// Replaces over and virtual references to `from` by `to`.
void redirect_refs(WeldedDiagram& d, const std::string& from, const std::string& to) {
  for (auto& c : d.crossings) {
    if (c.over == from) c.over = to;
  }
  for (auto& v : d.vcrossings) {
    if (v.a == from) v.a = to;
    if (v.b == from) v.b = to;
  }
}

bool has_refs(const WeldedDiagram& d, const std::string& arc) {
  for (const auto& c : d.crossings) {
    if (c.over == arc) return true;
  }
  for (const auto& v : d.vcrossings) {
    if (v.a == arc || v.b == arc) return true;
  }
  return false;
}

void erase_arc(WeldedDiagram& d, const std::string& id) {
  std::erase_if(d.arcs, [&](const Arc& a) { return a.id == id; });
}

void erase_crossing(WeldedDiagram& d, const std::string& id) {
  std::erase_if(d.crossings, [&](const Crossing& c) { return c.id == id; });
}

// Drops colors of vanished arcs and re-declares any component color that was
// only carried by a removed arc.
void restore_colors(WeldedDiagram& d, const std::map<std::string, int>& before) {
  std::erase_if(d.colors, [&](const auto& kv) { return !d.find_arc(kv.first); });
  for (const auto& comp : components(d)) {
    bool declared = false;
    int color = 1;
    for (const auto& id : comp.arcs) {
      if (d.colors.count(id)) declared = true;
      auto it = before.find(id);
      if (it != before.end()) color = it->second;
    }
    if (!declared && color != 1) d.colors[comp.arcs.front()] = color;
  }
}

const Crossing& crossing_at(const WeldedDiagram& d, const MoveSite& site, std::size_t k) {
  if (site.ids.size() <= k) no_match(site, "missing crossing id");
  const Crossing* c = d.find_crossing(site.ids[k]);
  if (!c) no_match(site, "no crossing " + site.ids[k]);
  return *c;
}

const Arc& arc_at(const WeldedDiagram& d, const MoveSite& site, std::size_t k) {
  if (site.ids.size() <= k) no_match(site, "missing arc id");
  const Arc* a = d.find_arc(site.ids[k]);
  if (!a) no_match(site, "no arc " + site.ids[k]);
  return *a;
}

std::size_t vxing_index(const WeldedDiagram& d, const MoveSite& site, std::size_t k) {
  if (site.ids.size() <= k) no_match(site, "missing virtual crossing id");
  for (std::size_t i = 0; i < d.vcrossings.size(); ++i) {
    if (d.vcrossings[i].id == site.ids[k]) return i;
  }
  no_match(site, "no virtual crossing " + site.ids[k]);
}

// Splits arc `id` at a new anchor; the original id keeps the first piece.
// Returns the id of the second piece.
std::string split_arc(WeldedDiagram& d, const std::string& id, const std::string& anchor) {
  Arc* a = d.find_arc(id);
  const std::string second = fresh_id(d, "s");
  const std::string end = a->to;
  a->to = anchor;
  d.arcs.push_back({second, anchor, end});
  retarget_in(d, end, second);
  return second;
}

void apply_r1(WeldedDiagram& d, const MoveSite& site) {
  if (site.dir == Direction::insert) {
    const Arc& a = arc_at(d, site, 0);
    if (site.sign != 1 && site.sign != -1) no_match(site, "sign must be ±1");
    const std::string k = fresh_id(d, "k");
    const std::string first = a.id;
    d.crossings.push_back({k, site.sign, "", first, ""});
    const std::string second = split_arc(d, first, k);
    Crossing* c = d.find_crossing(k);
    c->out = second;
    c->over = site.over_first ? first : second;
    return;
  }
  const Crossing c = crossing_at(d, site, 0);
  if (c.in == c.out) no_match(site, "kink closes a circle on its own");
  if (c.over != c.in && c.over != c.out) no_match(site, "over arc is not part of the kink");
  Arc* in = d.find_arc(c.in);
  const Arc out = *d.find_arc(c.out);
  in->to = out.to;
  retarget_in(d, out.to, in->id);
  erase_crossing(d, c.id);
  redirect_refs(d, out.id, in->id);
  erase_arc(d, out.id);
}

void apply_r2(WeldedDiagram& d, const MoveSite& site) {
  if (site.dir == Direction::insert) {
    const std::string x = arc_at(d, site, 0).id;
    const std::string y = arc_at(d, site, 1).id;
    if (x == y) no_match(site, "over and under arc coincide");
    if (site.sign != 1 && site.sign != -1) no_match(site, "sign must be ±1");
    const std::string k1 = fresh_id(d, "k");
    d.crossings.push_back({k1, site.sign, x, y, ""});
    const std::string y2 = split_arc(d, y, k1);
    const std::string k2 = fresh_id(d, "k");
    d.crossings.push_back({k2, -site.sign, x, y2, ""});
    const std::string y3 = split_arc(d, y2, k2);
    d.find_crossing(k1)->out = y2;
    d.find_crossing(k2)->out = y3;
    return;
  }
  const Crossing c1 = crossing_at(d, site, 0);
  const Crossing c2 = crossing_at(d, site, 1);
  if (c1.id == c2.id) no_match(site, "needs two crossings");
  if (c1.out != c2.in) no_match(site, "crossings are not consecutive on the under strand");
  if (c1.over != c2.over) no_match(site, "different over arcs");
  if (c1.sign != -c2.sign) no_match(site, "signs are not opposite");
  const std::string m = c1.out;
  if (has_refs(d, m)) no_match(site, "middle arc is crossed");
  if (c1.in == c2.out) no_match(site, "under strand is a circle through the bigon only");
  if (c1.over == c1.in || c1.over == m || c1.over == c2.out) no_match(site, "over arc belongs to the under strand");
  const std::string y1 = c1.in;
  const Arc y3 = *d.find_arc(c2.out);
  d.find_arc(y1)->to = y3.to;
  retarget_in(d, y3.to, y1);
  erase_crossing(d, c1.id);
  erase_crossing(d, c2.id);
  erase_arc(d, m);
  redirect_refs(d, y3.id, y1);
  erase_arc(d, y3.id);
}

void apply_r3(WeldedDiagram& d, const MoveSite& site) {
  const Crossing f = crossing_at(d, site, 0);
  const Crossing s = crossing_at(d, site, 1);
  const Crossing k = crossing_at(d, site, 2);
  if (f.id == s.id || k.id == f.id || k.id == s.id) no_match(site, "needs three distinct crossings");
  if (f.out != s.in) no_match(site, "bottom crossings are not consecutive");
  const std::string m = f.out;
  if (has_refs(d, m)) no_match(site, "middle bottom arc is crossed");
  const std::string t = k.over, m1 = k.in, m2 = k.out;
  if (t == m1 || t == m2 || m1 == m2) no_match(site, "top crossing is degenerate");
  for (const auto& b : {f.in, m, s.out}) {
    if (b == t || b == m1 || b == m2) no_match(site, "bottom strand meets the top crossing");
  }
  Crossing* F = d.find_crossing(f.id);
  Crossing* S = d.find_crossing(s.id);
  if ((f.over == m1 || f.over == m2) && s.over == t) {
    const bool ok = (f.over == m1 && k.sign == s.sign) || (f.over == m2 && k.sign == -s.sign);
    if (!ok) no_match(site, "crossing signs do not form a triangle");
    F->over = t;
    F->sign = s.sign;
    S->over = f.over == m1 ? m2 : m1;
    S->sign = f.sign;
  } else if (f.over == t && (s.over == m1 || s.over == m2)) {
    const bool ok = (s.over == m1 && k.sign == -f.sign) || (s.over == m2 && k.sign == f.sign);
    if (!ok) no_match(site, "crossing signs do not form a triangle");
    F->over = s.over == m1 ? m2 : m1;
    F->sign = s.sign;
    S->over = t;
    S->sign = f.sign;
  } else {
    no_match(site, "bottom crossings do not pass under the top crossing's strands");
  }
}

void apply_virtual(WeldedDiagram& d, const MoveSite& site) {
  switch (site.move) {
    case Move::V1:
      if (site.dir == Direction::insert) {
        const std::string a = arc_at(d, site, 0).id;
        d.vcrossings.push_back({fresh_id(d, "v"), a, a});
      } else {
        const std::size_t i = vxing_index(d, site, 0);
        if (d.vcrossings[i].a != d.vcrossings[i].b) no_match(site, "not a virtual kink");
        d.vcrossings.erase(d.vcrossings.begin() + static_cast<long>(i));
      }
      return;
    case Move::V2:
      if (site.dir == Direction::insert) {
        const std::string a = arc_at(d, site, 0).id;
        const std::string b = arc_at(d, site, 1).id;
        d.vcrossings.push_back({fresh_id(d, "v"), a, b});
        d.vcrossings.push_back({fresh_id(d, "v"), a, b});
      } else {
        const std::size_t i = vxing_index(d, site, 0);
        const std::size_t j = vxing_index(d, site, 1);
        const auto& x = d.vcrossings[i];
        const auto& y = d.vcrossings[j];
        const bool same = (x.a == y.a && x.b == y.b) || (x.a == y.b && x.b == y.a);
        if (i == j || !same) no_match(site, "virtual crossings do not form a bigon");
        d.vcrossings.erase(d.vcrossings.begin() + static_cast<long>(std::max(i, j)));
        d.vcrossings.erase(d.vcrossings.begin() + static_cast<long>(std::min(i, j)));
      }
      return;
    case Move::V3: {
      std::vector<std::size_t> idx = {vxing_index(d, site, 0), vxing_index(d, site, 1), vxing_index(d, site, 2)};
      std::set<std::string> arcs;
      std::set<std::size_t> distinct(idx.begin(), idx.end());
      for (auto i : idx) {
        arcs.insert(d.vcrossings[i].a);
        arcs.insert(d.vcrossings[i].b);
        if (d.vcrossings[i].a == d.vcrossings[i].b) no_match(site, "virtual kink in a triangle");
      }
      if (distinct.size() != 3 || arcs.size() != 3) no_match(site, "virtual crossings do not form a triangle");
      std::sort(idx.begin(), idx.end());
      std::swap(d.vcrossings[idx[0]], d.vcrossings[idx[2]]);
      return;
    }
    case Move::mixed: {
      const std::size_t i = vxing_index(d, site, 0);
      const Crossing& k = crossing_at(d, site, 1);
      auto& v = d.vcrossings[i];
      std::string* end = nullptr;
      std::string z;
      if (v.a == k.in || v.a == k.out) {
        end = &v.a;
        z = v.b;
      } else if (v.b == k.in || v.b == k.out) {
        end = &v.b;
        z = v.a;
      }
      if (!end || k.in == k.out || z == k.in || z == k.out) no_match(site, "virtual crossing is not next to the crossing");
      const bool passes_over = std::any_of(d.vcrossings.begin(), d.vcrossings.end(), [&](const VirtualCrossing& w) {
        return w.id != v.id && ((w.a == z && w.b == k.over) || (w.b == z && w.a == k.over));
      });
      if (!passes_over) no_match(site, "strand does not also cross the over arc virtually");
      *end = *end == k.in ? k.out : k.in;
      return;
    }
    default:
      break;
  }
}

void apply_oc(WeldedDiagram& d, const MoveSite& site) {
  const Crossing& a = crossing_at(d, site, 0);
  const Crossing& b = crossing_at(d, site, 1);
  if (a.id == b.id || a.over != b.over) no_match(site, "crossings do not share an over arc");
  auto ia = std::find_if(d.crossings.begin(), d.crossings.end(), [&](const Crossing& c) { return c.id == a.id; });
  auto ib = std::find_if(d.crossings.begin(), d.crossings.end(), [&](const Crossing& c) { return c.id == b.id; });
  std::iter_swap(ia, ib);
}

}  // namespace

WeldedDiagram apply_move(const WeldedDiagram& d, const MoveSite& site) {
  require_valid(d);
  const auto before = arc_colors(d);
  WeldedDiagram r = d;
  switch (site.move) {
    case Move::R1: apply_r1(r, site); break;
    case Move::R2: apply_r2(r, site); break;
    case Move::R3: apply_r3(r, site); break;
    case Move::OC: apply_oc(r, site); break;
    default: apply_virtual(r, site); break;
  }
  restore_colors(r, before);
  require_valid(r);
  return r;
}

std::vector<MoveSite> enumerate_sites(const WeldedDiagram& d, Move move, Direction dir) {
  std::vector<MoveSite> out;
  auto try_site = [&](MoveSite s) {
    try {
      apply_move(d, s);
      out.push_back(std::move(s));
    } catch (const PatternError&) {
    }
  };
  const bool ins = dir == Direction::insert;
  switch (move) {
    case Move::R1:
      if (ins) {
        for (const auto& a : d.arcs) {
          for (int sign : {1, -1}) {
            for (bool first : {true, false}) out.push_back({move, dir, {a.id}, sign, first});
          }
        }
      } else {
        for (const auto& c : d.crossings) try_site({move, dir, {c.id}});
      }
      break;
    case Move::R2:
      if (ins) {
        for (const auto& x : d.arcs) {
          for (const auto& y : d.arcs) {
            if (x.id == y.id) continue;
            for (int sign : {1, -1}) out.push_back({move, dir, {x.id, y.id}, sign});
          }
        }
      } else {
        for (const auto& c : d.crossings) {
          if (const Crossing* next = d.find_crossing(d.find_arc(c.out)->to)) try_site({move, dir, {c.id, next->id}});
        }
      }
      break;
    case Move::R3:
      for (const auto& f : d.crossings) {
        const Crossing* s = d.find_crossing(d.find_arc(f.out)->to);
        if (!s) continue;
        for (const auto& k : d.crossings) try_site({move, dir, {f.id, s->id, k.id}});
      }
      break;
    case Move::V1:
      if (ins) {
        for (const auto& a : d.arcs) out.push_back({move, dir, {a.id}});
      } else {
        for (const auto& v : d.vcrossings) try_site({move, dir, {v.id}});
      }
      break;
    case Move::V2:
      if (ins) {
        for (std::size_t i = 0; i < d.arcs.size(); ++i) {
          for (std::size_t j = i + 1; j < d.arcs.size(); ++j) out.push_back({move, dir, {d.arcs[i].id, d.arcs[j].id}});
        }
      } else {
        for (std::size_t i = 0; i < d.vcrossings.size(); ++i) {
          for (std::size_t j = i + 1; j < d.vcrossings.size(); ++j) {
            try_site({move, dir, {d.vcrossings[i].id, d.vcrossings[j].id}});
          }
        }
      }
      break;
    case Move::V3: {
      const auto& v = d.vcrossings;
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
          for (std::size_t k = j + 1; k < v.size(); ++k) try_site({move, dir, {v[i].id, v[j].id, v[k].id}});
        }
      }
      break;
    }
    case Move::mixed:
      for (const auto& v : d.vcrossings) {
        for (const auto& c : d.crossings) try_site({move, dir, {v.id, c.id}});
      }
      break;
    case Move::OC:
      for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        for (std::size_t j = i + 1; j < d.crossings.size(); ++j) {
          if (d.crossings[i].over == d.crossings[j].over) out.push_back({move, dir, {d.crossings[i].id, d.crossings[j].id}});
        }
      }
      break;
  }
  return out;
}

}  // namespace welded
