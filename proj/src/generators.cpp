#include "welded/generators.hpp"

#include <algorithm>

namespace welded {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

LaurentPoly random_poly(Rng& rng, const PolyShape& shape) {
  std::vector<Term> terms;
  const int count = uniform(rng, 0, shape.max_terms);
  for (int k = 0; k < count; ++k) {
    Exponents e(static_cast<std::size_t>(shape.nvars));
    for (int& x : e) x = uniform(rng, shape.laurent ? -shape.max_exponent : 0, shape.max_exponent);
    int c = 0;
    while (c == 0) c = uniform(rng, -shape.max_coeff, shape.max_coeff);
    terms.push_back({std::move(e), c});
  }
  return LaurentPoly::from_terms(shape.nvars, std::move(terms));
}

PolyMatrix random_matrix(Rng& rng, int rows, int cols, const PolyShape& shape) {
  PolyMatrix m(rows, cols, shape.nvars);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m.at(r, c) = random_poly(rng, shape);
  }
  return m;
}

InvariantTensor random_tensor(Rng& rng, int rank, int grade, const PolyShape& shape, double zero_prob) {
  InvariantTensor t(rank, grade, shape.nvars);
  for (const auto& s : k_subsets(rank, grade)) {
    if (coin(rng, zero_prob)) continue;
    t.add(s, random_poly(rng, shape));
  }
  return t;
}

WeldedDiagram random_diagram(Rng& rng, const DiagramShape& shape) {
  const int strands = uniform(rng, shape.min_strands, shape.max_strands);
  const int circles = uniform(rng, 0, shape.max_circles);
  const int ncomp = strands + circles;
  const int random_crossings = uniform(rng, 0, shape.max_crossings);
  const bool triangle = coin(rng, shape.triangle_prob);
  const int crossings = random_crossings + (triangle ? 3 : 0);

  // Events along each component: crossing index >= 0, or -1 for a point.
  std::vector<std::vector<int>> events(static_cast<std::size_t>(ncomp));
  for (int c = 0; c < random_crossings; ++c) {
    auto& ev = events[static_cast<std::size_t>(uniform(rng, 0, ncomp - 1))];
    ev.insert(ev.begin() + uniform(rng, 0, static_cast<int>(ev.size())), c);
  }
  const int K = random_crossings, F = K + 1, S = K + 2;
  if (triangle) {
    // K goes on a strand so its two sides are distinct arcs.
    auto& top = events[static_cast<std::size_t>(uniform(rng, 0, strands - 1))];
    top.insert(top.begin() + uniform(rng, 0, static_cast<int>(top.size())), K);
    auto& bottom = events[static_cast<std::size_t>(uniform(rng, 0, ncomp - 1))];
    const int at = uniform(rng, 0, static_cast<int>(bottom.size()));
    bottom.insert(bottom.begin() + at, {F, S});
  }
  for (auto& ev : events) {
    if (coin(rng, shape.extra_point_prob)) ev.insert(ev.begin() + uniform(rng, 0, static_cast<int>(ev.size())), -1);
  }
  for (int c = strands; c < ncomp; ++c) {
    if (events[static_cast<std::size_t>(c)].empty()) events[static_cast<std::size_t>(c)].push_back(-1);
  }

  std::vector<int> perm(static_cast<std::size_t>(2 * strands));
  for (int k = 0; k < 2 * strands; ++k) perm[static_cast<std::size_t>(k)] = k + 1;
  std::shuffle(perm.begin(), perm.end(), rng);

  WeldedDiagram d;
  d.name = "random";
  d.boundary = 2 * strands;
  d.crossings.resize(static_cast<std::size_t>(crossings));
  for (int c = 0; c < crossings; ++c) {
    d.crossings[static_cast<std::size_t>(c)].id = "c" + std::to_string(c + 1);
    d.crossings[static_cast<std::size_t>(c)].sign = coin(rng, 0.5) ? 1 : -1;
  }
  int npoints = 0;
  int narcs = 0;
  for (int comp = 0; comp < ncomp; ++comp) {
    const bool closed = comp >= strands;
    const auto& ev = events[static_cast<std::size_t>(comp)];
    std::vector<std::string> anchors;
    for (int e : ev) {
      if (e >= 0) {
        anchors.push_back(d.crossings[static_cast<std::size_t>(e)].id);
      } else {
        anchors.push_back("p" + std::to_string(++npoints));
        d.points.push_back({anchors.back(), "", ""});
      }
    }
    std::vector<std::string> ends;  // anchors an arc runs between, in order
    if (!closed) ends.push_back(boundary_anchor(perm[static_cast<std::size_t>(2 * comp)]));
    ends.insert(ends.end(), anchors.begin(), anchors.end());
    if (!closed) ends.push_back(boundary_anchor(perm[static_cast<std::size_t>(2 * comp + 1)]));
    else ends.push_back(anchors.front());
    const int color = uniform(rng, 1, shape.mu);
    for (std::size_t k = 0; k + 1 < ends.size(); ++k) {
      const std::string id = "a" + std::to_string(++narcs);
      d.arcs.push_back({id, ends[k], ends[k + 1]});
      if (k == 0 && color != 1) d.colors[id] = color;
      if (Crossing* x = d.find_crossing(ends[k])) x->out = id;
      if (Point* p = d.find_point(ends[k])) p->out = id;
      if (Crossing* x = d.find_crossing(ends[k + 1])) x->in = id;
      if (Point* p = d.find_point(ends[k + 1])) p->in = id;
    }
  }
  // The arc between F and S must stay uncrossed for the triangle to be usable.
  const std::string middle = triangle ? d.crossings[static_cast<std::size_t>(F)].out : "";
  auto random_arc = [&](const std::vector<std::string>& avoid) {
    std::vector<std::string> ok;
    for (const auto& a : d.arcs) {
      if (a.id != middle && std::find(avoid.begin(), avoid.end(), a.id) == avoid.end()) ok.push_back(a.id);
    }
    if (ok.empty()) return middle;
    return ok[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ok.size()) - 1))];
  };
  for (int c = 0; c < random_crossings; ++c) d.crossings[static_cast<std::size_t>(c)].over = random_arc({});
  if (triangle) {
    Crossing& k = d.crossings[static_cast<std::size_t>(K)];
    Crossing& f = d.crossings[static_cast<std::size_t>(F)];
    Crossing& s = d.crossings[static_cast<std::size_t>(S)];
    k.over = random_arc({k.in, k.out, f.in, s.out});
    f.over = k.in;
    s.over = k.over;
    k.sign = s.sign;
  }
  const int virt = uniform(rng, 0, shape.max_virtual);
  for (int v = 0; v < virt; ++v) d.vcrossings.push_back({"v" + std::to_string(v + 1), random_arc({}), random_arc({})});
  require_valid(d);
  return d;
}

std::optional<MoveSite> random_move(Rng& rng, const WeldedDiagram& d) {
  struct Choice {
    Move move;
    Direction dir;
    int weight;
  };
  static const std::vector<Choice> choices = {
      {Move::R1, Direction::insert, 3}, {Move::R1, Direction::remove, 3}, {Move::R2, Direction::insert, 3},
      {Move::R2, Direction::remove, 3}, {Move::R3, Direction::insert, 6}, {Move::V1, Direction::insert, 1},
      {Move::V1, Direction::remove, 1}, {Move::V2, Direction::insert, 1}, {Move::V2, Direction::remove, 1},
      {Move::V3, Direction::insert, 1}, {Move::mixed, Direction::insert, 1}, {Move::OC, Direction::insert, 2},
  };
  std::vector<int> weights;
  for (const auto& c : choices) weights.push_back(c.weight);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Choice& c = choices[pick(rng)];
    const auto sites = enumerate_sites(d, c.move, c.dir);
    if (sites.empty()) continue;
    return sites[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(sites.size()) - 1))];
  }
  return std::nullopt;
}

std::vector<bool> random_entering(Rng& rng, int n) {
  std::vector<bool> e(static_cast<std::size_t>(2 * n), false);
  std::fill(e.begin(), e.begin() + n, true);
  std::shuffle(e.begin(), e.end(), rng);
  return e;
}

CircuitDiagram random_circuit(Rng& rng, const std::vector<bool>& outer_entering, const std::vector<int>& arities,
                              double loop_prob) {
  std::vector<std::vector<bool>> inner;
  for (int a : arities) inner.push_back(random_entering(rng, a / 2));
  return random_circuit(rng, outer_entering, inner, loop_prob);
}

CircuitDiagram random_circuit(Rng& rng, const std::vector<bool>& outer_entering,
                              const std::vector<std::vector<bool>>& inner_entering, double loop_prob) {
  CircuitDiagram c;
  c.name = "random";
  c.outer = static_cast<int>(outer_entering.size());
  std::vector<Port> sources, sinks;
  for (int k = 1; k <= c.outer; ++k) {
    (outer_entering[static_cast<std::size_t>(k - 1)] ? sources : sinks).push_back({0, k});
  }
  for (std::size_t d = 0; d < inner_entering.size(); ++d) {
    const auto& enter = inner_entering[d];
    c.disks.push_back({"D" + std::to_string(d + 1), static_cast<int>(enter.size())});
    for (std::size_t k = 0; k < enter.size(); ++k) {
      const Port p{static_cast<int>(d) + 1, static_cast<int>(k) + 1};
      (enter[k] ? sinks : sources).push_back(p);
    }
  }
  std::shuffle(sinks.begin(), sinks.end(), rng);
  for (std::size_t k = 0; k < sources.size() && k < sinks.size(); ++k) {
    c.curves.push_back({"w" + std::to_string(k + 1), 1, sources[k], sinks[k]});
  }
  if (coin(rng, loop_prob)) c.curves.push_back({"loop", 1, std::nullopt, std::nullopt});
  validate_circuit(c);
  return c;
}

}  // namespace welded
