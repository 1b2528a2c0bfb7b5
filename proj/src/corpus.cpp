#include "welded/corpus.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "welded/error.hpp"

namespace welded::corpus {

const char* const sigma_text = R"(tangle sigma boundary=4
arc a from=b1 to=p1
arc e from=p1 to=b4
arc f from=b3 to=c1
arc b from=c1 to=b2
xing c1 sign=+ over=e in=f out=b
point p1 in=a out=e
)";

const char* const tau_text = R"(tangle tau boundary=6
arc a from=b1 to=p2
arc e from=p2 to=b4
arc f from=b3 to=x1
arc b from=x1 to=b2
arc c from=b5 to=p1
arc d from=p1 to=b6
xing x1 sign=+ over=a in=f out=b
vxing v1 a=d b=e
point p1 in=c out=d
point p2 in=a out=e
)";

const char* const beta_text = R"(tangle beta boundary=2
arc u from=b1 to=q
arc v from=q to=b2
point q in=u out=v
)";

const char* const crossing22_text = R"(tangle crossing22 boundary=4
arc g1 from=b1 to=p
arc g3 from=p to=b3
arc g4 from=b4 to=c
arc g2 from=c to=b2
xing c sign=+ over=g3 in=g4 out=g2
point p in=g1 out=g3
color g1 t2
color g4 t1
)";

const char* const strand_text = R"(tangle strand boundary=2
arc s from=b1 to=b2
)";

const char* const split_circle_text = R"(tangle split_circle boundary=2
arc s from=b1 to=q1
arc s2 from=q1 to=b2
arc r from=q2 to=q2
point q1 in=s out=s2
point q2 in=r out=r
)";

const char* const hopf11_text = R"(tangle hopf11 boundary=2
arc s1 from=b1 to=h1
arc s2 from=h1 to=b2
arc r from=h2 to=h2
xing h1 sign=+ over=r in=s1 out=s2
xing h2 sign=+ over=s2 in=r out=r
color s1 t1
color r t2
)";

const char* const circuit_p_text = R"(circuit P outer=6
disk D1 arity=4
curve c1 color=t1 from=outer.1 to=D1.1
curve c2 color=t1 from=D1.2 to=outer.2
curve c3 color=t1 from=outer.3 to=D1.3
curve c4 color=t1 from=D1.4 to=outer.4
curve c5 color=t1 from=outer.5 to=outer.6
)";

const char* const circuit_q_text = R"(circuit Q outer=6
disk D1 arity=4
disk D2 arity=2
curve c1 color=t1 from=outer.1 to=D1.1
curve c2 color=t1 from=D1.2 to=outer.2
curve c3 color=t1 from=outer.3 to=D1.3
curve c4 color=t1 from=D1.4 to=outer.4
curve c5 color=t1 from=outer.5 to=D2.1
curve c6 color=t1 from=D2.2 to=outer.6
)";

const char* const cap_text = R"(circuit cap outer=2
curve w color=t1 from=outer.1 to=outer.2
)";

WeldedDiagram sigma() { return parse_diagram(sigma_text); }
WeldedDiagram tau() { return parse_diagram(tau_text); }
WeldedDiagram beta() { return parse_diagram(beta_text); }
WeldedDiagram crossing22() { return parse_diagram(crossing22_text); }
WeldedDiagram strand() { return parse_diagram(strand_text); }
WeldedDiagram split_circle() { return parse_diagram(split_circle_text); }
WeldedDiagram hopf11() { return parse_diagram(hopf11_text); }

WeldedDiagram trefoil() { return long_knot_from_pd({{{1, 5, 2, 4}}, {{3, 1, 4, 6}}, {{5, 3, 6, 2}}}, "trefoil"); }

WeldedDiagram figure_eight() {
  return long_knot_from_pd({{{4, 2, 5, 1}}, {{8, 6, 1, 5}}, {{6, 3, 7, 4}}, {{2, 7, 3, 8}}}, "figure_eight");
}

CircuitDiagram circuit_p() { return parse_circuit(circuit_p_text); }
CircuitDiagram circuit_q() { return parse_circuit(circuit_q_text); }
CircuitDiagram cap() { return parse_circuit(cap_text); }

std::vector<std::pair<std::string, WeldedDiagram>> diagrams() {
  return {{"sigma", sigma()},           {"tau", tau()},         {"beta", beta()},
          {"crossing22", crossing22()}, {"strand", strand()},   {"split_circle", split_circle()},
          {"hopf11", hopf11()},         {"trefoil", trefoil()}, {"figure_eight", figure_eight()}};
}

WeldedDiagram long_knot_from_pd(const std::vector<PdCrossing>& pd, const std::string& name) {
  const int edges = 2 * static_cast<int>(pd.size());
  if (edges == 0) throw ShapeError("empty PD code");
  auto wrap = [&](int e) { return e % edges + 1; };

  // For each edge: the crossing at its head, and whether it arrives there as
  // the under strand.
  std::vector<int> head(static_cast<std::size_t>(edges + 1), -1);
  std::vector<bool> under(static_cast<std::size_t>(edges + 1), false);
  std::vector<int> over_in(pd.size());
  std::vector<int> signs(pd.size());
  for (std::size_t c = 0; c < pd.size(); ++c) {
    const auto [i, j, k, l] = pd[c];
    for (int e : {i, j, k, l}) {
      if (e < 1 || e > edges) throw ShapeError("PD edge label out of range");
    }
    if (k != wrap(i)) throw ShapeError("PD under strand must run from edge i to edge i+1");
    signs[c] = j == wrap(l) ? 1 : -1;
    over_in[c] = signs[c] > 0 ? l : j;
    head[static_cast<std::size_t>(i)] = static_cast<int>(c);
    under[static_cast<std::size_t>(i)] = true;
    head[static_cast<std::size_t>(over_in[c])] = static_cast<int>(c);
  }
  if (std::count(head.begin() + 1, head.end(), -1) != 0) throw ShapeError("PD code is not a closed knot");

  WeldedDiagram d;
  d.name = name;
  d.boundary = 2;
  for (std::size_t c = 0; c < pd.size(); ++c) d.crossings.push_back({"x" + std::to_string(c + 1), signs[c], "", "", ""});

  std::vector<std::string> arc_at_head(static_cast<std::size_t>(edges + 1));
  int count = 1;
  std::string current = "a1";
  std::string from = "b1";
  for (int e = 1; e <= edges; ++e) {
    arc_at_head[static_cast<std::size_t>(e)] = current;
    if (!under[static_cast<std::size_t>(e)]) continue;
    Crossing& x = d.crossings[static_cast<std::size_t>(head[static_cast<std::size_t>(e)])];
    d.arcs.push_back({current, from, x.id});
    x.in = current;
    current = "a" + std::to_string(++count);
    from = x.id;
    x.out = current;
  }
  d.arcs.push_back({current, from, "b2"});
  for (std::size_t c = 0; c < pd.size(); ++c) {
    d.crossings[c].over = arc_at_head[static_cast<std::size_t>(over_in[c])];
  }
  require_valid(d);
  return d;
}

InvariantTensor tensor_from_words(int rank, int nvars,
                                  const std::vector<std::pair<std::string, std::vector<int>>>& terms) {
  InvariantTensor sum;
  bool first = true;
  for (const auto& [coeff, word] : terms) {
    InvariantTensor w = InvariantTensor::scalar(rank, parse_poly(coeff, nvars));
    for (int x : word) w = wedge(w, InvariantTensor::generator(rank, x, nvars));
    if (first) {
      sum = w;
      first = false;
    } else {
      sum += w;
    }
  }
  return sum;
}

InvariantTensor sigma_alpha() {
  return tensor_from_words(4, 1, {{"1", {1, 2}}, {"t - 1", {1, 4}}, {"-t", {1, 3}}, {"1", {2, 4}}, {"-t", {3, 4}}});
}

InvariantTensor tau_alpha() {
  return tensor_from_words(6, 1,
                           {{"-1", {1, 2, 5}},
                            {"1", {1, 2, 6}},
                            {"1", {2, 5, 4}},
                            {"t - 1", {1, 5, 4}},
                            {"-t", {1, 5, 3}},
                            {"1 - t", {1, 6, 4}},
                            {"t", {1, 6, 3}},
                            {"t", {6, 4, 3}},
                            {"-1", {2, 6, 4}},
                            {"-t", {5, 4, 3}}});
}

bool same_circuit(const CircuitDiagram& a, const CircuitDiagram& b) {
  if (a.outer != b.outer || a.disks.size() != b.disks.size()) return false;
  for (std::size_t k = 0; k < a.disks.size(); ++k) {
    if (a.disks[k].arity != b.disks[k].arity) return false;
  }
  using Key = std::tuple<int, std::optional<Port>, std::optional<Port>>;
  auto keys = [](const CircuitDiagram& c) {
    std::vector<Key> out;
    for (const auto& cv : c.curves) out.emplace_back(cv.color, cv.from, cv.to);
    std::sort(out.begin(), out.end());
    return out;
  };
  return keys(a) == keys(b);
}

}  // namespace welded::corpus
