#include "welded/alexander.hpp"

#include <algorithm>
#include <set>

#include "welded/error.hpp"

namespace welded {

PolyMatrix fox_jacobian(const WirtingerPresentation& w, const std::map<std::string, int>& colors, int mu) {
  const int rows = static_cast<int>(w.relators.size());
  const int cols = static_cast<int>(w.generators.size());
  PolyMatrix m(rows, cols, mu);
  m.col_labels() = w.generators;
  auto color_of = [&](const std::string& g) {
    auto it = colors.find(g);
    const int c = it == colors.end() ? 1 : it->second;
    if (c < 1 || c > mu) throw DimensionError("color " + std::to_string(c) + " of arc " + g + " exceeds mu=" + std::to_string(mu));
    return c;
  };
  for (int r = 0; r < rows; ++r) {
    const Relator& rel = w.relators[static_cast<std::size_t>(r)];
    m.row_labels()[static_cast<std::size_t>(r)] = rel.source;
    // ∂(uv)/∂g = ∂u/∂g + u ∂v/∂g, ∂g/∂g = 1, ∂g⁻¹/∂g = -g⁻¹, all abelianized.
    Exponents prefix(static_cast<std::size_t>(mu), 0);
    for (const Letter& l : rel.word) {
      const int c = color_of(l.generator);
      const int col = m.col_index(l.generator);
      Exponents e = prefix;
      if (l.power < 0) e[static_cast<std::size_t>(c - 1)] -= 1;
      m.at(r, col) += LaurentPoly::monomial(mu, e, l.power > 0 ? 1 : -1);
      prefix[static_cast<std::size_t>(c - 1)] += l.power;
    }
    // Clear negative powers row by row.
    Exponents low(static_cast<std::size_t>(mu), 0);
    bool any = false;
    for (int c = 0; c < cols; ++c) {
      for (const Term& t : m.at(r, c).terms()) {
        for (int v = 0; v < mu; ++v) {
          low[static_cast<std::size_t>(v)] = any ? std::min(low[static_cast<std::size_t>(v)], t.exponents[static_cast<std::size_t>(v)])
                                                 : t.exponents[static_cast<std::size_t>(v)];
        }
        any = true;
      }
    }
    if (!any) continue;
    UnitMonomial shift{1, low};
    shift = shift.inverse();
    for (int c = 0; c < cols; ++c) m.at(r, c) = m.at(r, c).times(shift);
  }
  return m;
}

namespace {

int resolve_mu(const WeldedDiagram& d, int mu) {
  const int need = color_count(d);
  if (mu < 0) return need;
  if (mu < need) {
    throw DimensionError("diagram uses color " + std::to_string(need) + " but mu=" + std::to_string(mu));
  }
  return mu;
}

}  // namespace

PolyMatrix build_matrix(const WeldedDiagram& d, int mu) {
  require_valid(d);
  mu = resolve_mu(d, mu);
  const WeldedDiagram nd = with_division_points(d);
  const PolyMatrix fox = fox_jacobian(wirtinger(nd), arc_colors(nd), mu);

  std::vector<int> col_order;
  for (int b = 1; b <= nd.boundary; ++b) {
    const std::string anchor = boundary_anchor(b);
    for (const auto& a : nd.arcs) {
      if (a.from == anchor || a.to == anchor) col_order.push_back(fox.col_index(a.id));
    }
  }
  std::vector<std::string> internal;
  for (const auto& a : nd.arcs) {
    if (!boundary_index(a.from) && !boundary_index(a.to)) internal.push_back(a.id);
  }
  std::sort(internal.begin(), internal.end());
  for (const auto& id : internal) col_order.push_back(fox.col_index(id));

  // Relators come crossings first; rows here put division points first.
  const int nx = static_cast<int>(nd.crossings.size());
  std::vector<int> row_order;
  for (int r = nx; r < fox.rows(); ++r) row_order.push_back(r);
  for (int r = 0; r < nx; ++r) row_order.push_back(r);

  PolyMatrix m(fox.rows(), fox.cols(), mu);
  for (int r = 0; r < m.rows(); ++r) {
    m.row_labels()[static_cast<std::size_t>(r)] = fox.row_labels()[static_cast<std::size_t>(row_order[r])];
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = fox.at(row_order[r], col_order[static_cast<std::size_t>(c)]);
  }
  for (int c = 0; c < m.cols(); ++c)
    m.col_labels()[static_cast<std::size_t>(c)] = fox.col_labels()[static_cast<std::size_t>(col_order[static_cast<std::size_t>(c)])];
  return m;
}

InvariantTensor alpha_from_matrix(const PolyMatrix& m, int boundary, MinorMethod method) {
  const int q = m.cols() - boundary;
  InvariantTensor a(boundary, m.rows() - q, m.nvars());
  for (auto& [s, c] : boundary_minors(m, boundary, method)) a.add(s, c);
  return a;
}

InvariantTensor alpha(const WeldedDiagram& d, int mu, MinorMethod method) {
  return alpha_from_matrix(build_matrix(d, mu), d.boundary, method);
}

LaurentPoly alexander_function(const PolyMatrix& m, const Subset& generators) {
  const int k = static_cast<int>(generators.size());
  if (m.rows() + k != m.cols()) {
    throw DimensionError("Alexander function of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " presentation takes " + std::to_string(m.cols() - m.rows()) + " generators, got " +
                         std::to_string(k));
  }
  PolyMatrix full(m.cols(), m.cols(), m.nvars());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) full.at(r, c) = m.at(r, c);
  }
  for (int j = 0; j < k; ++j) {
    const int g = generators[static_cast<std::size_t>(j)];
    if (g < 1 || g > m.cols()) throw DimensionError("generator index " + std::to_string(g) + " out of range");
    full.at(m.rows() + j, g - 1) = LaurentPoly::constant(m.nvars(), 1);
  }
  return determinant(full);
}

InvariantTensor alpha_by_duality(const WeldedDiagram& d, int mu) {
  const PolyMatrix m = build_matrix(d, mu);
  return from_volume_pairing(d.boundary, d.n(), m.nvars(),
                             [&](const Subset& jbar) { return alexander_function(m, jbar); });
}

LaurentPoly alexander_poly_11(const WeldedDiagram& d, int mu) {
  require_valid(d);
  if (d.boundary != 2) throw ShapeError("a (1-1)-tangle has exactly two boundary points, got " + std::to_string(d.boundary));
  mu = resolve_mu(d, mu);
  const InvariantTensor a = alpha(d, mu);
  const LaurentPoly c = a.coeff({1});
  if (a.coeff({2}) != -c) {
    throw ConsistencyError("invariant of a (1-1)-tangle is not a multiple of x1 - x2: " + a.to_string());
  }
  const auto comps = components(d);
  std::set<int> colors;
  for (const auto& comp : comps) colors.insert(comp.color);
  LaurentPoly delta = c;
  if (colors.size() >= 2) {
    const LaurentPoly t = LaurentPoly::variable(mu, comps.front().color);
    try {
      delta = exact_div(c, t - LaurentPoly::constant(mu, 1));
    } catch (const DivisibilityError&) {
      throw ConsistencyError("coefficient " + c.to_string() + " is not divisible by " +
                             (t - LaurentPoly::constant(mu, 1)).to_string());
    }
  }
  return normalize_unit(delta).first;
}

// ---------------------------------------------------------------------------

const GradedMap* GradedMapFamily::component(int k) const {
  for (const auto& m : maps) {
    if (m.k == k) return &m;
  }
  return nullptr;
}

namespace {

Subset shifted(Subset s, int by) {
  for (int& x : s) x += by;
  return s;
}

}  // namespace

GradedMapFamily split_hom(const InvariantTensor& a, SplitSpec s) {
  if (s.n0 < 0 || s.n1 < 0 || s.n0 + s.n1 != a.rank()) {
    throw SpecError("split " + std::to_string(s.n0) + "," + std::to_string(s.n1) + " does not partition rank " +
                    std::to_string(a.rank()));
  }
  GradedMapFamily f;
  f.spec = s;
  f.grade = a.grade();
  f.nvars = a.nvars();
  const int n = a.grade();
  for (int k = std::max(0, n - s.n1); k <= std::min(n, s.n0); ++k) {
    GradedMap g;
    g.k = k;
    g.sign = (k * (s.n0 - k)) % 2 == 0 ? 1 : -1;
    g.domain = k_subsets(s.n0, s.n0 - k);
    for (const auto& j : k_subsets(s.n1, n - k)) g.codomain.push_back(shifted(j, s.n0));
    g.induced = PolyMatrix(static_cast<int>(g.codomain.size()), static_cast<int>(g.domain.size()), a.nvars());
    for (std::size_t r = 0; r < g.codomain.size(); ++r) {
      for (std::size_t c = 0; c < g.domain.size(); ++c) {
        const Subset& dom = g.domain[c];
        const Subset i0 = complement(dom, s.n0);
        Subset full = i0;
        full.insert(full.end(), g.codomain[r].begin(), g.codomain[r].end());
        const LaurentPoly v = a.coeff(full);
        g.induced.at(static_cast<int>(r), static_cast<int>(c)) = subset_signature(dom, i0) > 0 ? v : -v;
      }
    }
    g.rho = g.induced;
    if (g.sign < 0) {
      for (int r = 0; r < g.rho.rows(); ++r) {
        for (int c = 0; c < g.rho.cols(); ++c) g.rho.at(r, c) = -g.rho.at(r, c);
      }
    }
    f.maps.push_back(std::move(g));
  }
  return f;
}

InvariantTensor merge_hom(const GradedMapFamily& f) {
  InvariantTensor a(f.spec.n0 + f.spec.n1, f.grade, f.nvars);
  for (const auto& g : f.maps) {
    for (std::size_t r = 0; r < g.codomain.size(); ++r) {
      for (std::size_t c = 0; c < g.domain.size(); ++c) {
        const LaurentPoly& v = g.induced.at(static_cast<int>(r), static_cast<int>(c));
        if (v.is_zero()) continue;
        const Subset i0 = complement(g.domain[c], f.spec.n0);
        Subset full = i0;
        full.insert(full.end(), g.codomain[r].begin(), g.codomain[r].end());
        a.add(full, subset_signature(g.domain[c], i0) > 0 ? v : -v);
      }
    }
  }
  return a;
}

// ---------------------------------------------------------------------------

WeldedDiagram braid_tangle(int strands, const std::vector<int>& word, std::vector<int> colors) {
  if (strands < 1) throw ShapeError("a braid needs at least one strand");
  if (colors.empty()) colors.assign(static_cast<std::size_t>(strands), 1);
  if (static_cast<int>(colors.size()) != strands) throw ShapeError("one color per strand expected");
  WeldedDiagram d;
  d.name = "braid";
  d.boundary = 2 * strands;
  std::vector<std::size_t> at(static_cast<std::size_t>(strands));  // arc index at each position
  for (int j = 0; j < strands; ++j) {
    d.arcs.push_back({"a" + std::to_string(j + 1), boundary_anchor(j + 1), ""});
    at[static_cast<std::size_t>(j)] = d.arcs.size() - 1;
    if (colors[static_cast<std::size_t>(j)] != 1) d.colors[d.arcs.back().id] = colors[static_cast<std::size_t>(j)];
  }
  int step = 0;
  for (int letter : word) {
    const int i = std::abs(letter);
    if (letter == 0 || i >= strands) throw ShapeError("braid letter " + std::to_string(letter) + " out of range");
    ++step;
    const std::size_t p = static_cast<std::size_t>(i - 1);
    const std::size_t over_pos = letter > 0 ? p : p + 1;
    const std::size_t under_pos = letter > 0 ? p + 1 : p;
    const std::string xid = "c" + std::to_string(step);
    Arc& under = d.arcs[at[under_pos]];
    under.to = xid;
    const std::string under_id = under.id;
    const std::string over_id = d.arcs[at[over_pos]].id;
    const std::string out_id = "a" + std::to_string(strands + step);
    d.arcs.push_back({out_id, xid, ""});
    d.crossings.push_back({xid, letter > 0 ? 1 : -1, over_id, under_id, out_id});
    // The over strand moves to the under strand's position and vice versa.
    const std::size_t new_under = d.arcs.size() - 1;
    at[under_pos] = at[over_pos];
    at[over_pos] = new_under;
  }
  for (int j = 0; j < strands; ++j) d.arcs[at[static_cast<std::size_t>(j)]].to = boundary_anchor(strands + j + 1);
  require_valid(d);
  return d;
}

std::vector<int> braid_permutation(int strands, const std::vector<int>& word) {
  std::vector<int> strand_at(static_cast<std::size_t>(strands));
  for (int j = 0; j < strands; ++j) strand_at[static_cast<std::size_t>(j)] = j;
  for (int letter : word) {
    const int i = std::abs(letter);
    if (letter == 0 || i >= strands) throw ShapeError("braid letter " + std::to_string(letter) + " out of range");
    std::swap(strand_at[static_cast<std::size_t>(i - 1)], strand_at[static_cast<std::size_t>(i)]);
  }
  std::vector<int> perm(static_cast<std::size_t>(strands));
  for (int pos = 0; pos < strands; ++pos) perm[static_cast<std::size_t>(strand_at[static_cast<std::size_t>(pos)])] = pos;
  return perm;
}

PolyMatrix burau_matrix(const WeldedDiagram& braid, int mu) {
  require_valid(braid);
  const int m = braid.n();
  for (int b = 1; b <= braid.boundary; ++b) {
    if (boundary_is_in(braid, b) != (b <= m)) {
      throw ShapeError("not braid-like: boundary points 1.." + std::to_string(m) + " must enter and " +
                       std::to_string(m + 1) + ".." + std::to_string(2 * m) + " must leave");
    }
  }
  const InvariantTensor a = alpha(braid, mu);
  Subset bottom(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) bottom[static_cast<std::size_t>(j)] = j + 1;
  const LaurentPoly scale = a.coeff(bottom);
  if (!scale.is_unit()) {
    throw ShapeError("not braid-like: coefficient of the bottom volume is " + scale.to_string() + ", not a unit");
  }
  // With this scaling the trivial braid's induced map is (-1)^m times the
  // identity; the extra sign makes it the identity.
  UnitMonomial inv = normalize_unit(scale).second.inverse();
  if (m % 2 == 1) inv.sign = -inv.sign;
  const GradedMapFamily f = split_hom(a, {m, m});
  const GradedMap* g = f.component(m - 1);
  PolyMatrix out(m, m, a.nvars());
  for (int r = 0; r < m; ++r) {
    out.row_labels()[static_cast<std::size_t>(r)] = "x" + std::to_string(m + r + 1);
    out.col_labels()[static_cast<std::size_t>(r)] = "x" + std::to_string(r + 1);
    for (int c = 0; c < m; ++c) out.at(r, c) = g->induced.at(r, c).times(inv);
  }
  return out;
}

UnitWitness matrices_equal_up_to_unit(const PolyMatrix& a, const PolyMatrix& b) {
  UnitWitness w{false, UnitMonomial::one(a.nvars())};
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.nvars() != b.nvars()) return w;
  bool found = false;
  for (int r = 0; r < a.rows() && !found; ++r) {
    for (int c = 0; c < a.cols() && !found; ++c) {
      if (a.at(r, c).is_zero()) continue;
      const auto [pa, ua] = normalize_unit(a.at(r, c));
      const auto [pb, ub] = normalize_unit(b.at(r, c));
      if (pa != pb) return w;
      w.witness = ua * ub.inverse();
      found = true;
    }
  }
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      if (a.at(r, c) != b.at(r, c).times(w.witness)) return w;
    }
  }
  w.equal = true;
  return w;
}

BurauReport burau_check(int strands, const std::vector<int>& word, std::vector<int> colors, int mu) {
  if (colors.empty()) colors.assign(static_cast<std::size_t>(strands), 1);
  if (mu < 0) mu = std::max(1, *std::max_element(colors.begin(), colors.end()));
  BurauReport rep;
  rep.matrix = burau_matrix(braid_tangle(strands, word, colors), mu);
  rep.permutation = braid_permutation(strands, word);

  PolyMatrix prod(strands, strands, mu);
  for (int j = 0; j < strands; ++j) prod.at(j, j) = LaurentPoly::constant(mu, 1);
  std::vector<int> cur = colors;
  for (int letter : word) {
    prod = multiply(burau_matrix(braid_tangle(strands, {letter}, cur), mu), prod);
    const int i = std::abs(letter);
    std::swap(cur[static_cast<std::size_t>(i - 1)], cur[static_cast<std::size_t>(i)]);
  }
  rep.product = prod;
  rep.multiplicative = matrices_equal_up_to_unit(rep.matrix, rep.product).equal;

  std::map<int, long> ones;
  for (int v = 1; v <= mu; ++v) ones[v] = 1;
  rep.at_one = PolyMatrix(strands, strands, mu);
  rep.permutation_ok = true;
  for (int r = 0; r < strands; ++r) {
    for (int c = 0; c < strands; ++c) {
      rep.at_one.at(r, c) = specialize(rep.matrix.at(r, c), ones);
      const bool hit = rep.permutation[static_cast<std::size_t>(c)] == r;
      if (rep.at_one.at(r, c) != LaurentPoly::constant(mu, hit ? 1 : 0)) rep.permutation_ok = false;
    }
  }
  return rep;
}

}  // namespace welded
