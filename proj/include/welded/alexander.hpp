#pragma once

// Presentation matrix of a colored welded tangle, the invariant tensor α, and
// its classical specializations.

#include <string>
#include <vector>

#include "welded/diagram.hpp"
#include "welded/exterior.hpp"
#include "welded/minors.hpp"
#include "welded/ring.hpp"

namespace welded {

/// Abelianized Fox Jacobian: entry (relator, generator) is ∂r/∂g with every
/// arc sent to t_color. Rows are scaled by a monomial so that each variable's
/// smallest exponent in the row is 0.
PolyMatrix fox_jacobian(const WirtingerPresentation& w, const std::map<std::string, int>& colors, int mu);

/// M^ψ(τ) of size (p+n) x (p+2n). Columns: boundary arcs by boundary index,
/// then internal arcs by id. Rows: division points, then crossings, each in
/// declaration order. `mu` < 0 uses the largest color.
PolyMatrix build_matrix(const WeldedDiagram& d, int mu = -1);

/// Σ_I det(M[:, I ∪ internal]) x_I.
InvariantTensor alpha_from_matrix(const PolyMatrix& m, int boundary, MinorMethod method = MinorMethod::parallel);

InvariantTensor alpha(const WeldedDiagram& d, int mu = -1, MinorMethod method = MinorMethod::parallel);

/// det of M with the unit rows e_g (g in `generators`, 1-based columns)
/// appended: the Alexander function evaluated on γ_g1 ∧ ... ∧ γ_gk.
LaurentPoly alexander_function(const PolyMatrix& m, const Subset& generators);

/// The tensor defined by ω(a ∧ z) = 𝒜(m∂ z), built from Alexander-function
/// values rather than from boundary minors.
InvariantTensor alpha_by_duality(const WeldedDiagram& d, int mu = -1);

/// Δ of a (1-1)-tangle, from α = c·(x1 - x2): c/(t_s - 1) when two or more
/// colors occur (t_s the open strand's color), c otherwise. Canonical unit form.
LaurentPoly alexander_poly_11(const WeldedDiagram& d, int mu = -1);

// ---------------------------------------------------------------------------
// Hom decomposition

/// Boundary split into M0 = x1..x_n0 and M1 = x_{n0+1}..x_{n0+n1}.
struct SplitSpec {
  int n0 = 0;
  int n1 = 0;
};

/// The component A_k ∈ Λ^k M0 ⊗ Λ^{n-k} M1 read as a map
/// Λ^{n0-k} M0 -> Λ^{n-k} M1, x ↦ Σ ω0(x ∧ A_0^l) A_1^l.
struct GradedMap {
  int k = 0;
  int sign = 1;                   // (-1)^{k(n0-k)}
  std::vector<Subset> domain;     // (n0-k)-subsets of M0, column order
  std::vector<Subset> codomain;   // (n-k)-subsets of M1 (global indices), row order
  PolyMatrix induced;             // without the sign
  PolyMatrix rho;                 // sign * induced
};

struct GradedMapFamily {
  SplitSpec spec;
  int grade = 0;
  int nvars = 0;
  std::vector<GradedMap> maps;  // increasing k

  const GradedMap* component(int k) const;
};

GradedMapFamily split_hom(const InvariantTensor& a, SplitSpec s);

/// Inverse of split_hom.
InvariantTensor merge_hom(const GradedMapFamily& f);

// ---------------------------------------------------------------------------
// Braids

/// Upward braid on `strands` strands: bottom points b1..bm enter, top points
/// b(m+1)..b(2m) leave. Letter i > 0 is σ_i (strand at i passes over to i+1,
/// positive crossing), -i its inverse. colors[j] colors the strand starting
/// at bottom position j+1 (default all 1).
WeldedDiagram braid_tangle(int strands, const std::vector<int>& word, std::vector<int> colors = {});

/// Bottom position j (0-based) ends at top position perm[j].
std::vector<int> braid_permutation(int strands, const std::vector<int>& word);

/// Grade-one part of the split invariant of a braid-like tangle, scaled by the
/// inverse of the coefficient of x1 ∧ ... ∧ xm and signed so that the trivial
/// braid gives the identity. Rows x_{m+1}..x_{2m}, columns x1..xm.
/// Throws ShapeError when the boundary is not m ins followed by m outs or the
/// scaling coefficient is not a unit.
PolyMatrix burau_matrix(const WeldedDiagram& braid, int mu = -1);

struct BurauReport {
  PolyMatrix matrix;            // burau_matrix of the whole word
  PolyMatrix product;           // ordered product of per-letter matrices
  PolyMatrix at_one;            // matrix with every t_i = 1
  std::vector<int> permutation;
  bool multiplicative = false;  // matrix ≐ product
  bool permutation_ok = false;  // at_one is the permutation matrix
};

BurauReport burau_check(int strands, const std::vector<int>& word, std::vector<int> colors = {}, int mu = -1);

/// a == u*b entrywise for one unit u.
UnitWitness matrices_equal_up_to_unit(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace welded
