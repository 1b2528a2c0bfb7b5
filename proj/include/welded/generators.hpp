#pragma once

// Seeded random instances for property suites and benchmarks.

#include <optional>
#include <random>

#include "welded/circuit.hpp"
#include "welded/diagram.hpp"
#include "welded/exterior.hpp"
#include "welded/moves.hpp"
#include "welded/ring.hpp"

namespace welded {

using Rng = std::mt19937_64;

struct PolyShape {
  int nvars = 1;
  int max_terms = 4;
  int max_exponent = 2;  // exponents drawn from [-max_exponent, max_exponent]
  int max_coeff = 5;
  bool laurent = true;   // allow negative exponents
};

LaurentPoly random_poly(Rng& rng, const PolyShape& shape);
PolyMatrix random_matrix(Rng& rng, int rows, int cols, const PolyShape& shape);
/// Grade `grade` tensor over rank `rank`; each coefficient is zero with
/// probability `zero_prob`.
InvariantTensor random_tensor(Rng& rng, int rank, int grade, const PolyShape& shape, double zero_prob = 0.3);

struct DiagramShape {
  int min_strands = 1;
  int max_strands = 3;
  int max_circles = 1;
  int max_crossings = 8;
  int max_virtual = 2;
  int mu = 2;
  double extra_point_prob = 0.15;
  double triangle_prob = 0.3;  // chance of planting an R3-ready triangle
};

/// A welded diagram drawn as a random Gauss diagram: under-passages are spread
/// over the components and every crossing gets a uniformly random over arc.
/// A planted triangle adds three crossings K, F, S where F, S are consecutive
/// under-passages of one strand below the two strands meeting at K.
WeldedDiagram random_diagram(Rng& rng, const DiagramShape& shape);

/// A random applicable generalized move; weighted towards the classical ones.
std::optional<MoveSite> random_move(Rng& rng, const WeldedDiagram& d);

/// Random circuit whose outer points enter at `outer_entering`, with inner
/// disks of the given arities (even). All curves have color 1.
CircuitDiagram random_circuit(Rng& rng, const std::vector<bool>& outer_entering, const std::vector<int>& arities,
                              double loop_prob = 0.1);
/// As above with a prescribed entering pattern for every inner disk.
CircuitDiagram random_circuit(Rng& rng, const std::vector<bool>& outer_entering,
                              const std::vector<std::vector<bool>>& inner_entering, double loop_prob = 0.1);

/// Balanced random orientation pattern of 2n points.
std::vector<bool> random_entering(Rng& rng, int n);

}  // namespace welded
