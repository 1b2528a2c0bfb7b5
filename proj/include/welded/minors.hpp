#pragma once

// Maximal minors of a presentation matrix that contain every internal column.

#include <map>

#include "welded/exterior.hpp"
#include "welded/ring.hpp"

namespace welded {

enum class MinorMethod {
  serial,    // one determinant per subset, in order (reference)
  parallel,  // one determinant per subset, OpenMP over subsets
  shared,    // one elimination of the internal columns, then n x n minors
};

/// For a matrix whose first `boundary` columns are boundary columns and whose
/// remaining q columns are internal, returns det(M[:, I ∪ internal]) (columns
/// I first, increasing, then internal) for every subset I of the boundary
/// columns of size rows - q. Zero minors are omitted.
std::map<Subset, LaurentPoly> boundary_minors(const PolyMatrix& m, int boundary,
                                              MinorMethod method = MinorMethod::parallel);

}  // namespace welded
