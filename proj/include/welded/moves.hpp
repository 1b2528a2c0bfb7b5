#pragma once

// Generalized Reidemeister moves on welded diagrams.

#include <string>
#include <vector>

#include "welded/diagram.hpp"

namespace welded {

enum class Move { R1, R2, R3, V1, V2, V3, mixed, OC };
enum class Direction { insert, remove };

/// Where a move applies. Meaning of `ids` per move:
///   R1 insert: {arc}; `sign`, and `over_first` puts the over strand on the
///              incoming piece.          R1 remove: {crossing}
///   R2 insert: {over arc, under arc}; `sign` of the first crossing.
///              R2 remove: {first crossing, second crossing}
///   R3: {first, second crossing on the bottom strand, crossing of the other two}
///   V1 insert: {arc}                   V1 remove: {virtual crossing}
///   V2 insert: {arc, arc}              V2 remove: {virtual crossing, virtual crossing}
///   V3: {three virtual crossings}
///   mixed: {virtual crossing, crossing} (direction is implied by the pattern)
///   OC: {crossing, crossing} with a common over arc
/// R3, V3, mixed and OC ignore `dir`.
struct MoveSite {
  Move move = Move::R1;
  Direction dir = Direction::insert;
  std::vector<std::string> ids;
  int sign = 1;
  bool over_first = false;

  std::string to_string() const;
};

std::string move_name(Move m);

/// New diagram with the move applied. Throws PatternError when the local
/// configuration does not match. Boundary, n and strand colors are preserved.
WeldedDiagram apply_move(const WeldedDiagram& d, const MoveSite& site);

/// Every site at which (move, dir) applies, in a deterministic order.
std::vector<MoveSite> enumerate_sites(const WeldedDiagram& d, Move move, Direction dir);

}  // namespace welded
