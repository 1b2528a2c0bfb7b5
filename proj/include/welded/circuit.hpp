#pragma once

// Circuit diagrams: disks with marked points joined by oriented colored
// curves. They compose as an operad, act on invariant tensors through
// contract_matched, and act on diagrams by gluing.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "welded/diagram.hpp"
#include "welded/exterior.hpp"

namespace welded {

struct CircuitDisk {
  std::string id;
  int arity = 0;

  friend bool operator==(const CircuitDisk&, const CircuitDisk&) = default;
};

/// Ports use disk 0 for the outer disk and 1..p for inner disks in
/// declaration order. A curve without ends is a closed loop.
struct Curve {
  std::string id;
  int color = 1;
  std::optional<Port> from;
  std::optional<Port> to;

  friend bool operator==(const Curve&, const Curve&) = default;
};

struct CircuitDiagram {
  std::string name = "circuit";
  int outer = 0;
  std::vector<CircuitDisk> disks;
  std::vector<Curve> curves;

  friend bool operator==(const CircuitDiagram&, const CircuitDiagram&) = default;
};

CircuitDiagram parse_circuit(std::string_view text, bool check = true);
std::string serialize_circuit(const CircuitDiagram& c);
nlohmann::json circuit_to_json(const CircuitDiagram& c);
CircuitDiagram circuit_from_json(const nlohmann::json& j, bool check = true);
CircuitDiagram load_circuit(std::string_view text, bool check = true);

/// Throws WiringError for unmatched or doubly matched points, unbalanced
/// orientations or bad colors.
void validate_circuit(const CircuitDiagram& c);

Wiring wiring(const CircuitDiagram& c);

/// For each marked point of `disk` (0 = outer): true when a strand enters the
/// tangle sitting in that disk there (for the outer disk: enters the glued
/// tangle), i.e. the curve arrives at an inner point or leaves an outer one.
std::vector<bool> entering_points(const CircuitDiagram& c, int disk);

/// Color of the curve at each marked point of `disk`.
std::vector<int> point_colors(const CircuitDiagram& c, int disk);

/// One inner disk wired straight to the outer disk.
CircuitDiagram identity_circuit(const std::vector<bool>& entering, const std::vector<int>& colors);

/// p1 ∘_i p2: p2 rescaled into inner disk i (1-based) of p1. Disks are
/// renumbered p1's 1..i-1, p2's, then p1's i+1..
CircuitDiagram compose_circuits(const CircuitDiagram& p1, int i, const CircuitDiagram& p2);

/// γ_P on inputs of grade n_i over rank 2n_i.
InvariantTensor gamma(const CircuitDiagram& p, const std::vector<InvariantTensor>& inputs,
                      Execution exec = Execution::parallel, int nvars = 1);

/// Inserts tangles[i] into disk i+1 and turns curves into arcs joined by
/// division points.
WeldedDiagram glue_tangles(const CircuitDiagram& p, const std::vector<WeldedDiagram>& tangles);

}  // namespace welded
