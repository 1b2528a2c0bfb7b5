#pragma once

// Built-in fixture diagrams and circuits, and helpers for building more.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "welded/circuit.hpp"
#include "welded/diagram.hpp"
#include "welded/exterior.hpp"

namespace welded::corpus {

/// Fixture sources in the line formats. File copies live in fixtures/.
extern const char* const sigma_text;
extern const char* const tau_text;
extern const char* const beta_text;
extern const char* const crossing22_text;  // two-colored single crossing
extern const char* const strand_text;
extern const char* const split_circle_text;
extern const char* const hopf11_text;
extern const char* const circuit_p_text;
extern const char* const circuit_q_text;
extern const char* const cap_text;

WeldedDiagram sigma();
WeldedDiagram tau();
WeldedDiagram beta();
WeldedDiagram crossing22();
WeldedDiagram strand();
WeldedDiagram split_circle();
WeldedDiagram hopf11();
WeldedDiagram trefoil();
WeldedDiagram figure_eight();

CircuitDiagram circuit_p();
CircuitDiagram circuit_q();
CircuitDiagram cap();

/// Every built-in diagram by name, in a fixed order.
std::vector<std::pair<std::string, WeldedDiagram>> diagrams();

/// Planar-diagram code X[i,j,k,l] (i the incoming under edge, edges numbered
/// 1..2n along the orientation) of a knot, cut open in the middle of edge 1
/// into a (1-1)-tangle.
using PdCrossing = std::array<int, 4>;
WeldedDiagram long_knot_from_pd(const std::vector<PdCrossing>& pd, const std::string& name = "knot");

/// Σ c · x_{w1} ∧ x_{w2} ∧ ..., with words in any order and c in text form.
InvariantTensor tensor_from_words(int rank, int nvars,
                                  const std::vector<std::pair<std::string, std::vector<int>>>& terms);

/// α(σ) and α(τ) as printed with the two factorizations.
InvariantTensor sigma_alpha();
InvariantTensor tau_alpha();

/// Same outer arity, disk arities and multiset of (color, from, to) curves;
/// ids and declaration order are ignored.
bool same_circuit(const CircuitDiagram& a, const CircuitDiagram& b);

}  // namespace welded::corpus
