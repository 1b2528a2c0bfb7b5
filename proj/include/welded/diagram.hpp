#pragma once

// Colored welded tangle diagrams: data model, text/JSON formats, validation,
// strand structure and the Wirtinger presentation.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace welded {

/// Anchors are written `bN` for boundary point N, otherwise they name a
/// crossing or a division point.
struct Arc {
  std::string id;
  std::string from;
  std::string to;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Crossing {
  std::string id;
  int sign = 1;
  std::string over;
  std::string in;
  std::string out;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Recorded but inert in all algebra.
struct VirtualCrossing {
  std::string id;
  std::string a;
  std::string b;

  friend bool operator==(const VirtualCrossing&, const VirtualCrossing&) = default;
};

struct Point {
  std::string id;
  std::string in;
  std::string out;

  friend bool operator==(const Point&, const Point&) = default;
};

struct WeldedDiagram {
  std::string name = "tangle";
  int boundary = 0;  // 2n
  std::vector<Arc> arcs;
  std::vector<Crossing> crossings;
  std::vector<VirtualCrossing> vcrossings;
  std::vector<Point> points;
  /// Declared colors keyed by arc id; a color applies to the arc's whole
  /// strand or circle. Undeclared components get color 1.
  std::map<std::string, int> colors;

  int n() const noexcept { return boundary / 2; }

  const Arc* find_arc(std::string_view id) const;
  Arc* find_arc(std::string_view id);
  const Crossing* find_crossing(std::string_view id) const;
  Crossing* find_crossing(std::string_view id);
  const Point* find_point(std::string_view id) const;
  Point* find_point(std::string_view id);

  friend bool operator==(const WeldedDiagram&, const WeldedDiagram&) = default;
};

/// Boundary index N for an anchor `bN`, else 0.
int boundary_index(std::string_view anchor);
std::string boundary_anchor(int index);

/// Syntax errors raise ParseError; with `check` the result is also validated
/// (ValidationError naming the offending entity).
WeldedDiagram parse_diagram(std::string_view text, bool check = true);
std::string serialize_diagram(const WeldedDiagram& d);

nlohmann::json diagram_to_json(const WeldedDiagram& d);
WeldedDiagram diagram_from_json(const nlohmann::json& j, bool check = true);

/// Parses either the line format or its JSON mirror.
WeldedDiagram load_diagram(std::string_view text, bool check = true);

struct Violation {
  std::string invariant;  // e.g. "odd-boundary", "color-continuity"
  std::string entity;
  std::string message;
};

std::vector<Violation> validate(const WeldedDiagram& d);

/// Throws ValidationError listing the violations, if any.
void require_valid(const WeldedDiagram& d);

/// A strand (boundary in to boundary out) or a circle, as arcs in order.
struct Component {
  bool closed = false;
  std::vector<std::string> arcs;
  int color = 1;
};

/// Strands ordered by the boundary index of their first arc, then circles in
/// order of their earliest-declared arc. Requires a valid diagram.
std::vector<Component> components(const WeldedDiagram& d);

/// Color of every arc.
std::map<std::string, int> arc_colors(const WeldedDiagram& d);

/// Largest color in use (at least 1).
int color_count(const WeldedDiagram& d);

/// True when boundary point N is where a strand enters the diagram.
bool boundary_is_in(const WeldedDiagram& d, int index);

/// Copy with an extra division point on every boundary-to-boundary arc and
/// crossing-free circles padded to two points, so that each boundary point
/// owns its own arc. Returns `d` unchanged when nothing is needed.
WeldedDiagram with_division_points(const WeldedDiagram& d);

/// An id not yet used by any arc, crossing, virtual crossing or point.
std::string fresh_id(const WeldedDiagram& d, const std::string& stem);

// ---------------------------------------------------------------------------
// Wirtinger presentation

struct Letter {
  std::string generator;
  int power = 1;  // ±1

  friend bool operator==(const Letter&, const Letter&) = default;
};

struct Relator {
  std::string source;  // crossing or point id
  std::vector<Letter> word;

  friend bool operator==(const Relator&, const Relator&) = default;
};

struct WirtingerPresentation {
  std::vector<std::string> generators;  // arc ids
  std::vector<Relator> relators;        // crossings then points, declaration order
};

/// Positive crossing: over·in·over⁻¹·out⁻¹; negative: over⁻¹·in·over·out⁻¹;
/// point: out·in⁻¹. Virtual crossings contribute nothing.
WirtingerPresentation wirtinger(const WeldedDiagram& d);

}  // namespace welded
