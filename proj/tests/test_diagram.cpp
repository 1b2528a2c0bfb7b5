#include <gtest/gtest.h>

#include <algorithm>

#include "welded/corpus.hpp"
#include "welded/diagram.hpp"
#include "welded/error.hpp"
#include "welded/generators.hpp"

using namespace welded;

namespace {

std::vector<std::string> invariants(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& v : validate(parse_diagram(text, false))) out.push_back(v.invariant);
  return out;
}

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

TEST(DiagramFormat, ParsesTheLineFormat) {
  const auto d = corpus::tau();
  EXPECT_EQ(d.name, "tau");
  EXPECT_EQ(d.boundary, 6);
  EXPECT_EQ(d.n(), 3);
  EXPECT_EQ(d.arcs.size(), 6u);
  ASSERT_EQ(d.crossings.size(), 1u);
  EXPECT_EQ(d.crossings[0].over, "a");
  EXPECT_EQ(d.vcrossings.size(), 1u);
  EXPECT_EQ(d.points.size(), 2u);
  EXPECT_EQ(corpus::crossing22().colors.at("g1"), 2);
}

TEST(DiagramFormat, RoundTripsThroughTextAndJson) {
  for (const auto& [name, d] : corpus::diagrams()) {
    EXPECT_EQ(parse_diagram(serialize_diagram(d)), d) << name;
    EXPECT_EQ(diagram_from_json(diagram_to_json(d)), d) << name;
    EXPECT_EQ(load_diagram(diagram_to_json(d).dump()), d) << name;
  }
}

TEST(DiagramFormat, ReportsSyntaxErrorsWithPosition) {
  try {
    parse_diagram("tangle x boundary=2\narc s from=b1 to=b2\nxing c sign=? over=s in=s out=s\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 1);
  }
  EXPECT_THROW(parse_diagram("arc s from=b1 to=b2\n"), ParseError);
  EXPECT_THROW(parse_diagram("tangle x boundary=two\n"), ParseError);
  EXPECT_THROW(parse_diagram("tangle x boundary=2\nwibble s\n"), ParseError);
  EXPECT_THROW(parse_diagram("tangle x boundary=2\narc s to=b2\n"), ParseError);
}

TEST(DiagramValidation, NamesTheBrokenInvariant) {
  EXPECT_TRUE(has(invariants("tangle x boundary=3\narc s from=b1 to=b2\n"), "odd-boundary"));
  EXPECT_TRUE(has(invariants("tangle x boundary=2\narc s from=b1 to=q\narc s from=q to=b2\npoint q in=s out=s\n"),
                  "unique-id"));
  EXPECT_TRUE(has(invariants("tangle x boundary=2\narc b1 from=b1 to=b2\n"), "reserved-id"));
  EXPECT_TRUE(has(invariants("tangle x boundary=2\narc s from=b1 to=nowhere\n"), "dangling-arc"));
  EXPECT_TRUE(has(invariants("tangle x boundary=2\narc s from=b1 to=b5\n"), "boundary"));
  EXPECT_TRUE(has(invariants("tangle x boundary=4\narc s from=b1 to=b2\n"), "boundary"));
  EXPECT_TRUE(has(invariants("tangle x boundary=2\narc s from=b1 to=q\narc u from=q to=b2\npoint q in=u out=s\n"),
                  "arity"));
  EXPECT_TRUE(has(invariants("tangle x boundary=2\narc s from=b1 to=b2\ncolor s 0\n"), "color"));
  EXPECT_TRUE(has(invariants("tangle x boundary=2\narc s from=b1 to=q\narc u from=q to=b2\npoint q in=s out=u\n"
                             "color s 1\ncolor u 2\n"),
                  "color-continuity"));
  EXPECT_TRUE(validate(corpus::tau()).empty());
  EXPECT_THROW(parse_diagram("tangle x boundary=2\narc s from=b1 to=nowhere\n"), ValidationError);
}

TEST(DiagramStructure, ComponentsAndColors) {
  const auto d = corpus::tau();
  const auto comps = components(d);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0].arcs, (std::vector<std::string>{"a", "e"}));
  EXPECT_EQ(comps[1].arcs, (std::vector<std::string>{"f", "b"}));
  EXPECT_EQ(comps[2].arcs, (std::vector<std::string>{"c", "d"}));
  EXPECT_TRUE(boundary_is_in(d, 1));
  EXPECT_FALSE(boundary_is_in(d, 2));

  const auto h = corpus::hopf11();
  const auto hc = components(h);
  ASSERT_EQ(hc.size(), 2u);
  EXPECT_TRUE(hc[1].closed);
  EXPECT_EQ(hc[1].color, 2);
  EXPECT_EQ(arc_colors(h).at("s2"), 1);
  EXPECT_EQ(color_count(h), 2);
  EXPECT_EQ(arc_colors(corpus::crossing22()).at("g3"), 2);
}

TEST(DiagramStructure, DivisionPoints) {
  const auto s = with_division_points(corpus::strand());
  EXPECT_TRUE(validate(s).empty());
  EXPECT_EQ(s.arcs.size(), 2u);
  EXPECT_EQ(s.points.size(), 1u);
  EXPECT_EQ(with_division_points(corpus::sigma()), corpus::sigma());
  const auto c = with_division_points(corpus::split_circle());
  EXPECT_TRUE(validate(c).empty());
  EXPECT_EQ(c.points.size(), 3u);
  EXPECT_EQ(fresh_id(corpus::sigma(), "a"), "a_2");
  EXPECT_EQ(fresh_id(corpus::sigma(), "z"), "z");
}

TEST(Wirtinger, RelatorsFollowTheCrossingSigns) {
  const auto w = wirtinger(corpus::sigma());
  EXPECT_EQ(w.generators.size(), 4u);
  ASSERT_EQ(w.relators.size(), 2u);
  EXPECT_EQ(w.relators[0].source, "c1");
  EXPECT_EQ(w.relators[0].word, (std::vector<Letter>{{"e", 1}, {"f", 1}, {"e", -1}, {"b", -1}}));
  EXPECT_EQ(w.relators[1].word, (std::vector<Letter>{{"e", 1}, {"a", -1}}));

  auto d = corpus::sigma();
  d.crossings[0].sign = -1;
  EXPECT_EQ(wirtinger(d).relators[0].word, (std::vector<Letter>{{"e", -1}, {"f", 1}, {"e", 1}, {"b", -1}}));
  EXPECT_EQ(wirtinger(corpus::tau()).relators.size(), 3u);  // virtual crossings add nothing
}

TEST(DiagramProperty, RandomDiagramsAreValidAndRoundTrip) {
  Rng rng(31);
  DiagramShape shape;
  for (int k = 0; k < 100; ++k) {
    const auto d = random_diagram(rng, shape);
    EXPECT_TRUE(validate(d).empty());
    EXPECT_EQ(parse_diagram(serialize_diagram(d)), d);
    EXPECT_TRUE(validate(with_division_points(d)).empty());
  }
}
