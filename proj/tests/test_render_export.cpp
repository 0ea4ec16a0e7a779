#include "tiletopo/errors.hpp"
#include "tiletopo/export.hpp"
#include "tiletopo/geometry.hpp"
#include "tiletopo/render.hpp"

#include <gtest/gtest.h>

#include "json.hpp"

using namespace tiletopo;
using json = nlohmann::json;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

OrderedContactGraph ordered(std::int64_t a, std::int64_t b) {
  return derive_order_extension(build_contact_graph(TileParams::make(a, b)));
}

}  // namespace

TEST(FormatDecimal, Rounding) {
  EXPECT_EQ(format_decimal(Rational(1, 3)), "0.333333333333");
  EXPECT_EQ(format_decimal(Rational(2, 3)), "0.666666666667");
  EXPECT_EQ(format_decimal(Rational(-2, 3)), "-0.666666666667");
  EXPECT_EQ(format_decimal(Rational(5)), "5");
  EXPECT_EQ(format_decimal(Rational(0)), "0");
  EXPECT_EQ(format_decimal(Rational(1, 8), 2), "0.13");  // half away from zero
  EXPECT_EQ(format_decimal(Rational(-1, 8), 2), "-0.13");
  EXPECT_EQ(format_decimal(Rational(123456, 1), 3), "123000");
  EXPECT_EQ(format_decimal(Rational(1, 1000000), 3), "0.000001");
}

TEST(Render, BoundaryVerticesGrow) {
  const auto og = ordered(2, 2);
  std::size_t prev = 0;
  for (int n = 0; n <= 3; ++n) {
    const auto scene = boundary_scene(og, n);
    ASSERT_EQ(scene.polygons.size(), 1u);
    EXPECT_GT(scene.polygons[0].vertices.size(), prev);
    prev = scene.polygons[0].vertices.size();
    for (const auto& v : scene.polygons[0].vertices) {
      EXPECT_TRUE(scene.lo.x <= v.x && v.x <= scene.hi.x && scene.lo.y <= v.y && v.y <= scene.hi.y);
    }
  }
}

TEST(Render, PatchHasTileAndNeighbors) {
  EXPECT_EQ(count_of(render_patch(TileParams::make(2, 2), 3), "<path"), 7u);
  EXPECT_EQ(count_of(render_patch(TileParams::make(4, 5), 2), "<path"), 11u);
  EXPECT_EQ(count_of(render_patch(TileParams::make(5, 5), 2), "<path"), 19u);
}

TEST(Render, PatchPolygonsAreSimple) {
  const auto scene = patch_scene(ordered(4, 5), 2);
  for (const auto& poly : scene.polygons) EXPECT_TRUE(is_simple_polygon(poly.vertices));
}

TEST(Render, CutPointMarker) {
  const auto p = TileParams::make(5, 5);
  const std::string svg = render_cutpoint(p, 3);
  const RationalPoint z = point_eval(cut_point_address(p), p);
  EXPECT_EQ(z, (RationalPoint{Rational(-12, 11), Rational(-2, 11)}));
  EXPECT_NE(svg.find("<circle cx=\"" + format_decimal(z.x) + "\" cy=\"" + format_decimal(-z.y) + "\""),
            std::string::npos);
  try {
    render_cutpoint(TileParams::make(4, 5), 2);
    FAIL();
  } catch (const TileError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongRegime);
  }
}

TEST(Render, Deterministic) {
  const auto p = TileParams::make(4, 5);
  EXPECT_EQ(render_boundary(p, 3), render_boundary(p, 3));
  EXPECT_EQ(render_patch(p, 2), render_patch(p, 2));
  const auto q = TileParams::make(6, 6);
  EXPECT_EQ(render_cutpoint(q, 2), render_cutpoint(q, 2));
}

TEST(Export, NeighborsJson) {
  const auto p = TileParams::make(4, 5);
  const auto set = neighbor_set_formula(p);
  const auto j = json::parse(neighbors_json(p, set));
  EXPECT_EQ(j["schema"], "tiletopo.neighbors/1");
  EXPECT_EQ(j["count"], 10);
  EXPECT_EQ(j["neighbors"].size(), 10u);
}

TEST(Export, ContactGraphDocuments) {
  const auto g = build_contact_graph(TileParams::make(4, 5));
  const auto og = derive_order_extension(g);
  const auto j = json::parse(contact_graph_json(og, perron_data(g)));
  EXPECT_EQ(j["schema"], "tiletopo.contact_graph/1");
  const std::string dot = contact_graph_dot(g);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_EQ(count_of(dot, "->"), g.edges.size());
  EXPECT_EQ(count_of(ordered_graph_dot(og), "->"), g.edges.size());
}

TEST(Export, Certificates) {
  const auto cert = verify_cut_point(TileParams::make(5, 5));
  const auto j = json::parse(certificate_json(cert));
  EXPECT_EQ(j["schema"], "tiletopo.cutpoint_certificate/1");
  const auto sys = build_curve_system(TileParams::make(4, 5));
  const auto r = json::parse(chain_report_json(sys.params, verify_circular_chain(sys)));
  EXPECT_EQ(r["schema"], "tiletopo.chain_report/1");
  EXPECT_EQ(rational_text(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(rational_text(Rational(4)), "4");
}
