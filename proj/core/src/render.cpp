#include "tiletopo/render.hpp"

#include "tiletopo/errors.hpp"
#include "tiletopo/geometry.hpp"
#include "tiletopo/neighbors.hpp"
#include "tiletopo/topology.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace tiletopo {

std::string format_decimal(const Rational& r, int digits) {
  if (r == 0) return "0";
  const bool negative = r < 0;
  const Rational x = negative ? Rational(-r) : r;
  // Find k with 10^k <= x < 10^(k+1).
  BigInt ten = 10;
  auto pow10 = [&](int e) {
    BigInt p = 1;
    for (int i = 0; i < e; ++i) p *= ten;
    return p;
  };
  auto scaled = [&](int e) {  // x * 10^e
    return e >= 0 ? Rational(x * Rational(pow10(e))) : Rational(x / Rational(pow10(-e)));
  };
  int k = 0;
  while (scaled(-k) >= 10) ++k;
  while (scaled(-k) < 1) --k;
  // m = round(x * 10^(digits-1-k)), half away from zero.
  const Rational y = scaled(digits - 1 - k);
  BigInt m = numerator(y) / denominator(y);
  if (Rational(numerator(y) - m * denominator(y), denominator(y)) * 2 >= 1) ++m;
  if (m == pow10(digits)) {
    m /= 10;
    ++k;
  }
  std::string d = m.str();  // exactly `digits` characters
  const int point = k + 1;  // digits before the decimal point
  std::string out;
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + d;
  } else if (point >= static_cast<int>(d.size())) {
    out = d + std::string(static_cast<std::size_t>(point) - d.size(), '0');
  } else {
    out = d.substr(0, static_cast<std::size_t>(point)) + "." + d.substr(static_cast<std::size_t>(point));
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

void Scene::fit() {
  bool first = true;
  auto take = [&](const RationalPoint& p) {
    if (first) {
      lo = hi = p;
      first = false;
      return;
    }
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  };
  for (const auto& poly : polygons) {
    for (const auto& v : poly.vertices) take(v);
  }
  for (const auto& m : markers) take(m.at);
  if (first) lo = hi = RationalPoint{};
}

std::string to_svg(const Scene& scene) {
  Rational w = scene.hi.x - scene.lo.x, h = scene.hi.y - scene.lo.y;
  const Rational extent = std::max({w, h, Rational(1)});
  const Rational margin = extent / 20;
  // y is negated, so the top edge of the view box is -hi.y.
  const Rational vx = scene.lo.x - margin, vy = -scene.hi.y - margin;
  w += 2 * margin;
  h += 2 * margin;
  const std::string stroke = format_decimal(extent / 400);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << format_decimal(vx) << ' '
     << format_decimal(vy) << ' ' << format_decimal(w) << ' ' << format_decimal(h) << "\">\n";
  if (!scene.title.empty()) os << "<title>" << scene.title << "</title>\n";
  for (const auto& poly : scene.polygons) {
    os << "<path fill=\"" << poly.fill << "\" stroke=\"" << poly.stroke << "\" stroke-width=\"" << stroke
       << "\" stroke-linejoin=\"round\" d=\"";
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
      os << (i == 0 ? "M" : " L") << format_decimal(poly.vertices[i].x) << ',' << format_decimal(-poly.vertices[i].y);
    }
    os << " Z\"/>\n";
  }
  const std::string r = format_decimal(extent / 80);
  for (const auto& m : scene.markers) {
    const std::string x = format_decimal(m.at.x), y = format_decimal(-m.at.y);
    os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r << "\" fill=\"#d62728\"/>\n";
    if (!m.label.empty()) {
      os << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << format_decimal(extent / 30) << "\">"
         << m.label << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

namespace {

constexpr std::array<const char*, 12> kPalette = {
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
};

std::vector<RationalPoint> simple_boundary(const OrderedContactGraph& og, int n, std::size_t budget) {
  auto approx = approx_boundary(n, og, budget);
  if (!is_simple_polygon(approx.vertices)) {
    throw TileError(ErrorKind::CertificateFailure, "level " + std::to_string(n) + " polygon is not simple");
  }
  return std::move(approx.vertices);
}

std::string params_title(const TileParams& p, const std::string& what, int n) {
  return what + " A=" + std::to_string(p.a) + " B=" + std::to_string(p.b) + " n=" + std::to_string(n);
}

}  // namespace

Scene boundary_scene(const OrderedContactGraph& og, int n, std::size_t budget) {
  Scene s;
  s.title = params_title(og.graph.params, "boundary", n);
  s.polygons.push_back({simple_boundary(og, n, budget), "#80b1d3", "#000000"});
  s.fit();
  return s;
}

Scene patch_scene(const OrderedContactGraph& og, int n, std::size_t budget) {
  Scene s;
  s.title = params_title(og.graph.params, "patch", n);
  const auto base = simple_boundary(og, n, budget);
  s.polygons.push_back({base, kPalette[0], "#000000"});
  const NeighborSet set = neighbor_set_formula(og.graph.params);
  std::size_t k = 1;
  for (const Vec2i v : set.members) {
    const RationalPoint shift{Rational(v.x), Rational(v.y)};
    ScenePolygon poly;
    poly.fill = kPalette[k++ % kPalette.size()];
    for (const auto& p : base) poly.vertices.push_back(p + shift);
    s.polygons.push_back(std::move(poly));
  }
  s.fit();
  return s;
}

Scene cutpoint_scene(const OrderedContactGraph& og, int n, std::size_t budget) {
  const TileParams& p = og.graph.params;
  const Address z = cut_point_address(p);
  Scene s = boundary_scene(og, n, budget);
  s.title = params_title(p, "cut point", n);
  s.markers.push_back({point_eval(z, p), "0." + z.str()});
  s.fit();
  return s;
}

std::string render_boundary(const TileParams& params, int n) {
  return to_svg(boundary_scene(derive_order_extension(build_contact_graph(params)), n));
}

std::string render_patch(const TileParams& params, int n) {
  return to_svg(patch_scene(derive_order_extension(build_contact_graph(params)), n));
}

std::string render_cutpoint(const TileParams& params, int n) {
  cut_point_address(params);  // regime check before the heavier work
  return to_svg(cutpoint_scene(derive_order_extension(build_contact_graph(params)), n));
}

}  // namespace tiletopo
