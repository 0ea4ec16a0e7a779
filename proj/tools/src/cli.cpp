#include "cli.hpp"

#include "tiletopo/chains.hpp"
#include "tiletopo/errors.hpp"
#include "tiletopo/export.hpp"
#include "tiletopo/parametrization.hpp"
#include "tiletopo/render.hpp"
#include "tiletopo/topology.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace tiletopo::cli {

namespace {

using nlohmann::json;

struct Options {
  std::optional<std::int64_t> a, b;
  std::string matrix, v;
  std::string format = "text";
  std::string out;
  int depth = 12;
  int n = 4;
  std::string t, walk;
  std::string kind = "boundary";
  std::int64_t b_max = 12;
};

std::vector<std::int64_t> parse_ints(const std::string& text, std::size_t count, const char* what) {
  std::vector<std::int64_t> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      vals.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw TileError(ErrorKind::ParseError, std::string("bad integer in ") + what + ": " + item);
    }
  }
  if (vals.size() != count) {
    throw TileError(ErrorKind::ParseError, std::string(what) + " needs " + std::to_string(count) + " integers");
  }
  return vals;
}

RawInstance raw_instance(const Options& o) {
  if (o.matrix.empty() || o.v.empty()) throw TileError(ErrorKind::ParseError, "--matrix and --v go together");
  const auto m = parse_ints(o.matrix, 4, "--matrix");
  const auto v = parse_ints(o.v, 2, "--v");
  return RawInstance{IntMatrix2{m[0], m[1], m[2], m[3]}, Vec2i{v[0], v[1]}};
}

TileParams params_of(const Options& o) {
  if (!o.matrix.empty() || !o.v.empty()) return normalize(raw_instance(o)).first;
  if (!o.a || !o.b) throw TileError(ErrorKind::ParseError, "give --A and --B, or --matrix and --v");
  return TileParams::make(*o.a, *o.b);
}

std::string tag(const TileParams& p) { return "A" + std::to_string(p.a) + "_B" + std::to_string(p.b); }

void write_file(const Options& o, const std::string& name, const std::string& content, std::ostream& out) {
  std::filesystem::create_directories(o.out);
  const auto path = std::filesystem::path(o.out) / name;
  std::ofstream f(path, std::ios::binary);
  f << content;
  if (!f) throw TileError(ErrorKind::OutOfRange, "cannot write " + path.string());
  out << "wrote " << path.string() << "\n";
}

std::string point_text(const RationalPoint& p) { return "(" + rational_text(p.x) + ", " + rational_text(p.y) + ")"; }

std::string classification_line(const TileParams& p) {
  const Classification c = classify(p);
  std::string line(to_string(c));
  if (c == Classification::HasCutPoint) line += " z=0." + cut_point_address(p).str();
  return line;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  const RawInstance raw = raw_instance(o);
  const auto [p, aff] = normalize(raw);
  if (!verify_normalization(raw, p, aff)) throw TileError(ErrorKind::IdentityFailure, "normalization check failed");
  const auto& c = aff.basis_change;
  const auto& r = aff.reflection;
  if (o.format == "json") {
    json j{{"schema", "tiletopo.normalize/1"},
           {"A", p.a},
           {"B", p.b},
           {"reflected", p.reflected},
           {"basis_change", {{c.a, c.b}, {c.c, c.d}}},
           {"reflection", {{r.a, r.b}, {r.c, r.d}}},
           {"translation", {rational_text(aff.translation.x), rational_text(aff.translation.y)}}};
    out << j.dump(2) << "\n";
  } else {
    out << "A=" << p.a << " B=" << p.b << (p.reflected ? " reflected" : "") << "\n"
        << "basis_change=[[" << c.a << "," << c.b << "],[" << c.c << "," << c.d << "]]\n"
        << "reflection=[[" << r.a << "," << r.b << "],[" << r.c << "," << r.d << "]]\n"
        << "translation=" << point_text(aff.translation) << "\n";
  }
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const TileParams p = params_of(o);
  if (o.format == "json") {
    json j{{"schema", "tiletopo.classify/1"}, {"A", p.a}, {"B", p.b}, {"class", std::string(to_string(classify(p)))}};
    if (classify(p) == Classification::HasCutPoint) j["z"] = "0." + cut_point_address(p).str();
    out << j.dump(2) << "\n";
  } else {
    out << classification_line(p) << "\n";
  }
  return kOk;
}

int cmd_neighbors(const Options& o, std::ostream& out) {
  const TileParams p = params_of(o);
  const NeighborSet set = neighbor_set_formula(p);
  const std::string doc = neighbors_json(p, set);
  if (!o.out.empty()) write_file(o, "neighbors_" + tag(p) + ".json", doc, out);
  if (o.format == "json") {
    out << doc;
  } else {
    out << set.size() << " neighbors (J=" << set.j << ")\n";
    for (Vec2i v : set.members) out << v.x << " " << v.y << "\n";
  }
  return kOk;
}

int cmd_contact_graph(const Options& o, std::ostream& out) {
  const TileParams p = params_of(o);
  const OrderedContactGraph og = derive_order_extension(build_contact_graph(p));
  const PerronData perron = perron_data(og.graph);
  if (!verify_perron(perron)) throw TileError(ErrorKind::IdentityFailure, "Perron data check failed");
  const std::string doc = contact_graph_json(og, perron);
  if (!o.out.empty()) {
    write_file(o, "contact_graph_" + tag(p) + ".json", doc, out);
    write_file(o, "G_" + tag(p) + ".dot", contact_graph_dot(og.graph), out);
    write_file(o, "Gorder_" + tag(p) + ".dot", ordered_graph_dot(og), out);
  }
  if (o.format == "json") {
    out << doc;
  } else if (o.format == "dot") {
    out << ordered_graph_dot(og);
  } else {
    out << og.graph.edges.size() << " edges, beta root of " << perron.field->minimal_polynomial().str() << " ~ "
        << perron.beta.approx() << "\n";
    for (int i = 0; i < kContactStates; ++i) {
      out << "K" << i + 1 << " out-degree " << og.out_degree(i) << " u=" << perron.u[static_cast<std::size_t>(i)].str()
          << "\n";
    }
  }
  return kOk;
}

int cmd_param(const Options& o, std::ostream& out) {
  const TileParams p = params_of(o);
  const OrderedContactGraph og = derive_order_extension(build_contact_graph(p));
  const Parametrization par(og, perron_data(og.graph));
  if (o.t.empty() == o.walk.empty()) throw TileError(ErrorKind::ParseError, "give exactly one of --t and --walk");
  Walk w;
  QBeta t;
  if (!o.walk.empty()) {
    w = Walk::parse(o.walk);
    t = par.walk_to_param(w);
  } else {
    t = QBeta::parse(par.perron().field, o.t);
    w = par.param_to_walk(t);
  }
  const RationalPoint c = par.boundary_point(t);
  if (o.format == "json") {
    json j{{"schema", "tiletopo.param/1"}, {"A", p.a}, {"B", p.b}, {"t", t.str()}, {"walk", w.str()},
           {"address", "0." + psi(w, og).str()}, {"point", {rational_text(c.x), rational_text(c.y)}}};
    out << j.dump(2) << "\n";
  } else {
    out << "t=" << t.str() << " (~" << t.approx() << ")\nwalk=" << w.str() << "\naddress=0." << psi(w, og).str()
        << "\npoint=" << point_text(c) << "\n";
  }
  return kOk;
}

int cmd_approx(const Options& o, std::ostream& out) {
  const TileParams p = params_of(o);
  const OrderedContactGraph og = derive_order_extension(build_contact_graph(p));
  const BoundaryApproximation ap = approx_boundary(o.n, og);
  json j{{"schema", "tiletopo.approx/1"}, {"A", p.a}, {"B", p.b}, {"n", o.n}, {"walks", ap.walk_count}};
  j["vertices"] = json::array();
  for (const auto& v : ap.vertices) j["vertices"].push_back({rational_text(v.x), rational_text(v.y)});
  if (!o.out.empty()) write_file(o, "approx_" + tag(p) + "_n" + std::to_string(o.n) + ".json", j.dump(2) + "\n", out);
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << "n=" << o.n << " walks=" << ap.walk_count << " vertices=" << ap.vertices.size() << "\n";
  }
  return kOk;
}

int cmd_cutpoint(const Options& o, std::ostream& out) {
  const TileParams p = params_of(o);
  const CutPointCertificate cert = verify_cut_point(p, o.depth);
  const std::string doc = certificate_json(cert);
  if (!o.out.empty()) write_file(o, "cutpoint_" + tag(p) + ".json", doc, out);
  if (o.format == "json") {
    out << doc;
  } else {
    out << "z=0." << cert.z.str() << " value=" << point_text(cert.value) << " "
        << to_string(cert.automaton.kind) << " states=" << cert.automaton.states.size()
        << " replay depth " << cert.replay.depth << " ok\n";
  }
  return kOk;
}

std::string chain_table(const ChainReport& rep) {
  std::ostringstream os;
  const std::size_t n = rep.names.size();
  std::size_t width = 0;
  for (const auto& s : rep.names) width = std::max(width, s.size());
  for (std::size_t i = 0; i < n; ++i) {
    os << rep.names[i] << std::string(width - rep.names[i].size() + 1, ' ');
    for (std::size_t k = 0; k < n; ++k) {
      char c = '.';
      if (k > i) {
        switch (rep.matrix[i][k].kind) {
          case IntersectionKind::Empty: c = '-'; break;
          case IntersectionKind::UniquePoint: c = '1'; break;
          case IntersectionKind::FinitePoints: c = 'F'; break;
          case IntersectionKind::Branching: c = 'B'; break;
        }
      }
      os << ' ' << c;
    }
    os << "\n";
  }
  return os.str();
}

int cmd_verify_chains(const Options& o, std::ostream& out) {
  const TileParams p = params_of(o);
  const CurveSystem sys = build_curve_system(p);
  std::vector<AlphaCurve> all = sys.alpha;
  all.insert(all.end(), sys.alpha_prime.begin(), sys.alpha_prime.end());
  // The report is written before any exception so failures can be inspected.
  const ChainReport rep = chain_report(all, p, sys.neighbors, true);
  if (!o.out.empty()) {
    write_file(o, "chains_" + tag(p) + ".json", chain_report_json(p, rep), out);
    write_file(o, "chains_" + tag(p) + ".txt", chain_table(rep), out);
  }
  verify_chain(sys);
  verify_prime_chain(sys);
  const ChainReport circ = verify_circular_chain(sys);
  const GammaReport gamma = gamma_arcs(sys, circ.junctions);
  if (!gamma.ok()) throw TileError(ErrorKind::ChainViolation, gamma.violations.front());
  symmetry_and_junctions(sys);
  if (o.format == "json") {
    out << chain_report_json(p, circ);
  } else {
    out << chain_table(circ) << "circular chain of " << circ.names.size() << " curves verified; " << gamma.arcs.size()
        << " gamma arcs checked\n";
  }
  return kOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  const TileParams p = params_of(o);
  std::string svg;
  if (o.kind == "boundary") svg = render_boundary(p, o.n);
  else if (o.kind == "patch") svg = render_patch(p, o.n);
  else if (o.kind == "cutpoint") svg = render_cutpoint(p, o.n);
  else throw TileError(ErrorKind::ParseError, "unknown --kind " + o.kind);
  if (o.out.empty()) out << svg;
  else write_file(o, o.kind + "_" + tag(p) + "_n" + std::to_string(o.n) + ".svg", svg, out);
  return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  json j{{"schema", "tiletopo.sweep/1"}, {"Bmax", o.b_max}, {"rows", json::array()}};
  std::ostringstream table;
  for (std::int64_t b = 2; b <= o.b_max; ++b) {
    for (std::int64_t a = 0; a <= b; ++a) {
      const TileParams p = TileParams::make(a, b);
      json row{{"A", a}, {"B", b}, {"class", std::string(to_string(classify(p)))}};
      if (classify(p) == Classification::HasCutPoint) row["z"] = "0." + cut_point_address(p).str();
      j["rows"].push_back(row);
      table << a << " " << b << " " << classification_line(p) << "\n";
    }
  }
  if (!o.out.empty()) {
    write_file(o, "sweep.json", j.dump(2) + "\n", out);
    write_file(o, "sweep.txt", table.str(), out);
  }
  if (o.format == "json") out << j.dump(2) << "\n";
  else out << table.str();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tiletopo: boundaries, neighbors and cut points of planar tiles M T = T + {0, v, ..., (B-1)v}"};
  app.name("tiletopo");
  app.require_subcommand(1);
  Options o;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--A", o.a, "trace parameter A");
    sub->add_option("--B", o.b, "determinant parameter B");
    sub->add_option("--matrix", o.matrix, "raw matrix m00,m01,m10,m11");
    sub->add_option("--v", o.v, "raw digit vector x,y");
  };
  auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", o.out, "output directory");
  };

  auto* normalize_cmd = app.add_subcommand("normalize", "normalize a raw instance");
  normalize_cmd->add_option("--matrix", o.matrix, "raw matrix m00,m01,m10,m11")->required();
  normalize_cmd->add_option("--v", o.v, "raw digit vector x,y")->required();
  add_common(normalize_cmd, {"text", "json"});

  auto* classify_cmd = app.add_subcommand("classify", "topological class of the tile");
  add_params(classify_cmd);
  add_common(classify_cmd, {"text", "json"});

  auto* neighbors_cmd = app.add_subcommand("neighbors", "neighbor set");
  add_params(neighbors_cmd);
  add_common(neighbors_cmd, {"text", "json"});

  auto* graph_cmd = app.add_subcommand("contact-graph", "contact graph, order and Perron data");
  add_params(graph_cmd);
  add_common(graph_cmd, {"text", "json", "dot"});

  auto* param_cmd = app.add_subcommand("param", "boundary parametrization at a parameter or walk");
  add_params(param_cmd);
  add_common(param_cmd, {"text", "json"});
  param_cmd->add_option("--t", o.t, "parameter in Q(beta), e.g. 1/3 or 1/2*b");
  param_cmd->add_option("--walk", o.walk, "walk, e.g. \"5;2,(6)\"");

  auto* approx_cmd = app.add_subcommand("approx", "polygonal boundary approximation");
  add_params(approx_cmd);
  add_common(approx_cmd, {"text", "json"});
  approx_cmd->add_option("--n", o.n, "level")->check(CLI::Range(0, 12));

  auto* cut_cmd = app.add_subcommand("cutpoint", "cut point certificate (2A-B >= 5)");
  add_params(cut_cmd);
  add_common(cut_cmd, {"text", "json"});
  cut_cmd->add_option("--depth", o.depth, "replay depth")->check(CLI::Range(0, 64));

  auto* chains_cmd = app.add_subcommand("verify-chains", "alpha curve chains (2A-B = 3)");
  add_params(chains_cmd);
  add_common(chains_cmd, {"text", "json"});

  auto* render_cmd = app.add_subcommand("render", "SVG rendering");
  add_params(render_cmd);
  add_common(render_cmd, {"text"});
  render_cmd->add_option("--kind", o.kind, "boundary, patch or cutpoint")
      ->check(CLI::IsMember({"boundary", "patch", "cutpoint"}));
  render_cmd->add_option("--n", o.n, "level")->check(CLI::Range(0, 10));

  auto* sweep_cmd = app.add_subcommand("sweep", "classification grid 0 <= A <= B <= Bmax");
  add_common(sweep_cmd, {"text", "json"});
  sweep_cmd->add_option("--Bmax", o.b_max, "largest B")->check(CLI::Range(2, 64));

  std::vector<const char*> argv{"tiletopo"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*normalize_cmd) return cmd_normalize(o, out);
    if (*classify_cmd) return cmd_classify(o, out);
    if (*neighbors_cmd) return cmd_neighbors(o, out);
    if (*graph_cmd) return cmd_contact_graph(o, out);
    if (*param_cmd) return cmd_param(o, out);
    if (*approx_cmd) return cmd_approx(o, out);
    if (*cut_cmd) return cmd_cutpoint(o, out);
    if (*chains_cmd) return cmd_verify_chains(o, out);
    if (*render_cmd) return cmd_render(o, out);
    if (*sweep_cmd) return cmd_sweep(o, out);
  } catch (const TileError& e) {
    err << e.what() << "\n";
    if (e.kind() == ErrorKind::WrongRegime) return kRegime;
    if (e.is_verification_failure()) return kVerification;
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace tiletopo::cli
