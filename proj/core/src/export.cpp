#include "tiletopo/export.hpp"

#include "json.hpp"

#include <sstream>

namespace tiletopo {

using nlohmann::json;

namespace {

json point_json(const RationalPoint& p) { return json::array({rational_text(p.x), rational_text(p.y)}); }

json vec_json(Vec2i v) { return json::array({v.x, v.y}); }

json params_json(const TileParams& p) { return {{"A", p.a}, {"B", p.b}}; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string state_name(int i) { return "K" + std::to_string(i + 1); }

}  // namespace

std::string rational_text(const Rational& r) {
  const BigInt n = numerator(r), d = denominator(r);
  return d == 1 ? n.str() : n.str() + "/" + d.str();
}

std::string neighbors_json(const TileParams& params, const NeighborSet& set) {
  json j;
  j["schema"] = "tiletopo.neighbors/1";
  j["params"] = params_json(params);
  j["J"] = set.j;
  j["count"] = set.size();
  j["neighbors"] = json::array();
  for (Vec2i v : set.members) j["neighbors"].push_back(vec_json(v));
  return dump(j);
}

std::string contact_graph_json(const OrderedContactGraph& og, const PerronData& perron) {
  const ContactGraph& g = og.graph;
  json j;
  j["schema"] = "tiletopo.contact_graph/1";
  j["params"] = params_json(g.params);
  j["states"] = json::array();
  for (int i = 0; i < kContactStates; ++i) {
    json s{{"name", state_name(i)}, {"vector", vec_json(g.states[static_cast<std::size_t>(i)])},
           {"first", point_json(og.first[static_cast<std::size_t>(i)])},
           {"u", perron.u[static_cast<std::size_t>(i)].str()}};
    json order = json::array();
    for (int e : og.order[static_cast<std::size_t>(i)]) order.push_back(e);
    s["order"] = order;
    j["states"].push_back(s);
  }
  j["edges"] = json::array();
  for (const auto& e : g.edges) {
    j["edges"].push_back({{"source", state_name(e.source)}, {"target", state_name(e.target)}, {"a", e.a},
                          {"a_prime", e.a_prime}});
  }
  const auto [lo, hi] = perron.field->interval();
  j["beta"] = {{"minimal_polynomial", perron.field->minimal_polynomial().str()},
               {"characteristic_polynomial", perron.characteristic.str()},
               {"interval", json::array({rational_text(lo), rational_text(hi)})}};
  return dump(j);
}

std::string contact_graph_dot(const ContactGraph& g) {
  std::ostringstream os;
  os << "digraph G {\n  rankdir=LR;\n";
  for (int i = 0; i < kContactStates; ++i) {
    const Vec2i v = g.states[static_cast<std::size_t>(i)];
    os << "  " << state_name(i) << " [label=\"" << state_name(i) << " (" << v.x << "," << v.y << ")\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  " << state_name(e.source) << " -> " << state_name(e.target) << " [label=\"" << e.a << "|" << e.a_prime
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string ordered_graph_dot(const OrderedContactGraph& og) {
  std::ostringstream os;
  os << "digraph Gorder {\n  rankdir=LR;\n";
  for (int i = 0; i < kContactStates; ++i) os << "  " << state_name(i) << ";\n";
  for (int i = 0; i < kContactStates; ++i) {
    for (std::size_t k = 1; k <= og.out_degree(i); ++k) {
      const ContactEdge& e = og.edge(i, static_cast<int>(k));
      os << "  " << state_name(i) << " -> " << state_name(e.target) << " [label=\"" << k << ":" << e.a << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string certificate_json(const CutPointCertificate& cert) {
  json j;
  j["schema"] = "tiletopo.cutpoint_certificate/1";
  j["params"] = params_json(cert.params);
  j["z"] = "0." + cert.z.str();
  j["value"] = point_json(cert.value);
  j["union_universal"] = cert.union_universal;
  const auto& a = cert.automaton;
  j["kind"] = std::string(to_string(a.kind));
  j["reachable_states"] = a.reachable_states;
  j["initial"] = a.initial;
  j["states"] = json::array();
  for (const auto& s : a.states) j["states"].push_back({{"q1", s.q1}, {"q2", s.q2}, {"s", vec_json(s.s)}});
  j["transitions"] = json::array();
  for (const auto& t : a.transitions) {
    j["transitions"].push_back({{"from", t.from}, {"a", t.a}, {"a_prime", t.a_prime}, {"to", t.to}});
  }
  j["runs"] = json::array();
  for (const auto& r : a.runs) {
    j["runs"].push_back({{"x", "0." + r.x.str()}, {"y", "0." + r.y.str()}, {"value", point_json(r.value)}});
  }
  j["replay"] = {{"depth", cert.replay.depth}, {"ok", cert.replay.ok}, {"pairs_per_depth", cert.replay.pairs_per_depth}};
  return dump(j);
}

std::string chain_report_json(const TileParams& params, const ChainReport& rep) {
  json j;
  j["schema"] = "tiletopo.chain_report/1";
  j["params"] = params_json(params);
  j["circular"] = rep.circular;
  j["curves"] = rep.names;
  j["ok"] = rep.ok();
  j["violations"] = rep.violations;
  j["pairs"] = json::array();
  const std::size_t n = rep.names.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      const ChainEntry& e = rep.matrix[i][k];
      json p{{"first", rep.names[i]}, {"second", rep.names[k]}, {"kind", std::string(to_string(e.kind))}};
      if (!e.points.empty()) {
        json pts = json::array();
        for (const auto& q : e.points) pts.push_back(point_json(q));
        p["points"] = pts;
      }
      if (e.witness) {
        p["witness"] = {{"x", "0." + e.witness->x.str()}, {"y", "0." + e.witness->y.str()},
                        {"value", point_json(e.witness->value)}};
      }
      j["pairs"].push_back(p);
    }
  }
  j["junctions"] = json::array();
  for (const auto& q : rep.junctions) j["junctions"].push_back(point_json(q));
  return dump(j);
}

}  // namespace tiletopo
