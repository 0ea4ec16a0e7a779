#pragma once

// JSON and DOT serializations. Every JSON document carries a "schema" field;
// exact rationals are written as "p/q" strings.

#include "tiletopo/chains.hpp"
#include "tiletopo/contact_graph.hpp"
#include "tiletopo/neighbors.hpp"
#include "tiletopo/topology.hpp"

#include <string>

namespace tiletopo {

std::string rational_text(const Rational& r);

std::string neighbors_json(const TileParams& params, const NeighborSet& set);
std::string contact_graph_json(const OrderedContactGraph& ordered, const PerronData& perron);
/// G with edges labelled a|a'.
std::string contact_graph_dot(const ContactGraph& graph);
/// G° with edges labelled by their order letter and digit.
std::string ordered_graph_dot(const OrderedContactGraph& ordered);
std::string certificate_json(const CutPointCertificate& cert);
std::string chain_report_json(const TileParams& params, const ChainReport& report);

}  // namespace tiletopo
