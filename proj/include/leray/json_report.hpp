#ifndef LERAY_JSON_REPORT_HPP
#define LERAY_JSON_REPORT_HPP

#include <string>

#include <json.hpp>

#include "leray/facet_graph.hpp"
#include "leray/leray.hpp"
#include "leray/ordering.hpp"
#include "leray/stanley_reisner.hpp"
#include "leray/structure.hpp"

namespace leray {

// JSON views of the report types, schema "leray-lab/1". Every top-level
// object carries {"version": kJsonSchema}; vertex sets are emitted as label
// arrays so output is readable without the id mapping.
inline constexpr const char* kJsonSchema = "leray-lab/1";

nlohmann::json json_envelope(const std::string& command);

nlohmann::json to_json(const SimplicialComplex& x);
nlohmann::json labels_json(const SimplicialComplex& x, VertexSet s);
nlohmann::json to_json(const SimplicialComplex& x, const LerayWitness& w);
nlohmann::json to_json(const BettiTable& t);
nlohmann::json to_json(const SimplicialComplex& x, const OrderingReport& r,
                       const FacetOrdering& ord);
nlohmann::json to_json(const SimplicialComplex& x, const MResult& r);
nlohmann::json to_json(const MonomialIdeal& ideal);
nlohmann::json to_json(const EgReport& r);
nlohmann::json to_json(const WeightedFacetGraph& g, const SpanningTree* tree);
nlohmann::json to_json(const SimplicialComplex& x, const GeneratorWitness& w);
nlohmann::json to_json(const SimplicialComplex& x, const EqualityReport& r);

}  // namespace leray

#endif
