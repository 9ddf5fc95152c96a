#pragma once

#include <json.hpp>

#include "polyad/finite_table.hpp"
#include "polyad/free_polyadic.hpp"
#include "polyad/freeness.hpp"
#include "polyad/subgroup_graph.hpp"

namespace polyad {

// Ordered maps keep every serialization byte-stable, so payloads can be
// diffed and used as golden files.
using Json = nlohmann::ordered_json;

Json alphabet_to_json(const AlphabetRef& alphabet);
AlphabetRef alphabet_from_json(const Json& j);

// Words serialize as their rendered canonical form.
Json word_to_json(const Word& w);
Word word_from_json(const AlphabetRef& alphabet, const Json& j);

Json word_group_to_json(const WordGroup& g);
WordGroup word_group_from_json(const Json& j);

// {n, alphabet, unit, carrier_modulus, theta, theta_inv, b}; theta and
// theta_inv are the image words in alphabet order. Reading re-runs full
// triple validation.
Json triple_to_json(const HgTriple& t);
HgTriple triple_from_json(const Json& j);

Json pipeline_to_json(const BasisPipeline& p);
Json extracted_to_json(const ExtractedHg& e);

Json table_to_json(const FiniteNaryTable& t);
FiniteNaryTable table_from_json(const Json& j);

Json graph_to_json(const SubgroupGraph& g);

Json certificate_to_json(const BasisCertificate& c);

Json report_to_json(const FreenessReport& r);

}  // namespace polyad
