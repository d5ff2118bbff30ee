#pragma once

#include "json.hpp"

#include "fjoin/closed_form.hpp"
#include "fjoin/harness.hpp"

namespace fjoin {

using Json = nlohmann::ordered_json;

/// JSON number for an exact integer; throws OverflowError outside int64.
Json to_json(Integer value);

/// {"n","m","M1","M2","F","HM","ReZM","M4"} in that order.
Json to_json(const GraphInvariants& inv);

/// {records: [{g1, g2, kind, mode, closed_form, oracle, match}], summary: {total, mismatches}}
Json to_json(const VerificationReport& report);

Json to_json(const AuditReport& report);

/// {"tags": [...], "origin": [null | [u, v], ...]}
Json provenance_json(const ProvenancedGraph& graph);

/// Reads a corpus config; absent keys keep their defaults.
CorpusConfig corpus_config_from_json(const Json& json);

/// Compact single-line dump followed by '\n'.
std::string dump_line(const Json& json);

/// Aligned "name  value" text rendering of the invariants.
std::string to_text(const GraphInvariants& inv);

}  // namespace fjoin
