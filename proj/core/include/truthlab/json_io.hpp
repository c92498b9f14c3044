#pragma once

#include <json.hpp>

#include "truthlab/cutmodel.hpp"
#include "truthlab/derivations.hpp"
#include "truthlab/principles.hpp"
#include "truthlab/satclass.hpp"
#include "truthlab/semantics.hpp"
#include "truthlab/syntax.hpp"

namespace truthlab {

using Json = nlohmann::json;

// nested tagged objects {"op": ..., "args": [...]}
Json to_json(Term t);
Json to_json(Formula f);
Term term_from_json(const Json& j);
Formula formula_from_json(const Json& j);

Json to_json(const Verdict& v);
Json to_json(const PrincipleReport& r);
Json to_json(const SatViolation& v);
Json to_json(const SatClassReport& r);
Json to_json(const SchemeAudit& a);
Json to_json(const ConstructionReport& r);
Json to_json(const PartialSatClass& s);
Json to_json(const ApproxTrace& t);
Json to_json(const ProofReport& r);
Json to_json(const YabloReport& r);
Json to_json(const InternalInductionReport& r);

// assignments serialize as {"<var index>": "<decimal value>"}
Json to_json(const Assignment& a);
Assignment assignment_from_json(const Json& j);

TruthValuation valuation_from_json(const Json& j);
PartialSatClass sat_class_from_json(const Json& j);
SatScenario scenario_from_json(const Json& j);
PropProof proof_from_json(const Json& j);
std::vector<std::vector<uint64_t>> sequences_from_json(const Json& j);

}  // namespace truthlab
