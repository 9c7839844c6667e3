#pragma once

// JSON encodings of the library's reports. Field names are a stable
// interface. Rational integers are encoded as decimal strings (they are
// unbounded), ring elements in the "x+y*w" text form with the ring tag stored
// alongside, and indices and counts as JSON numbers.

#include <json.hpp>

#include "apcoprime/crt.hpp"
#include "apcoprime/decomposition.hpp"
#include "apcoprime/pillai.hpp"

namespace apcoprime {

using json = nlohmann::json;

json to_json(const DeltaResult& r);
DeltaResult delta_result_from_json(const json& j);

json to_json(const CoprimeReport& r);
CoprimeReport coprime_report_from_json(const json& j);

json to_json(const ArithmeticProgression& ap);
ArithmeticProgression progression_from_json(const json& j,
                                            const RingAllowlist& allow = RingAllowlist::standard());

json to_json(const SweepReport& r);
SweepReport sweep_report_from_json(const json& j,
                                   const RingAllowlist& allow = RingAllowlist::standard());

json to_json(const RingCounterexample& r);
RingCounterexample ring_counterexample_from_json(
    const json& j, const RingAllowlist& allow = RingAllowlist::standard());

json to_json(const CrtOutcome& r, const RingDescriptor& ring);
CrtOutcome crt_outcome_from_json(const json& j,
                                 const RingAllowlist& allow = RingAllowlist::standard());

json to_json(const std::vector<SquareTriple>& triples);
std::vector<SquareTriple> square_triples_from_json(const json& j);

json to_json(const PowerCheckReport& r);
PowerCheckReport power_check_from_json(const json& j);

/// One congruence per line: {"residue": "...", "modulus": "..."} or ["residue", "modulus"].
Congruence congruence_from_json(const json& j, const RingDescriptor& ring);

}  // namespace apcoprime
