#pragma once

#include <json.hpp>

#include <ostream>

#include "coinage/core.hpp"
#include "coinage/families.hpp"
#include "coinage/orderly.hpp"
#include "coinage/screen.hpp"
#include "coinage/search.hpp"

namespace coinage {

// A currency serializes as its coin array: [1,2,5,10].
nlohmann::json currency_json(const Currency& currency);
Currency currency_from_json(const nlohmann::json& j);

// {"count":n,"multiplicities":[...],"value":n}
nlohmann::json payment_json(const Payment& payment);

// {"currency":[...],"orderly":bool,
//  "counterexample":{"amount":n,"greedy":[...],"optimal":[...]}|null}
// where greedy/optimal are the payments' multiplicity vectors.
nlohmann::json verdict_json(const Currency& currency,
                            const OrderlinessVerdict& verdict);

// {"currency":[...],"pattern":"+++-+"}
nlohmann::json pattern_json(const Currency& currency,
                            const PlusMinusPattern& pattern);

// {"currency":[...],"passed_all":bool,
//  "screeners":[{"name":...,"passed":bool,"witness":{...}|null}]}
nlohmann::json screen_json(const Currency& currency, const ScreenReport& report);

// {"index_set":[...],"ambient_k":n,"currency":[...],
//  "bad_subcurrency":[...],"counterexample":n}
nlohmann::json heredity_witness_json(const HeredityWitness& witness);

// {"bound":{"k":n,"max_coin":n},"currency":[...]|null,"detail":{...},"kind":...}
nlohmann::json finding_json(const Finding& finding);

// Terminal record of a findings stream:
// {"findings":n,"kind":"hunt_exhausted","orderly":n,"processed":n}
nlohmann::json summary_json(const SearchSummary& summary);

// One compact JSON record per line: every finding, then the terminal summary.
void write_findings_jsonl(std::ostream& out, const SearchOutcome& outcome);

}  // namespace coinage
