#pragma once

#include <json.hpp>

#include "monideal/assoc.hpp"
#include "monideal/criteria.hpp"
#include "monideal/selftest.hpp"

namespace monideal {

// JSON views of the result types.  Field names are part of the CLI contract:
//   AssSet            -> sorted list of sorted variable-name lists
//   AssSequence       -> {"sets": [...], "observed_stable_from": int}
//   CriterionReport   -> {"hypotheses": [{name, verified, detail}],
//                         "conclusion": str, "witnesses": [{name, value}],
//                         "oracle_agreement": bool|null}

nlohmann::json to_json(const Monomial& m);
nlohmann::json to_json(const MonomialIdeal& a);
nlohmann::json to_json(const MonomialPrime& p);
nlohmann::json to_json(const AssSet& s);
nlohmann::json to_json(const AssSequence& seq);
nlohmann::json to_json(const CriterionReport& rep);
nlohmann::json to_json(const ChainWitness& w, const MonomialIdeal& ideal);
nlohmann::json to_json(const selftest::SuiteResult& r);

}  // namespace monideal
