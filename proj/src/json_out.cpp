#include "monideal/json_out.hpp"

#include "monideal/text.hpp"

namespace monideal {

using nlohmann::json;

json to_json(const Monomial& m) { return format(m); }

json to_json(const MonomialIdeal& a) {
  json gens = json::array();
  for (std::size_t i = 0; i < a.gen_count(); ++i)
    gens.push_back(format(a.generator(i)));
  return json{{"text", format(a)}, {"generators", gens}};
}

json to_json(const MonomialPrime& p) {
  json vars = json::array();
  for (std::size_t v : p.vars()) vars.push_back(p.context().var_name(v));
  return vars;
}

json to_json(const AssSet& s) {
  json out = json::array();
  for (const MonomialPrime& p : s.primes()) out.push_back(to_json(p));
  return out;
}

json to_json(const AssSequence& seq) {
  json sets = json::array();
  for (const AssSet& s : seq.sets) sets.push_back(to_json(s));
  return json{{"sets", sets},
              {"observed_stable_from", seq.observed_stable_from}};
}

json to_json(const CriterionReport& rep) {
  json hyps = json::array();
  for (const HypothesisRecord& h : rep.hypotheses)
    hyps.push_back(
        {{"name", h.name}, {"verified", h.verified}, {"detail", h.detail}});
  json wits = json::array();
  for (const WitnessRecord& w : rep.witnesses)
    wits.push_back({{"name", w.name}, {"value", w.value}});
  json out{{"hypotheses", hyps},
           {"conclusion", std::string(to_string(rep.conclusion))},
           {"witnesses", wits}};
  if (rep.oracle_agreement)
    out["oracle_agreement"] = *rep.oracle_agreement;
  else
    out["oracle_agreement"] = nullptr;
  return out;
}

json to_json(const ChainWitness& w, const MonomialIdeal& ideal) {
  const RingContext& ctx = ideal.context();
  json order = json::array();
  for (std::size_t g : w.generator_order)
    order.push_back(format(ideal.generator(g)));
  return json{{"pair", {ctx.var_name(w.var_i), ctx.var_name(w.var_j)}},
              {"generator_order", order}};
}

json to_json(const selftest::SuiteResult& r) {
  return json{{"suite", r.name},
              {"attempted", r.attempted},
              {"applicable", r.applicable},
              {"failures", r.failures},
              {"failure_details", r.failure_details}};
}

}  // namespace monideal
