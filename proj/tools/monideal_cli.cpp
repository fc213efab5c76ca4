#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "monideal/criteria.hpp"
#include "monideal/errors.hpp"
#include "monideal/graphs.hpp"
#include "monideal/json_out.hpp"
#include "monideal/kernels.hpp"
#include "monideal/selftest.hpp"
#include "monideal/session.hpp"
#include "monideal/text.hpp"

namespace {

using namespace monideal;
using nlohmann::json;

struct Options {
  std::string ring_text;
  bool json_mode = false;
  std::size_t cap_gens = 0;
  std::size_t cap_subsets = 0;
  std::size_t cap_corners = 0;
  std::string kernel_name;

  std::string ideal_text;
  std::string second_text;
  std::vector<std::string> ideal_list;
  std::size_t t = 1;
  std::size_t smax = 0;
  bool exhaustive = false;
  bool verify = false;

  std::string prime_text;
  std::vector<std::string> step_texts;
  std::size_t ell = 0;
  bool ell_set = false;

  std::string factor_text;
  std::string corner_text;
  std::string var_name;

  std::string graph_text;
  std::string reproduce_id;
  std::size_t wheel_n = 3;
  std::size_t cycle_k = 2;
  std::size_t cycle_n = 0;

  std::string script_path;
  std::uint64_t seed = 20260823;
  std::size_t cases = 200;
  std::string suite_name;
};

void apply_globals(const Options& opt) {
  if (opt.cap_gens) limits().generator_cap = opt.cap_gens;
  if (opt.cap_subsets) limits().subset_cap = opt.cap_subsets;
  if (opt.cap_corners) limits().corner_search_cap = opt.cap_corners;
  if (!opt.kernel_name.empty() && !kernels::select(opt.kernel_name))
    throw InvalidArgument("kernel backend '" + opt.kernel_name +
                          "' is not available on this machine");
}

RingContext need_ring(const Options& opt) {
  if (opt.ring_text.empty())
    throw InvalidArgument("this command needs --ring (e.g. --ring x,y,z)");
  return parse_ring(opt.ring_text);
}

void print_value(const Options& opt, const std::string& text,
                 const json& value) {
  if (opt.json_mode)
    std::cout << value.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

int report_exit(const CriterionReport& rep) {
  if (!rep.applicable()) return 2;
  if (rep.oracle_agreement && !*rep.oracle_agreement) return 1;
  return 0;
}

void print_report(const Options& opt, const CriterionReport& rep) {
  if (opt.json_mode) {
    std::cout << to_json(rep).dump(2) << "\n";
    return;
  }
  for (const HypothesisRecord& h : rep.hypotheses)
    std::cout << (h.verified ? "[ok] " : "[--] ") << h.name << ": " << h.detail
              << "\n";
  std::cout << "conclusion: " << to_string(rep.conclusion) << "\n";
  for (const WitnessRecord& w : rep.witnesses)
    std::cout << "  " << w.name << " = " << w.value << "\n";
  if (rep.oracle_agreement)
    std::cout << "oracle agreement: " << (*rep.oracle_agreement ? "yes" : "NO")
              << "\n";
}

ColonStep parse_step(const std::string& text, const RingContext& ctx) {
  // Form: var[^exp][=(ideal)], e.g. "z", "y^2", "x^4=(x^4,z)".
  ColonStep step;
  std::string head = text;
  const auto eq = text.find('=');
  if (eq != std::string::npos) {
    head = text.substr(0, eq);
    step.auxiliary = parse_ideal(text.substr(eq + 1), ctx);
  }
  const auto caret = head.find('^');
  std::string var = head;
  if (caret != std::string::npos) {
    var = head.substr(0, caret);
    const std::string num = head.substr(caret + 1);
    if (num.empty() ||
        num.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidArgument("malformed step exponent in '" + text + "'");
    const unsigned long long e = std::stoull(num);
    if (e < 1 || e > INT32_MAX)
      throw InvalidArgument("step exponent out of range in '" + text + "'");
    step.exponent = static_cast<Exp>(e);
  }
  const auto idx = ctx.var_index(var);
  if (!idx)
    throw InvalidArgument("unknown step variable '" + var + "'");
  step.var = *idx;
  return step;
}

// ---------------------------------------------------------------------------
// reproduce: recompute the shipped worked examples and diff against the
// embedded expected values.  Exit 0 only when everything matches.

struct Reproducer {
  const Options& opt;
  json doc = json::object();
  bool ok = true;

  void record(const std::string& claim, bool holds) {
    ok = ok && holds;
    doc["claims"].push_back({{"claim", claim}, {"holds", holds}});
    if (!opt.json_mode)
      std::cout << (holds ? "  [ok] " : "  [FAIL] ") << claim << "\n";
  }

  int finish() {
    doc["ok"] = ok;
    if (opt.json_mode) std::cout << doc.dump(2) << "\n";
    return ok ? 0 : 1;
  }
};

AssSet expected_two_primes(const RingContext& ctx) {
  // {(x,y), (x,z)} in the three-variable ring.
  AssSet s(ctx);
  s.insert(MonomialPrime(ctx, {0, 1}));
  s.insert(MonomialPrime(ctx, {0, 2}));
  return s;
}

int reproduce_app2(const Options& opt) {
  const std::size_t t = opt.t ? opt.t : 3;
  if (t < 2) throw InvalidArgument("this family needs --t >= 2");
  const std::size_t smax = opt.smax ? opt.smax : t + 1;
  const RingContext ctx({"x", "y", "z"});
  const auto mono = [&](Exp a, Exp b, Exp c) {
    return Monomial(ctx, {a, b, c});
  };
  const Exp te = static_cast<Exp>(t);
  const MonomialIdeal ideal = from_generators(
      ctx, {mono(te, 0, 0), mono(1, te - 2, 1), mono(0, te - 1, 1)});

  Reproducer rep{opt};
  if (!opt.json_mode)
    std::cout << "power family " << format(ideal) << ", s = 1.." << smax
              << "\n";
  rep.doc["ideal"] = format(ideal);
  rep.doc["t"] = t;

  const AssSequence seq = ass_sequence(ideal, smax);
  const AssSet small = expected_two_primes(ctx);
  for (std::size_t s = 1; s <= smax; ++s) {
    AssSet expected = small;
    if (s >= t) expected.insert(MonomialPrime::maximal(ctx));
    rep.record("Ass at power " + std::to_string(s) + " is " + format(expected),
               seq.sets[s - 1] == expected);
  }
  rep.doc["sequence"] = to_json(seq);

  // The distinguished corner of the t-th power.
  if (smax >= t) {
    const Monomial corner =
        mono(static_cast<Exp>(t), static_cast<Exp>(t * t - 2 * t),
             static_cast<Exp>(t - 1));
    const MonomialIdeal power_ideal = power(ideal, t);
    bool is_corner = true;
    std::string why;
    try {
      CornerWitness witness(power_ideal, corner);
    } catch (const Error& e) {
      is_corner = false;
      why = e.what();
    }
    rep.record("corner of the t-th power: " + format(corner), is_corner);
    const auto listed = corner_elements(power_ideal);
    const bool in_list =
        std::any_of(listed.begin(), listed.end(), [&](const CornerWitness& w) {
          return w.monomial() == corner;
        });
    rep.record("that corner appears in the socle-route corner list", in_list);
  }

  // Intersection form of the family.
  if (t >= 3) {
    const MonomialIdeal meet = intersect(std::vector<MonomialIdeal>{
        from_generators(ctx, {mono(1, 0, 0), mono(0, te - 1, 0)}),
        from_generators(ctx, {mono(te, 0, 0), mono(0, te - 2, 0)}),
        from_generators(ctx, {mono(te, 0, 0), mono(0, 0, 1)})});
    rep.record("three-component intersection rebuilds the ideal",
               meet == ideal);
  } else {
    const MonomialIdeal meet = intersect(
        from_generators(ctx, {mono(1, 0, 0), mono(0, 1, 0)}),
        from_generators(ctx, {mono(2, 0, 0), mono(0, 0, 1)}));
    rep.record("two-component intersection rebuilds the ideal", meet == ideal);
  }

  // Colon-criterion certificates that the maximal ideal is absent below t.
  if (t >= 3) {
    for (std::size_t s = 1; s <= std::min(smax, t - 1); ++s) {
      ColonCriterionRequest req(ideal, s, MonomialPrime::maximal(ctx));
      req.steps.push_back({2, 1, std::nullopt});
      req.steps.push_back({1, te - 2, std::nullopt});
      req.steps.push_back({0, static_cast<Exp>(t * s - t + 1), std::nullopt});
      const CriterionReport crit = check_colon_criterion_b(req);
      rep.record("cumulative colon criterion certifies absence at power " +
                     std::to_string(s),
                 crit.conclusion == Conclusion::kPrimeNotAssociated &&
                     crit.oracle_agreement == true);
    }
  }
  return rep.finish();
}

int reproduce_split3(const Options& opt) {
  const RingContext ctx({"x", "y", "z"});
  const auto mono = [&](Exp a, Exp b, Exp c) {
    return Monomial(ctx, {a, b, c});
  };
  const MonomialIdeal combined = from_generators(
      ctx,
      {mono(11, 0, 1), mono(5, 4, 0), mono(6, 2, 0), mono(0, 11, 1)});
  Reproducer rep{opt};
  rep.doc["ideal"] = format(combined);

  const MonomialIdeal cubed = power(combined, 3);
  rep.record("the cube has 13 minimal generators", cubed.gen_count() == 13);
  rep.record("maximal ideal not associated to the cube",
             !has_maximal_associated(cubed));
  const Monomial z3 = mono(0, 0, 3);
  rep.record("maximal ideal associated after adjoining z^3",
             has_maximal_associated(sum(cubed, principal_ideal(z3))));

  const SplitDecomposition split = infer_split(combined, mono(0, 0, 1));
  rep.record("split cofactor is (x^11, y^11)",
             split.cofactor() ==
                 from_generators(ctx, {mono(11, 0, 0), mono(0, 11, 0)}));
  rep.record("split remainder is (x^5*y^4, x^6*y^2)",
             split.remainder() ==
                 from_generators(ctx, {mono(5, 4, 0), mono(6, 2, 0)}));
  const CriterionReport identities = verify_split_identities(split, 3);
  rep.record("both split identities hold at power 3",
             identities.applicable() && identities.oracle_agreement == true);
  const MonomialIdeal parts_cubed =
      power(sum(split.cofactor(), split.remainder()), 3);
  rep.record("(x, y) associated to the parts' cube",
             is_associated(parts_cubed, MonomialPrime(ctx, {0, 1})));
  return rep.finish();
}

int reproduce_wheel(const Options& opt) {
  const std::size_t half = opt.wheel_n;
  if (half < 3) throw InvalidArgument("the wheel family needs --n >= 3");
  const SimpleGraph graph = wheel_graph(2 * half);
  const RingContext ctx = graph_ring(graph);
  const MonomialIdeal cover = cover_ideal(graph, ctx);
  Reproducer rep{opt};
  rep.doc["cover_ideal"] = format(cover);
  if (!opt.json_mode)
    std::cout << "wheel on " << 2 * half << " vertices, cover ideal "
              << format(cover) << "\n";
  const AssSequence seq = ass_sequence(cover, 3);
  rep.record("maximal ideal absent at power 1",
             !seq.sets[0].contains_maximal());
  rep.record("maximal ideal absent at power 2",
             !seq.sets[1].contains_maximal());
  rep.record("maximal ideal present at power 3",
             seq.sets[2].contains_maximal());
  rep.doc["sequence"] = to_json(seq);
  return rep.finish();
}

int reproduce_chain4(const Options& opt) {
  const RingContext ctx({"x", "y", "z", "t"});
  const auto mono = [&](Exp a, Exp b, Exp c, Exp d) {
    return Monomial(ctx, {a, b, c, d});
  };
  const MonomialIdeal ideal =
      from_generators(ctx, {mono(5, 1, 4, 0), mono(4, 0, 3, 2),
                            mono(3, 2, 2, 0), mono(2, 0, 1, 3)});
  Reproducer rep{opt};
  rep.doc["ideal"] = format(ideal);

  const auto witness = check_chain_criterion(ideal);
  rep.record("chain witness exists", witness.has_value());
  if (witness) {
    const bool xz = (witness->var_i == 0 && witness->var_j == 2);
    rep.record("witness pair is (x, z)", xz);
    rep.doc["witness"] = to_json(*witness, ideal);
  }
  rep.record("maximal ideal not associated (localization route)",
             !has_maximal_associated(ideal));
  rep.record("maximal ideal not associated (decomposition route)",
             !ass_from_decomposition(ideal).contains_maximal());

  AssSet expected(ctx);
  expected.insert(MonomialPrime(ctx, {0}));
  expected.insert(MonomialPrime(ctx, {2}));
  expected.insert(MonomialPrime(ctx, {0, 3}));
  expected.insert(MonomialPrime(ctx, {1, 3}));
  expected.insert(MonomialPrime(ctx, {2, 3}));
  expected.insert(MonomialPrime(ctx, {0, 1, 3}));
  expected.insert(MonomialPrime(ctx, {1, 2, 3}));
  rep.record("full associated-prime set is " + format(expected),
             ass_primes(ideal) == expected);
  return rep.finish();
}

int reproduce_wheelsplit(const Options& opt) {
  const SimpleGraph graph = wheel_graph(6);
  const RingContext ctx = graph_ring(graph);
  const MonomialIdeal cover = cover_ideal(graph, ctx);
  Reproducer rep{opt};
  rep.doc["cover_ideal"] = format(cover);

  const Monomial hub = variable_monomial(ctx, 5);
  const SplitDecomposition split = infer_split(cover, hub);
  rep.record("remainder is the full rim product",
             split.remainder() ==
                 principal_ideal(Monomial(ctx, {1, 1, 1, 1, 1, 0})));
  const MonomialIdeal cubed = power(cover, 3);
  rep.record("maximal ideal associated to the cube",
             has_maximal_associated(cubed));
  rep.record(
      "maximal ideal associated after adjoining the hub variable cubed",
      has_maximal_associated(sum(cubed, principal_ideal(monomial_power(hub, 3)))));
  const MonomialIdeal parts_cubed =
      power(sum(split.cofactor(), split.remainder()), 3);
  rep.record("rim prime associated to the parts' cube",
             is_associated(parts_cubed, MonomialPrime(ctx, {0, 1, 2, 3, 4})));
  const CriterionReport dichotomy = check_dichotomy(split, 3);
  bool both = dichotomy.applicable();
  for (const WitnessRecord& w : dichotomy.witnesses)
    if (w.name == "maximal-associated-to-power" ||
        w.name == "reduced-associated-to-parts-power")
      both = both && w.value == "true";
  rep.record("dichotomy applies and both branches hold", both);
  rep.doc["dichotomy"] = to_json(dichotomy);
  return rep.finish();
}

int reproduce_oddcycle(const Options& opt, bool edge_side) {
  const std::size_t k = opt.cycle_k;
  if (k < 1) throw InvalidArgument("odd cycles need --k >= 1");
  const std::size_t len = 2 * k + 1;
  const std::size_t top = opt.cycle_n ? opt.cycle_n : k + 1;
  const SimpleGraph graph = cycle_graph(len);
  const RingContext ctx = graph_ring(graph);
  Reproducer rep{opt};

  if (edge_side) {
    const MonomialIdeal ideal = edge_ideal(graph, ctx);
    rep.doc["edge_ideal"] = format(ideal);
    const std::size_t smax = std::max(top, k + 1);
    const AssSequence seq = ass_sequence(ideal, smax);
    for (std::size_t s = 1; s <= smax; ++s)
      rep.record("maximal ideal " +
                     std::string(s >= k + 1 ? "present" : "absent") +
                     " at power " + std::to_string(s),
                 seq.sets[s - 1].contains_maximal() == (s >= k + 1));
    // At the threshold power the set is exactly the minimal primes plus the
    // maximal ideal.
    AssSet expected = seq.sets[0];
    expected.insert(MonomialPrime::maximal(ctx));
    rep.record("threshold set is the minimal primes plus the maximal ideal",
               seq.sets[k] == expected);
    rep.doc["sequence"] = to_json(seq);
  } else {
    const MonomialIdeal ideal = cover_ideal(graph, ctx);
    rep.doc["cover_ideal"] = format(ideal);
    const std::size_t smax = std::max<std::size_t>(top, 3);
    const AssSequence seq = ass_sequence(ideal, smax);
    for (std::size_t s = 1; s <= smax; ++s)
      rep.record("maximal ideal " + std::string(s >= 2 ? "present" : "absent") +
                     " at power " + std::to_string(s),
                 seq.sets[s - 1].contains_maximal() == (s >= 2));
    rep.doc["sequence"] = to_json(seq);
  }
  return rep.finish();
}

int run_reproduce(const Options& opt) {
  const std::string& id = opt.reproduce_id;
  if (id == "app2") return reproduce_app2(opt);
  if (id == "split3") return reproduce_split3(opt);
  if (id == "wheel") return reproduce_wheel(opt);
  if (id == "chain4") return reproduce_chain4(opt);
  if (id == "wheelsplit") return reproduce_wheelsplit(opt);
  if (id == "oddcycle-edge") return reproduce_oddcycle(opt, true);
  if (id == "oddcycle-cover") return reproduce_oddcycle(opt, false);
  throw InvalidArgument("unknown reproduce id '" + id +
                        "' (known: app2, split3, wheel, chain4, "
                        "wheelsplit, oddcycle-edge, oddcycle-cover)");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  std::function<int()> action;

  CLI::App app{
      "monideal: monomial-ideal engine for associated primes of powers"};
  app.require_subcommand(1);
  app.add_option("--ring", opt.ring_text,
                 "ambient ring, e.g. \"x,y,z\" or \"x1..x6\"");
  app.add_flag("--json", opt.json_mode, "emit the stable JSON document");
  app.add_option("--cap-gens", opt.cap_gens,
                 "generator cap for products/intersections (default 200000)");
  app.add_option("--cap-subsets", opt.cap_subsets,
                 "support-size cap for prime enumeration (default 22)");
  app.add_option("--cap-corners", opt.cap_corners,
                 "box-volume cap for the exhaustive corner search "
                 "(default 4194304)");
  app.add_option("--kernels", opt.kernel_name,
                 "kernel backend: scalar, avx2, or auto");

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  {
    CLI::App* c = sub("mingen", "canonical minimal generators of an ideal");
    c->add_option("ideal", opt.ideal_text, "ideal literal")->required();
    c->callback([&] {
      action = [&] {
        const MonomialIdeal ideal = parse_ideal(opt.ideal_text, need_ring(opt));
        print_value(opt, format(ideal), to_json(ideal));
        return 0;
      };
    });
  }
  {
    CLI::App* c = sub("power", "t-th power of an ideal");
    c->add_option("ideal", opt.ideal_text)->required();
    c->add_option("--t", opt.t, "exponent (default 1)");
    c->callback([&] {
      action = [&] {
        const MonomialIdeal result =
            power(parse_ideal(opt.ideal_text, need_ring(opt)), opt.t);
        print_value(opt, format(result), to_json(result));
        return 0;
      };
    });
  }
  {
    CLI::App* c = sub("colon", "colon of an ideal by a monomial or ideal");
    c->add_option("ideal", opt.ideal_text)->required();
    c->add_option("by", opt.second_text, "monomial or (ideal)")->required();
    c->callback([&] {
      action = [&] {
        const RingContext ctx = need_ring(opt);
        const MonomialIdeal ideal = parse_ideal(opt.ideal_text, ctx);
        const MonomialIdeal result =
            opt.second_text.find('(') != std::string::npos
                ? colon_ideal(ideal, parse_ideal(opt.second_text, ctx))
                : colon_monomial(ideal, parse_monomial(opt.second_text, ctx));
        print_value(opt, format(result), to_json(result));
        return 0;
      };
    });
  }
  {
    CLI::App* c = sub("intersect", "intersection of two or more ideals");
    c->add_option("ideals", opt.ideal_list)->required();
    c->callback([&] {
      action = [&] {
        if (opt.ideal_list.size() < 2)
          throw InvalidArgument("intersect needs at least two ideals");
        const RingContext ctx = need_ring(opt);
        std::vector<MonomialIdeal> parts;
        for (const std::string& text : opt.ideal_list)
          parts.push_back(parse_ideal(text, ctx));
        const MonomialIdeal result =
            intersect(std::span<const MonomialIdeal>(parts));
        print_value(opt, format(result), to_json(result));
        return 0;
      };
    });
  }
  {
    CLI::App* c = sub("radical", "radical of an ideal");
    c->add_option("ideal", opt.ideal_text)->required();
    c->callback([&] {
      action = [&] {
        const MonomialIdeal result =
            radical(parse_ideal(opt.ideal_text, need_ring(opt)));
        print_value(opt, format(result), to_json(result));
        return 0;
      };
    });
  }
  {
    CLI::App* c = sub("decompose", "irredundant irreducible decomposition");
    c->add_option("ideal", opt.ideal_text)->required();
    c->callback([&] {
      action = [&] {
        const RingContext ctx = need_ring(opt);
        const MonomialIdeal ideal = parse_ideal(opt.ideal_text, ctx);
        const auto comps = irreducible_decomposition(ideal);
        std::string text = "[";
        json arr = json::array();
        for (std::size_t i = 0; i < comps.size(); ++i) {
          const MonomialIdeal as_ideal = comps[i].to_ideal(ctx);
          if (i) text += ", ";
          text += format(as_ideal);
          arr.push_back(to_json(as_ideal));
        }
        text += "]";
        print_value(opt, text, arr);
        return 0;
      };
    });
  }
  {
    CLI::App* c = sub("ass", "associated primes of R/I^t");
    c->add_option("ideal", opt.ideal_text)->required();
    c->add_option("--t", opt.t, "power (default 1)");
    c->add_flag("--verify", opt.verify,
                "cross-check with the decomposition route");
    c->callback([&] {
      action = [&] {
        const RingContext ctx = need_ring(opt);
        const MonomialIdeal ideal =
            power(parse_ideal(opt.ideal_text, ctx), opt.t);
        const AssSet result = ass_primes(ideal);
        if (opt.verify && !(ass_from_decomposition(ideal) == result))
          throw InvariantViolation(
              "associated-prime routes disagree; please report this input");
        print_value(opt, format(result), to_json(result));
        return 0;
      };
    });
  }
  {
    CLI::App* c = sub("ass-seq", "associated primes along powers 1..smax");
    c->add_option("ideal", opt.ideal_text)->required();
    c->add_option("--smax", opt.smax, "largest power")->required();
    c->callback([&] {
      action = [&] {
        const RingContext ctx = need_ring(opt);
        const AssSequence seq =
            ass_sequence(parse_ideal(opt.ideal_text, ctx), opt.smax);
        std::string text;
        for (std::size_t s = 0; s < seq.sets.size(); ++s) {
          text += "s=" + std::to_string(s + 1) + ": " + format(seq.sets[s]) +
                  "\n";
        }
        text += "observed stable from s=" +
                std::to_string(seq.observed_stable_from) +
                " within this window";
        print_value(opt, text, to_json(seq));
        return 0;
      };
    });
  }
  {
    CLI::App* c = sub("socle", "colon of I^t by the maximal ideal");
    c->add_option("ideal", opt.ideal_text)->required();
    c->add_option("--t", opt.t, "power (default 1)");
    c->callback([&] {
      action = [&] {
        const RingContext ctx = need_ring(opt);
        const MonomialIdeal result =
            socle_colon(power(parse_ideal(opt.ideal_text, ctx), opt.t));
        print_value(opt, format(result), to_json(result));
        return 0;
      };
    });
  }
  {
    CLI::App* c = sub("corners", "corner monomials of I^t");
    c->add_option("ideal", opt.ideal_text)->required();
    c->add_option("--t", opt.t, "power (default 1)");
    c->add_flag("--exhaustive", opt.exhaustive,
                "use the box search and cross-check the socle route");
    c->callback([&] {
      action = [&] {
        const RingContext ctx = need_ring(opt);
        const MonomialIdeal ideal =
            power(parse_ideal(opt.ideal_text, ctx), opt.t);
        const auto corners = corner_elements(ideal);
        if (opt.exhaustive) {
          const auto searched = corner_elements_exhaustive(ideal);
          bool same = corners.size() == searched.size();
          for (std::size_t i = 0; same && i < corners.size(); ++i)
            same = corners[i].monomial() == searched[i].monomial();
          if (!same)
            throw InvariantViolation(
                "corner routes disagree; please report this input");
        }
        std::string text = "{";
        json arr = json::array();
        for (std::size_t i = 0; i < corners.size(); ++i) {
          if (i) text += ", ";
          text += format(corners[i].monomial());
          arr.push_back(format(corners[i].monomial()));
        }
        text += "}";
        print_value(opt, text, arr);
        return 0;
      };
    });
  }

  CLI::App* check = app.add_subcommand("check", "run a detection criterion");
  check->require_subcommand(1);
  check->fallthrough();
  auto check_sub = [&](const char* name, const char* help) {
    CLI::App* s = check->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  {
    CLI::App* c = check_sub("chain",
                            "two-column chain certificate of non-association");
    c->add_option("ideal", opt.ideal_text)->required();
    c->callback([&] {
      action = [&] {
        const RingContext ctx = need_ring(opt);
        const MonomialIdeal ideal = parse_ideal(opt.ideal_text, ctx);
        const auto witness = check_chain_criterion(ideal);
        if (!witness) {
          print_value(opt, "no chain witness: criterion not applicable",
                      json{{"witness", nullptr}});
          return 2;
        }
        print_value(opt,
                    "witness pair (" + ctx.var_name(witness->var_i) + ", " +
                        ctx.var_name(witness->var_j) +
                        "): maximal ideal not associated",
                    json{{"witness", to_json(*witness, ideal)}});
        return 0;
      };
    });
  }
  {
    CLI::App* c = check_sub("squarefree",
                            "maximal ideal test for squarefree ideals");
    c->add_option("ideal", opt.ideal_text)->required();
    c->callback([&] {
      action = [&] {
        const CriterionReport rep = check_squarefree_maximal(
            parse_ideal(opt.ideal_text, need_ring(opt)));
        print_report(opt, rep);
        return report_exit(rep);
      };
    });
  }
  {
    CLI::App* c = check_sub("split", "power identities of a split L = u*I + J");
    c->add_option("ideal", opt.ideal_text)->required();
    c->add_option("--u", opt.factor_text, "split factor monomial")->required();
    c->add_option("--t", opt.t, "power (default 1)");
    c->callback([&] {
      action = [&] {
        const RingContext ctx = need_ring(opt);
        const SplitDecomposition split =
            infer_split(parse_ideal(opt.ideal_text, ctx),
                        parse_monomial(opt.factor_text, ctx));
        const CriterionReport rep = verify_split_identities(split, opt.t);
        print_report(opt, rep);
        return report_exit(rep);
      };
    });
  }
  {
    CLI::App* c = check_sub("dichotomy",
                            "either-side analysis of a split's power");
    c->add_option("ideal", opt.ideal_text)->required();
    c->add_option("--u", opt.factor_text, "split factor monomial")->required();
    c->add_option("--t", opt.t, "power (default 1)");
    c->callback([&] {
      action = [&] {
        const RingContext ctx = need_ring(opt);
        const SplitDecomposition split =
            infer_split(parse_ideal(opt.ideal_text, ctx),
                        parse_monomial(opt.factor_text, ctx));
        const CriterionReport rep = check_dichotomy(split, opt.t);
        print_report(opt, rep);
        return report_exit(rep);
      };
    });
  }
  {
    CLI::App* c = check_sub(
        "colon-a", "colon criterion with per-step auxiliary ideals");
    c->add_option("ideal", opt.ideal_text)->required();
    c->add_option("--t", opt.t, "power (default 1)");
    c->add_option("--prime", opt.prime_text,
                  "monomial prime (default: maximal ideal)");
    c->add_option("--step", opt.step_texts,
                  "step var[^exp]=(ideal); repeatable")
        ->required();
    c->add_option("--ell", opt.ell, "membership exponent (default t)");
    c->callback([&] {
      action = [&] {
        const RingContext ctx = need_ring(opt);
        ColonCriterionRequest req(parse_ideal(opt.ideal_text, ctx), opt.t,
                                  opt.prime_text.empty()
                                      ? MonomialPrime::maximal(ctx)
                                      : parse_prime(opt.prime_text, ctx));
        for (const std::string& text : opt.step_texts)
          req.steps.push_back(parse_step(text, ctx));
        if (opt.ell) req.membership_exponent = opt.ell;
        const CriterionReport rep = check_colon_criterion_a(req);
        print_report(opt, rep);
        return report_exit(rep);
      };
    });
  }
  {
    CLI::App* c =
        check_sub("colon-b", "cumulative colon criterion (no auxiliaries)");
    c->add_option("ideal", opt.ideal_text)->required();
    c->add_option("--t", opt.t, "power (default 1)");
    c->add_option("--prime", opt.prime_text,
                  "monomial prime (default: maximal ideal)");
    c->add_option("--step", opt.step_texts, "step var[^exp]; repeatable")
        ->required();
    c->add_option("--ell", opt.ell, "membership exponent (default t)");
    c->callback([&] {
      action = [&] {
        const RingContext ctx = need_ring(opt);
        ColonCriterionRequest req(parse_ideal(opt.ideal_text, ctx), opt.t,
                                  opt.prime_text.empty()
                                      ? MonomialPrime::maximal(ctx)
                                      : parse_prime(opt.prime_text, ctx));
        for (const std::string& text : opt.step_texts)
          req.steps.push_back(parse_step(text, ctx));
        if (opt.ell) req.membership_exponent = opt.ell;
        const CriterionReport rep = check_colon_criterion_b(req);
        print_report(opt, rep);
        return report_exit(rep);
      };
    });
  }
  {
    CLI::App* c = check_sub("corner-div",
                            "forced divisibility of a corner by a variable");
    c->add_option("ideal", opt.ideal_text)->required();
    c->add_option("--t", opt.t, "power (default 1)");
    c->add_option("--corner", opt.corner_text, "corner monomial")->required();
    c->add_option("--var", opt.var_name, "variable name")->required();
    c->callback([&] {
      action = [&] {
        const RingContext ctx = need_ring(opt);
        const auto var = ctx.var_index(opt.var_name);
        if (!var)
          throw InvalidArgument("unknown variable '" + opt.var_name + "'");
        const CriterionReport rep = check_corner_divisibility(
            parse_ideal(opt.ideal_text, ctx), opt.t,
            parse_monomial(opt.corner_text, ctx), *var);
        print_report(opt, rep);
        return report_exit(rep);
      };
    });
  }

  CLI::App* graph = app.add_subcommand("graph", "graph-attached ideals");
  graph->require_subcommand(1);
  graph->fallthrough();
  {
    CLI::App* c = graph->add_subcommand("edge", "edge ideal of a graph");
    c->fallthrough();
    c->add_option("graph", opt.graph_text,
                  "\"graph N; u-v ...\" or cycle:k / wheel:k")
        ->required();
    c->callback([&] {
      action = [&] {
        const SimpleGraph g = parse_graph(opt.graph_text);
        const RingContext ctx = graph_ring(g);
        const MonomialIdeal ideal = edge_ideal(g, ctx);
        print_value(opt, format(ideal),
                    json{{"vars", ctx.var_names()}, {"ideal", to_json(ideal)}});
        return 0;
      };
    });
  }
  {
    CLI::App* c = graph->add_subcommand("cover", "cover ideal of a graph");
    c->fallthrough();
    c->add_option("graph", opt.graph_text,
                  "\"graph N; u-v ...\" or cycle:k / wheel:k")
        ->required();
    c->callback([&] {
      action = [&] {
        const SimpleGraph g = parse_graph(opt.graph_text);
        const RingContext ctx = graph_ring(g);
        const MonomialIdeal ideal = cover_ideal(g, ctx);
        print_value(opt, format(ideal),
                    json{{"vars", ctx.var_names()}, {"ideal", to_json(ideal)}});
        return 0;
      };
    });
  }

  {
    CLI::App* c = sub("reproduce", "recompute a shipped worked example");
    c->add_option("id", opt.reproduce_id,
                  "app2 | split3 | wheel | chain4 | wheelsplit | "
                  "oddcycle-edge | oddcycle-cover")
        ->required();
    c->add_option("--t", opt.t, "family parameter (app2; default 3)");
    c->add_option("--smax", opt.smax, "largest power (app2; default t+1)");
    c->add_option("--n", opt.wheel_n,
                  "wheel half-order, or power for odd cycles");
    c->add_option("--k", opt.cycle_k, "odd-cycle half-length (default 2)");
    c->callback([&] {
      action = [&] {
        if (opt.reproduce_id == "app2" && opt.t == 1) opt.t = 3;
        if (opt.reproduce_id.rfind("oddcycle", 0) == 0) {
          opt.cycle_n = opt.wheel_n == 3 ? 0 : opt.wheel_n;
        }
        return run_reproduce(opt);
      };
    });
  }
  {
    CLI::App* c = sub("script", "run a session script file ('-' for stdin)");
    c->add_option("file", opt.script_path)->required();
    c->callback([&] {
      action = [&] {
        if (opt.script_path == "-")
          return run_session_script(std::cin, std::cout, opt.json_mode);
        std::ifstream in(opt.script_path);
        if (!in)
          throw InvalidArgument("cannot open script file '" + opt.script_path +
                                "'");
        return run_session_script(in, std::cout, opt.json_mode);
      };
    });
  }
  {
    CLI::App* c = sub("selftest", "run the seeded property suites");
    c->add_option("--seed", opt.seed, "base seed (default 20260823)");
    c->add_option("--cases", opt.cases,
                  "applicable cases per suite (default 200)");
    c->add_option("--suite", opt.suite_name, "run a single suite by name");
    c->callback([&] {
      action = [&] {
        json arr = json::array();
        bool all_ok = true;
        if (!opt.json_mode)
          std::cout << "kernel backend: " << kernels::active().name << "\n";
        auto run_one = [&](const selftest::Suite& s) {
          const selftest::SuiteResult r = s.run(opt.seed, opt.cases);
          const bool ok = r.failures == 0 && r.applicable >= opt.cases;
          all_ok = all_ok && ok;
          if (opt.json_mode) {
            arr.push_back(to_json(r));
          } else {
            std::cout << (ok ? "[ok] " : "[FAIL] ") << r.name << ": "
                      << r.applicable << " applicable of " << r.attempted
                      << " generated, " << r.failures << " failures\n";
            for (const std::string& d : r.failure_details)
              std::cout << "       " << d << "\n";
          }
        };
        if (!opt.suite_name.empty()) {
          bool found = false;
          for (const auto& s : selftest::all_suites())
            if (opt.suite_name == s.name) {
              run_one(s);
              found = true;
            }
          if (!found)
            throw InvalidArgument("unknown suite '" + opt.suite_name + "'");
        } else {
          for (const auto& s : selftest::all_suites()) run_one(s);
        }
        if (opt.json_mode) std::cout << arr.dump(2) << "\n";
        return all_ok ? 0 : 1;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (!action) {
    std::cerr << "error: no subcommand selected\n";
    return 1;
  }
  try {
    apply_globals(opt);
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded [" << e.cap_name() << "]: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
