#include "monideal/session.hpp"

#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "monideal/criteria.hpp"
#include "monideal/errors.hpp"
#include "monideal/json_out.hpp"
#include "monideal/text.hpp"

namespace monideal {
namespace {

std::vector<std::string> split_args(const std::string& line,
                                    std::size_t lineno) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i >= line.size()) break;
    if (line[i] == '(') {
      // A parenthesized ideal literal counts as one token, spaces and all.
      std::size_t depth = 0;
      const std::size_t start = i;
      for (; i < line.size(); ++i) {
        if (line[i] == '(') ++depth;
        if (line[i] == ')' && --depth == 0) {
          ++i;
          break;
        }
      }
      if (depth != 0)
        throw ParseError("unbalanced parentheses", lineno, start + 1);
      tokens.push_back(line.substr(start, i - start));
    } else {
      const std::size_t start = i;
      while (i < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      tokens.push_back(line.substr(start, i - start));
    }
  }
  return tokens;
}

struct Session {
  std::optional<RingContext> ring;
  std::map<std::string, MonomialIdeal> bindings;

  const RingContext& require_ring(std::size_t lineno) const {
    if (!ring) throw ParseError("no ring declared yet", lineno, 1);
    return *ring;
  }

  MonomialIdeal ideal_arg(const std::string& token, std::size_t lineno) const {
    const RingContext& ctx = require_ring(lineno);
    if (!token.empty() && token.front() == '(') return parse_ideal(token, ctx);
    const auto it = bindings.find(token);
    if (it == bindings.end())
      throw ParseError("unknown ideal name '" + token + "'", lineno, 1);
    return it->second;
  }
};

std::size_t number_arg(const std::string& token, std::size_t lineno,
                       const char* what) {
  std::size_t value = 0;
  if (token.empty()) throw ParseError(std::string("missing ") + what, lineno, 1);
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(std::string("malformed ") + what + " '" + token + "'",
                       lineno, 1);
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > 1000000)
      throw ParseError(std::string(what) + " is too large", lineno, 1);
  }
  return value;
}

void require_arity(const std::vector<std::string>& tokens, std::size_t lo,
                   std::size_t hi, std::size_t lineno) {
  if (tokens.size() < lo || tokens.size() > hi)
    throw ParseError("wrong number of arguments for '" + tokens[0] + "'",
                     lineno, 1);
}

}  // namespace

int run_session_script(std::istream& in, std::ostream& out, bool json_mode) {
  Session session;
  nlohmann::json log = nlohmann::json::array();
  int exit_code = 0;
  std::string line;
  std::size_t lineno = 0;

  auto emit = [&](const std::string& command, const std::string& text,
                  nlohmann::json value) {
    if (json_mode)
      log.push_back({{"command", command}, {"result", std::move(value)}});
    else
      out << text << "\n";
  };

  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::vector<std::string> tokens = split_args(line, lineno);
    const std::string& cmd = tokens[0];

    if (cmd == "ring") {
      if (session.ring)
        throw ParseError("ring is already declared", lineno, 1);
      session.ring = parse_ring(line.substr(first));
      emit(line, "ring with " + std::to_string(session.ring->var_count()) +
                     " variables",
           {{"vars", session.ring->var_names()}});
    } else if (cmd == "let") {
      require_arity(tokens, 4, 4, lineno);
      if (tokens[2] != "=")
        throw ParseError("expected '=' in let binding", lineno, 1);
      MonomialIdeal value = session.ideal_arg(tokens[3], lineno);
      emit(line, tokens[1] + " = " + format(value), to_json(value));
      session.bindings.insert_or_assign(tokens[1], std::move(value));
    } else if (cmd == "mingen") {
      require_arity(tokens, 2, 2, lineno);
      const MonomialIdeal ideal = session.ideal_arg(tokens[1], lineno);
      emit(line, format(ideal), to_json(ideal));
    } else if (cmd == "power") {
      require_arity(tokens, 3, 3, lineno);
      const MonomialIdeal result =
          power(session.ideal_arg(tokens[1], lineno),
                number_arg(tokens[2], lineno, "power"));
      emit(line, format(result), to_json(result));
    } else if (cmd == "colon") {
      require_arity(tokens, 3, 3, lineno);
      const MonomialIdeal ideal = session.ideal_arg(tokens[1], lineno);
      MonomialIdeal result =
          tokens[2].front() == '(' || session.bindings.count(tokens[2])
              ? colon_ideal(ideal, session.ideal_arg(tokens[2], lineno))
              : colon_monomial(
                    ideal, parse_monomial(tokens[2],
                                          session.require_ring(lineno)));
      emit(line, format(result), to_json(result));
    } else if (cmd == "intersect") {
      require_arity(tokens, 3, 16, lineno);
      std::vector<MonomialIdeal> parts;
      for (std::size_t i = 1; i < tokens.size(); ++i)
        parts.push_back(session.ideal_arg(tokens[i], lineno));
      const MonomialIdeal result =
          intersect(std::span<const MonomialIdeal>(parts));
      emit(line, format(result), to_json(result));
    } else if (cmd == "radical") {
      require_arity(tokens, 2, 2, lineno);
      const MonomialIdeal result =
          radical(session.ideal_arg(tokens[1], lineno));
      emit(line, format(result), to_json(result));
    } else if (cmd == "decompose") {
      require_arity(tokens, 2, 2, lineno);
      const MonomialIdeal ideal = session.ideal_arg(tokens[1], lineno);
      const auto comps = irreducible_decomposition(ideal);
      std::string text = "[";
      nlohmann::json arr = nlohmann::json::array();
      for (std::size_t i = 0; i < comps.size(); ++i) {
        const MonomialIdeal as_ideal = comps[i].to_ideal(ideal.context());
        if (i) text += ", ";
        text += format(as_ideal);
        arr.push_back(to_json(as_ideal));
      }
      text += "]";
      emit(line, text, std::move(arr));
    } else if (cmd == "ass" || cmd == "socle" || cmd == "corners") {
      require_arity(tokens, 2, 3, lineno);
      MonomialIdeal ideal = session.ideal_arg(tokens[1], lineno);
      if (tokens.size() == 3)
        ideal = power(ideal, number_arg(tokens[2], lineno, "power"));
      if (cmd == "ass") {
        const AssSet result = ass_primes(ideal);
        emit(line, format(result), to_json(result));
      } else if (cmd == "socle") {
        const MonomialIdeal result = socle_colon(ideal);
        emit(line, format(result), to_json(result));
      } else {
        const auto corners = corner_elements(ideal);
        std::string text = "{";
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = 0; i < corners.size(); ++i) {
          if (i) text += ", ";
          text += format(corners[i].monomial());
          arr.push_back(format(corners[i].monomial()));
        }
        text += "}";
        emit(line, text, std::move(arr));
      }
    } else if (cmd == "ass-seq") {
      require_arity(tokens, 3, 3, lineno);
      const AssSequence seq =
          ass_sequence(session.ideal_arg(tokens[1], lineno),
                       number_arg(tokens[2], lineno, "power"));
      std::string text;
      for (std::size_t s = 0; s < seq.sets.size(); ++s) {
        if (s) text += "; ";
        text += "s=" + std::to_string(s + 1) + " " + format(seq.sets[s]);
      }
      text += " (stable from " + std::to_string(seq.observed_stable_from) +
              " in this window)";
      emit(line, text, to_json(seq));
    } else if (cmd == "check") {
      require_arity(tokens, 3, 5, lineno);
      const std::string& what = tokens[1];
      const MonomialIdeal ideal = session.ideal_arg(tokens[2], lineno);
      if (what == "chain") {
        const auto witness = check_chain_criterion(ideal);
        if (witness)
          emit(line,
               "witness pair (" +
                   ideal.context().var_name(witness->var_i) + ", " +
                   ideal.context().var_name(witness->var_j) +
                   "): maximal ideal not associated",
               to_json(*witness, ideal));
        else {
          emit(line, "no chain witness", nullptr);
          exit_code = 2;
        }
      } else if (what == "squarefree") {
        const CriterionReport rep = check_squarefree_maximal(ideal);
        emit(line, std::string(to_string(rep.conclusion)), to_json(rep));
        if (!rep.applicable()) exit_code = 2;
      } else if (what == "split" || what == "dichotomy") {
        require_arity(tokens, 5, 5, lineno);
        const Monomial factor =
            parse_monomial(tokens[3], session.require_ring(lineno));
        const std::size_t t = number_arg(tokens[4], lineno, "power");
        const SplitDecomposition split = infer_split(ideal, factor);
        const CriterionReport rep = what == "split"
                                        ? verify_split_identities(split, t)
                                        : check_dichotomy(split, t);
        emit(line, std::string(to_string(rep.conclusion)), to_json(rep));
        if (!rep.applicable()) exit_code = 2;
      } else {
        throw ParseError("unknown check '" + what + "'", lineno, 1);
      }
    } else {
      throw ParseError("unknown command '" + cmd + "'", lineno, 1);
    }
  }

  if (json_mode) out << log.dump(2) << "\n";
  return exit_code;
}

}  // namespace monideal
