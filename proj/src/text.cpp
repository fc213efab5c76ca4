#include "monideal/text.hpp"

#include <cctype>
#include <cstdint>

#include "monideal/errors.hpp"

namespace monideal {
namespace {

struct Cursor {
  std::string_view src;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t col = 1;

  bool at_end() const { return pos >= src.size(); }
  char peek() const { return at_end() ? '\0' : src[pos]; }

  void advance() {
    if (at_end()) return;
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      advance();
  }

  bool eat(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected ") + what);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, col);
  }

  std::string_view identifier() {
    if (!std::isalpha(static_cast<unsigned char>(peek())))
      fail("expected a name");
    const std::size_t start = pos;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
      advance();
    return src.substr(start, pos - start);
  }

  std::uint64_t unsigned_number(const char* what) {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail(std::string("expected ") + what);
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > std::uint64_t{1} << 40) fail("number is too large");
      advance();
    }
    return v;
  }

  void expect_end() {
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
  }
};

// Splits a trailing decimal number off an identifier; returns false if the
// identifier does not end in digits.
bool split_numeric_suffix(std::string_view name, std::string_view& prefix,
                          std::uint64_t& number) {
  std::size_t d = name.size();
  while (d > 0 && std::isdigit(static_cast<unsigned char>(name[d - 1]))) --d;
  if (d == name.size() || d == 0) return false;
  prefix = name.substr(0, d);
  number = 0;
  for (char c : name.substr(d))
    number = number * 10 + static_cast<std::uint64_t>(c - '0');
  return true;
}

Monomial parse_monomial_at(Cursor& c, const RingContext& ctx) {
  std::vector<Exp> exps(ctx.var_count(), 0);
  for (;;) {
    c.skip_ws();
    if (c.peek() == '1') {
      // The literal "1" is the identity factor.
      c.advance();
    } else {
      const auto name_start_line = c.line;
      const auto name_start_col = c.col;
      const std::string_view name = c.identifier();
      const auto idx = ctx.var_index(name);
      if (!idx)
        throw ParseError("unknown variable '" + std::string(name) + "'",
                         name_start_line, name_start_col);
      std::uint64_t e = 1;
      c.skip_ws();
      if (c.eat('^')) {
        c.skip_ws();
        e = c.unsigned_number("an exponent");
      }
      const std::uint64_t total =
          static_cast<std::uint64_t>(exps[*idx]) + e;
      if (total > INT32_MAX) c.fail("exponent out of range");
      exps[*idx] = static_cast<Exp>(total);
    }
    c.skip_ws();
    if (!c.eat('*')) break;
  }
  return Monomial(ctx, std::move(exps));
}

}  // namespace

RingContext parse_ring(std::string_view src) {
  Cursor c{src};
  c.skip_ws();
  // Optional leading keyword.
  {
    Cursor probe = c;
    if (std::isalpha(static_cast<unsigned char>(probe.peek()))) {
      const std::string_view word = probe.identifier();
      probe.skip_ws();
      if (word == "ring" && !probe.at_end()) c = probe;
    }
  }
  c.skip_ws();
  const std::string_view first = c.identifier();
  c.skip_ws();
  if (c.peek() == '.') {
    c.expect('.', "'..'");
    c.expect('.', "'..'");
    c.skip_ws();
    const auto second_line = c.line;
    const auto second_col = c.col;
    const std::string_view second = c.identifier();
    c.expect_end();
    std::string_view p1, p2;
    std::uint64_t n1 = 0, n2 = 0;
    if (!split_numeric_suffix(first, p1, n1) ||
        !split_numeric_suffix(second, p2, n2) || p1 != p2 || n2 < n1)
      throw ParseError("malformed variable range", second_line, second_col);
    if (n2 - n1 + 1 > 1024)
      throw ParseError("variable range is too large", second_line, second_col);
    return numbered_ring(std::string(p1), n1, n2);
  }
  std::vector<std::string> names;
  names.emplace_back(first);
  while (c.eat(',')) {
    c.skip_ws();
    names.emplace_back(c.identifier());
    c.skip_ws();
  }
  c.expect_end();
  return RingContext(std::move(names));
}

Monomial parse_monomial(std::string_view src, const RingContext& ctx) {
  Cursor c{src};
  Monomial m = parse_monomial_at(c, ctx);
  c.expect_end();
  return m;
}

MonomialIdeal parse_ideal(std::string_view src, const RingContext& ctx) {
  Cursor c{src};
  c.skip_ws();
  c.expect('(', "'('");
  c.skip_ws();
  if (c.peek() == '0') {
    c.advance();
    c.skip_ws();
    c.expect(')', "')'");
    c.expect_end();
    return MonomialIdeal::zero(ctx);
  }
  std::vector<Monomial> gens;
  for (;;) {
    gens.push_back(parse_monomial_at(c, ctx));
    c.skip_ws();
    if (c.eat(',')) continue;
    c.expect(')', "')' or ','");
    break;
  }
  c.expect_end();
  return from_generators(ctx, gens);
}

MonomialPrime parse_prime(std::string_view src, const RingContext& ctx) {
  const MonomialIdeal ideal = parse_ideal(src, ctx);
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < ideal.gen_count(); ++i) {
    const auto row = ideal.gen_exponents(i);
    std::size_t nz = 0, where = 0;
    for (std::size_t v = 0; v < row.size(); ++v)
      if (row[v] != 0) {
        ++nz;
        where = v;
      }
    if (nz != 1 || row[where] != 1)
      throw InvalidArgument("'" + std::string(src) +
                            "' is not generated by plain variables");
    vars.push_back(where);
  }
  if (vars.empty())
    throw InvalidArgument("the zero ideal is not a monomial prime");
  return MonomialPrime(ctx, std::move(vars));
}

std::string format(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.var_count(); ++i) {
    const Exp e = m.exponents()[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += m.context().var_name(i);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  if (out.empty()) out = "1";
  return out;
}

std::string format(const MonomialIdeal& a) {
  if (a.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < a.gen_count(); ++i) {
    if (i) out += ", ";
    out += format(a.generator(i));
  }
  out += ')';
  return out;
}

std::string format(const MonomialPrime& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    if (i) out += ", ";
    out += p.context().var_name(p.vars()[i]);
  }
  out += ')';
  return out;
}

}  // namespace monideal
