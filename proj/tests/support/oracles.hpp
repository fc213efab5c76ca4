#pragma once

// Deliberately naive reference implementations used only by the tests.
// They avoid the library's kernels and containment logic so that agreement
// between the two is meaningful.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "monideal/ideal.hpp"

namespace oracles {

using Row = std::vector<long long>;

inline std::vector<Row> rows_of(const monideal::MonomialIdeal& ideal) {
  std::vector<Row> rows;
  for (std::size_t i = 0; i < ideal.gen_count(); ++i) {
    const auto span = ideal.gen_exponents(i);  // stable ideal-owned storage
    rows.emplace_back(span.begin(), span.end());
  }
  return rows;
}

inline bool naive_divides(const Row& a, const Row& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] > b[v]) return false;
  return true;
}

inline bool naive_member(const std::vector<Row>& gens, const Row& m) {
  for (const Row& g : gens)
    if (naive_divides(g, m)) return true;
  return false;
}

inline bool naive_member(const monideal::MonomialIdeal& ideal,
                         const monideal::Monomial& m) {
  const auto span = m.exponents();
  return naive_member(rows_of(ideal), Row(span.begin(), span.end()));
}

// Two minimally generated monomial ideals are equal iff each generator of one
// lies in the other.
inline bool naive_equal(const monideal::MonomialIdeal& a,
                        const monideal::MonomialIdeal& b) {
  const auto ra = rows_of(a);
  const auto rb = rows_of(b);
  for (const Row& g : ra)
    if (!naive_member(rb, g)) return false;
  for (const Row& g : rb)
    if (!naive_member(ra, g)) return false;
  return true;
}

inline std::vector<Row> naive_product(const std::vector<Row>& a,
                                      const std::vector<Row>& b) {
  std::vector<Row> out;
  for (const Row& x : a)
    for (const Row& y : b) {
      Row z(x.size());
      for (std::size_t v = 0; v < x.size(); ++v) z[v] = x[v] + y[v];
      out.push_back(z);
    }
  return out;
}

inline std::vector<Row> naive_power(const std::vector<Row>& a, std::size_t t) {
  std::vector<Row> out = a;
  for (std::size_t i = 1; i < t; ++i) out = naive_product(out, a);
  return out;
}

// Brute-force socle search: scan the box below the exponentwise lcm of the
// generators for a monomial outside the ideal whose product with every
// variable lies inside.  Correct because any such witness must divide the
// lcm.  Only usable on small inputs.
inline bool naive_maximal_associated(const std::vector<Row>& gens,
                                     std::size_t n) {
  if (gens.empty()) return false;
  Row box(n, 0);
  for (const Row& g : gens)
    for (std::size_t v = 0; v < n; ++v)
      if (g[v] > box[v]) box[v] = g[v];
  long long volume = 1;
  for (std::size_t v = 0; v < n; ++v) {
    volume *= box[v] + 1;
    if (volume > (1LL << 24)) return false;  // refuse oversized instances
  }
  Row f(n, 0);
  for (long long it = 0; it < volume; ++it) {
    if (!naive_member(gens, f)) {
      bool all_in = true;
      for (std::size_t v = 0; v < n && all_in; ++v) {
        Row bumped = f;
        ++bumped[v];
        all_in = naive_member(gens, bumped);
      }
      if (all_in) return true;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (f[v] < box[v]) {
        ++f[v];
        break;
      }
      f[v] = 0;
    }
  }
  return false;
}

inline bool naive_maximal_associated(const monideal::MonomialIdeal& ideal) {
  return naive_maximal_associated(rows_of(ideal), ideal.context().var_count());
}

// All minimal vertex covers of a graph given as 1-based edges, by subset
// enumeration.  Vertices are returned 0-based and sorted.
inline std::vector<std::vector<std::size_t>> naive_minimal_covers(
    std::size_t vertex_count,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> covers;
  for (std::uint64_t mask = 0; mask < (1ULL << vertex_count); ++mask) {
    bool is_cover = true;
    for (const auto& [u, v] : edges)
      if (!((mask >> (u - 1)) & 1) && !((mask >> (v - 1)) & 1)) {
        is_cover = false;
        break;
      }
    if (is_cover) {
      std::vector<std::size_t> cover;
      for (std::size_t v = 0; v < vertex_count; ++v)
        if ((mask >> v) & 1) cover.push_back(v);
      covers.push_back(cover);
    }
  }
  std::vector<std::vector<std::size_t>> minimal;
  for (const auto& c : covers) {
    bool has_smaller = false;
    for (const auto& d : covers) {
      if (d.size() >= c.size() || c == d) continue;
      if (std::includes(c.begin(), c.end(), d.begin(), d.end())) {
        has_smaller = true;
        break;
      }
    }
    if (!has_smaller) minimal.push_back(c);
  }
  return minimal;
}

}  // namespace oracles
