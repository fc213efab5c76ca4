#pragma once

// Componentwise kernels over int32 exponent vectors.
//
// Every operation on monomials and monomial ideals reduces to a handful of
// componentwise passes: divisibility (<= in every coordinate), equality,
// max/min (lcm/gcd), checked add (product), clamped subtract (colon), and a
// row scan that finds the first generator dividing a given monomial.  These
// are the inner loops of minimalization, membership, products and
// intersections, so they get a pluggable backend: a scalar reference
// implementation that is always present, plus SIMD variants compiled per-TU
// and registered only when the running CPU supports them.  All backends must
// be observably identical; the equivalence is enforced by tests and by the
// "kernel-backend-equivalence" self-check suite.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace monideal::kernels {

using Exp = std::int32_t;

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct Backend {
  const char* name;

  /// true iff a[i] <= b[i] for every i (the monomial at a divides the one at b).
  bool (*divides)(const Exp* a, const Exp* b, std::size_t n);

  bool (*equal)(const Exp* a, const Exp* b, std::size_t n);

  /// dst[i] = max(a[i], b[i]); dst may alias a or b.
  void (*cw_max)(Exp* dst, const Exp* a, const Exp* b, std::size_t n);

  /// dst[i] = min(a[i], b[i]); dst may alias a or b.
  void (*cw_min)(Exp* dst, const Exp* a, const Exp* b, std::size_t n);

  /// dst[i] = a[i] + b[i].  Inputs are nonnegative.  Returns false (leaving
  /// dst unspecified) if any sum leaves the int32 range.
  bool (*add_checked)(Exp* dst, const Exp* a, const Exp* b, std::size_t n);

  /// dst[i] = max(a[i] - f[i], 0), the exponent form of a colon quotient.
  void (*sub_clamped)(Exp* dst, const Exp* a, const Exp* f, std::size_t n);

  /// Scans `count` rows spaced `stride` apart starting at `rows` and returns
  /// the index of the first row that divides f, or npos if none does.
  std::size_t (*first_divisor)(const Exp* rows, std::size_t count,
                               std::size_t stride, const Exp* f,
                               std::size_t n);
};

const Backend& scalar_backend();

/// Backends compiled into this build and usable on the running CPU.
/// The scalar backend is always first.
const std::vector<const Backend*>& available_backends();

/// Backend used by all monomial arithmetic.  Defaults to the widest available
/// one; the environment variable MONIDEAL_KERNELS ("scalar", "avx2", "auto")
/// overrides the default at startup.
const Backend& active();

/// Selects a backend by name ("auto" restores the default).  Returns false if
/// no such backend is available.
bool select(std::string_view name);

}  // namespace monideal::kernels
