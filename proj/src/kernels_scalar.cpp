#include "monideal/kernels.hpp"

#include <algorithm>
#include <cstdint>

// Reference backend: direct loops, no assumptions beyond the contract.
// Every other backend is tested against this one.

namespace monideal::kernels {
namespace {

bool s_divides(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool s_equal(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

void s_cw_max(Exp* dst, const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = std::max(a[i], b[i]);
}

void s_cw_min(Exp* dst, const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = std::min(a[i], b[i]);
}

bool s_add_checked(Exp* dst, const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t sum = std::int64_t{a[i]} + std::int64_t{b[i]};
    if (sum > INT32_MAX) return false;
    dst[i] = static_cast<Exp>(sum);
  }
  return true;
}

void s_sub_clamped(Exp* dst, const Exp* a, const Exp* f, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = std::max(a[i] - f[i], 0);
}

std::size_t s_first_divisor(const Exp* rows, std::size_t count,
                            std::size_t stride, const Exp* f, std::size_t n) {
  for (std::size_t r = 0; r < count; ++r)
    if (s_divides(rows + r * stride, f, n)) return r;
  return npos;
}

constexpr Backend kScalar = {
    "scalar",        s_divides,       s_equal,          s_cw_max,
    s_cw_min,        s_add_checked,   s_sub_clamped,    s_first_divisor,
};

}  // namespace

const Backend& scalar_backend() { return kScalar; }

}  // namespace monideal::kernels
