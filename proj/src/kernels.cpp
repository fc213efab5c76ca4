#include "monideal/kernels.hpp"

#include <cstdlib>
#include <string>

namespace monideal::kernels {

#if defined(MONIDEAL_HAVE_AVX2)
const Backend& avx2_backend();  // defined in kernels_avx2.cpp
#endif

namespace {

std::vector<const Backend*> detect_backends() {
  std::vector<const Backend*> v;
  v.push_back(&scalar_backend());
#if defined(MONIDEAL_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) v.push_back(&avx2_backend());
#endif
  return v;
}

const Backend* default_backend() {
  const auto& all = available_backends();
  const Backend* pick = all.back();  // widest compiled-in backend
  if (const char* env = std::getenv("MONIDEAL_KERNELS")) {
    const std::string_view want(env);
    if (!want.empty() && want != "auto") {
      for (const Backend* b : all)
        if (want == b->name) return b;
      // Unknown name in the environment: fall through to the default rather
      // than failing startup.
    }
  }
  return pick;
}

const Backend*& current_slot() {
  static const Backend* current = default_backend();
  return current;
}

}  // namespace

const std::vector<const Backend*>& available_backends() {
  static const std::vector<const Backend*> all = detect_backends();
  return all;
}

const Backend& active() { return *current_slot(); }

bool select(std::string_view name) {
  if (name == "auto") {
    current_slot() = available_backends().back();
    return true;
  }
  for (const Backend* b : available_backends()) {
    if (name == b->name) {
      current_slot() = b;
      return true;
    }
  }
  return false;
}

}  // namespace monideal::kernels
