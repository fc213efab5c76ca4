#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace monideal {

/// Ambient polynomial ring, identified by its ordered list of variable names.
///
/// Coefficients never matter for monomial-ideal computations, so a ring here
/// is nothing but the variable list.  The order is significant: it fixes the
/// position of each exponent and drives every canonical sort.  Instances are
/// immutable and cheap to copy (shared payload).
class RingContext {
public:
  /// Validates the names: at least one, each matching
  /// [A-Za-z][A-Za-z0-9_]*, all distinct.
  explicit RingContext(std::vector<std::string> variables);

  std::size_t var_count() const noexcept;
  const std::string& var_name(std::size_t i) const;
  const std::vector<std::string>& var_names() const noexcept;
  std::optional<std::size_t> var_index(std::string_view name) const noexcept;

  /// Structural equality: same names in the same order.
  friend bool operator==(const RingContext& a, const RingContext& b);
  friend bool operator!=(const RingContext& a, const RingContext& b) {
    return !(a == b);
  }

private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Convenience builder for the common numbered family name1..nameN.
RingContext numbered_ring(const std::string& prefix, std::size_t first,
                          std::size_t last);

/// Throws ContextMismatch unless the two rings are structurally equal.
void require_same_context(const RingContext& a, const RingContext& b);

}  // namespace monideal
