#include "monideal/ring.hpp"

#include <cctype>
#include <unordered_map>

#include "monideal/errors.hpp"

namespace monideal {

struct RingContext::Data {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
};

namespace {

bool valid_var_name(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s.substr(1))
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

RingContext::RingContext(std::vector<std::string> variables) {
  if (variables.empty())
    throw InvalidArgument("a ring needs at least one variable");
  auto data = std::make_shared<Data>();
  data->names = std::move(variables);
  for (std::size_t i = 0; i < data->names.size(); ++i) {
    const std::string& name = data->names[i];
    if (!valid_var_name(name))
      throw InvalidArgument("invalid variable name '" + name + "'");
    if (!data->index.emplace(name, i).second)
      throw InvalidArgument("duplicate variable name '" + name + "'");
  }
  data_ = std::move(data);
}

std::size_t RingContext::var_count() const noexcept {
  return data_->names.size();
}

const std::string& RingContext::var_name(std::size_t i) const {
  if (i >= data_->names.size())
    throw InvalidArgument("variable index out of range");
  return data_->names[i];
}

const std::vector<std::string>& RingContext::var_names() const noexcept {
  return data_->names;
}

std::optional<std::size_t> RingContext::var_index(
    std::string_view name) const noexcept {
  const auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

bool operator==(const RingContext& a, const RingContext& b) {
  return a.data_ == b.data_ || a.data_->names == b.data_->names;
}

RingContext numbered_ring(const std::string& prefix, std::size_t first,
                          std::size_t last) {
  if (first > last)
    throw InvalidArgument("empty variable range " + prefix +
                          std::to_string(first) + ".." + prefix +
                          std::to_string(last));
  std::vector<std::string> names;
  names.reserve(last - first + 1);
  for (std::size_t k = first; k <= last; ++k)
    names.push_back(prefix + std::to_string(k));
  return RingContext(std::move(names));
}

void require_same_context(const RingContext& a, const RingContext& b) {
  if (!(a == b))
    throw ContextMismatch("objects come from different ambient rings");
}

}  // namespace monideal
