#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace glpq {

/// Maximum number of commuting symbols a polynomial ring may carry.
inline constexpr std::size_t kMaxSymbols = 8;

/// Ordered list of distinct commuting symbol names. The order fixes the
/// monomial order of every polynomial built over the set, so sets are
/// immutable and shared by pointer.
class SymbolSet {
 public:
  static std::shared_ptr<const SymbolSet> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool same_as(const SymbolSet& other) const { return this == &other || names_ == other.names_; }

 private:
  explicit SymbolSet(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

using SymbolSetPtr = std::shared_ptr<const SymbolSet>;

}  // namespace glpq
