#include "glpq/coeff/symbol_set.hpp"

#include <set>
#include <stdexcept>

namespace glpq {

std::shared_ptr<const SymbolSet> SymbolSet::make(std::vector<std::string> names) {
  if (names.size() > kMaxSymbols) {
    throw std::invalid_argument("too many symbols (max " + std::to_string(kMaxSymbols) + ")");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || !seen.insert(n).second) {
      throw std::invalid_argument("symbol names must be unique and non-empty: '" + n + "'");
    }
  }
  return std::shared_ptr<const SymbolSet>(new SymbolSet(std::move(names)));
}

std::optional<std::size_t> SymbolSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

}  // namespace glpq
