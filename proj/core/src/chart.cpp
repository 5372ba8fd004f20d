#include "jetgal/chart.hpp"

#include <set>

#include "jetgal/errors.hpp"

namespace jetgal {

Chart::Chart(const std::vector<std::string>& fiber_names,
             const std::vector<std::string>& param_names) {
  for (const auto& n : fiber_names) fiber_.emplace_back(n, SymbolKind::fiber);
  for (const auto& n : param_names) params_.emplace_back(n, SymbolKind::parameter);
  validate();
}

Chart Chart::from_symbols(std::vector<Symbol> fiber, std::vector<Symbol> params) {
  Chart c;
  c.fiber_ = std::move(fiber);
  c.params_ = std::move(params);
  c.validate();
  return c;
}

void Chart::validate() const {
  if (fiber_.empty()) raise(errc::invalid_argument, "chart needs at least one fiber coordinate");
  std::set<Symbol> seen;
  for (const auto& s : fiber_)
    if (!seen.insert(s).second)
      raise(errc::invalid_argument, "duplicate chart symbol '" + s.name() + "'");
  for (const auto& s : params_)
    if (!seen.insert(s).second)
      raise(errc::invalid_argument, "duplicate chart symbol '" + s.name() + "'");
}

std::optional<std::size_t> Chart::fiber_index(const Symbol& s) const {
  for (std::size_t i = 0; i < fiber_.size(); ++i)
    if (fiber_[i] == s) return i;
  return std::nullopt;
}

bool Chart::contains(const Symbol& s) const {
  if (fiber_index(s)) return true;
  for (const auto& p : params_)
    if (p == s) return true;
  return false;
}

std::vector<Symbol> Chart::all_symbols() const {
  std::vector<Symbol> out = fiber_;
  out.insert(out.end(), params_.begin(), params_.end());
  return out;
}

} // namespace jetgal
