#ifndef JETGAL_CHART_HPP
#define JETGAL_CHART_HPP

#include <optional>
#include <string>
#include <vector>

#include "jetgal/symbol.hpp"

namespace jetgal {

// Coordinate chart of a fibered space: ordered fiber coordinates plus
// ordered parameters, all distinct.
class Chart {
public:
  Chart() = default;
  Chart(const std::vector<std::string>& fiber_names,
        const std::vector<std::string>& param_names);
  static Chart from_symbols(std::vector<Symbol> fiber, std::vector<Symbol> params);

  std::size_t fiber_dim() const { return fiber_.size(); }
  std::size_t param_dim() const { return params_.size(); }

  const std::vector<Symbol>& fiber() const { return fiber_; }
  const std::vector<Symbol>& params() const { return params_; }
  const Symbol& fiber(std::size_t i) const { return fiber_[i]; }

  std::optional<std::size_t> fiber_index(const Symbol& s) const;
  bool contains(const Symbol& s) const;
  std::vector<Symbol> all_symbols() const;

  bool operator==(const Chart& o) const {
    return fiber_ == o.fiber_ && params_ == o.params_;
  }
  bool operator!=(const Chart& o) const { return !(*this == o); }

private:
  void validate() const;
  std::vector<Symbol> fiber_, params_;
};

} // namespace jetgal

#endif
