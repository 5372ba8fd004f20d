#ifndef JETGAL_SYMBOL_HPP
#define JETGAL_SYMBOL_HPP

#include <compare>
#include <memory>
#include <string>

namespace jetgal {

enum class SymbolKind { fiber, parameter, jet, auxiliary };

// Interned identifier. Identity and ordering are by name (lexicographic),
// which fixes the deterministic term order; kind is metadata.
class Symbol {
public:
  Symbol() = default;
  Symbol(const std::string& name, SymbolKind kind = SymbolKind::auxiliary);

  const std::string& name() const { return *name_; }
  SymbolKind kind() const { return kind_; }
  bool valid() const { return name_ != nullptr; }

  bool operator==(const Symbol& o) const {
    return name_ == o.name_ || *name_ == *o.name_;
  }
  bool operator!=(const Symbol& o) const { return !(*this == o); }
  bool operator<(const Symbol& o) const {
    return name_ != o.name_ && *name_ < *o.name_;
  }
  bool operator>(const Symbol& o) const { return o < *this; }
  bool operator<=(const Symbol& o) const { return !(o < *this); }

private:
  std::shared_ptr<const std::string> name_;
  SymbolKind kind_ = SymbolKind::auxiliary;
};

} // namespace jetgal

#endif
