#include "jetgal/symbol.hpp"

#include <mutex>
#include <unordered_map>

namespace jetgal {

namespace {
std::mutex intern_mutex;
std::unordered_map<std::string, std::shared_ptr<const std::string>>& intern_table() {
  static std::unordered_map<std::string, std::shared_ptr<const std::string>> table;
  return table;
}
} // namespace

Symbol::Symbol(const std::string& name, SymbolKind kind) : kind_(kind) {
  std::lock_guard<std::mutex> lock(intern_mutex);
  auto& table = intern_table();
  auto it = table.find(name);
  if (it == table.end())
    it = table.emplace(name, std::make_shared<const std::string>(name)).first;
  name_ = it->second;
}

} // namespace jetgal
