#include "braidlab/symbols.hpp"

#include <mutex>

#include "braidlab/errors.hpp"

namespace braidlab {

SymbolTable::SymbolTable() {
    names_ = {"q", "hbar"};
    index_ = {{"q", 0}, {"hbar", 1}};
}

SymbolTable& SymbolTable::instance() {
    static SymbolTable table;
    return table;
}

int SymbolTable::declare(const std::string& name) {
    {
        std::shared_lock lock(mutex_);
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    int idx = static_cast<int>(names_.size());
    names_.push_back(name);
    index_[name] = idx;
    return idx;
}

int SymbolTable::index_of(const std::string& name) const {
    std::shared_lock lock(mutex_);
    auto it = index_.find(name);
    if (it == index_.end()) throw UnboundVariable(name);
    return it->second;
}

bool SymbolTable::known(const std::string& name) const {
    std::shared_lock lock(mutex_);
    return index_.count(name) > 0;
}

std::string SymbolTable::name_of(int index) const {
    std::shared_lock lock(mutex_);
    return names_.at(static_cast<size_t>(index));
}

int SymbolTable::size() const {
    std::shared_lock lock(mutex_);
    return static_cast<int>(names_.size());
}

} // namespace braidlab
