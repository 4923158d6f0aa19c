#ifndef BRAIDLAB_SYMBOLS_HPP
#define BRAIDLAB_SYMBOLS_HPP

#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

namespace braidlab {

// Process-wide variable registry.  Index 0 is always q, index 1 is hbar;
// user symbols follow in declaration order.  The index order is the
// variable order used by the canonical monomial order everywhere.
class SymbolTable {
public:
    static SymbolTable& instance();

    // Returns the index of `name`, declaring it if new.
    int declare(const std::string& name);
    // Throws UnboundVariable if the symbol was never declared.
    int index_of(const std::string& name) const;
    bool known(const std::string& name) const;
    std::string name_of(int index) const;
    int size() const;

private:
    SymbolTable();
    mutable std::shared_mutex mutex_;
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

inline constexpr int kVarQ = 0;
inline constexpr int kVarHbar = 1;

} // namespace braidlab

#endif
