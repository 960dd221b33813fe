#include "hh/symbol.hpp"

namespace hh {

Symbol SymbolTable::declare(const std::string& name, SymbolKind kind, int index) {
    if (by_name_.count(name))
        throw Error("symbol '" + name + "' already declared");
    storage_.push_back(SymbolData{name, kind, index});
    const SymbolData* d = &storage_.back();
    by_name_[name] = d;
    return Symbol(d);
}

Symbol SymbolTable::intern(const std::string& name, SymbolKind kind, int index) {
    auto it = by_name_.find(name);
    if (it != by_name_.end()) {
        if (it->second->kind != kind || it->second->index != index)
            throw Error("symbol '" + name + "' re-declared with different kind/index");
        return Symbol(it->second);
    }
    return declare(name, kind, index);
}

Symbol SymbolTable::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw UnknownSymbol("unknown symbol '" + name + "'");
    return Symbol(it->second);
}

bool SymbolTable::contains(Symbol s) const {
    if (!s.valid()) return false;
    auto it = by_name_.find(s.name());
    return it != by_name_.end() && it->second == s.raw();
}

std::vector<Symbol> SymbolTable::all() const {
    std::vector<Symbol> out;
    out.reserve(by_name_.size());
    for (const auto& [_, d] : by_name_) out.push_back(Symbol(d));
    return out;
}

} // namespace hh
