#pragma once

#include <deque>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hh/errors.hpp"

namespace hh {

enum class SymbolKind { position, momentum, generator, parameter };

struct SymbolData {
    std::string name;
    SymbolKind kind;
    int index; // q_i/p_i/b_i/a_i/g_i carry their index, otherwise -1
};

// Lightweight handle to an interned symbol. Ordering is by (kind, index,
// name), so it is stable regardless of declaration order; this fixes the
// term order of the expression kernel.
class Symbol {
  public:
    Symbol() : data_(nullptr) {}
    explicit Symbol(const SymbolData* d) : data_(d) {}

    const std::string& name() const { return data_->name; }
    SymbolKind kind() const { return data_->kind; }
    int index() const { return data_->index; }
    bool valid() const { return data_ != nullptr; }
    const SymbolData* raw() const { return data_; }

    friend bool operator==(Symbol a, Symbol b) { return a.data_ == b.data_; }
    friend bool operator!=(Symbol a, Symbol b) { return a.data_ != b.data_; }
    friend bool operator<(Symbol a, Symbol b) {
        if (a.data_ == b.data_) return false;
        const auto& x = *a.data_;
        const auto& y = *b.data_;
        if (x.kind != y.kind) return x.kind < y.kind;
        if (x.index != y.index) return x.index < y.index;
        return x.name < y.name;
    }

  private:
    const SymbolData* data_;
};

// Declares and interns the symbols of one computation: canonical pairs
// (q_i, p_i), the six sl(2)+h3 generators, and free parameters. Names are
// unique; storage is stable so Symbol handles never dangle.
class SymbolTable {
  public:
    SymbolTable() = default;
    SymbolTable(const SymbolTable&) = delete;
    SymbolTable& operator=(const SymbolTable&) = delete;

    Symbol declare(const std::string& name, SymbolKind kind, int index = -1);
    // declare if absent; error if present with a different kind/index
    Symbol intern(const std::string& name, SymbolKind kind, int index = -1);

    bool has(const std::string& name) const { return by_name_.count(name) != 0; }
    Symbol find(const std::string& name) const;
    bool contains(Symbol s) const;

    // canonical pair i (1-based): "q<i>"/"p<i>"
    Symbol q(int i) { return intern("q" + std::to_string(i), SymbolKind::position, i); }
    Symbol p(int i) { return intern("p" + std::to_string(i), SymbolKind::momentum, i); }

    // the six generators of sl(2,R) + h3
    Symbol jp() { return intern("Jp", SymbolKind::generator); }
    Symbol jm() { return intern("Jm", SymbolKind::generator); }
    Symbol j3() { return intern("J3", SymbolKind::generator); }
    Symbol ap() { return intern("Ap", SymbolKind::generator); }
    Symbol am() { return intern("Am", SymbolKind::generator); }
    Symbol m() { return intern("M", SymbolKind::generator); }

    Symbol parameter(const std::string& name, int index = -1) {
        return intern(name, SymbolKind::parameter, index);
    }

    std::vector<Symbol> all() const;

  private:
    std::deque<SymbolData> storage_;
    std::map<std::string, const SymbolData*> by_name_;
};

} // namespace hh
