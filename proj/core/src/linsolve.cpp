#include "hh/linsolve.hpp"

#include <algorithm>
#include <set>

#include "hh/parser.hpp"

namespace hh {

std::vector<ScalarRow> scalarize(const LinearSystem& sys) {
    std::set<Symbol> unknown_set(sys.unknowns.begin(), sys.unknowns.end());
    std::map<Symbol, std::size_t> col;
    for (std::size_t j = 0; j < sys.unknowns.size(); ++j) col[sys.unknowns[j]] = j;

    std::vector<ScalarRow> rows;
    for (const Expr& eq : sys.equations) {
        // key: the non-unknown part of a monomial (printed form is a stable key)
        std::map<std::string, ScalarRow> grouped;
        for (const Monomial& m : eq.terms()) {
            int unknown_count = 0;
            Symbol which;
            Monomial rest{Rational(1), {}};
            for (const auto& [s, e] : m.factors) {
                if (unknown_set.count(s)) {
                    if (e != 1)
                        throw Error("equation not linear: unknown '" + s.name() +
                                    "' appears with exponent " + rat_str(e));
                    ++unknown_count;
                    which = s;
                } else {
                    rest.factors.push_back({s, e});
                }
            }
            if (unknown_count > 1)
                throw Error("equation not linear: product of unknowns present");
            std::string key = print_monomial(rest);
            auto& row = grouped[key];
            if (row.coeff.empty()) row = ScalarRow{std::vector<Rational>(sys.unknowns.size(), Rational(0)), Rational(0)};
            if (unknown_count == 1)
                row.coeff[col[which]] += m.coeff;
            else
                row.constant += m.coeff;
        }
        for (auto& [_, row] : grouped) rows.push_back(std::move(row));
    }
    return rows;
}

LinearSolution solve_linear(const LinearSystem& sys) {
    const std::size_t ncols = sys.unknowns.size();
    std::vector<ScalarRow> rows = scalarize(sys);

    LinearSolution out;
    out.rows = rows.size();

    // Gauss-Jordan with partial pivoting by first nonzero column
    std::vector<int> pivot_of_col(ncols, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
        std::size_t sel = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (rows[r].coeff[c] != 0) {
                sel = r;
                break;
            }
        }
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        Rational inv = 1 / rows[rank].coeff[c];
        for (auto& v : rows[rank].coeff) v *= inv;
        rows[rank].constant *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r].coeff[c] == 0) continue;
            Rational f = rows[r].coeff[c];
            for (std::size_t j = 0; j < ncols; ++j) rows[r].coeff[j] -= f * rows[rank].coeff[j];
            rows[r].constant -= f * rows[rank].constant;
        }
        pivot_of_col[c] = static_cast<int>(rank);
        ++rank;
    }

    // inconsistency: 0 == nonzero
    for (std::size_t r = rank; r < rows.size(); ++r) {
        bool allzero = std::all_of(rows[r].coeff.begin(), rows[r].coeff.end(),
                                   [](const Rational& v) { return v == 0; });
        if (allzero && rows[r].constant != 0) {
            out.kind = LinearSolution::Kind::inconsistent;
            return out;
        }
    }

    // particular solution with free unknowns = 0;
    // row reduced form: pivot var = -constant - sum(free role coeffs * 0)
    for (std::size_t c = 0; c < ncols; ++c) {
        if (pivot_of_col[c] >= 0)
            out.values[sys.unknowns[c]] = -rows[pivot_of_col[c]].constant;
        else {
            out.values[sys.unknowns[c]] = Rational(0);
            out.free_unknowns.push_back(sys.unknowns[c]);
        }
    }

    // nullspace basis: one vector per free column
    for (std::size_t fc = 0; fc < ncols; ++fc) {
        if (pivot_of_col[fc] >= 0) continue;
        std::map<Symbol, Rational> vec;
        vec[sys.unknowns[fc]] = Rational(1);
        for (std::size_t c = 0; c < ncols; ++c) {
            if (pivot_of_col[c] < 0) continue;
            Rational v = -rows[pivot_of_col[c]].coeff[fc];
            if (v != 0) vec[sys.unknowns[c]] = v;
        }
        out.nullspace.push_back(std::move(vec));
    }

    out.kind = out.nullspace.empty() ? LinearSolution::Kind::unique
                                     : LinearSolution::Kind::underdetermined;
    return out;
}

} // namespace hh
