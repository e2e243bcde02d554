#include "linear_feasibility.hpp"

#include <algorithm>

namespace svcalc {

namespace {

struct Row {
    std::vector<Rational> a;
    Rational b;
};

} // namespace

std::optional<std::vector<Rational>> solve_strict_system(const StrictSystem& sys) {
    const std::size_t d = sys.dim;

    // Gauss-Jordan on the equalities; pivots become expressions in free columns.
    std::vector<std::vector<Rational>> eq;
    eq.reserve(sys.eq.size());
    for (const auto& [a, b] : sys.eq) {
        auto row = a;
        row.resize(d);
        row.push_back(b);
        eq.push_back(std::move(row));
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < d && rank < eq.size(); ++c) {
        std::size_t k = rank;
        while (k < eq.size() && eq[k][c] == 0)
            ++k;
        if (k == eq.size())
            continue;
        std::swap(eq[rank], eq[k]);
        const Rational inv = eq[rank][c];
        for (auto& v : eq[rank])
            v /= inv;
        for (std::size_t i = 0; i < eq.size(); ++i) {
            if (i == rank || eq[i][c] == 0)
                continue;
            const Rational f = eq[i][c];
            for (std::size_t j = 0; j <= d; ++j)
                eq[i][j] -= f * eq[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t i = rank; i < eq.size(); ++i)
        if (eq[i][d] != 0)
            return std::nullopt; // 0 = nonzero

    std::vector<bool> is_pivot(d, false);
    std::vector<std::size_t> row_of(d, 0);
    for (std::size_t r = 0; r < rank; ++r) {
        is_pivot[pivot_col[r]] = true;
        row_of[pivot_col[r]] = r;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < d; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    const std::size_t m = free_cols.size();

    // Substitute pivots into the strict rows; constraints now range over free columns.
    std::vector<Row> rows;
    for (const auto& [a, b] : sys.gt) {
        Row row;
        row.a.assign(m, Rational(0));
        row.b = b;
        for (std::size_t i = 0; i < m; ++i)
            row.a[i] = free_cols[i] < a.size() ? a[free_cols[i]] : Rational(0);
        for (std::size_t c = 0; c < d && c < a.size(); ++c) {
            if (!is_pivot[c] || a[c] == 0)
                continue;
            const auto& prow = eq[row_of[c]];
            // x_c = prow[d] - sum over free cols of prow[f] * x_f
            row.b -= a[c] * prow[d];
            for (std::size_t i = 0; i < m; ++i)
                row.a[i] -= a[c] * prow[free_cols[i]];
        }
        rows.push_back(std::move(row));
    }

    // Fourier-Motzkin, saving each stage for back-substitution. Rows entering
    // stage k involve only columns >= k.
    auto is_constant = [m](const Row& r) {
        return std::all_of(r.a.begin(), r.a.end(), [](const Rational& v) { return v == 0; });
    };
    std::vector<std::vector<Row>> stage(m);
    {
        std::vector<Row> cur;
        for (auto& r : rows) {
            if (is_constant(r)) {
                if (r.b >= 0)
                    return std::nullopt; // needs 0 > b
            } else {
                cur.push_back(std::move(r));
            }
        }
        for (std::size_t k = 0; k < m; ++k) {
            stage[k] = cur;
            std::vector<Row> lows, ups, next;
            for (auto& r : cur) {
                if (r.a[k] > 0)
                    lows.push_back(std::move(r));
                else if (r.a[k] < 0)
                    ups.push_back(std::move(r));
                else
                    next.push_back(std::move(r));
            }
            for (const auto& l : lows) {
                for (const auto& u : ups) {
                    Row combo;
                    combo.a.assign(m, Rational(0));
                    const Rational fl = -u.a[k], fu = l.a[k]; // both positive
                    for (std::size_t j = k + 1; j < m; ++j)
                        combo.a[j] = l.a[j] * fl + u.a[j] * fu;
                    combo.b = l.b * fl + u.b * fu;
                    if (is_constant(combo)) {
                        if (combo.b >= 0)
                            return std::nullopt;
                    } else {
                        next.push_back(std::move(combo));
                    }
                }
            }
            cur = std::move(next);
        }
    }

    // Interior values, last column first.
    std::vector<Rational> y(m, Rational(0));
    for (std::size_t k = m; k-- > 0;) {
        std::optional<Rational> low, up;
        for (const auto& r : stage[k]) {
            if (r.a[k] == 0)
                continue;
            Rational rest = r.b;
            for (std::size_t j = k + 1; j < m; ++j)
                rest -= r.a[j] * y[j];
            const Rational val = rest / r.a[k];
            if (r.a[k] > 0) {
                if (!low || val > *low)
                    low = val;
            } else {
                if (!up || val < *up)
                    up = val;
            }
        }
        if (low && up)
            y[k] = (*low + *up) / 2;
        else if (low)
            y[k] = *low + 1;
        else if (up)
            y[k] = *up - 1;
    }

    std::vector<Rational> x(d, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        x[free_cols[i]] = y[i];
    for (std::size_t r = 0; r < rank; ++r) {
        Rational v = eq[r][d];
        for (std::size_t i = 0; i < m; ++i)
            v -= eq[r][free_cols[i]] * y[i];
        x[pivot_col[r]] = v;
    }
    return x;
}

} // namespace svcalc
