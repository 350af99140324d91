#include "bookcoh/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace bookcoh {

namespace {

using Row = std::map<int, Rational>;

// Gaussian elimination to row echelon form, column by column, picking the
// sparsest candidate row as pivot.  Returns the pivot (column → row-index)
// assignment.  Rows are modified in place.
std::map<int, int> echelonize(std::vector<Row>& rows, int cols) {
    std::map<int, int> pivots;
    std::vector<bool> used(rows.size(), false);
    for (int c = 0; c < cols; ++c) {
        int pivot = -1;
        size_t best = 0;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].empty())
                continue;
            if (rows[r].begin()->first != c)
                continue;
            if (pivot < 0 || rows[r].size() < best) {
                pivot = static_cast<int>(r);
                best = rows[r].size();
            }
        }
        if (pivot < 0)
            continue;
        used[pivot] = true;
        pivots[c] = pivot;
        const Rational lead = rows[pivot].begin()->second;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].empty())
                continue;
            auto it = rows[r].begin();
            if (it->first != c)
                continue;
            const Rational factor = it->second / lead;
            rows[r].erase(it);
            for (auto pit = std::next(rows[pivot].begin()); pit != rows[pivot].end(); ++pit) {
                auto [jt, inserted] = rows[r].emplace(pit->first, -factor * pit->second);
                if (!inserted) {
                    jt->second -= factor * pit->second;
                    if (jt->second.is_zero())
                        rows[r].erase(jt);
                }
            }
        }
    }
    return pivots;
}

}  // namespace

SparseRationalMatrix::SparseRationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("SparseRationalMatrix: negative size");
}

void SparseRationalMatrix::add(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseRationalMatrix: index out of range");
    if (v.is_zero())
        return;
    auto [it, inserted] = data_[r].emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero())
            data_[r].erase(it);
    }
}

Rational SparseRationalMatrix::get(int r, int c) const {
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Rational(0) : it->second;
}

int SparseRationalMatrix::rank() const {
    std::vector<Row> rows = data_;
    return static_cast<int>(echelonize(rows, cols_).size());
}

std::optional<std::vector<Rational>> SparseRationalMatrix::solve(
    const std::vector<Rational>& rhs) const {
    if (static_cast<int>(rhs.size()) != rows_)
        throw std::invalid_argument("SparseRationalMatrix::solve: rhs size mismatch");
    // augment with the rhs in column `cols_`, never pivoting on it
    std::vector<Row> rows = data_;
    for (int r = 0; r < rows_; ++r)
        if (!rhs[r].is_zero())
            rows[r][cols_] = rhs[r];
    std::map<int, int> pivots = echelonize(rows, cols_);

    std::vector<bool> used(rows.size(), false);
    for (const auto& [c, r] : pivots)
        used[r] = true;
    for (size_t r = 0; r < rows.size(); ++r)
        if (!used[r] && !rows[r].empty())
            return std::nullopt;  // 0 = nonzero: inconsistent

    std::vector<Rational> x(cols_, Rational(0));
    // back-substitute in decreasing pivot-column order; free variables stay 0
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const Row& row = rows[it->second];
        Rational acc = 0;
        Rational lead = 0;
        for (const auto& [c, v] : row) {
            if (c == it->first)
                lead = v;
            else if (c == cols_)
                acc += v;
            else
                acc -= v * x[c];
        }
        x[it->first] = acc / lead;
    }
    return x;
}

std::vector<Rational> SparseRationalMatrix::apply(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("SparseRationalMatrix::apply: size mismatch");
    std::vector<Rational> y(rows_, Rational(0));
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            y[r] += v * x[c];
    return y;
}

}  // namespace bookcoh
