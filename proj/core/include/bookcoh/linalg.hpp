#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bookcoh/rational.hpp"

namespace bookcoh {

/// Sparse matrix over ℚ with exact elimination.  Row-major; rows are
/// sorted column→value maps.  Sized for the degree slices this library
/// produces (up to a few thousand columns, a handful of entries per row).
class SparseRationalMatrix {
  public:
    SparseRationalMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int r, int c, const Rational& v);
    Rational get(int r, int c) const;
    const std::map<int, Rational>& row(int r) const { return data_[r]; }

    int rank() const;
    int nullity() const { return cols_ - rank(); }

    /// A particular solution of Ax = b (free variables set to 0), or
    /// nullopt when the system is inconsistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& rhs) const;

    /// y = A x.
    std::vector<Rational> apply(const std::vector<Rational>& x) const;

  private:
    int rows_, cols_;
    std::vector<std::map<int, Rational>> data_;
};

}  // namespace bookcoh
