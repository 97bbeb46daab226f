#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace weylinv {

using Rat = mpq_class;

// Dense exact matrix over Q, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

    static RationalMatrix identity(int n);
    static RationalMatrix from_rows(const std::vector<std::vector<Rat>>& rows);
    static RationalMatrix from_columns(const std::vector<std::vector<Rat>>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

    RationalMatrix transpose() const;
    std::vector<Rat> apply(const std::vector<Rat>& v) const;  // M v

    bool operator==(const RationalMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

struct RrefResult {
    RationalMatrix reduced;
    int rank = 0;
    std::vector<int> pivot_cols;
};

// Reduced row echelon form with deterministic pivoting (first nonzero row in
// column order), pivots normalized to 1.
RrefResult rref(const RationalMatrix& M);

// Exact basis of {v : Mv = 0}; dimension cols - rank.
std::vector<std::vector<Rat>> nullspace(const RationalMatrix& M);

struct SpanResult {
    bool in_span = false;
    std::vector<Rat> coeffs;  // columns * coeffs = v when in_span
};

// Is v in the column span of `columns`?  Returns certificate coefficients.
SpanResult in_span(const std::vector<Rat>& v, const RationalMatrix& columns);

// Sparse coordinate vector, entries sorted by index, no zero coefficients.
using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec sparse_from_dense(const std::vector<Rat>& v);
SparseVec sparse_axpy(const SparseVec& v, const Rat& c, const SparseVec& w);  // v + c*w

// Incremental row-echelon reducer with first-column pivoting.  Rows are kept
// in echelon (not fully reduced) form; reduce() cancels leading entries, so a
// vector lies in the row span iff its residual is empty.
class SparseReducer {
public:
    int rank() const { return static_cast<int>(rows_.size()); }
    SparseVec reduce(SparseVec v) const;
    // Eliminate every pivot-column entry, not just the leading one; the
    // residual is supported on non-pivot columns.
    SparseVec full_reduce(SparseVec v) const;
    // Reduce and, if a residual remains, keep it; returns whether rank grew.
    bool add(SparseVec v);
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    std::vector<int> pivot_cols() const;

private:
    std::map<int, SparseVec> rows_;  // leading column -> row, leading coeff 1
};

}  // namespace weylinv
