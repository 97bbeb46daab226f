#include "weylinv/linalg.hpp"

#include <stdexcept>

namespace weylinv {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix M(n, n);
    for (int i = 0; i < n; ++i) M.at(i, i) = 1;
    return M;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    RationalMatrix M(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("from_rows: ragged rows");
        for (int j = 0; j < c; ++j) M.at(i, j) = rows[i][j];
    }
    return M;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<std::vector<Rat>>& cols) {
    int c = static_cast<int>(cols.size());
    int r = c == 0 ? 0 : static_cast<int>(cols[0].size());
    RationalMatrix M(r, c);
    for (int j = 0; j < c; ++j) {
        if (static_cast<int>(cols[j].size()) != r)
            throw std::invalid_argument("from_columns: ragged columns");
        for (int i = 0; i < r; ++i) M.at(i, j) = cols[j][i];
    }
    return M;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix M(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) M.at(j, i) = at(i, j);
    return M;
}

std::vector<Rat> RationalMatrix::apply(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("apply: dimension mismatch");
    std::vector<Rat> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
    return r;
}

RrefResult rref(const RationalMatrix& M) {
    RrefResult res{M, 0, {}};
    RationalMatrix& A = res.reduced;
    int lead = 0;
    for (int col = 0; col < A.cols() && lead < A.rows(); ++col) {
        int piv = -1;
        for (int r = lead; r < A.rows(); ++r)
            if (A.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int c = 0; c < A.cols(); ++c) std::swap(A.at(piv, c), A.at(lead, c));
        Rat inv = 1 / A.at(lead, col);
        for (int c = col; c < A.cols(); ++c) A.at(lead, c) *= inv;
        for (int r = 0; r < A.rows(); ++r) {
            if (r == lead || A.at(r, col) == 0) continue;
            Rat f = A.at(r, col);
            for (int c = col; c < A.cols(); ++c) A.at(r, c) -= f * A.at(lead, c);
        }
        res.pivot_cols.push_back(col);
        ++lead;
    }
    res.rank = lead;
    return res;
}

std::vector<std::vector<Rat>> nullspace(const RationalMatrix& M) {
    RrefResult r = rref(M);
    std::vector<bool> is_pivot(M.cols(), false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < M.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(M.cols());
        v[free] = 1;
        for (int row = 0; row < r.rank; ++row) v[r.pivot_cols[row]] = -r.reduced.at(row, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

SpanResult in_span(const std::vector<Rat>& v, const RationalMatrix& columns) {
    if (static_cast<int>(v.size()) != columns.rows() && !(columns.cols() == 0))
        throw std::invalid_argument("in_span: dimension mismatch");
    if (columns.cols() == 0) {
        for (auto& x : v)
            if (x != 0) return {false, {}};
        return {true, {}};
    }
    RationalMatrix aug(columns.rows(), columns.cols() + 1);
    for (int i = 0; i < columns.rows(); ++i) {
        for (int j = 0; j < columns.cols(); ++j) aug.at(i, j) = columns.at(i, j);
        aug.at(i, columns.cols()) = v[i];
    }
    RrefResult r = rref(aug);
    std::vector<Rat> coeffs(columns.cols());
    for (int row = 0; row < r.rank; ++row) {
        int p = r.pivot_cols[row];
        if (p == columns.cols()) return {false, {}};
        coeffs[p] = r.reduced.at(row, columns.cols());
    }
    return {true, std::move(coeffs)};
}

SparseVec sparse_from_dense(const std::vector<Rat>& v) {
    SparseVec s;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i] != 0) s.emplace_back(i, v[i]);
    return s;
}

SparseVec sparse_axpy(const SparseVec& v, const Rat& c, const SparseVec& w) {
    SparseVec r;
    r.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            r.push_back(v[i++]);
        } else if (i == v.size() || w[j].first < v[i].first) {
            Rat x = c * w[j].second;
            if (x != 0) r.emplace_back(w[j].first, std::move(x));
            ++j;
        } else {
            Rat x = v[i].second + c * w[j].second;
            if (x != 0) r.emplace_back(v[i].first, std::move(x));
            ++i;
            ++j;
        }
    }
    return r;
}

SparseVec SparseReducer::reduce(SparseVec v) const {
    while (!v.empty()) {
        auto it = rows_.find(v.front().first);
        if (it == rows_.end()) break;
        v = sparse_axpy(v, -v.front().second, it->second);
    }
    return v;
}

SparseVec SparseReducer::full_reduce(SparseVec v) const {
    for (;;) {
        const std::pair<int, Rat>* hit = nullptr;
        const SparseVec* row = nullptr;
        for (auto& e : v) {
            auto it = rows_.find(e.first);
            if (it != rows_.end()) {
                hit = &e;
                row = &it->second;
                break;
            }
        }
        if (!hit) return v;
        v = sparse_axpy(v, -hit->second, *row);
    }
}

bool SparseReducer::add(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Rat inv = 1 / v.front().second;
    if (inv != 1)
        for (auto& [i, c] : v) c *= inv;
    int lead = v.front().first;
    rows_.emplace(lead, std::move(v));
    return true;
}

std::vector<int> SparseReducer::pivot_cols() const {
    std::vector<int> p;
    p.reserve(rows_.size());
    for (auto& [col, row] : rows_) p.push_back(col);
    return p;
}

}  // namespace weylinv
