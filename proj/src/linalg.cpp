#include "lfrs/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace lfrs {

RatMat identity_mat(std::size_t n) {
    RatMat m(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMat matmul(const RatMat& a, const RatMat& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    RatMat c(n, RatVec(m, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("matmul: shape mismatch");
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (b[t][j] != 0) c[i][j] += a[i][t] * b[t][j];
        }
    }
    return c;
}

RatVec matvec(const RatMat& a, const RatVec& x) {
    RatVec y(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != x.size()) throw std::invalid_argument("matvec: shape mismatch");
        for (std::size_t j = 0; j < x.size(); ++j)
            if (a[i][j] != 0 && x[j] != 0) y[i] += a[i][j] * x[j];
    }
    return y;
}

std::size_t rref_in_place(RatMat& m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        Rat inv = Rat(1) / m[rank][col];
        for (auto& x : m[rank]) x *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::size_t mat_rank(RatMat m) { return rref_in_place(m); }

Rat determinant(RatMat m) {
    std::size_t n = m.size();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = Rat(1) / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

std::optional<RatMat> inverse(const RatMat& m) {
    std::size_t n = m.size();
    RatMat aug(n, RatVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("inverse: not square");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    if (rref_in_place(aug) != n) return std::nullopt;
    RatMat inv(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
    if (a.empty()) return RatVec{};
    std::size_t rows = a.size(), cols = a[0].size();
    if (b.size() != rows) throw std::invalid_argument("solve: shape mismatch");
    RatMat aug(rows, RatVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    rref_in_place(aug);
    RatVec x(cols, Rat(0));
    for (std::size_t i = 0; i < rows; ++i) {
        std::size_t lead = 0;
        while (lead < cols + 1 && aug[i][lead] == 0) ++lead;
        if (lead == cols + 1) continue;         // zero row
        if (lead == cols) return std::nullopt;  // 0 = nonzero
        x[lead] = aug[i][cols];
        // free variables stay 0, so pivot rows read off directly
    }
    return x;
}

std::vector<RatVec> nullspace(const RatMat& a) {
    if (a.empty()) return {};
    std::size_t rows = a.size(), cols = a[0].size();
    RatMat m = a;
    rref_in_place(m);
    std::vector<long> pivot_of_col(cols, -1);
    std::size_t r = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        std::size_t lead = 0;
        while (lead < cols && m[i][lead] == 0) ++lead;
        if (lead == cols) break;
        pivot_of_col[lead] = static_cast<long>(i);
        ++r;
    }
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (pivot_of_col[free] != -1) continue;
        RatVec v(cols, Rat(0));
        v[free] = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            if (pivot_of_col[c] == -1) continue;
            v[c] = -m[static_cast<std::size_t>(pivot_of_col[c])][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RatVec RowSpan::reduce(RatVec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rat f = v[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t c = 0; c < width_; ++c) v[c] -= f * rows_[i][c];
    }
    return v;
}

bool RowSpan::add(RatVec v) {
    if (v.size() != width_) throw std::invalid_argument("RowSpan: width mismatch");
    v = reduce(std::move(v));
    std::size_t lead = 0;
    while (lead < width_ && v[lead] == 0) ++lead;
    if (lead == width_) return false;
    Rat inv = Rat(1) / v[lead];
    for (auto& x : v) x *= inv;
    // keep echelon sorted by pivot column
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < lead) ++at;
    rows_.insert(rows_.begin() + at, std::move(v));
    pivots_.insert(pivots_.begin() + at, lead);
    return true;
}

bool RowSpan::contains(RatVec v) const {
    v = reduce(std::move(v));
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

void IntLattice::add(std::vector<Int> v) {
    if (v.size() != width_) throw std::invalid_argument("IntLattice: width mismatch");
    while (true) {
        std::size_t lead = 0;
        while (lead < width_ && v[lead] == 0) ++lead;
        if (lead == width_) return;
        // find the row with this pivot, if any
        std::size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < lead) ++at;
        if (at == pivots_.size() || pivots_[at] != lead) {
            if (v[lead] < 0)
                for (auto& x : v) x = -x;
            rows_.insert(rows_.begin() + at, v);
            pivots_.insert(pivots_.begin() + at, lead);
            return;
        }
        auto& row = rows_[at];
        // Euclidean step at the pivot column
        while (v[lead] != 0 && row[lead] != 0) {
            Int q = v[lead] / row[lead];
            if (q != 0)
                for (std::size_t c = 0; c < width_; ++c) v[c] -= q * row[c];
            if (v[lead] == 0) break;
            std::swap(v, row);
        }
        if (v[lead] == 0) continue;  // keep reducing the tail of v
    }
}

bool IntLattice::contains(std::vector<Int> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Int lead = v[pivots_[i]];
        if (lead == 0) continue;
        Int piv = rows_[i][pivots_[i]];
        if (lead % piv != 0) return false;
        Int q = lead / piv;
        for (std::size_t c = 0; c < width_; ++c) v[c] -= q * rows_[i][c];
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Int IntLattice::covolume() const {
    Int p(1);
    for (std::size_t i = 0; i < rows_.size(); ++i) p *= rows_[i][pivots_[i]];
    return p < 0 ? Int(-p) : p;
}

}  // namespace lfrs
