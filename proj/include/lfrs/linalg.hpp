#pragma once

#include "lfrs/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lfrs {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row major, rectangular

RatMat identity_mat(std::size_t n);
RatMat matmul(const RatMat& a, const RatMat& b);
RatVec matvec(const RatMat& a, const RatVec& x);

// Gauss-Jordan with first-nonzero pivoting; returns the rank.
std::size_t rref_in_place(RatMat& m);
std::size_t mat_rank(RatMat m);
Rat determinant(RatMat m);
std::optional<RatMat> inverse(const RatMat& m);

// One solution of A x = b, or nullopt if inconsistent.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

// Basis of the right nullspace {x : A x = 0}.
std::vector<RatVec> nullspace(const RatMat& a);

// Row span tracker over Q: supports incremental independence tests.
class RowSpan {
public:
    explicit RowSpan(std::size_t width) : width_(width) {}
    // Reduces v against the span; if independent, absorbs it and returns true.
    bool add(RatVec v);
    bool contains(RatVec v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }

private:
    RatVec reduce(RatVec v) const;
    std::size_t width_;
    std::vector<RatVec> rows_;            // echelon, pivot normalized to 1
    std::vector<std::size_t> pivots_;
};

// Z-module spanned by integer rows, kept in Hermite-style echelon form.
class IntLattice {
public:
    explicit IntLattice(std::size_t width) : width_(width) {}
    void add(std::vector<Int> v);
    bool contains(std::vector<Int> v) const;
    std::size_t rank() const { return rows_.size(); }
    // Product of pivot entries; the index of the lattice inside the ambient
    // echelon grid. Two full-rank sublattices with L1 <= L2 are equal iff
    // their covolumes agree.
    Int covolume() const;
    const std::vector<std::vector<Int>>& rows() const { return rows_; }

private:
    std::size_t width_;
    std::vector<std::vector<Int>> rows_;  // echelon, positive pivots
    std::vector<std::size_t> pivots_;
};

}  // namespace lfrs
