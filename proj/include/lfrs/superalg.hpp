#pragma once

#include "lfrs/rootsys.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lfrs {

enum class Parity : int { Even = 0, Odd = 1 };

inline Parity parity_sum(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}
// (-1)^{|a||b|}
inline int parity_sign(Parity a, Parity b) {
    return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

struct GradedBasisElement {
    enum class Kind { Cartan, Root };
    Kind kind{Kind::Cartan};
    int cartan_index{0};   // Cartan label
    LatticeVector root;    // Root label
    int slot{0};           // slot within a multi-dimensional root space
    Parity parity{Parity::Even};
    std::string str() const;
};

using SparseVec = std::map<int, Rat>;  // basis index -> coefficient

struct NotAntisupersymmetric : std::runtime_error {
    explicit NotAntisupersymmetric(const std::string& w)
        : std::runtime_error("NotAntisupersymmetric: " + w) {}
};
struct ParityViolation : std::runtime_error {
    explicit ParityViolation(const std::string& w) : std::runtime_error("ParityViolation: " + w) {}
};
struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& w) : std::runtime_error("DimensionMismatch: " + w) {}
};
struct SingularCartanForm : std::runtime_error {
    explicit SingularCartanForm(const std::string& w)
        : std::runtime_error("SingularCartanForm: " + w) {}
};
struct NotDiagonalizable : std::runtime_error {
    explicit NotDiagonalizable(const std::string& w) : std::runtime_error("NotDiagonalizable: " + w) {}
};
struct NonSelfCentralizing : std::runtime_error {
    explicit NonSelfCentralizing(const std::string& w)
        : std::runtime_error("NonSelfCentralizing: " + w) {}
};
struct NotNilpotent : std::runtime_error {
    explicit NotNilpotent(const std::string& w) : std::runtime_error("NotNilpotent: " + w) {}
};
struct NoTriple : std::runtime_error {
    explicit NoTriple(const std::string& w) : std::runtime_error("NoTriple: " + w) {}
};

struct CheckReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Finite-dimensional Lie superalgebra as an exact structure-constant table
// over a Z2-graded basis, with optional invariant form and root grading.
class LieSuperalgebra {
public:
    LieSuperalgebra() = default;

    // Validates super-anticommutativity and parity additivity on the table.
    static LieSuperalgebra from_table(std::vector<GradedBasisElement> basis,
                                      std::vector<std::vector<SparseVec>> table,
                                      std::optional<RatMat> form_gram = std::nullopt);

    std::size_t dim() const { return basis_.size(); }
    const std::vector<GradedBasisElement>& basis() const { return basis_; }
    Parity parity(std::size_t i) const { return basis_[i].parity; }
    const SparseVec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i][j]; }

    RatVec bracket(const RatVec& x, const RatVec& y) const;

    const std::optional<RatMat>& form_gram() const { return form_gram_; }
    Rat form(const RatVec& x, const RatVec& y) const;

    // root grading: weight -> basis indices (Cartan indices are weight 0)
    const std::map<LatticeVector, std::vector<int>>& grading() const { return grading_; }
    void set_grading(std::map<LatticeVector, std::vector<int>> g) { grading_ = std::move(g); }
    std::vector<int> cartan_indices() const;

    // ad(x) as a dim x dim matrix, columns indexed by the basis
    RatMat ad_matrix(const RatVec& x) const;
    RatVec basis_vector(std::size_t i) const;

private:
    std::vector<GradedBasisElement> basis_;
    std::vector<std::vector<SparseVec>> table_;
    std::optional<RatMat> form_gram_;
    std::map<LatticeVector, std::vector<int>> grading_;
};

CheckReport jacobi_check(const LieSuperalgebra& l);
CheckReport form_check(const LieSuperalgebra& l);

// t_alpha in the Cartan: (t_alpha, h) = alpha(h) for all Cartan h.
// alpha must lie in the rational span of the roots of the grading.
RatVec cartan_representative(const LieSuperalgebra& l, const LatticeVector& alpha);

// Exact (alpha, beta) through the algebra form: alpha(t_beta).
Rat induced_form(const LieSuperalgebra& l, const LatticeVector& a, const LatticeVector& b);

// Simultaneous eigenspace split for the adjoint action of the listed Cartan
// elements; weights are eigenvalue tuples. Requires diagonal action on the
// given basis and a self-centralizing Cartan.
std::map<RatVec, std::vector<int>> root_decomposition(const LieSuperalgebra& l,
                                                      const std::vector<int>& cartan);

// exp(ad e) exp(-ad f) exp(ad e) for the sl2-super-triple located at alpha.
RatMat theta_automorphism(const LieSuperalgebra& l, const LatticeVector& alpha);

bool is_simple(const LieSuperalgebra& l);

// Basis of {x in L_even : [x, L_even] = 0}.
std::vector<RatVec> center_of_even_part(const LieSuperalgebra& l);

}  // namespace lfrs
