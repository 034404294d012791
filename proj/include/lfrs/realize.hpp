#pragma once

#include "lfrs/chevalley.hpp"
#include "lfrs/rootsys.hpp"
#include "lfrs/superalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace lfrs {

struct EmptyOddPart : std::runtime_error {
    explicit EmptyOddPart(const std::string& w) : std::runtime_error("EmptyOddPart: " + w) {}
};
struct BadIndexSets : std::runtime_error {
    explicit BadIndexSets(const std::string& w) : std::runtime_error("BadIndexSets: " + w) {}
};
struct NotClosed : std::runtime_error {
    explicit NotClosed(const std::string& w) : std::runtime_error("NotClosed: " + w) {}
};
struct CongruenceFails : std::runtime_error {
    explicit CongruenceFails(const std::string& w) : std::runtime_error("CongruenceFails: " + w) {}
};
struct NotSubset : std::runtime_error {
    explicit NotSubset(const std::string& w) : std::runtime_error("NotSubset: " + w) {}
};
struct ZeroBracket : std::runtime_error {
    explicit ZeroBracket(const std::string& w) : std::runtime_error("ZeroBracket: " + w) {}
};

// Index of the defining superspace: 0, i, i-bar (even), j, j-bar (odd).
struct SuperIndex {
    enum class Cls : int { Zero = 0, Ev = 1, EvBar = 2, Od = 3, OdBar = 4 };
    Cls cls{Cls::Zero};
    int id{0};  // 0 for Cls::Zero, else >= 1
    auto operator<=>(const SuperIndex&) const = default;
    bool odd() const { return cls == Cls::Od || cls == Cls::OdBar; }
    SuperIndex bar() const;
    std::string str() const;
};

inline SuperIndex idx0() { return {SuperIndex::Cls::Zero, 0}; }
inline SuperIndex ev_i(int i) { return {SuperIndex::Cls::Ev, i}; }
inline SuperIndex ev_bar(int i) { return {SuperIndex::Cls::EvBar, i}; }
inline SuperIndex od_j(int j) { return {SuperIndex::Cls::Od, j}; }
inline SuperIndex od_bar(int j) { return {SuperIndex::Cls::OdBar, j}; }

// Sparse exact matrix over a parity-tagged index set, homogeneous parity.
class SuperMatrix {
public:
    SuperMatrix() = default;
    explicit SuperMatrix(Parity p) : parity_(p) {}
    static SuperMatrix unit(const SuperIndex& r, const SuperIndex& c, const Rat& v = Rat(1));

    Parity parity() const { return parity_; }
    const std::map<SuperIndex, std::map<SuperIndex, Rat>>& rows() const { return rows_; }
    Rat entry(const SuperIndex& r, const SuperIndex& c) const;
    void set(const SuperIndex& r, const SuperIndex& c, const Rat& v);
    bool is_zero() const { return rows_.empty(); }

    SuperMatrix& operator+=(const SuperMatrix& o);
    SuperMatrix& operator-=(const SuperMatrix& o);
    SuperMatrix& operator*=(const Rat& c);
    friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
    friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
    friend SuperMatrix operator*(const Rat& c, SuperMatrix a) { return a *= c; }
    bool operator==(const SuperMatrix& o) const { return rows_ == o.rows_; }

    std::string str() const;

private:
    Parity parity_{Parity::Even};
    std::map<SuperIndex, std::map<SuperIndex, Rat>> rows_;  // zero-free
};

SuperMatrix matmul(const SuperMatrix& a, const SuperMatrix& b);
// [A,B] = AB - (-1)^{|A||B|} BA
SuperMatrix superbracket(const SuperMatrix& a, const SuperMatrix& b);
SuperMatrix supertranspose(const SuperMatrix& a);
Rat supertrace(const SuperMatrix& a);

enum class ModelKind { OspOdd, OspEven, Sl };

// Explicit matrix realization with its standard Cartan and root vectors.
struct MatrixModel {
    ModelKind kind{ModelKind::OspOdd};
    int m{0}, n{0};  // |I|, |J| (for sl: |I_0|, |I_1|)
    std::vector<SuperIndex> indices;
    SuperMatrix q;  // osp only
    std::vector<SuperMatrix> cartan;
    std::vector<BasisSymbol> weight_symbols;
    std::map<LatticeVector, std::vector<SuperMatrix>> root_vectors;
    bool quotient_center{false};  // sl(l|l): coordinates taken modulo F.1

    std::string name() const;
};

MatrixModel build_model(ModelKind kind, int m, int n);

Rat supertrace_form(const MatrixModel& model, const SuperMatrix& x, const SuperMatrix& y);

// Defining relation of the model: X^st Q = -QX resp. str(X) = 0 (mod center).
bool satisfies_defining_relation(const MatrixModel& model, const SuperMatrix& x);

// Structure-constant table over Cartan + root vectors, with the supertrace
// form and the root grading attached.
LieSuperalgebra to_abstract(const MatrixModel& model);

// Weights of the model as a root supersystem carrying the supertrace-induced
// form; the descriptor comes from recognize().
RootSupersystem root_supersystem(const MatrixModel& model);

struct MatrixMap {
    // images of the model basis (Cartan first, then root vectors in the
    // deterministic to_abstract order)
    std::vector<SuperMatrix> images;
};

// X -> T^{-1} X T between the algebras cut out by Q1 and Q2 = T^st Q1 T.
MatrixMap congruence_iso(const MatrixModel& model, const SuperMatrix& q2, const SuperMatrix& t);

// Index-inclusion embedding; verified injective and bracket preserving.
struct Embedding {
    const MatrixModel* small{nullptr};
    const MatrixModel* big{nullptr};
};
Embedding embed(const MatrixModel& small, const MatrixModel& big);

// Replays the free-seed construction inside the model and reads the
// structure constants off the matrix brackets.
ConstantsTable extract_constants(const MatrixModel& model, const TotalOrder& order,
                                 const std::map<RootPair, Rat>& seeds, const Rat& r_scale = Rat(1));

// Deterministic basis order of the model algebra: Cartan, then root vectors.
std::vector<std::pair<LatticeVector, int>> model_basis_order(const MatrixModel& model);

}  // namespace lfrs
