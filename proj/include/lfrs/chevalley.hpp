#pragma once

#include "lfrs/rootsys.hpp"
#include "lfrs/superalg.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace lfrs {

struct TypeA11Unsupported : std::runtime_error {
    explicit TypeA11Unsupported(const std::string& w)
        : std::runtime_error("TypeA11Unsupported: " + w) {}
};
struct SeedMissing : std::runtime_error {
    explicit SeedMissing(const std::string& w) : std::runtime_error("SeedMissing: " + w) {}
};
struct SumNotRoot : std::runtime_error {
    explicit SumNotRoot(const std::string& w) : std::runtime_error("SumNotRoot: " + w) {}
};
struct InternalInconsistency : std::runtime_error {
    explicit InternalInconsistency(const std::string& w)
        : std::runtime_error("InternalInconsistency: " + w) {}
};

// Lexicographic positivity against an ordered Q-basis of the root span:
// 0 < u iff the first nonzero coordinate of u is positive.
class TotalOrder {
public:
    static TotalOrder symbol_order(const std::vector<BasisSymbol>& symbols);
    static TotalOrder vector_order(std::vector<LatticeVector> basis,
                                   std::vector<BasisSymbol> ambient);
    // symbol-lex order restricted to the root span, as an explicit basis;
    // this is the form that transports through a lattice isomorphism
    static TotalOrder span_order(const RootSupersystem& r);

    bool positive(const LatticeVector& v) const;
    bool less(const LatticeVector& a, const LatticeVector& b) const { return positive(b - a); }
    bool leq(const LatticeVector& a, const LatticeVector& b) const { return a == b || less(a, b); }

    const std::vector<LatticeVector>& basis() const { return basis_; }
    const std::vector<BasisSymbol>& ambient() const { return ambient_; }

private:
    std::vector<LatticeVector> basis_;
    std::vector<BasisSymbol> ambient_;
    RatMat solver_;   // columns are the dense basis vectors
    RatMat inverse_;  // cached when the basis is square and invertible
};

struct SignData {
    std::map<LatticeVector, int> sigma;   // -1 on negative odd roots, +1 otherwise
    std::map<LatticeVector, int> parity;  // 0 even, 1 odd (per the 0R/1R split)
};

std::pair<std::vector<LatticeVector>, SignData> order_and_signs(const RootSupersystem& r,
                                                                const TotalOrder& order);

using RootPair = std::pair<LatticeVector, LatticeVector>;

struct PairClass {
    std::vector<RootPair> special;               // 0 < a <= b, a + b a root
    std::map<LatticeVector, RootPair> extraspecial;  // sum -> its unique extraspecial pair
};

PairClass pair_classes(const RootSupersystem& r, const TotalOrder& order);

// Prop. (iii) coefficient r_{a,b} = N_{a,b} N_{-a,-b}.
Rat r_coefficient(const RootSupersystem& r, const TotalOrder& order, const SignData& signs,
                  const LatticeVector& a, const LatticeVector& b, const Rat& r_scale);

struct ConstantsTable {
    std::map<RootPair, Rat> n;  // every ordered pair with nonzero-root sum
    SignData signs;
    Rat r_scale{1};
    std::vector<LatticeVector> cartan_base;      // integral base Pi
    std::map<LatticeVector, RatVec> h_coords;    // coordinates of h_alpha over Pi
    std::map<RootPair, Rat> seeds;               // the extraspecial input

    Rat n_of(const LatticeVector& a, const LatticeVector& b) const {
        auto it = n.find({a, b});
        return it == n.end() ? Rat(0) : it->second;
    }
};

ConstantsTable constants_from_seeds(const RootSupersystem& r, const TotalOrder& order,
                                    const std::map<RootPair, Rat>& seeds, const Rat& r_scale);

// Convenience: the same nonzero seed on every extraspecial pair.
std::map<RootPair, Rat> uniform_seeds(const RootSupersystem& r, const TotalOrder& order,
                                      const Rat& value);

LieSuperalgebra assemble_algebra(const RootSupersystem& r, const ConstantsTable& table);

CheckReport verify_constants(const RootSupersystem& r, const TotalOrder& order,
                             const ConstantsTable& table);

// Diagonal automorphism from a character on the root lattice, given by its
// nonzero values on the integral base of the table.
RatMat diagonal_automorphism(const RootSupersystem& r, const ConstantsTable& table,
                             const LieSuperalgebra& algebra,
                             const std::vector<Rat>& phi_on_base);

// The order on span(S) with f-preimage positivity: x > 0 iff f^{-1}(x) > 0
// under the source span order.
TotalOrder transported_order(const LatticeIso& f, const RootSupersystem& source,
                             const RootSupersystem& target);

}  // namespace lfrs
