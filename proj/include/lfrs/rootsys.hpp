#pragma once

#include "lfrs/lattice.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lfrs {

// Families of the two classification tables plus the plain locally finite
// root systems. Parametrized rows keep their printed names.
enum class Family {
    A, B, C, D, BC,            // plain root systems (rank = index-set size for A)
    DotA0T, DotC0T, DotATT,    // imaginary types
    ALL,                       // A(l,l)
    B0T, BTT, BCTT, CTT, DTT,  // two-component real types
    B1T, C1T, D1T, BT1,        // rank-one-component rows
    AB13, G12, D21L, D2T,      // exceptional rows
};

std::string family_str(Family f);
std::optional<Family> family_parse(const std::string& name);

struct TypeDescriptor {
    Family family{Family::A};
    std::vector<int> ranks;
    Rat lambda{0};  // D(2,1,lambda) only

    std::string str() const;
    bool operator==(const TypeDescriptor&) const = default;
};

struct InvalidRanks : std::runtime_error {
    explicit InvalidRanks(const std::string& w) : std::runtime_error("InvalidRanks: " + w) {}
};
struct InvalidLambda : std::runtime_error {
    explicit InvalidLambda(const std::string& w) : std::runtime_error("InvalidLambda: " + w) {}
};
struct NotARoot : std::runtime_error {
    explicit NotARoot(const std::string& w) : std::runtime_error("NotARoot: " + w) {}
};
struct NotReflectable : std::runtime_error {
    explicit NotReflectable(const std::string& w) : std::runtime_error("NotReflectable: " + w) {}
};
struct BrokenString : std::runtime_error {
    explicit BrokenString(const std::string& w) : std::runtime_error("BrokenString: " + w) {}
};
struct NoBaseFound : std::runtime_error {
    explicit NoBaseFound(const std::string& w) : std::runtime_error("NoBaseFound: " + w) {}
};
struct Unrecognized : std::runtime_error {
    explicit Unrecognized(const std::string& w) : std::runtime_error("Unrecognized: " + w) {}
};
struct IncompatibleFamily : std::runtime_error {
    explicit IncompatibleFamily(const std::string& w) : std::runtime_error("IncompatibleFamily: " + w) {}
};

enum class RootClass { Real, Nonsingular, Zero };

struct RootString {
    int p{0};
    int q{0};
    bool operator==(const RootString&) const = default;
};

// A locally finite root supersystem at finite rank: root set (0 included),
// exact symmetric form, cached real/nonsingular partition.
class RootSupersystem {
public:
    RootSupersystem() = default;
    RootSupersystem(std::vector<BasisSymbol> basis, SymmetricForm form,
                    std::set<LatticeVector> roots, TypeDescriptor descriptor);

    const std::vector<BasisSymbol>& basis() const { return basis_; }
    const SymmetricForm& form() const { return form_; }
    const std::set<LatticeVector>& roots() const { return roots_; }
    const TypeDescriptor& descriptor() const { return descriptor_; }
    void set_descriptor(const TypeDescriptor& d) { descriptor_ = d; }

    bool is_root(const LatticeVector& v) const { return roots_.count(v) != 0; }
    // R_re^x and R_ns^x, deterministically ordered.
    const std::vector<LatticeVector>& real_roots() const { return real_; }
    const std::vector<LatticeVector>& nonsingular_roots() const { return ns_; }

    RootSupersystem with_form_scaled(const Rat& c) const;

private:
    std::vector<BasisSymbol> basis_;
    SymmetricForm form_;
    std::set<LatticeVector> roots_;
    TypeDescriptor descriptor_;
    std::vector<LatticeVector> real_, ns_;
};

RootSupersystem build(const TypeDescriptor& d);

// Letter-family dispatch: a base family plus a rank tuple selects the
// matching classification row, e.g. B with (1,2) -> B(1,T), ranks (1,2).
TypeDescriptor dispatch_descriptor(Family f, const std::vector<int>& ranks,
                                   const Rat& lambda = Rat(0));

Rat form_eval(const RootSupersystem& r, const LatticeVector& a, const LatticeVector& b);
RootClass classify_root(const RootSupersystem& r, const LatticeVector& a);
LatticeVector reflect(const RootSupersystem& r, const LatticeVector& alpha, const LatticeVector& beta);
std::set<LatticeVector> weyl_orbit(const RootSupersystem& r, const LatticeVector& v);
RootString root_string(const RootSupersystem& r, const LatticeVector& alpha, const LatticeVector& beta);

struct AxiomReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};
AxiomReport check_axioms(const RootSupersystem& r);

// (evenRoots, oddRoots): 0R/1R split; 0 is always even.
std::pair<std::set<LatticeVector>, std::set<LatticeVector>> even_odd_partition(const RootSupersystem& r);

struct LengthClasses {
    std::set<LatticeVector> short_roots, long_roots, extralong_roots;
};
// One irreducible real component, sign-normalized so (a,a) > 0 on it.
LengthClasses length_classes(const RootSupersystem& r, const std::vector<LatticeVector>& component);

// Connected components of a set of nonzero roots under (a,b) != 0.
std::vector<std::vector<LatticeVector>> connected_components(const RootSupersystem& r,
                                                             const std::vector<LatticeVector>& roots);
bool is_irreducible(const RootSupersystem& r);

struct IntegralBase {
    std::vector<LatticeVector> roots;  // Z-basis of the root lattice
    bool partial_sum{false};           // partial sum property verified
};
IntegralBase integral_base(const RootSupersystem& r);

// Lattice rank of the Z-span of the roots.
std::size_t root_lattice_rank(const RootSupersystem& r);

TypeDescriptor recognize(const RootSupersystem& r);

// phi: Z-linear on the root lattice, defined on an integral base.
// Form identity: (phi a, phi b)_S = k (a, b)_R.
class LatticeIso {
public:
    LatticeIso(std::vector<LatticeVector> domain_base, std::vector<LatticeVector> images, Rat k,
               std::vector<BasisSymbol> domain_symbols);
    LatticeVector apply(const LatticeVector& v) const;
    const Rat& k() const { return k_; }
    const std::vector<LatticeVector>& domain_base() const { return base_; }
    const std::vector<LatticeVector>& images() const { return images_; }

private:
    std::vector<LatticeVector> base_, images_;
    Rat k_;
    std::vector<BasisSymbol> symbols_;
    RatMat coord_solver_;  // left-inverse of the base coordinate matrix
};

std::optional<LatticeIso> is_isomorphic(const RootSupersystem& r, const RootSupersystem& s);

struct ChainLink {
    RootSupersystem system;
    // inclusion into the next system is the identity on shared symbols
};
std::vector<ChainLink> direct_union_chain(Family family, const std::vector<std::vector<int>>& rank_tuples);

struct NonrootReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};
NonrootReport nonroot_audit(const RootSupersystem& r);

// Sorted deterministically: by |coords| weight, then lex over the basis.
std::vector<LatticeVector> sorted_roots(const RootSupersystem& r, bool include_zero = false);

}  // namespace lfrs
