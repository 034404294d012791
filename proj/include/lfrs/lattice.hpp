#pragma once

#include "lfrs/linalg.hpp"
#include "lfrs/rational.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lfrs {

enum class SymbolKind { Eps, Delta, AlphaStar };

// One coordinate symbol of the ambient module: eps_i, delta_p or alpha*.
struct BasisSymbol {
    SymbolKind kind{SymbolKind::Eps};
    int index{0};  // >= 1; 0 for AlphaStar
    auto operator<=>(const BasisSymbol&) const = default;
};

std::string symbol_str(const BasisSymbol& s);

inline BasisSymbol eps(int i) { return {SymbolKind::Eps, i}; }
inline BasisSymbol delta(int i) { return {SymbolKind::Delta, i}; }
inline BasisSymbol alphastar() { return {SymbolKind::AlphaStar, 0}; }

// Finitely supported exact rational vector over the symbol module.
class LatticeVector {
public:
    LatticeVector() = default;
    static LatticeVector unit(const BasisSymbol& s) {
        LatticeVector v;
        v.coords_[s] = 1;
        return v;
    }

    const std::map<BasisSymbol, Rat>& coords() const { return coords_; }
    Rat coord(const BasisSymbol& s) const {
        auto it = coords_.find(s);
        return it == coords_.end() ? Rat(0) : it->second;
    }
    void set(const BasisSymbol& s, const Rat& value) {
        if (value == 0)
            coords_.erase(s);
        else
            coords_[s] = value;
    }
    bool is_zero() const { return coords_.empty(); }

    LatticeVector& operator+=(const LatticeVector& o);
    LatticeVector& operator-=(const LatticeVector& o);
    LatticeVector& operator*=(const Rat& c);

    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator*(const Rat& c, LatticeVector a) { return a *= c; }
    friend LatticeVector operator-(LatticeVector a) { return a *= Rat(-1); }

    bool operator==(const LatticeVector&) const = default;
    // Deterministic container order (by symbol, then coefficient).
    bool operator<(const LatticeVector& o) const;

    std::string str() const;

private:
    std::map<BasisSymbol, Rat> coords_;
};

// Symmetric bilinear form given by an exact Gram matrix over an ordered basis.
class SymmetricForm {
public:
    SymmetricForm() = default;
    SymmetricForm(std::vector<BasisSymbol> basis, RatMat gram);

    const std::vector<BasisSymbol>& basis() const { return basis_; }
    const RatMat& gram() const { return gram_; }
    std::size_t index_of(const BasisSymbol& s) const;  // throws UnknownSymbol

    Rat eval(const LatticeVector& a, const LatticeVector& b) const;
    SymmetricForm scaled(const Rat& c) const;

private:
    std::vector<BasisSymbol> basis_;
    std::map<BasisSymbol, std::size_t> index_;
    RatMat gram_;
};

struct UnknownSymbol : std::runtime_error {
    explicit UnknownSymbol(const std::string& w) : std::runtime_error("UnknownSymbol: " + w) {}
};

// Dense coordinates of v over an ordered symbol basis; throws UnknownSymbol
// if v touches a symbol outside the basis.
RatVec dense_coords(const LatticeVector& v, const std::vector<BasisSymbol>& basis);
LatticeVector from_dense(const RatVec& c, const std::vector<BasisSymbol>& basis);

}  // namespace lfrs
