#include "lfrs/lattice.hpp"

#include <sstream>

namespace lfrs {

std::string symbol_str(const BasisSymbol& s) {
    switch (s.kind) {
        case SymbolKind::Eps: return "e" + std::to_string(s.index);
        case SymbolKind::Delta: return "d" + std::to_string(s.index);
        case SymbolKind::AlphaStar: return "a*";
    }
    return "?";
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
    for (const auto& [s, c] : o.coords_) {
        auto it = coords_.find(s);
        if (it == coords_.end()) {
            coords_[s] = c;
        } else {
            it->second += c;
            if (it->second == 0) coords_.erase(it);
        }
    }
    return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
    for (const auto& [s, c] : o.coords_) {
        auto it = coords_.find(s);
        if (it == coords_.end()) {
            coords_[s] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) coords_.erase(it);
        }
    }
    return *this;
}

LatticeVector& LatticeVector::operator*=(const Rat& c) {
    if (c == 0) {
        coords_.clear();
        return *this;
    }
    for (auto& [s, x] : coords_) x *= c;
    return *this;
}

bool LatticeVector::operator<(const LatticeVector& o) const {
    auto a = coords_.begin(), b = o.coords_.begin();
    for (; a != coords_.end() && b != o.coords_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        if (a->second != b->second) return a->second < b->second;
    }
    return b != o.coords_.end();
}

std::string LatticeVector::str() const {
    if (coords_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : coords_) {
        if (c > 0 && !first) os << "+";
        if (c == -1)
            os << "-";
        else if (c != 1)
            os << rat_str(c) << "*";
        os << symbol_str(s);
        first = false;
    }
    return os.str();
}

SymmetricForm::SymmetricForm(std::vector<BasisSymbol> basis, RatMat gram)
    : basis_(std::move(basis)), gram_(std::move(gram)) {
    if (gram_.size() != basis_.size())
        throw std::invalid_argument("SymmetricForm: gram size mismatch");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (gram_[i].size() != basis_.size())
            throw std::invalid_argument("SymmetricForm: gram not square");
        index_[basis_[i]] = i;
    }
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i + 1; j < basis_.size(); ++j)
            if (gram_[i][j] != gram_[j][i])
                throw std::invalid_argument("SymmetricForm: gram not symmetric");
}

std::size_t SymmetricForm::index_of(const BasisSymbol& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw UnknownSymbol(symbol_str(s));
    return it->second;
}

Rat SymmetricForm::eval(const LatticeVector& a, const LatticeVector& b) const {
    Rat acc(0);
    for (const auto& [sa, ca] : a.coords()) {
        std::size_t i = index_of(sa);
        for (const auto& [sb, cb] : b.coords()) acc += ca * cb * gram_[i][index_of(sb)];
    }
    return acc;
}

SymmetricForm SymmetricForm::scaled(const Rat& c) const {
    RatMat g = gram_;
    for (auto& row : g)
        for (auto& x : row) x *= c;
    return SymmetricForm(basis_, std::move(g));
}

RatVec dense_coords(const LatticeVector& v, const std::vector<BasisSymbol>& basis) {
    RatVec out(basis.size(), Rat(0));
    std::map<BasisSymbol, std::size_t> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
    for (const auto& [s, c] : v.coords()) {
        auto it = idx.find(s);
        if (it == idx.end()) throw UnknownSymbol(symbol_str(s));
        out[it->second] = c;
    }
    return out;
}

LatticeVector from_dense(const RatVec& c, const std::vector<BasisSymbol>& basis) {
    if (c.size() != basis.size()) throw std::invalid_argument("from_dense: size mismatch");
    LatticeVector v;
    for (std::size_t i = 0; i < basis.size(); ++i) v.set(basis[i], c[i]);
    return v;
}

}  // namespace lfrs
