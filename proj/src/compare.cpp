#include "lfrs/compare.hpp"

namespace lfrs {

CheckReport verify_homomorphism(const AlgebraMap& map) {
    CheckReport rep;
    const LieSuperalgebra& g = *map.source;
    const LieSuperalgebra& l = *map.target;
    if (map.matrix.size() != l.dim() || (map.matrix.empty() ? 0 : map.matrix[0].size()) != g.dim()) {
        rep.violations.push_back("matrix shape does not match the bases");
        return rep;
    }
    // parity preservation: image of a homogeneous vector stays homogeneous
    for (std::size_t j = 0; j < g.dim(); ++j) {
        for (std::size_t i = 0; i < l.dim(); ++i) {
            if (map.matrix[i][j] != 0 && l.parity(i) != g.parity(j)) {
                rep.violations.push_back("parity broken at the image of " + g.basis()[j].str());
                break;
            }
        }
    }
    auto image = [&](const RatVec& x) { return matvec(map.matrix, x); };
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = 0; j < g.dim(); ++j) {
            RatVec lhs = image(g.bracket(g.basis_vector(i), g.basis_vector(j)));
            RatVec rhs = l.bracket(image(g.basis_vector(i)), image(g.basis_vector(j)));
            if (lhs != rhs)
                rep.violations.push_back("phi[x,y] != [phi x, phi y] at (" + g.basis()[i].str() +
                                         ", " + g.basis()[j].str() + ")");
        }
    }
    if (map.iso_flag) {
        if (g.dim() != l.dim() || !inverse(map.matrix))
            rep.violations.push_back("map flagged iso is not invertible");
    }
    return rep;
}

AlgebraMap transport_iso(const RootSupersystem& r, const ConstantsTable& table_r,
                         const LieSuperalgebra& g, const RootSupersystem& s,
                         const ConstantsTable& table_s, const LieSuperalgebra& l,
                         const LatticeIso& f) {
    (void)r;
    // constants agree under f
    for (const auto& [pair, value] : table_r.n) {
        LatticeVector fa = f.apply(pair.first);
        LatticeVector fb = f.apply(pair.second);
        if (table_s.n_of(fa, fb) != value)
            throw SeedMismatch("N_{a,b} != M_{f(a),f(b)} at " + pair.first.str() + ", " +
                               pair.second.str());
    }
    // coordinates of a target root over the target Cartan base
    RatMat solver(s.basis().size(), RatVec(table_s.cartan_base.size(), Rat(0)));
    for (std::size_t j = 0; j < table_s.cartan_base.size(); ++j) {
        RatVec col = dense_coords(table_s.cartan_base[j], s.basis());
        for (std::size_t i = 0; i < s.basis().size(); ++i) solver[i][j] = col[i];
    }
    std::vector<int> target_cartan = l.cartan_indices();
    if (target_cartan.size() != table_s.cartan_base.size())
        throw SeedMismatch("target algebra does not match its Cartan base");

    AlgebraMap map;
    map.source = &g;
    map.target = &l;
    map.matrix.assign(l.dim(), RatVec(g.dim(), Rat(0)));
    for (std::size_t j = 0; j < g.dim(); ++j) {
        const auto& elem = g.basis()[j];
        if (elem.kind == GradedBasisElement::Kind::Cartan) {
            // h_{beta_i} -> h'_{f(beta_i)} expanded over the target base
            LatticeVector image_root = f.apply(table_r.cartan_base[static_cast<std::size_t>(
                elem.cartan_index)]);
            auto coords = solve(solver, dense_coords(image_root, s.basis()));
            if (!coords) throw SeedMismatch("f(Pi) leaves the target root lattice");
            for (std::size_t i = 0; i < target_cartan.size(); ++i)
                map.matrix[static_cast<std::size_t>(target_cartan[i])][j] = (*coords)[i];
        } else {
            LatticeVector target_root = f.apply(elem.root);
            auto it = l.grading().find(target_root);
            if (it == l.grading().end() || it->second.size() != 1)
                throw SeedMismatch("no matching root vector at " + target_root.str());
            map.matrix[static_cast<std::size_t>(it->second.front())][j] = 1;
        }
    }
    CheckReport rep = verify_homomorphism(map);
    if (!rep.ok()) throw NotHomomorphism(rep.violations.front());
    return map;
}

ConjugacyVerdict conjugacy_verdict(const RootSupersystem& r, const RootSupersystem& s) {
    return is_isomorphic(r, s) ? ConjugacyVerdict::Conjugate : ConjugacyVerdict::NotConjugate;
}

}  // namespace lfrs
