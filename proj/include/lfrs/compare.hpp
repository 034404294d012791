#pragma once

#include "lfrs/chevalley.hpp"
#include "lfrs/superalg.hpp"

#include <string>

namespace lfrs {

struct SeedMismatch : std::runtime_error {
    explicit SeedMismatch(const std::string& w) : std::runtime_error("SeedMismatch: " + w) {}
};
struct NotHomomorphism : std::runtime_error {
    explicit NotHomomorphism(const std::string& w) : std::runtime_error("NotHomomorphism: " + w) {}
};

// Parity-preserving linear map between two table algebras, kept as an exact
// matrix over the bases.
struct AlgebraMap {
    const LieSuperalgebra* source{nullptr};
    const LieSuperalgebra* target{nullptr};
    RatMat matrix;  // column j = image of source basis j
    bool iso_flag{true};
};

CheckReport verify_homomorphism(const AlgebraMap& map);

// h_{beta_i} -> h'_{f(beta_i)}, e_alpha -> x_{f(alpha)} between two algebras
// assembled with matched seeds under the root isomorphism f. The target must
// be built over f(Pi) as its Cartan base and with scale s = r/k.
AlgebraMap transport_iso(const RootSupersystem& r, const ConstantsTable& table_r,
                         const LieSuperalgebra& g, const RootSupersystem& s,
                         const ConstantsTable& table_s, const LieSuperalgebra& l,
                         const LatticeIso& f);

enum class ConjugacyVerdict { Conjugate, NotConjugate };

ConjugacyVerdict conjugacy_verdict(const RootSupersystem& r, const RootSupersystem& s);

}  // namespace lfrs
