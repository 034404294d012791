#include "lfrs/chevalley.hpp"
#include "lfrs/compare.hpp"
#include "lfrs/realize.hpp"

#include <doctest.h>

#include <random>

using namespace lfrs;

namespace {

LatticeVector ev(int i) { return LatticeVector::unit(eps(i)); }
LatticeVector dv(int i) { return LatticeVector::unit(delta(i)); }

}  // namespace

TEST_CASE("positivity and sigma signs on B(1,1)") {
    auto r = build(dispatch_descriptor(Family::B, {1, 1}));
    TotalOrder o = TotalOrder::symbol_order(r.basis());
    auto [positives, signs] = order_and_signs(r, o);
    CHECK(o.positive(ev(1) - dv(1)));
    CHECK(positives.size() == 5);
    CHECK(signs.sigma.at(-(ev(1) + dv(1))) == -1);   // odd negative
    CHECK(signs.sigma.at(Rat(-2) * dv(1)) == 1);     // even negative
    CHECK(signs.sigma.at(ev(1) + dv(1)) == 1);
    // sigma identity across all roots
    for (const auto& [root, s] : signs.sigma) {
        int p = signs.parity.at(root);
        CHECK(signs.sigma.at(-root) == (p ? -s : s));
    }
}

TEST_CASE("special and extraspecial pairs of B(1,1)") {
    auto r = build(dispatch_descriptor(Family::B, {1, 1}));
    TotalOrder o = TotalOrder::symbol_order(r.basis());
    auto pc = pair_classes(r, o);
    CHECK(pc.special.size() == 4);
    CHECK(pc.extraspecial.size() == 3);
    CHECK(pc.extraspecial.at(Rat(2) * dv(1)) == RootPair{dv(1), dv(1)});
    CHECK(pc.extraspecial.at(ev(1)) == RootPair{dv(1), ev(1) - dv(1)});
    CHECK(pc.extraspecial.at(ev(1) + dv(1)) == RootPair{dv(1), ev(1)});
    // every special-pair sum has exactly one extraspecial representative
    for (const auto& p : pc.special) CHECK(pc.extraspecial.count(p.first + p.second) == 1);

    auto a1 = build(TypeDescriptor{Family::B, {1}});
    CHECK(pair_classes(a1, TotalOrder::symbol_order(a1.basis())).special.empty());
}

TEST_CASE("r coefficients") {
    auto b01 = build(dispatch_descriptor(Family::B, {0, 1}));
    TotalOrder o = TotalOrder::symbol_order(b01.basis());
    auto [pos, signs] = order_and_signs(b01, o);
    CHECK(r_coefficient(b01, o, signs, dv(1), dv(1), Rat(1)) == 2);

    auto b11 = build(dispatch_descriptor(Family::B, {1, 1}));
    TotalOrder o2 = TotalOrder::symbol_order(b11.basis());
    auto [pos2, signs2] = order_and_signs(b11, o2);
    // nonsingular pair, p = 0; the osp(3,2) matrix bracket is the oracle and
    // identity (iii) pins the value (the realize tests replay it)
    CHECK(r_coefficient(b11, o2, signs2, ev(1) + dv(1), dv(1) - ev(1), Rat(1)) == -2);
    CHECK_THROWS_AS(r_coefficient(b11, o2, signs2, ev(1), ev(1), Rat(1)), SumNotRoot);

    // every pair with a nonzero-root sum has a nonzero coefficient
    for (const auto& a : b11.roots()) {
        if (a.is_zero()) continue;
        for (const auto& b : b11.roots()) {
            if (b.is_zero() || (a + b).is_zero() || !b11.is_root(a + b)) continue;
            CHECK(r_coefficient(b11, o2, signs2, a, b, Rat(1)) != 0);
        }
    }
}

TEST_CASE("A2 with unit seeds gives classical constants") {
    auto a2 = build(TypeDescriptor{Family::A, {3}});
    TotalOrder o = TotalOrder::symbol_order(a2.basis());
    auto t = constants_from_seeds(a2, o, uniform_seeds(a2, o, Rat(1)), Rat(1));
    for (const auto& [pair, value] : t.n) CHECK((value == 1 || value == -1));
    CHECK(verify_constants(a2, o, t).ok());
}

TEST_CASE("identity (iii) forces the negative seed") {
    auto b01 = build(dispatch_descriptor(Family::B, {0, 1}));
    TotalOrder o = TotalOrder::symbol_order(b01.basis());
    auto [pos, signs] = order_and_signs(b01, o);
    for (const Rat& s : {Rat(1), Rat(5), Rat(-2, 3)}) {
        std::map<RootPair, Rat> seeds{{{dv(1), dv(1)}, s}};
        auto t = constants_from_seeds(b01, o, seeds, Rat(1));
        Rat r = r_coefficient(b01, o, signs, dv(1), dv(1), Rat(1));
        CHECK(t.n_of(-dv(1), -dv(1)) == r / s);
    }
}

TEST_CASE("full identity audit and mutation witness") {
    auto r = build(dispatch_descriptor(Family::B, {1, 1}));
    TotalOrder o = TotalOrder::symbol_order(r.basis());
    auto t = constants_from_seeds(r, o, uniform_seeds(r, o, Rat(1)), Rat(1));
    CHECK(verify_constants(r, o, t).ok());

    auto bad = t;
    bad.n[{dv(1), ev(1)}] = -bad.n[{dv(1), ev(1)}];
    auto rep = verify_constants(r, o, bad);
    CHECK(!rep.ok());
    bool two = false;
    for (const auto& v : rep.violations)
        if (v.find("(ii)") != std::string::npos || v.find("(i)") != std::string::npos) two = true;
    CHECK(two);
}

TEST_CASE("determinism of the recursion") {
    auto r = build(dispatch_descriptor(Family::B, {1, 2}));
    TotalOrder o = TotalOrder::symbol_order(r.basis());
    auto seeds = uniform_seeds(r, o, Rat(1));
    auto t1 = constants_from_seeds(r, o, seeds, Rat(1));
    auto t2 = constants_from_seeds(r, o, seeds, Rat(1));
    CHECK(t1.n == t2.n);
    CHECK(t1.cartan_base == t2.cartan_base);
}

TEST_CASE("random nonzero seeds still assemble valid superalgebras") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> num(1, 7), den(1, 5), coin(0, 1);
    for (const TypeDescriptor& d : {dispatch_descriptor(Family::B, {1, 1}),
                                    dispatch_descriptor(Family::B, {0, 2}),
                                    TypeDescriptor{Family::DotA0T, {2}},
                                    TypeDescriptor{Family::D21L, {2, 1}, Rat(2)}}) {
        CAPTURE(d.str());
        auto r = build(d);
        TotalOrder o = TotalOrder::symbol_order(r.basis());
        std::map<RootPair, Rat> seeds;
        for (const auto& [sum, pair] : pair_classes(r, o).extraspecial) {
            Rat v(num(rng), den(rng));
            seeds[pair] = coin(rng) ? v : -v;
        }
        auto t = constants_from_seeds(r, o, seeds, Rat(1));
        CHECK(verify_constants(r, o, t).ok());
        auto alg = assemble_algebra(r, t);
        CHECK(jacobi_check(alg).ok());
        CHECK(form_check(alg).ok());
    }
}

TEST_CASE("rScale scales the constant products linearly") {
    auto r = build(dispatch_descriptor(Family::B, {1, 1}));
    TotalOrder o = TotalOrder::symbol_order(r.basis());
    auto seeds = uniform_seeds(r, o, Rat(1));
    auto t1 = constants_from_seeds(r, o, seeds, Rat(1));
    auto t3 = constants_from_seeds(r, o, seeds, Rat(3));
    for (const auto& [pair, value] : t1.n) {
        Rat p1 = value * t1.n_of(-pair.first, -pair.second);
        Rat p3 = t3.n_of(pair.first, pair.second) * t3.n_of(-pair.first, -pair.second);
        CHECK(p3 == Rat(3) * p1);
    }
}

TEST_CASE("assembled algebras: sl2 and the five-dimensional osp(1,2) shape") {
    auto a1 = build(TypeDescriptor{Family::B, {1}});
    TotalOrder o = TotalOrder::symbol_order(a1.basis());
    // rScale 2 reproduces the classical sl2 normalization [h, e] = 2e for
    // e sitting at the base root beta with h = h_beta
    auto t = constants_from_seeds(a1, o, uniform_seeds(a1, o, Rat(1)), Rat(2));
    auto sl2 = assemble_algebra(a1, t);
    CHECK(sl2.dim() == 3);
    int e = sl2.grading().at(t.cartan_base[0]).front();
    RatVec he = sl2.bracket(sl2.basis_vector(0), sl2.basis_vector(e));
    CHECK(he[e] == 2);
    int f = sl2.grading().at(-t.cartan_base[0]).front();
    RatVec ef = sl2.bracket(sl2.basis_vector(e), sl2.basis_vector(f));
    CHECK(ef[0] != 0);  // [e, f] lands in the Cartan

    auto b01 = build(dispatch_descriptor(Family::B, {0, 1}));
    TotalOrder o2 = TotalOrder::symbol_order(b01.basis());
    auto t2 = constants_from_seeds(b01, o2, uniform_seeds(b01, o2, Rat(1)), Rat(1));
    auto alg = assemble_algebra(b01, t2);
    CHECK(alg.dim() == 5);
    CHECK(jacobi_check(alg).ok());

    auto d212 = build(TypeDescriptor{Family::D21L, {2, 1}, Rat(2)});
    TotalOrder o3 = TotalOrder::symbol_order(d212.basis());
    auto t3 = constants_from_seeds(d212, o3, uniform_seeds(d212, o3, Rat(1)), Rat(1));
    auto alg3 = assemble_algebra(d212, t3);
    CHECK(alg3.dim() == 17);
    CHECK(jacobi_check(alg3).ok());
}

TEST_CASE("rejections") {
    auto a11 = build(TypeDescriptor{Family::ALL, {1, 1}});
    TotalOrder o = TotalOrder::symbol_order(a11.basis());
    CHECK_THROWS_AS(constants_from_seeds(a11, o, {}, Rat(1)), TypeA11Unsupported);

    auto r = build(dispatch_descriptor(Family::B, {1, 1}));
    TotalOrder o2 = TotalOrder::symbol_order(r.basis());
    CHECK_THROWS_AS(constants_from_seeds(r, o2, {}, Rat(1)), SeedMissing);
}

TEST_CASE("diagonal automorphisms") {
    auto a2 = build(TypeDescriptor{Family::A, {3}});
    TotalOrder o = TotalOrder::symbol_order(a2.basis());
    auto t = constants_from_seeds(a2, o, uniform_seeds(a2, o, Rat(1)), Rat(1));
    auto alg = assemble_algebra(a2, t);

    std::vector<Rat> ones(t.cartan_base.size(), Rat(1));
    CHECK(diagonal_automorphism(a2, t, alg, ones) == identity_mat(alg.dim()));

    std::vector<Rat> phi = ones;
    phi[0] = 2;
    auto m = diagonal_automorphism(a2, t, alg, phi);
    AlgebraMap map{&alg, &alg, m, true};
    CHECK(verify_homomorphism(map).ok());
    int scaled = 0;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        if (m[i][i] != 1) ++scaled;
    CHECK(scaled == 4);

    std::vector<Rat> inv_phi = phi;
    inv_phi[0] = Rat(1, 2);
    CHECK(matmul(m, diagonal_automorphism(a2, t, alg, inv_phi)) == identity_mat(alg.dim()));
}
