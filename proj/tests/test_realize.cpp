#include "lfrs/realize.hpp"

#include <doctest.h>

#include <random>

using namespace lfrs;

namespace {

LatticeVector ev(int i) { return LatticeVector::unit(eps(i)); }
LatticeVector dv(int i) { return LatticeVector::unit(delta(i)); }

// random homogeneous sparse matrix over the osp(3,2) index set
SuperMatrix random_homogeneous(std::mt19937_64& rng, Parity parity) {
    std::vector<SuperIndex> evens{idx0(), ev_i(1), ev_bar(1)};
    std::vector<SuperIndex> odds{od_j(1), od_bar(1)};
    std::uniform_int_distribution<int> val(-4, 4), pick_e(0, 2), pick_o(0, 1), coin(0, 1);
    SuperMatrix m(parity);
    for (int k = 0; k < 4; ++k) {
        SuperIndex r, c;
        if (parity == Parity::Even) {
            if (coin(rng)) {
                r = evens[pick_e(rng)];
                c = evens[pick_e(rng)];
            } else {
                r = odds[pick_o(rng)];
                c = odds[pick_o(rng)];
            }
        } else {
            r = evens[pick_e(rng)];
            c = odds[pick_o(rng)];
            if (coin(rng)) std::swap(r, c);
        }
        Rat v(val(rng));
        if (v != 0) m.set(r, c, m.entry(r, c) + v);
    }
    return m;
}

}  // namespace

TEST_CASE("supertransposition sign rule") {
    // both even
    CHECK(supertranspose(SuperMatrix::unit(ev_i(1), ev_i(2))) == SuperMatrix::unit(ev_i(2), ev_i(1)));
    // |i| = 0, |j| = 1 flips the sign at (j, i)
    CHECK(supertranspose(SuperMatrix::unit(ev_i(1), od_j(1))) ==
          SuperMatrix::unit(od_j(1), ev_i(1), Rat(1)));
    SuperMatrix flipped = SuperMatrix::unit(od_j(1), ev_i(1));
    CHECK(supertranspose(flipped) == SuperMatrix::unit(ev_i(1), od_j(1), Rat(-1)));

    // property: (AB)^st = (-1)^{|A||B|} B^st A^st on random homogeneous pairs
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Parity pa = trial % 2 ? Parity::Odd : Parity::Even;
        Parity pb = (trial / 2) % 2 ? Parity::Odd : Parity::Even;
        SuperMatrix a = random_homogeneous(rng, pa);
        SuperMatrix b = random_homogeneous(rng, pb);
        SuperMatrix lhs = supertranspose(matmul(a, b));
        SuperMatrix rhs = matmul(supertranspose(b), supertranspose(a));
        if (parity_sign(pa, pb) < 0) rhs *= Rat(-1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("model inventories") {
    auto osp32 = build_model(ModelKind::OspOdd, 1, 1);
    CHECK(osp32.root_vectors.size() == 10);
    CHECK(osp32.cartan.size() == 2);
    CHECK(to_abstract(osp32).dim() == 12);

    CHECK(to_abstract(build_model(ModelKind::Sl, 2, 2)).dim() == 14);

    auto osp24 = build_model(ModelKind::OspEven, 1, 2);
    auto sys = root_supersystem(osp24);
    CHECK(sys.descriptor() == TypeDescriptor{Family::DotC0T, {2}});

    CHECK_THROWS_AS(build_model(ModelKind::Sl, 0, 2), EmptyOddPart);
    CHECK_THROWS_AS(build_model(ModelKind::OspOdd, 1, 0), BadIndexSets);
}

TEST_CASE("supertrace values in osp(3,2)") {
    auto m = build_model(ModelKind::OspOdd, 1, 1);
    const SuperMatrix& h1 = m.cartan[0];
    const SuperMatrix& d1 = m.cartan[1];
    CHECK(supertrace_form(m, h1, h1) == 2);
    CHECK(supertrace_form(m, d1, d1) == -2);
    CHECK(supertrace_form(m, h1, d1) == 0);
}

TEST_CASE("defining relation closure and traceless brackets") {
    std::mt19937_64 rng(11);
    for (ModelKind kind : {ModelKind::OspOdd, ModelKind::OspEven}) {
        auto model = build_model(kind, 2, 1);
        std::vector<SuperMatrix> all = model.cartan;
        for (const auto& [w, vecs] : model.root_vectors) all.push_back(vecs.front());
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int t = 0; t < 40; ++t) {
            SuperMatrix br = superbracket(all[pick(rng)], all[pick(rng)]);
            CHECK(satisfies_defining_relation(model, br));
            CHECK(supertrace(br) == 0);
        }
    }
}

TEST_CASE("abstract models: simplicity, centers, dimensions") {
    auto osp32 = to_abstract(build_model(ModelKind::OspOdd, 1, 1));
    CHECK(is_simple(osp32));
    CHECK(center_of_even_part(osp32).empty());

    auto sl21 = to_abstract(build_model(ModelKind::Sl, 2, 1));
    CHECK(sl21.dim() == 8);
    CHECK(is_simple(sl21));
    CHECK(center_of_even_part(sl21).size() == 1);

    auto sls22 = to_abstract(build_model(ModelKind::Sl, 2, 2));
    CHECK(sls22.dim() == 14);
    CHECK(is_simple(sls22));
    int twodim = 0;
    for (const auto& [w, idxs] : sls22.grading())
        if (idxs.size() == 2) ++twodim;
    CHECK(twodim == 4);
}

TEST_CASE("congruence isomorphisms") {
    auto model = build_model(ModelKind::OspOdd, 2, 1);

    // T = identity
    SuperMatrix id(Parity::Even);
    for (const auto& idx : model.indices) id.set(idx, idx, Rat(1));
    auto trivial = congruence_iso(model, model.q, id);
    auto matrices_count = trivial.images.size();
    CHECK(matrices_count == to_abstract(model).dim());

    // finite analog of the diagonalizing congruence S^st Q S = Q_e
    SuperMatrix s(Parity::Even), qe(Parity::Even);
    s.set(idx0(), idx0(), Rat(1));
    qe.set(idx0(), idx0(), Rat(-2));
    for (int i = 1; i <= model.m; ++i) {
        s.set(ev_i(i), ev_i(i), Rat(1));
        s.set(ev_i(i), ev_bar(i), Rat(1));
        s.set(ev_bar(i), ev_i(i), Rat(1));
        s.set(ev_bar(i), ev_bar(i), Rat(-1));
        qe.set(ev_i(i), ev_i(i), Rat(2));
        qe.set(ev_bar(i), ev_bar(i), Rat(-2));
    }
    for (int j = 1; j <= model.n; ++j) {
        s.set(od_j(j), od_j(j), Rat(1));
        s.set(od_bar(j), od_bar(j), Rat(1));
        qe.set(od_j(j), od_bar(j), Rat(1));
        qe.set(od_bar(j), od_j(j), Rat(-1));
    }
    CHECK(matmul(supertranspose(s), matmul(model.q, s)) == qe);
    auto diag = congruence_iso(model, qe, s);
    CHECK(diag.images.size() == matrices_count);

    // reindexing along a parity-preserving bijection = conjugation by the
    // permutation matrix; here eta swaps the two even index pairs
    SuperMatrix perm(Parity::Even);
    perm.set(idx0(), idx0(), Rat(1));
    perm.set(ev_i(1), ev_i(2), Rat(1));
    perm.set(ev_i(2), ev_i(1), Rat(1));
    perm.set(ev_bar(1), ev_bar(2), Rat(1));
    perm.set(ev_bar(2), ev_bar(1), Rat(1));
    perm.set(od_j(1), od_j(1), Rat(1));
    perm.set(od_bar(1), od_bar(1), Rat(1));
    CHECK(matmul(supertranspose(perm), matmul(model.q, perm)) == model.q);
    auto reindex = congruence_iso(model, model.q, perm);
    CHECK(reindex.images.size() == matrices_count);

    // a non-congruent pair must be rejected
    SuperMatrix bad = qe;
    bad.set(idx0(), idx0(), Rat(-3));
    CHECK_THROWS_AS(congruence_iso(model, bad, s), CongruenceFails);
}

TEST_CASE("embeddings and functoriality") {
    auto a = build_model(ModelKind::OspOdd, 1, 1);
    auto b = build_model(ModelKind::OspOdd, 2, 1);
    auto c = build_model(ModelKind::OspOdd, 2, 2);
    CHECK_NOTHROW(embed(a, b));
    CHECK_NOTHROW(embed(b, c));
    CHECK_NOTHROW(embed(a, c));  // composition lands on the same matrices

    auto s1 = build_model(ModelKind::Sl, 2, 1);
    auto s2 = build_model(ModelKind::Sl, 3, 2);
    CHECK_NOTHROW(embed(s1, s2));

    CHECK_THROWS_AS(embed(b, a), NotSubset);
    CHECK_THROWS_AS(embed(a, build_model(ModelKind::OspEven, 2, 2)), NotSubset);
}

TEST_CASE("extraction equals the recursion on every supported model") {
    for (auto [kind, m, n] : {std::tuple{ModelKind::OspOdd, 0, 1},
                              std::tuple{ModelKind::OspOdd, 1, 1},
                              std::tuple{ModelKind::OspOdd, 1, 2},
                              std::tuple{ModelKind::OspEven, 1, 2},
                              std::tuple{ModelKind::OspEven, 2, 1},
                              std::tuple{ModelKind::Sl, 2, 1},
                              std::tuple{ModelKind::Sl, 2, 3}}) {
        auto model = build_model(kind, m, n);
        CAPTURE(model.name());
        auto sys = root_supersystem(model);
        TotalOrder order = TotalOrder::symbol_order(sys.basis());
        auto seeds = uniform_seeds(sys, order, Rat(1));
        auto extracted = extract_constants(model, order, seeds, Rat(1));
        auto recursed = constants_from_seeds(sys, order, seeds, Rat(1));
        CHECK(extracted.n == recursed.n);
        CHECK(verify_constants(sys, order, extracted).ok());
    }
    CHECK_THROWS_AS(extract_constants(build_model(ModelKind::Sl, 2, 2),
                                      TotalOrder::symbol_order({eps(1), eps(2), delta(1)}), {},
                                      Rat(1)),
                    TypeA11Unsupported);
}

TEST_CASE("every nonzero model root space is one dimensional outside A(1,1)") {
    for (auto [kind, m, n] : {std::tuple{ModelKind::OspOdd, 1, 2},
                              std::tuple{ModelKind::OspEven, 2, 2},
                              std::tuple{ModelKind::Sl, 3, 2}}) {
        auto model = build_model(kind, m, n);
        for (const auto& [w, vecs] : model.root_vectors) CHECK(vecs.size() == 1);
    }
}
