#include "lfrs/realize.hpp"
#include "lfrs/superalg.hpp"

#include <doctest.h>

using namespace lfrs;

namespace {

GradedBasisElement cartan_elem(int i) {
    GradedBasisElement e;
    e.kind = GradedBasisElement::Kind::Cartan;
    e.cartan_index = i;
    e.parity = Parity::Even;
    return e;
}

GradedBasisElement root_elem(const LatticeVector& r, Parity p) {
    GradedBasisElement e;
    e.kind = GradedBasisElement::Kind::Root;
    e.root = r;
    e.parity = p;
    return e;
}

// sl2 on basis (h, e, f)
std::vector<std::vector<SparseVec>> sl2_table() {
    std::vector<std::vector<SparseVec>> t(3, std::vector<SparseVec>(3));
    t[0][1] = {{1, Rat(2)}};
    t[1][0] = {{1, Rat(-2)}};
    t[0][2] = {{2, Rat(-2)}};
    t[2][0] = {{2, Rat(2)}};
    t[1][2] = {{0, Rat(1)}};
    t[2][1] = {{0, Rat(-1)}};
    return t;
}

std::vector<GradedBasisElement> sl2_basis() {
    LatticeVector a = LatticeVector::unit(eps(1));
    return {cartan_elem(0), root_elem(a, Parity::Even), root_elem(-a, Parity::Even)};
}

}  // namespace

TEST_CASE("from_table validates the sl2 table") {
    auto l = LieSuperalgebra::from_table(sl2_basis(), sl2_table());
    CHECK(l.dim() == 3);
    RatVec he = l.bracket(l.basis_vector(0), l.basis_vector(1));
    CHECK(he[1] == 2);  // [h, e] = 2e

    // even e with [e, e] != 0 breaks super-anticommutativity
    auto bad = sl2_table();
    bad[1][1] = {{0, Rat(1)}};
    CHECK_THROWS_AS(LieSuperalgebra::from_table(sl2_basis(), bad), NotAntisupersymmetric);

    // bracket of two evens landing on an odd element
    auto basis = sl2_basis();
    basis[2].parity = Parity::Odd;
    CHECK_THROWS_AS(LieSuperalgebra::from_table(basis, sl2_table()), ParityViolation);
}

TEST_CASE("jacobi detects a perturbed constant") {
    auto l = LieSuperalgebra::from_table(sl2_basis(), sl2_table());
    CHECK(jacobi_check(l).ok());
    auto t = sl2_table();
    t[0][1] = {{1, Rat(3)}};
    t[1][0] = {{1, Rat(-3)}};
    auto bad = LieSuperalgebra::from_table(sl2_basis(), t);
    auto rep = jacobi_check(bad);
    CHECK(!rep.ok());
    CHECK(rep.violations.front().find("Jacobi fails") != std::string::npos);
}

TEST_CASE("osp(1,2): bracket equation, odd squares, representatives") {
    auto model = build_model(ModelKind::OspOdd, 0, 1);
    auto l = to_abstract(model);
    CHECK(l.dim() == 5);
    CHECK(jacobi_check(l).ok());
    LatticeVector d1 = LatticeVector::unit(delta(1));

    // [x, x] for odd x spanning L^{d1} is a nonzero multiple of the 2d1 vector
    int xi = l.grading().at(d1).front();
    RatVec sq = l.bracket(l.basis_vector(xi), l.basis_vector(xi));
    int top = l.grading().at(Rat(2) * d1).front();
    CHECK(sq[top] != 0);
    for (std::size_t i = 0; i < l.dim(); ++i)
        if (i != static_cast<std::size_t>(top)) CHECK(sq[i] == 0);

    // t_{2 delta1}: a multiple of d1 with (t, d1) = 2
    RatVec t = cartan_representative(l, Rat(2) * d1);
    RatVec d1vec = l.basis_vector(0);  // the only Cartan element
    CHECK(l.form(t, d1vec) == 2);
    CHECK(cartan_representative(l, LatticeVector{}) == RatVec(l.dim(), Rat(0)));

    // eq. (bracket): [x, y] = (x, y) t_alpha on a root pair
    int yi = l.grading().at(-d1).front();
    RatVec xv = l.basis_vector(xi), yv = l.basis_vector(yi);
    RatVec lhs = l.bracket(xv, yv);
    RatVec talpha = cartan_representative(l, d1);
    Rat pairing = l.form(xv, yv);
    for (std::size_t i = 0; i < l.dim(); ++i) CHECK(lhs[i] == pairing * talpha[i]);
}

TEST_CASE("form audit catches mutations") {
    auto model = build_model(ModelKind::OspOdd, 1, 1);
    auto l = to_abstract(model);
    CHECK(form_check(l).ok());

    RatMat zero(l.dim(), RatVec(l.dim(), Rat(0)));
    std::vector<GradedBasisElement> basis = l.basis();
    std::vector<std::vector<SparseVec>> table(l.dim(), std::vector<SparseVec>(l.dim()));
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = 0; j < l.dim(); ++j) table[i][j] = l.bracket_basis(i, j);
    auto zl = LieSuperalgebra::from_table(basis, table, zero);
    auto rep = form_check(zl);
    CHECK(!rep.ok());

    // flip the odd-odd block to symmetric: supersymmetry must fail
    RatMat bad = *l.form_gram();
    bool flipped = false;
    for (std::size_t i = 0; i < l.dim() && !flipped; ++i)
        for (std::size_t j = 0; j < l.dim() && !flipped; ++j)
            if (l.parity(i) == Parity::Odd && l.parity(j) == Parity::Odd && bad[i][j] != 0) {
                bad[j][i] = bad[i][j];
                flipped = true;
            }
    REQUIRE(flipped);
    auto sl = LieSuperalgebra::from_table(basis, table, bad);
    bool supersym = false;
    for (const auto& v : form_check(sl).violations)
        if (v.find("supersymmetry") != std::string::npos) supersym = true;
    CHECK(supersym);
}

TEST_CASE("root decomposition") {
    auto model = build_model(ModelKind::OspOdd, 1, 1);
    auto l = to_abstract(model);
    auto decomp = root_decomposition(l, l.cartan_indices());
    CHECK(decomp.size() == 10);
    for (const auto& [w, idxs] : decomp) CHECK(idxs.size() == 1);

    // an abelian algebra equal to its Cartan has no weights left
    std::vector<GradedBasisElement> basis{cartan_elem(0), cartan_elem(1)};
    std::vector<std::vector<SparseVec>> table(2, std::vector<SparseVec>(2));
    auto ab = LieSuperalgebra::from_table(basis, table);
    CHECK(root_decomposition(ab, {0, 1}).empty());

    // sl_s(2,2): nonsingular root spaces are two-dimensional
    auto a11 = to_abstract(build_model(ModelKind::Sl, 2, 2));
    auto d2 = root_decomposition(a11, a11.cartan_indices());
    int twodim = 0;
    for (const auto& [w, idxs] : d2)
        if (idxs.size() == 2) ++twodim;
    CHECK(twodim == 4);
}

TEST_CASE("theta automorphisms") {
    auto model = build_model(ModelKind::OspOdd, 0, 1);
    auto l = to_abstract(model);
    LatticeVector d1 = LatticeVector::unit(delta(1));
    auto theta = theta_automorphism(l, Rat(2) * d1);
    // maps L^{d1} onto L^{-d1}
    int src = l.grading().at(d1).front();
    int dst = l.grading().at(-d1).front();
    RatVec img = matvec(theta, l.basis_vector(src));
    CHECK(img[dst] != 0);
    for (std::size_t i = 0; i < l.dim(); ++i)
        if (i != static_cast<std::size_t>(dst)) CHECK(img[i] == 0);

    // theta^2 fixes the Cartan pointwise
    RatMat sq = matmul(theta, theta);
    for (int h : l.cartan_indices()) {
        RatVec hv = l.basis_vector(h);
        CHECK(matvec(sq, hv) == hv);
    }
    CHECK_THROWS_AS(theta_automorphism(l, d1), NoTriple);  // odd root
}

TEST_CASE("simplicity") {
    CHECK(is_simple(to_abstract(build_model(ModelKind::OspOdd, 1, 1))));

    // sl2 + sl2 is not simple
    LatticeVector a = Rat(2) * LatticeVector::unit(eps(1));
    LatticeVector b = Rat(2) * LatticeVector::unit(eps(2));
    std::vector<GradedBasisElement> basis{cartan_elem(0),             cartan_elem(1),
                                          root_elem(a, Parity::Even), root_elem(-a, Parity::Even),
                                          root_elem(b, Parity::Even), root_elem(-b, Parity::Even)};
    std::vector<std::vector<SparseVec>> t(6, std::vector<SparseVec>(6));
    auto put = [&](int i, int j, int k, Rat c) {
        t[i][j][k] = c;
        t[j][i][k] = -c;
    };
    put(0, 2, 2, Rat(2));
    put(0, 3, 3, Rat(-2));
    put(1, 4, 4, Rat(2));
    put(1, 5, 5, Rat(-2));
    put(2, 3, 0, Rat(1));
    put(4, 5, 1, Rat(1));
    auto sum = LieSuperalgebra::from_table(basis, t);
    sum.set_grading({{a, {2}}, {-a, {3}}, {b, {4}}, {-b, {5}}});
    CHECK(jacobi_check(sum).ok());
    CHECK(!is_simple(sum));

    // supertraceless gl(1|1): one-dimensional center, not simple
    std::vector<GradedBasisElement> gb{cartan_elem(0),
                                       root_elem(LatticeVector::unit(eps(1)), Parity::Odd),
                                       root_elem(-LatticeVector::unit(eps(1)), Parity::Odd)};
    std::vector<std::vector<SparseVec>> gt(3, std::vector<SparseVec>(3));
    gt[1][2] = {{0, Rat(1)}};  // [x, y] = h = identity, central
    gt[2][1] = {{0, Rat(1)}};
    auto gl11 = LieSuperalgebra::from_table(gb, gt);
    CHECK(!is_simple(gl11));
}

TEST_CASE("center of the even part") {
    CHECK(center_of_even_part(to_abstract(build_model(ModelKind::OspOdd, 1, 1))).empty());
    auto z = center_of_even_part(to_abstract(build_model(ModelKind::Sl, 2, 1)));
    CHECK(z.size() == 1);
}
