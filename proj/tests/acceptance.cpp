// Acceptance suite: runs every criterion exactly as stated, one pass/fail
// line per criterion, exact arithmetic throughout. Exit code = number of
// failed criteria. argv[1] (optional) is the CLI binary for the
// determinism criterion.

#include "lfrs/chevalley.hpp"
#include "lfrs/compare.hpp"
#include "lfrs/json_io.hpp"
#include "lfrs/realize.hpp"
#include "lfrs/rootsys.hpp"
#include "lfrs/superalg.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace lfrs;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << "criterion " << number << ": " << (pass ? "PASS" : "FAIL") << " - " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++failures;
}

std::vector<TypeDescriptor> axiom_suite_descriptors() {
    std::vector<TypeDescriptor> out;
    for (int n = 2; n <= 4; ++n) out.push_back({Family::A, {n}});
    for (int n = 1; n <= 4; ++n) out.push_back({Family::B, {n}});
    for (int n = 1; n <= 4; ++n) out.push_back({Family::C, {n}});
    for (int n = 2; n <= 4; ++n) out.push_back({Family::D, {n}});
    for (int n = 1; n <= 4; ++n) out.push_back({Family::BC, {n}});
    for (int n = 1; n <= 4; ++n) out.push_back(dispatch_descriptor(Family::B, {0, n}));
    for (int n = 1; n <= 3; ++n) out.push_back(dispatch_descriptor(Family::B, {1, n}));
    for (int m = 2; m <= 3; ++m) out.push_back(dispatch_descriptor(Family::B, {m, 1}));
    out.push_back(dispatch_descriptor(Family::B, {2, 2}));
    for (int n = 2; n <= 3; ++n) out.push_back(dispatch_descriptor(Family::C, {1, n}));
    out.push_back(dispatch_descriptor(Family::C, {2, 2}));
    out.push_back(dispatch_descriptor(Family::D, {1, 3}));
    out.push_back(dispatch_descriptor(Family::D, {2, 2}));
    out.push_back(dispatch_descriptor(Family::BC, {1, 1}));
    out.push_back(dispatch_descriptor(Family::BC, {1, 2}));
    out.push_back(dispatch_descriptor(Family::BC, {1, 3}));
    out.push_back(dispatch_descriptor(Family::BC, {2, 2}));
    out.push_back({Family::ALL, {1, 1}});
    out.push_back({Family::ALL, {2, 2}});
    for (int n = 2; n <= 4; ++n) out.push_back({Family::DotA0T, {n}});
    for (int n = 2; n <= 4; ++n) out.push_back({Family::DotC0T, {n}});
    out.push_back({Family::D21L, {2, 1}, Rat(1)});
    out.push_back({Family::D21L, {2, 1}, Rat(2)});
    out.push_back({Family::D21L, {2, 1}, Rat(-1, 2)});
    out.push_back({Family::AB13, {1, 3}});
    out.push_back({Family::G12, {1, 2}});
    return out;
}

struct NamedSystem {
    std::string name;
    TypeDescriptor descriptor;
};

std::vector<NamedSystem> constants_suite() {
    return {
        {"A2", {Family::A, {3}}},
        {"B2", {Family::B, {2}}},
        {"B(0,1)", dispatch_descriptor(Family::B, {0, 1})},
        {"B(0,2)", dispatch_descriptor(Family::B, {0, 2})},
        {"B(1,1)", dispatch_descriptor(Family::B, {1, 1})},
        {"B(1,2)", dispatch_descriptor(Family::B, {1, 2})},
        {"B(2,1)", dispatch_descriptor(Family::B, {2, 1})},
        {"dotC(0,2)", {Family::DotC0T, {2}}},
        {"dotA(0,2)", {Family::DotA0T, {2}}},
        {"dotA(2,3)", {Family::DotATT, {2, 3}}},
        {"D(2,1,2)", {Family::D21L, {2, 1}, Rat(2)}},
        {"C(1,2)", dispatch_descriptor(Family::C, {1, 2})},
    };
}

std::map<RootPair, Rat> random_seeds(const RootSupersystem& r, const TotalOrder& o,
                                     std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 9), coin(0, 1);
    std::map<RootPair, Rat> seeds;
    for (const auto& [sum, pair] : pair_classes(r, o).extraspecial) {
        Rat v(num(rng), den(rng));
        seeds[pair] = coin(rng) ? v : -v;
    }
    return seeds;
}

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    for (const auto& d : axiom_suite_descriptors()) {
        try {
            auto rep = check_axioms(build(d));
            if (!rep.ok()) {
                pass = false;
                detail = d.str() + ": " + rep.violations.front();
                break;
            }
        } catch (const std::exception& e) {
            pass = false;
            detail = d.str() + ": " + e.what();
            break;
        }
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (detail.empty()) detail = std::to_string(ms) + " ms";
    report(1, "axiom suite, total rank <= 4 plus exceptional rows", pass, detail);
}

void criteria_2_and_3() {
    bool pass2 = true, pass3 = true;
    std::string detail2, detail3;
    std::mt19937_64 rng(424242);
    for (const auto& [name, d] : constants_suite()) {
        try {
            auto r = build(d);
            TotalOrder o = TotalOrder::symbol_order(r.basis());
            for (int which = 0; which < 2; ++which) {
                auto seeds = which == 0 ? uniform_seeds(r, o, Rat(1)) : random_seeds(r, o, rng);
                auto table = constants_from_seeds(r, o, seeds, Rat(1));
                auto rep = verify_constants(r, o, table);
                if (!rep.ok()) {
                    pass2 = false;
                    if (detail2.empty()) detail2 = name + ": " + rep.violations.front();
                }
                auto alg = assemble_algebra(r, table);
                auto jac = jacobi_check(alg);
                if (!jac.ok()) {
                    pass3 = false;
                    if (detail3.empty()) detail3 = name + ": " + jac.violations.front();
                }
            }
        } catch (const std::exception& e) {
            pass2 = false;
            pass3 = false;
            if (detail2.empty()) detail2 = name + ": " + e.what();
            if (detail3.empty()) detail3 = name + ": " + e.what();
        }
    }
    report(2, "constant identities (i)-(iv), unit and random seeds", pass2, detail2);
    report(3, "jacobi superidentity for every assembled algebra", pass3, detail3);
}

void criterion_4() {
    bool pass = true;
    std::string detail;
    for (auto [name, kind, m, n] : {std::tuple{"osp(1,2)/B(0,1)", ModelKind::OspOdd, 0, 1},
                                    std::tuple{"osp(3,2)/B(1,1)", ModelKind::OspOdd, 1, 1},
                                    std::tuple{"osp(2,4)/dotC(0,2)", ModelKind::OspEven, 1, 2},
                                    std::tuple{"sl(2|1)/dotA(0,2)", ModelKind::Sl, 2, 1},
                                    std::tuple{"sl(2|3)/dotA(2,3)", ModelKind::Sl, 2, 3}}) {
        try {
            auto model = build_model(kind, m, n);
            auto sys = root_supersystem(model);
            TotalOrder order = TotalOrder::symbol_order(sys.basis());
            auto seeds = uniform_seeds(sys, order, Rat(1));
            auto extracted = extract_constants(model, order, seeds, Rat(1));
            auto recursed = constants_from_seeds(sys, order, seeds, Rat(1));
            if (!(extracted.n == recursed.n && extracted.seeds == recursed.seeds)) {
                pass = false;
                detail = name;
                break;
            }
        } catch (const std::exception& e) {
            pass = false;
            detail = std::string(name) + ": " + e.what();
            break;
        }
    }
    report(4, "cross oracle: extracted tables equal the recursion", pass, detail);
}

void criterion_5() {
    bool pass = true;
    std::string detail;
    try {
        auto sls22 = to_abstract(build_model(ModelKind::Sl, 2, 2));
        if (sls22.dim() != 14) {
            pass = false;
            detail = "dim sl_s(2,2) = " + std::to_string(sls22.dim());
        }
        int twodim = 0;
        for (const auto& [w, idxs] : sls22.grading())
            if (idxs.size() == 2) ++twodim;
        if (twodim != 4) {
            pass = false;
            detail = "two-dimensional nonsingular spaces: " + std::to_string(twodim);
        }

        // the ten-root list of the odd orthosymplectic table at (1,1)
        auto b11 = build(dispatch_descriptor(Family::B, {1, 1}));
        LatticeVector e1 = LatticeVector::unit(eps(1)), d1 = LatticeVector::unit(delta(1));
        std::set<LatticeVector> expect{LatticeVector{}};
        for (const LatticeVector& v : {e1, d1, Rat(2) * d1, e1 + d1, e1 - d1}) {
            expect.insert(v);
            expect.insert(-v);
        }
        if (b11.roots() != expect) {
            pass = false;
            detail = "B(1,1) root list";
        }

        auto osp24 = to_abstract(build_model(ModelKind::OspEven, 1, 2));
        auto z = center_of_even_part(osp24);
        if (z.size() != 1) {
            pass = false;
            detail = "osp(2,4) center dim = " + std::to_string(z.size());
        } else {
            RatVec t1 = cartan_representative(osp24, e1 + d1);
            RatVec t2 = cartan_representative(osp24, Rat(2) * d1);
            RatVec cand(osp24.dim(), Rat(0));
            for (std::size_t i = 0; i < osp24.dim(); ++i) cand[i] = t1[i] - t2[i] / Rat(2);
            RowSpan span(osp24.dim());
            for (auto& v : z) span.add(v);
            if (!span.contains(cand)) {
                pass = false;
                detail = "central element t_{e1+d1} - t_{2d1}/2 missing";
            }
        }
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    report(5, "numeric anchors: dim 14, 2-dim spaces, root list, central element", pass, detail);
}

void criterion_6() {
    bool pass = true;
    std::string detail;
    for (auto [name, kind, m, n] : {std::tuple{"osp(3,2)", ModelKind::OspOdd, 1, 1},
                                    std::tuple{"sl(2|1)", ModelKind::Sl, 2, 1}}) {
        try {
            auto model = build_model(kind, m, n);
            auto alg = to_abstract(model);
            auto sys = root_supersystem(model);
            int checked = 0;
            for (const auto& [alpha, idxs] : alg.grading()) {
                if (alg.parity(static_cast<std::size_t>(idxs.front())) != Parity::Even) continue;
                if (form_eval(sys, alpha, alpha) == 0) continue;
                RatMat theta = theta_automorphism(alg, alpha);
                // theta(h) = h - alpha(h) h_alpha on the Cartan
                RatVec t_alpha = cartan_representative(alg, alpha);
                Rat norm = induced_form(alg, alpha, alpha);
                for (int h : alg.cartan_indices()) {
                    RatVec hv = alg.basis_vector(static_cast<std::size_t>(h));
                    RatVec lhs = matvec(theta, hv);
                    Rat ah = alg.form(t_alpha, hv);
                    for (std::size_t i = 0; i < alg.dim(); ++i) {
                        if (lhs[i] != hv[i] - ah * Rat(2) * t_alpha[i] / norm) {
                            pass = false;
                            detail = std::string(name) + ": Cartan action at " + alpha.str();
                        }
                    }
                }
                // theta(L^beta) inside L^{r_alpha(beta)}
                for (const auto& [beta, bidx] : alg.grading()) {
                    LatticeVector target = reflect(sys, alpha, beta);
                    for (int bi : bidx) {
                        RatVec img = matvec(theta, alg.basis_vector(static_cast<std::size_t>(bi)));
                        for (std::size_t i = 0; i < alg.dim(); ++i) {
                            if (img[i] == 0) continue;
                            const auto& elem = alg.basis()[i];
                            bool ok = elem.kind == GradedBasisElement::Kind::Root &&
                                      elem.root == target;
                            if (!ok) {
                                pass = false;
                                detail = std::string(name) + ": theta misses the reflected space";
                            }
                        }
                    }
                }
                AlgebraMap map{&alg, &alg, theta, true};
                if (!verify_homomorphism(map).ok()) {
                    pass = false;
                    detail = std::string(name) + ": homomorphism audit at " + alpha.str();
                }
                ++checked;
            }
            if (checked == 0) {
                pass = false;
                detail = std::string(name) + ": no even real roots checked";
            }
        } catch (const std::exception& e) {
            pass = false;
            detail = std::string(name) + ": " + e.what();
        }
    }
    report(6, "theta automorphisms act as reflections", pass, detail);
}

void criterion_7() {
    bool pass = true;
    std::string detail;
    // expected center dimension of the even part: 0 for real type, 1 for
    // imaginary type
    for (auto [name, kind, m, n, center] : {std::tuple{"osp(3,2)", ModelKind::OspOdd, 1, 1, 0},
                                            std::tuple{"osp(5,2)", ModelKind::OspOdd, 2, 1, 0},
                                            std::tuple{"osp(2,4)", ModelKind::OspEven, 1, 2, 1},
                                            std::tuple{"sl(2|1)", ModelKind::Sl, 2, 1, 1},
                                            std::tuple{"sl_s(2,2)", ModelKind::Sl, 2, 2, 0}}) {
        try {
            auto alg = to_abstract(build_model(kind, m, n));
            if (!is_simple(alg)) {
                pass = false;
                detail = std::string(name) + ": not simple";
            }
            int z = static_cast<int>(center_of_even_part(alg).size());
            if (z != center) {
                pass = false;
                detail = std::string(name) + ": center dim " + std::to_string(z);
            }
        } catch (const std::exception& e) {
            pass = false;
            detail = std::string(name) + ": " + e.what();
        }
    }
    report(7, "simplicity and even-part centers", pass, detail);
}

void criterion_8() {
    bool pass = true;
    std::string detail;
    try {
        auto b22 = build(dispatch_descriptor(Family::B, {2, 2}));
        auto d22 = build(dispatch_descriptor(Family::D, {2, 2}));
        if (is_isomorphic(b22, d22)) {
            pass = false;
            detail = "B(2,2) ~ D(2,2) unexpectedly";
        }
        if (conjugacy_verdict(b22, d22) != ConjugacyVerdict::NotConjugate) {
            pass = false;
            detail = "conjugacy verdict";
        }
        for (auto [name, d] : std::vector<std::pair<std::string, TypeDescriptor>>{
                 {"C(2,2)", dispatch_descriptor(Family::C, {2, 2})},
                 {"BC(2,2)", dispatch_descriptor(Family::BC, {2, 2})},
                 {"BC(1,2)", dispatch_descriptor(Family::BC, {1, 2})}}) {
            auto rep = nonroot_audit(build(d));
            if (!rep.ok()) {
                pass = false;
                detail = name + ": " + rep.violations.front();
            }
        }
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    report(8, "non-isomorphism and non-root exclusion audits", pass, detail);
}

void criterion_9() {
    bool pass = true;
    std::string detail;
    try {
        auto a = build_model(ModelKind::OspOdd, 1, 1);
        auto b = build_model(ModelKind::OspOdd, 2, 1);
        auto c = build_model(ModelKind::OspOdd, 2, 2);
        embed(a, b);
        embed(b, c);
        embed(a, c);  // composition equals the direct inclusion on matrices
        for (const auto& [w, vecs] : a.root_vectors) {
            if (!(c.root_vectors.at(w).front() == vecs.front())) {
                pass = false;
                detail = "composition differs at " + w.str();
            }
        }
        auto s1 = build_model(ModelKind::Sl, 2, 1);
        auto s2 = build_model(ModelKind::Sl, 3, 2);
        embed(s1, s2);
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    report(9, "direct-union embedding chains", pass, detail);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void criterion_10(const char* cli) {
    if (!cli) {
        report(10, "CLI determinism", false, "no CLI path given");
        return;
    }
    bool pass = true;
    std::string detail;
    std::string base = "/tmp/lfrs_acceptance";
    for (int run = 0; run < 2; ++run) {
        std::string dir = base + std::to_string(run);
        std::string cmd = std::string("mkdir -p ") + dir + " && cd " + dir + " && " + cli +
                          " build --family B --ranks 1,1 --out r.json && " + cli +
                          " chevalley r.json --out n.json && " + cli +
                          " realize --kind osp-odd --I 1 --J 1 --out m.json && " + cli +
                          " extract m.json --out n2.json && " + cli +
                          " chevalley m.json --out n3.json && " + cli +
                          " compare n2.json n3.json --quiet";
        if (std::system(cmd.c_str()) != 0) {
            pass = false;
            detail = "pipeline run " + std::to_string(run) + " failed";
        }
    }
    if (pass) {
        for (const char* f : {"r.json", "n.json", "m.json", "n2.json", "n3.json"}) {
            if (slurp(base + "0/" + f) != slurp(base + "1/" + f) ||
                slurp(base + "0/" + f).empty()) {
                pass = false;
                detail = std::string("outputs differ for ") + f;
            }
        }
    }
    report(10, "CLI determinism: byte-identical canonical JSON", pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
    criterion_1();
    criteria_2_and_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10(argc > 1 ? argv[1] : nullptr);
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures;
}
