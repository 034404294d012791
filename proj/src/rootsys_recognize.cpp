#include "lfrs/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace lfrs {

namespace {

Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

struct IntCoords {
    std::vector<BasisSymbol> basis;
    Int scale{1};
    explicit IntCoords(const RootSupersystem& r) : basis(r.basis()) {
        for (const auto& root : r.roots())
            for (const auto& [s, c] : root.coords()) scale = lcm(scale, denominator(c));
    }
    std::vector<Int> row(const LatticeVector& v) const {
        RatVec dense = dense_coords(v, basis);
        std::vector<Int> out(dense.size());
        for (std::size_t i = 0; i < dense.size(); ++i) out[i] = numerator(dense[i] * Rat(scale));
        return out;
    }
};

// Fingerprint of one irreducible component of a locally finite root system:
// candidate (plain family, index-set size) readings, coincidences included.
struct PlainReading {
    Family family;
    int size;  // |T|
};

std::vector<PlainReading> classify_plain_component(const RootSupersystem& r,
                                                   const std::vector<LatticeVector>& comp) {
    std::vector<PlainReading> out;
    if (comp.empty()) return out;
    RowSpan span(r.basis().size());
    for (const auto& v : comp) span.add(dense_coords(v, r.basis()));
    int rank = static_cast<int>(span.rank());
    int n = static_cast<int>(comp.size());
    int sign = r.form().eval(comp.front(), comp.front()) < 0 ? -1 : 1;
    std::map<Rat, int> by_norm;
    for (const auto& v : comp) ++by_norm[Rat(sign) * r.form().eval(v, v)];
    if (by_norm.size() == 1) {
        if (n == rank * (rank + 1)) out.push_back({Family::A, rank + 1});
        if (n == 2 * rank * (rank - 1)) out.push_back({Family::D, rank});
        return out;
    }
    Rat small = by_norm.begin()->first;
    Rat big = by_norm.rbegin()->first;
    if (by_norm.size() == 2 && big == Rat(4) * small && rank == 1) {
        out.push_back({Family::BC, 1});
        return out;
    }
    if (by_norm.size() == 3 && big == Rat(4) * small) {
        out.push_back({Family::BC, rank});
        return out;
    }
    if (by_norm.size() == 2 && big == Rat(2) * small) {
        int shorts = by_norm.begin()->second;
        if (shorts == 2 * rank) out.push_back({Family::B, rank});
        if (shorts == 2 * rank * (rank - 1)) out.push_back({Family::C, rank});
        return out;
    }
    if (by_norm.size() == 2 && big == Rat(3) * small && rank == 2 && n == 12) {
        out.push_back({Family::G12, 2});  // G2 marker, only valid inside G(1,2)
        return out;
    }
    return out;
}

bool component_negative(const RootSupersystem& r, const std::vector<LatticeVector>& comp) {
    return r.form().eval(comp.front(), comp.front()) < 0;
}

}  // namespace

LatticeIso::LatticeIso(std::vector<LatticeVector> domain_base, std::vector<LatticeVector> images,
                       Rat k, std::vector<BasisSymbol> domain_symbols)
    : base_(std::move(domain_base)), images_(std::move(images)), k_(std::move(k)),
      symbols_(std::move(domain_symbols)) {
    // columns of the solver matrix are the dense base vectors
    coord_solver_.assign(symbols_.size(), RatVec(base_.size(), Rat(0)));
    for (std::size_t j = 0; j < base_.size(); ++j) {
        RatVec col = dense_coords(base_[j], symbols_);
        for (std::size_t i = 0; i < symbols_.size(); ++i) coord_solver_[i][j] = col[i];
    }
}

LatticeVector LatticeIso::apply(const LatticeVector& v) const {
    auto x = solve(coord_solver_, dense_coords(v, symbols_));
    if (!x) throw std::invalid_argument("LatticeIso: vector outside the domain lattice");
    LatticeVector out;
    for (std::size_t i = 0; i < base_.size(); ++i) out += (*x)[i] * images_[i];
    return out;
}

std::optional<LatticeIso> is_isomorphic(const RootSupersystem& r, const RootSupersystem& s) {
    if (r.roots().size() != s.roots().size()) return std::nullopt;
    if (r.real_roots().size() != s.real_roots().size()) return std::nullopt;
    if (r.nonsingular_roots().size() != s.nonsingular_roots().size()) return std::nullopt;

    IntegralBase base = integral_base(r);
    std::vector<LatticeVector> pi = base.roots;
    // lead with a real root so the scalar k is pinned at depth 0
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (r.form().eval(pi[i], pi[i]) != 0) {
            std::swap(pi[0], pi[i]);
            break;
        }
    }
    if (pi.empty() || r.form().eval(pi[0], pi[0]) == 0) return std::nullopt;

    // integer coordinates of every R-root over pi
    RatMat solver(r.basis().size(), RatVec(pi.size(), Rat(0)));
    for (std::size_t j = 0; j < pi.size(); ++j) {
        RatVec col = dense_coords(pi[j], r.basis());
        for (std::size_t i = 0; i < r.basis().size(); ++i) solver[i][j] = col[i];
    }
    std::vector<RatVec> root_coords;
    std::vector<LatticeVector> r_roots(r.roots().begin(), r.roots().end());
    for (const auto& v : r_roots) {
        auto x = solve(solver, dense_coords(v, r.basis()));
        if (!x) return std::nullopt;
        root_coords.push_back(*x);
    }

    IntCoords s_ic(s);
    IntLattice s_full(s.basis().size());
    for (const auto& v : s.roots()) s_full.add(s_ic.row(v));

    std::vector<LatticeVector> s_candidates = sorted_roots(s);
    std::vector<LatticeVector> images;
    Rat k(0);

    std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
        if (depth == pi.size()) {
            IntLattice img_lat(s.basis().size());
            for (const auto& im : images) img_lat.add(s_ic.row(im));
            if (img_lat.rank() != s_full.rank() || img_lat.covolume() != s_full.covolume())
                return false;
            for (const auto& coords : root_coords) {
                LatticeVector image;
                for (std::size_t j = 0; j < pi.size(); ++j) image += coords[j] * images[j];
                if (!s.is_root(image)) return false;
            }
            return true;
        }
        for (const auto& cand : s_candidates) {
            if (depth == 0) {
                Rat cc = s.form().eval(cand, cand);
                if (cc == 0) continue;
                k = cc / r.form().eval(pi[0], pi[0]);
            }
            bool ok = true;
            for (std::size_t j = 0; ok && j <= depth; ++j) {
                const LatticeVector& other = (j == depth) ? cand : images[j];
                if (s.form().eval(cand, other) != k * r.form().eval(pi[depth], pi[j])) ok = false;
            }
            if (!ok) continue;
            images.push_back(cand);
            if (dfs(depth + 1)) return true;
            images.pop_back();
        }
        return false;
    };

    if (!dfs(0)) return std::nullopt;
    return LatticeIso(pi, images, k, r.basis());
}

namespace {

bool verifies_as(const TypeDescriptor& cand, const RootSupersystem& r) {
    try {
        return is_isomorphic(build(cand), r).has_value();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

TypeDescriptor recognize(const RootSupersystem& r) {
    if (!is_irreducible(r)) throw Unrecognized("input is not irreducible");
    auto comps = connected_components(r, r.real_roots());
    std::vector<std::vector<PlainReading>> readings;
    std::vector<bool> negative;
    for (const auto& comp : comps) {
        readings.push_back(classify_plain_component(r, comp));
        negative.push_back(component_negative(r, comp));
        if (readings.back().empty()) throw Unrecognized("unclassifiable real component");
    }

    std::vector<TypeDescriptor> candidates;
    auto add = [&](Family f, std::vector<int> ranks, Rat lambda = Rat(0)) {
        candidates.push_back(TypeDescriptor{f, std::move(ranks), std::move(lambda)});
    };

    if (r.nonsingular_roots().empty()) {
        if (comps.size() != 1) throw Unrecognized("reducible real part");
        for (const auto& reading : readings[0]) {
            switch (reading.family) {
                case Family::A: add(Family::A, {reading.size}); break;
                case Family::B: add(Family::B, {reading.size}); break;
                case Family::C: add(Family::C, {reading.size}); break;
                case Family::D: add(Family::D, {reading.size}); break;
                case Family::BC:
                    if (negative[0])
                        add(Family::B0T, {0, reading.size});
                    else
                        add(Family::BC, {reading.size});
                    break;
                default: break;
            }
        }
    } else {
        // real vs imaginary: is a nonsingular root in the rational real span?
        RowSpan real_span(r.basis().size());
        for (const auto& v : r.real_roots()) real_span.add(dense_coords(v, r.basis()));
        bool imaginary = !real_span.contains(dense_coords(r.nonsingular_roots().front(), r.basis()));

        if (imaginary) {
            if (comps.size() == 1) {
                for (const auto& reading : readings[0]) {
                    if (reading.family == Family::A) add(Family::DotA0T, {reading.size});
                    if (reading.family == Family::C) add(Family::DotC0T, {reading.size});
                    if (reading.family == Family::B && reading.size == 1) add(Family::DotA0T, {2});
                }
            } else if (comps.size() == 2) {
                for (const auto& r0 : readings[0]) {
                    for (const auto& r1 : readings[1]) {
                        if (r0.family == Family::A && r1.family == Family::A) {
                            add(Family::DotATT, {std::min(r0.size, r1.size), std::max(r0.size, r1.size)});
                        }
                    }
                }
            }
        } else {
            auto has = [&](std::size_t i, Family f, int size) {
                for (const auto& rd : readings[i])
                    if (rd.family == f && rd.size == size) return true;
                return false;
            };
            auto sizes_of = [&](std::size_t i, Family f) {
                std::vector<int> out;
                for (const auto& rd : readings[i])
                    if (rd.family == f) out.push_back(rd.size);
                return out;
            };
            if (comps.size() == 2) {
                for (int swap = 0; swap < 2; ++swap) {
                    std::size_t x = swap, y = 1 - swap;
                    bool a1_x = has(x, Family::A, 2) || has(x, Family::B, 1) || has(x, Family::C, 1);
                    // rows with a rank-one first component
                    if (a1_x)
                        for (int n : sizes_of(y, Family::BC)) add(Family::B1T, {1, n});
                    if (has(x, Family::BC, 1))
                        for (int m : sizes_of(y, Family::B))
                            if (m >= 2) add(Family::BT1, {m, 1});
                    if (a1_x)
                        for (int n : sizes_of(y, Family::C))
                            if (n >= 2) add(Family::C1T, {1, n});
                    if (a1_x && has(y, Family::B, 3)) add(Family::AB13, {1, 3});
                    if (has(x, Family::BC, 1) && has(y, Family::G12, 2)) add(Family::G12, {1, 2});
                    if (a1_x)
                        for (int n : sizes_of(y, Family::D))
                            if (n >= 3) add(Family::D1T, {1, n});
                    // two large components
                    for (int m : sizes_of(x, Family::B))
                        for (int n : sizes_of(y, Family::BC))
                            if (m >= 2 && n >= 2) add(Family::BTT, {m, n});
                    for (int m : sizes_of(x, Family::D))
                        for (int n : sizes_of(y, Family::C))
                            if (m >= 3 && n >= 2) add(Family::DTT, {m, n});
                }
                // symmetric rows, ascending canonical order
                {
                    auto cx = sizes_of(0, Family::C), cy = sizes_of(1, Family::C);
                    for (int m : cx)
                        for (int n : cy)
                            if (m >= 2 && n >= 2)
                                add(Family::CTT, {std::min(m, n), std::max(m, n)});
                    auto bx = sizes_of(0, Family::BC), by = sizes_of(1, Family::BC);
                    for (int m : bx)
                        for (int n : by) {
                            int lo = std::min(m, n), hi = std::max(m, n);
                            if ((lo == 1 && hi == 1) || (lo == 1 && hi >= 2) || lo >= 2)
                                add(Family::BCTT, {lo, hi});
                        }
                    auto ax = sizes_of(0, Family::A), ay = sizes_of(1, Family::A);
                    for (int m : ax)
                        for (int n : ay)
                            if (m == n && m >= 2) add(Family::ALL, {m - 1, n - 1});
                }
            } else if (comps.size() == 3) {
                bool all_rank1 = true;
                for (std::size_t i = 0; i < 3; ++i)
                    if (!(has(i, Family::A, 2))) all_rank1 = false;
                if (all_rank1) {
                    // D(2,1,lambda): norms proportional to (1, lambda, -1-lambda)
                    std::vector<Rat> norms;
                    for (const auto& comp : comps) norms.push_back(r.form().eval(comp.front(), comp.front()));
                    int idx[3] = {0, 1, 2};
                    std::sort(idx, idx + 3);
                    do {
                        Rat n1 = norms[idx[0]], n2 = norms[idx[1]], n3 = norms[idx[2]];
                        if (n1 == 0) continue;
                        Rat lambda = n2 / n1;
                        if (n3 / n1 == Rat(-1) - lambda && lambda != 0 && lambda != -1)
                            add(Family::D21L, {2, 1}, lambda);
                    } while (std::next_permutation(idx, idx + 3));
                }
                for (int perm = 0; perm < 3; ++perm) {
                    std::size_t big = static_cast<std::size_t>(perm);
                    std::size_t o1 = (big + 1) % 3, o2 = (big + 2) % 3;
                    if (has(o1, Family::A, 2) && has(o2, Family::A, 2))
                        for (int n : sizes_of(big, Family::C))
                            if (n >= 2) add(Family::D2T, {2, n});
                }
            }
        }
    }

    // dedupe, keep deterministic candidate order, verify explicitly
    std::vector<TypeDescriptor> seen;
    for (const auto& cand : candidates) {
        bool dup = false;
        for (const auto& old : seen)
            if (old == cand) dup = true;
        if (dup) continue;
        seen.push_back(cand);
        if (verifies_as(cand, r)) return cand;
    }
    throw Unrecognized("no classification row matches");
}

}  // namespace lfrs
