#include "lfrs/chevalley.hpp"

#include <algorithm>
#include <functional>

namespace lfrs {

namespace {

Rat rat_pow(const Rat& base, const Int& e) {
    if (base == 0) throw std::invalid_argument("rat_pow: zero base");
    Rat acc(1);
    Int k = e < 0 ? Int(-e) : e;
    Rat b = e < 0 ? Rat(1) / base : base;
    for (Int i = 0; i < k; ++i) acc *= b;
    return acc;
}

int pow_sign(int exponent_parity_product) { return exponent_parity_product % 2 ? -1 : 1; }

}  // namespace

TotalOrder TotalOrder::symbol_order(const std::vector<BasisSymbol>& symbols) {
    std::vector<LatticeVector> basis;
    basis.reserve(symbols.size());
    for (const auto& s : symbols) basis.push_back(LatticeVector::unit(s));
    return vector_order(std::move(basis), symbols);
}

TotalOrder TotalOrder::vector_order(std::vector<LatticeVector> basis,
                                    std::vector<BasisSymbol> ambient) {
    TotalOrder o;
    o.basis_ = std::move(basis);
    o.ambient_ = std::move(ambient);
    o.solver_.assign(o.ambient_.size(), RatVec(o.basis_.size(), Rat(0)));
    for (std::size_t j = 0; j < o.basis_.size(); ++j) {
        RatVec col = dense_coords(o.basis_[j], o.ambient_);
        for (std::size_t i = 0; i < o.ambient_.size(); ++i) o.solver_[i][j] = col[i];
    }
    if (o.basis_.size() == o.ambient_.size()) {
        auto inv = inverse(o.solver_);
        if (inv) o.inverse_ = std::move(*inv);
    }
    return o;
}

TotalOrder TotalOrder::span_order(const RootSupersystem& r) {
    RowSpan span(r.basis().size());
    std::vector<RatVec> rows;
    for (const auto& root : r.roots()) {
        RatVec dense = dense_coords(root, r.basis());
        if (span.add(dense)) rows.push_back(dense);
    }
    // re-reduce to the stored echelon rows: positive pivots, sorted by pivot,
    // which reproduces symbol-lex positivity on the span
    RatMat m(rows.size(), RatVec(r.basis().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) m[i] = rows[i];
    rref_in_place(m);
    std::vector<LatticeVector> basis;
    for (const auto& row : m) basis.push_back(from_dense(row, r.basis()));
    return vector_order(std::move(basis), r.basis());
}

bool TotalOrder::positive(const LatticeVector& v) const {
    if (v.is_zero()) return false;
    RatVec coords;
    if (!inverse_.empty()) {
        coords = matvec(inverse_, dense_coords(v, ambient_));
    } else {
        auto solved = solve(solver_, dense_coords(v, ambient_));
        if (!solved) throw std::invalid_argument("TotalOrder: vector outside the ordered span");
        coords = std::move(*solved);
    }
    for (const auto& c : coords) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    throw std::invalid_argument("TotalOrder: zero vector");
}

std::pair<std::vector<LatticeVector>, SignData> order_and_signs(const RootSupersystem& r,
                                                                const TotalOrder& order) {
    SignData signs;
    auto [even, odd] = even_odd_partition(r);
    std::vector<LatticeVector> positives;
    for (const auto& v : r.roots()) {
        if (v.is_zero()) continue;
        int par = odd.count(v) ? 1 : 0;
        signs.parity[v] = par;
        bool pos = order.positive(v);
        signs.sigma[v] = (!pos && par == 1) ? -1 : 1;
        if (pos) positives.push_back(v);
    }
    std::sort(positives.begin(), positives.end(),
              [&](const LatticeVector& a, const LatticeVector& b) { return order.less(a, b); });
    return {positives, signs};
}

PairClass pair_classes(const RootSupersystem& r, const TotalOrder& order) {
    PairClass out;
    auto [positives, signs] = order_and_signs(r, order);
    for (std::size_t i = 0; i < positives.size(); ++i) {
        for (std::size_t j = i; j < positives.size(); ++j) {
            const LatticeVector& a = positives[i];
            const LatticeVector& b = positives[j];
            LatticeVector sum = a + b;
            if (!r.is_root(sum)) continue;
            out.special.push_back({a, b});
            auto it = out.extraspecial.find(sum);
            // positives is sorted ascending, so the first hit is the minimum
            if (it == out.extraspecial.end()) out.extraspecial.emplace(sum, RootPair{a, b});
        }
    }
    return out;
}

Rat r_coefficient(const RootSupersystem& r, const TotalOrder& order, const SignData& signs,
                  const LatticeVector& a, const LatticeVector& b, const Rat& r_scale) {
    (void)order;
    LatticeVector sum = a + b;
    if (sum.is_zero() || !r.is_root(sum)) throw SumNotRoot(a.str() + " + " + b.str());
    int pa = signs.parity.at(a), pb = signs.parity.at(b);
    long p = 0;
    bool both_ns = r.form().eval(a, a) == 0 && r.form().eval(b, b) == 0;
    if (!both_ns) {
        while (r.is_root(b - Rat(p + 1) * a)) ++p;
    }
    Rat series(0);
    for (long i = 0; i <= p; ++i) {
        Rat term = r_scale * r.form().eval(b - Rat(i) * a, a);
        series += Rat(pow_sign(static_cast<int>(i) * pa)) * term;
    }
    int sig = signs.sigma.at(b) * signs.sigma.at(sum) * signs.sigma.at(a) * pow_sign(pa * pb);
    return Rat(sig) * series;
}

std::map<RootPair, Rat> uniform_seeds(const RootSupersystem& r, const TotalOrder& order,
                                      const Rat& value) {
    std::map<RootPair, Rat> seeds;
    for (const auto& [sum, pair] : pair_classes(r, order).extraspecial) seeds[pair] = value;
    return seeds;
}

ConstantsTable constants_from_seeds(const RootSupersystem& r, const TotalOrder& order,
                                    const std::map<RootPair, Rat>& seeds, const Rat& r_scale) {
    if (r.descriptor().family == Family::ALL && r.descriptor().ranks == std::vector<int>{1, 1})
        throw TypeA11Unsupported("the recursion needs one-dimensional root spaces");
    if (r_scale == 0) throw std::invalid_argument("rScale must be nonzero");

    ConstantsTable table;
    table.r_scale = r_scale;
    table.seeds = seeds;
    auto [positives, signs] = order_and_signs(r, order);
    table.signs = signs;
    PairClass pc = pair_classes(r, order);

    auto sigma = [&](const LatticeVector& v) { return Rat(signs.sigma.at(v)); };
    auto par = [&](const LatticeVector& v) { return signs.parity.at(v); };
    auto s_factor = [&](const LatticeVector& x, const LatticeVector& y) {
        return sigma(x) * sigma(x + y);
    };
    auto rc = [&](const LatticeVector& a, const LatticeVector& b) {
        Rat v = r_coefficient(r, order, signs, a, b, r_scale);
        if (v == 0)
            throw InternalInconsistency("r coefficient vanishes for " + a.str() + ", " + b.str());
        return v;
    };

    // Phase 1: special pairs in increasing order of their sum.
    std::map<LatticeVector, std::vector<RootPair>, std::function<bool(const LatticeVector&, const LatticeVector&)>>
        by_sum([&](const LatticeVector& x, const LatticeVector& y) { return order.less(x, y); });
    for (const auto& p : pc.special) by_sum[p.first + p.second].push_back(p);

    std::map<RootPair, Rat> special_n;
    auto special_lookup = [&](const LatticeVector& x, const LatticeVector& y) -> Rat {
        if (order.leq(x, y)) {
            auto it = special_n.find({x, y});
            if (it == special_n.end())
                throw InternalInconsistency("special constant not yet known: " + x.str() + ", " +
                                            y.str());
            return it->second;
        }
        auto it = special_n.find({y, x});
        if (it == special_n.end())
            throw InternalInconsistency("special constant not yet known: " + y.str() + ", " + x.str());
        return Rat(-pow_sign(par(x) * par(y))) * it->second;
    };

    for (const auto& [sum, pairs] : by_sum) {
        const RootPair& ex = pc.extraspecial.at(sum);
        auto seed_it = seeds.find(ex);
        if (seed_it == seeds.end())
            throw SeedMissing("extraspecial pair " + ex.first.str() + ", " + ex.second.str());
        if (seed_it->second == 0)
            throw SeedMissing("zero seed on " + ex.first.str() + ", " + ex.second.str());
        special_n[ex] = seed_it->second;

        for (const auto& p : pairs) {
            if (p == ex) continue;
            const LatticeVector& a = p.first;
            const LatticeVector& b = p.second;
            const LatticeVector& g = ex.first;   // gamma
            const LatticeVector& d = ex.second;  // delta
            bool cond_a = r.is_root(b - g) && !(b - g).is_zero() && r.is_root(d - a) && !(d - a).is_zero();
            bool cond_b = r.is_root(a - g) && !(a - g).is_zero() && r.is_root(d - b) && !(d - b).is_zero();
            Rat n_gd = special_n.at(ex);
            Rat r_gd = rc(g, d);
            Rat value(0);
            if (cond_a) {
                Rat term = Rat(pow_sign(par(a))) * sigma(a + b) * sigma(b - g);
                term *= n_gd / r_gd;
                term *= s_factor(b, -g);
                term *= rc(-g, g - b) / special_lookup(g, b - g);
                term *= s_factor(-d, a);
                term *= special_lookup(a, d - a);
                value += term;
            }
            if (cond_b) {
                Rat term = Rat(-pow_sign(par(b) * par(d) + par(b) * par(g))) * sigma(a + b) *
                           sigma(a - g);
                term *= n_gd / r_gd;
                term *= s_factor(a, -g);
                term *= rc(-g, g - a) / special_lookup(g, a - g);
                term *= s_factor(-d, b);
                term *= special_lookup(b, d - b);
                value += term;
            }
            if (!cond_a && !cond_b)
                throw InternalInconsistency("no recursion branch applies at " + a.str() + ", " +
                                            b.str());
            if (value == 0)
                throw InternalInconsistency("recursion yields zero constant at " + a.str() + ", " +
                                            b.str());
            special_n[p] = value;
        }
    }

    // Phase 2: every ordered pair through identities (i)-(iii).
    std::map<RootPair, Rat> memo;
    std::function<Rat(const LatticeVector&, const LatticeVector&)> resolve =
        [&](const LatticeVector& a, const LatticeVector& b) -> Rat {
        auto it = memo.find({a, b});
        if (it != memo.end()) return it->second;
        Rat value;
        bool pa = order.positive(a), pb = order.positive(b);
        if (pa && pb) {
            value = special_lookup(a, b);
        } else {
            LatticeVector c = -(a + b);
            if (order.positive(c)) {
                if (pa || pb) {
                    // two positives among (a,b,c): rotate, N_{a,b} = s_{a,b} N_{b,c}
                    value = s_factor(a, b) * resolve(b, c);
                } else {
                    // a, b both negative
                    Rat denom = resolve(-a, -b);
                    if (denom == 0)
                        throw InternalInconsistency("zero constant at " + a.str() + ", " + b.str());
                    value = rc(a, b) / denom;
                }
            } else {
                // exactly one positive among (a,b,c); flip the pair
                Rat denom = resolve(-a, -b);
                if (denom == 0)
                    throw InternalInconsistency("zero constant at " + a.str() + ", " + b.str());
                value = rc(a, b) / denom;
            }
        }
        memo[{a, b}] = value;
        return value;
    };

    for (const auto& a : r.roots()) {
        if (a.is_zero()) continue;
        for (const auto& b : r.roots()) {
            if (b.is_zero()) continue;
            LatticeVector sum = a + b;
            if (sum.is_zero() || !r.is_root(sum)) continue;
            table.n[{a, b}] = resolve(a, b);
        }
    }

    IntegralBase base = integral_base(r);
    table.cartan_base = base.roots;
    RatMat solver(r.basis().size(), RatVec(base.roots.size(), Rat(0)));
    for (std::size_t j = 0; j < base.roots.size(); ++j) {
        RatVec col = dense_coords(base.roots[j], r.basis());
        for (std::size_t i = 0; i < r.basis().size(); ++i) solver[i][j] = col[i];
    }
    for (const auto& a : r.roots()) {
        if (a.is_zero()) continue;
        auto coords = solve(solver, dense_coords(a, r.basis()));
        if (!coords) throw InternalInconsistency("root outside its own lattice: " + a.str());
        table.h_coords[a] = *coords;
    }
    return table;
}

LieSuperalgebra assemble_algebra(const RootSupersystem& r, const ConstantsTable& table) {
    std::vector<GradedBasisElement> basis;
    for (std::size_t i = 0; i < table.cartan_base.size(); ++i) {
        GradedBasisElement e;
        e.kind = GradedBasisElement::Kind::Cartan;
        e.cartan_index = static_cast<int>(i);
        e.parity = Parity::Even;
        basis.push_back(e);
    }
    std::vector<LatticeVector> roots = sorted_roots(r);
    std::map<LatticeVector, int> root_index;
    for (const auto& a : roots) {
        GradedBasisElement e;
        e.kind = GradedBasisElement::Kind::Root;
        e.root = a;
        e.parity = table.signs.parity.at(a) ? Parity::Odd : Parity::Even;
        root_index[a] = static_cast<int>(basis.size());
        basis.push_back(e);
    }
    std::size_t n = basis.size();
    std::size_t ell = table.cartan_base.size();
    std::vector<std::vector<SparseVec>> bracket(n, std::vector<SparseVec>(n));
    auto set_entry = [&](std::size_t i, std::size_t j, int k, const Rat& c) {
        if (c != 0) bracket[i][j][k] = c;
    };
    for (std::size_t i = 0; i < ell; ++i) {
        for (const auto& a : roots) {
            std::size_t j = static_cast<std::size_t>(root_index[a]);
            Rat act = table.r_scale * r.form().eval(a, table.cartan_base[i]);
            set_entry(i, j, static_cast<int>(j), act);
            set_entry(j, i, static_cast<int>(j), -act);
        }
    }
    for (const auto& a : roots) {
        std::size_t i = static_cast<std::size_t>(root_index[a]);
        for (const auto& b : roots) {
            std::size_t j = static_cast<std::size_t>(root_index[b]);
            LatticeVector sum = a + b;
            if (sum.is_zero()) {
                const RatVec& coords = table.h_coords.at(a);
                Rat sig(table.signs.sigma.at(a));
                for (std::size_t k = 0; k < ell; ++k) set_entry(i, j, static_cast<int>(k), sig * coords[k]);
            } else if (r.is_root(sum)) {
                set_entry(i, j, root_index[sum], table.n_of(a, b));
            }
        }
    }
    RatMat gram(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t j = 0; j < ell; ++j)
            gram[i][j] = table.r_scale * table.r_scale *
                         r.form().eval(table.cartan_base[i], table.cartan_base[j]);
    for (const auto& a : roots) {
        std::size_t i = static_cast<std::size_t>(root_index[a]);
        std::size_t j = static_cast<std::size_t>(root_index[-a]);
        gram[i][j] = Rat(table.signs.sigma.at(a)) * table.r_scale;
    }
    LieSuperalgebra alg = LieSuperalgebra::from_table(std::move(basis), std::move(bracket), gram);
    std::map<LatticeVector, std::vector<int>> grading;
    for (const auto& [a, idx] : root_index) grading[a].push_back(idx);
    alg.set_grading(std::move(grading));
    return alg;
}

CheckReport verify_constants(const RootSupersystem& r, const TotalOrder& order,
                             const ConstantsTable& table) {
    CheckReport rep;
    const SignData& signs = table.signs;

    // integer indexing of the nonzero roots for the hot loops
    std::vector<LatticeVector> nonzero = sorted_roots(r);
    std::size_t nr = nonzero.size();
    std::map<LatticeVector, int> id;
    for (std::size_t i = 0; i < nr; ++i) id[nonzero[i]] = static_cast<int>(i);
    std::vector<int> neg(nr), sig(nr), par(nr);
    for (std::size_t i = 0; i < nr; ++i) {
        neg[i] = id.at(-nonzero[i]);
        sig[i] = signs.sigma.at(nonzero[i]);
        par[i] = signs.parity.at(nonzero[i]);
    }
    std::vector<std::vector<int>> sum(nr, std::vector<int>(nr, -1));  // -1 none, -2 zero
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nr; ++j) {
            LatticeVector s = nonzero[i] + nonzero[j];
            if (s.is_zero())
                sum[i][j] = -2;
            else if (r.is_root(s))
                sum[i][j] = id.at(s);
        }
    std::vector<std::vector<Rat>> n(nr, std::vector<Rat>(nr, Rat(0)));
    for (const auto& [pair, value] : table.n) {
        auto ia = id.find(pair.first);
        auto ib = id.find(pair.second);
        if (ia == id.end() || ib == id.end()) {
            rep.violations.push_back("constant on a non-root pair");
            continue;
        }
        n[static_cast<std::size_t>(ia->second)][static_cast<std::size_t>(ib->second)] = value;
    }

    for (std::size_t a = 0; a < nr; ++a) {
        if (sig[neg[a]] != pow_sign(par[a]) * sig[a])
            rep.violations.push_back("sigma identity fails at " + nonzero[a].str());
    }
    for (std::size_t a = 0; a < nr; ++a) {
        for (std::size_t b = 0; b < nr; ++b) {
            int s = sum[a][b];
            bool sum_root = s >= 0;
            const Rat& nab = n[a][b];
            if (sum_root && nab == 0)
                rep.violations.push_back("vanishing constant at " + nonzero[a].str() + ", " +
                                         nonzero[b].str());
            if (!sum_root && nab != 0)
                rep.violations.push_back("stray constant at " + nonzero[a].str() + ", " +
                                         nonzero[b].str());
            if (!sum_root) continue;
            std::size_t su = static_cast<std::size_t>(s);
            // (i)
            if (nab != Rat(-pow_sign(par[a] * par[b])) * n[b][a])
                rep.violations.push_back("(i) fails at " + nonzero[a].str() + ", " +
                                         nonzero[b].str());
            // (ii)
            if (nab != Rat(sig[a] * sig[su]) * n[b][static_cast<std::size_t>(neg[su])])
                rep.violations.push_back("(ii) fails at " + nonzero[a].str() + ", " +
                                         nonzero[b].str());
            // (iii)
            Rat rcoef = r_coefficient(r, order, signs, nonzero[a], nonzero[b], table.r_scale);
            if (rcoef == 0)
                rep.violations.push_back("r coefficient vanishes at " + nonzero[a].str() + ", " +
                                         nonzero[b].str());
            if (nab * n[static_cast<std::size_t>(neg[a])][static_cast<std::size_t>(neg[b])] != rcoef)
                rep.violations.push_back("(iii) fails at " + nonzero[a].str() + ", " +
                                         nonzero[b].str());
        }
    }
    // (iv): zero-sum quadruples, no two roots opposite
    for (std::size_t a = 0; a < nr; ++a) {
        for (std::size_t b = 0; b < nr; ++b) {
            if (sum[a][b] == -2) continue;
            for (std::size_t c = 0; c < nr; ++c) {
                if (sum[a][c] == -2 || sum[b][c] == -2) continue;
                LatticeVector dvec = -(nonzero[a] + nonzero[b] + nonzero[c]);
                auto it = id.find(dvec);
                if (it == id.end()) continue;
                std::size_t d = static_cast<std::size_t>(it->second);
                auto prod = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t w) -> Rat {
                    if (sum[x][y] < 0 || sum[z][w] < 0) return Rat(0);
                    if (n[x][y] == 0 || n[z][w] == 0) return Rat(0);
                    return Rat(sig[static_cast<std::size_t>(sum[x][y])]) * n[x][y] * n[z][w];
                };
                Rat total = Rat(pow_sign(par[a] * par[c])) * prod(a, b, c, d) +
                            Rat(pow_sign(par[a] * par[b])) * prod(b, c, a, d) +
                            Rat(pow_sign(par[b] * par[c])) * prod(c, a, b, d);
                if (total != 0)
                    rep.violations.push_back("(iv) fails at " + nonzero[a].str() + ", " +
                                             nonzero[b].str() + ", " + nonzero[c].str() + ", " +
                                             dvec.str());
            }
        }
    }
    return rep;
}

RatMat diagonal_automorphism(const RootSupersystem& r, const ConstantsTable& table,
                             const LieSuperalgebra& algebra, const std::vector<Rat>& phi_on_base) {
    if (phi_on_base.size() != table.cartan_base.size())
        throw std::invalid_argument("diagonal_automorphism: one value per base root");
    for (const auto& v : phi_on_base)
        if (v == 0) throw std::invalid_argument("diagonal_automorphism: zero character value");
    (void)r;
    RatMat m = identity_mat(algebra.dim());
    for (std::size_t i = 0; i < algebra.dim(); ++i) {
        const auto& elem = algebra.basis()[i];
        if (elem.kind != GradedBasisElement::Kind::Root) continue;
        const RatVec& coords = table.h_coords.at(elem.root);
        Rat scale(1);
        for (std::size_t j = 0; j < coords.size(); ++j) {
            if (!is_integer(coords[j]))
                throw std::invalid_argument("diagonal_automorphism: non-integral base coordinates");
            scale *= rat_pow(phi_on_base[j], numerator(coords[j]));
        }
        m[i][i] = scale;
    }
    return m;
}

TotalOrder transported_order(const LatticeIso& f, const RootSupersystem& source,
                             const RootSupersystem& target) {
    TotalOrder src = TotalOrder::span_order(source);
    std::vector<LatticeVector> images;
    for (const auto& b : src.basis()) images.push_back(f.apply(b));
    return TotalOrder::vector_order(std::move(images), target.basis());
}

}  // namespace lfrs
