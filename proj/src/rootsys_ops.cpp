#include "lfrs/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace lfrs {

namespace {

Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

Rat coord_weight(const LatticeVector& v) {
    Rat w(0);
    for (const auto& [s, c] : v.coords()) w += abs_rat(c);
    return w;
}

// Integer rows for lattice work: clear denominators with one global scale.
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
        for (std::size_t i = 0; i < dense.size(); ++i) {
            Rat x = dense[i] * Rat(scale);
            out[i] = numerator(x);
        }
        return out;
    }
};

}  // namespace

std::vector<LatticeVector> sorted_roots(const RootSupersystem& r, bool include_zero) {
    std::vector<LatticeVector> out;
    for (const auto& v : r.roots()) {
        if (v.is_zero() && !include_zero) continue;
        out.push_back(v);
    }
    std::sort(out.begin(), out.end(), [](const LatticeVector& a, const LatticeVector& b) {
        Rat wa = coord_weight(a), wb = coord_weight(b);
        if (wa != wb) return wa < wb;
        return a < b;
    });
    return out;
}

Rat form_eval(const RootSupersystem& r, const LatticeVector& a, const LatticeVector& b) {
    return r.form().eval(a, b);
}

RootClass classify_root(const RootSupersystem& r, const LatticeVector& a) {
    if (!r.is_root(a)) throw NotARoot(a.str());
    if (a.is_zero()) return RootClass::Zero;
    return r.form().eval(a, a) != 0 ? RootClass::Real : RootClass::Nonsingular;
}

LatticeVector reflect(const RootSupersystem& r, const LatticeVector& alpha, const LatticeVector& beta) {
    Rat aa = r.form().eval(alpha, alpha);
    if (aa == 0) throw NotReflectable(alpha.str());
    return beta - (Rat(2) * r.form().eval(beta, alpha) / aa) * alpha;
}

std::set<LatticeVector> weyl_orbit(const RootSupersystem& r, const LatticeVector& v) {
    std::set<LatticeVector> seen{v};
    std::deque<LatticeVector> work{v};
    while (!work.empty()) {
        LatticeVector x = work.front();
        work.pop_front();
        for (const auto& a : r.real_roots()) {
            LatticeVector y = reflect(r, a, x);
            if (seen.insert(y).second) work.push_back(y);
        }
    }
    return seen;
}

RootString root_string(const RootSupersystem& r, const LatticeVector& alpha, const LatticeVector& beta) {
    Rat aa = r.form().eval(alpha, alpha);
    if (aa == 0) throw NotReflectable(alpha.str());
    if (!r.is_root(beta)) throw NotARoot(beta.str());
    Rat ba = r.form().eval(beta, alpha);
    // |(beta + k alpha, beta + k alpha)| exceeds every root norm once |k| is
    // past this bound, so the scan window below is exhaustive.
    Rat max_norm(0);
    for (const auto& root : r.roots()) max_norm = std::max(max_norm, abs_rat(r.form().eval(root, root)));
    Rat bound = (Rat(2) * abs_rat(ba) + abs_rat(r.form().eval(beta, beta)) + max_norm) / abs_rat(aa) + 2;
    long window = static_cast<long>(numerator(bound) / denominator(bound)) + 1;

    std::set<long> members;
    for (long k = -window; k <= window; ++k) {
        if (r.is_root(beta + Rat(k) * alpha)) members.insert(k);
    }
    long p = 0, q = 0;
    while (members.count(-(p + 1))) ++p;
    while (members.count(q + 1)) ++q;
    if (static_cast<std::size_t>(p + q + 1) != members.size())
        throw BrokenString("string through " + beta.str() + " in direction " + alpha.str() +
                           " is not contiguous");
    Rat integrality = Rat(2) * ba / aa;
    if (!is_integer(integrality) || Rat(p - q) != integrality)
        throw BrokenString("string through " + beta.str() + ": p - q != 2(b,a)/(a,a)");
    return RootString{static_cast<int>(p), static_cast<int>(q)};
}

AxiomReport check_axioms(const RootSupersystem& r) {
    AxiomReport rep;
    const auto& roots = r.roots();
    if (!roots.count(LatticeVector{})) rep.violations.push_back("S1: 0 is not a root");
    if (roots.size() <= 1) rep.violations.push_back("S1: root span is trivial");
    for (const auto& a : roots)
        if (!roots.count(-a)) rep.violations.push_back("S2: missing -(" + a.str() + ")");
    for (const auto& a : r.real_roots()) {
        Rat aa = r.form().eval(a, a);
        for (const auto& b : roots) {
            Rat val = Rat(2) * r.form().eval(a, b) / aa;
            if (!is_integer(val))
                rep.violations.push_back("S3: 2(" + a.str() + "," + b.str() + ")/(a,a) = " +
                                         rat_str(val));
        }
    }
    for (const auto& a : r.real_roots()) {
        for (const auto& b : roots) {
            try {
                root_string(r, a, b);
            } catch (const BrokenString& e) {
                rep.violations.push_back(std::string("S4: ") + e.what());
            }
        }
    }
    for (const auto& a : r.nonsingular_roots()) {
        for (const auto& b : roots) {
            if (r.form().eval(a, b) == 0) continue;
            if (!roots.count(b + a) && !roots.count(b - a))
                rep.violations.push_back("S5: {b-a, b+a} misses R for a=" + a.str() +
                                         ", b=" + b.str());
        }
    }
    // nondegeneracy of the form on the root span
    std::vector<LatticeVector> all(roots.begin(), roots.end());
    RowSpan span(r.basis().size());
    std::vector<LatticeVector> span_basis;
    for (const auto& v : all)
        if (span.add(dense_coords(v, r.basis()))) span_basis.push_back(v);
    RatMat gram(span_basis.size(), RatVec(span_basis.size()));
    for (std::size_t i = 0; i < span_basis.size(); ++i)
        for (std::size_t j = 0; j < span_basis.size(); ++j)
            gram[i][j] = r.form().eval(span_basis[i], span_basis[j]);
    if (mat_rank(gram) != span_basis.size())
        rep.violations.push_back("form is degenerate on the root span");
    return rep;
}

std::vector<std::vector<LatticeVector>> connected_components(const RootSupersystem& r,
                                                             const std::vector<LatticeVector>& roots) {
    std::vector<std::vector<LatticeVector>> comps;
    std::set<LatticeVector> left(roots.begin(), roots.end());
    while (!left.empty()) {
        std::deque<LatticeVector> work{*left.begin()};
        std::vector<LatticeVector> comp;
        left.erase(left.begin());
        while (!work.empty()) {
            LatticeVector v = work.front();
            work.pop_front();
            comp.push_back(v);
            for (auto it = left.begin(); it != left.end();) {
                if (r.form().eval(v, *it) != 0) {
                    work.push_back(*it);
                    it = left.erase(it);
                } else {
                    ++it;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_irreducible(const RootSupersystem& r) {
    if (r.real_roots().empty()) return false;
    std::vector<LatticeVector> nonzero = r.real_roots();
    nonzero.insert(nonzero.end(), r.nonsingular_roots().begin(), r.nonsingular_roots().end());
    return connected_components(r, nonzero).size() == 1;
}

std::pair<std::set<LatticeVector>, std::set<LatticeVector>> even_odd_partition(
    const RootSupersystem& r) {
    std::set<LatticeVector> even, odd;
    even.insert(LatticeVector{});
    std::set<LatticeVector> odd_reals;
    if (r.descriptor().family == Family::BCTT) {
        // odd real roots are the short roots of the second (delta-side) component
        auto comps = connected_components(r, r.real_roots());
        for (const auto& comp : comps) {
            bool delta_side = false;
            for (const auto& [s, c] : comp.front().coords())
                if (s.kind == SymbolKind::Delta) delta_side = true;
            if (!delta_side) continue;
            auto lengths = length_classes(r, comp);
            odd_reals.insert(lengths.short_roots.begin(), lengths.short_roots.end());
        }
    } else {
        for (const auto& a : r.real_roots())
            if (r.is_root(Rat(2) * a)) odd_reals.insert(a);
    }
    for (const auto& a : r.real_roots()) {
        if (odd_reals.count(a))
            odd.insert(a);
        else
            even.insert(a);
    }
    for (const auto& a : r.nonsingular_roots()) odd.insert(a);
    return {even, odd};
}

LengthClasses length_classes(const RootSupersystem& r, const std::vector<LatticeVector>& component) {
    LengthClasses out;
    if (component.empty()) return out;
    int sign = r.form().eval(component.front(), component.front()) < 0 ? -1 : 1;
    Rat min_norm;
    bool first = true;
    std::map<LatticeVector, Rat> norms;
    for (const auto& a : component) {
        Rat n = Rat(sign) * r.form().eval(a, a);
        if (n <= 0) throw std::invalid_argument("length_classes: component has mixed norm signs");
        norms[a] = n;
        if (first || n < min_norm) {
            min_norm = n;
            first = false;
        }
    }
    std::set<LatticeVector> comp_set(component.begin(), component.end());
    for (const auto& [a, n] : norms)
        if (n == min_norm) out.short_roots.insert(a);
    for (const auto& a : component) {
        if (out.short_roots.count(a)) continue;
        LatticeVector half = Rat(1, 2) * a;
        if (out.short_roots.count(half))
            out.extralong_roots.insert(a);
        else
            out.long_roots.insert(a);
    }
    return out;
}

std::size_t root_lattice_rank(const RootSupersystem& r) {
    IntCoords ic(r);
    IntLattice lat(r.basis().size());
    for (const auto& v : r.roots()) lat.add(ic.row(v));
    return lat.rank();
}

namespace {

bool partial_sum_holds(const RootSupersystem& r, const std::vector<LatticeVector>& base) {
    std::set<LatticeVector> reach;
    std::deque<LatticeVector> work;
    for (const auto& p : base) {
        for (const LatticeVector& s : {p, -p}) {
            if (r.is_root(s) && !s.is_zero() && reach.insert(s).second) work.push_back(s);
        }
    }
    while (!work.empty()) {
        LatticeVector v = work.front();
        work.pop_front();
        for (const auto& p : base) {
            for (const LatticeVector& step : {p, -p}) {
                LatticeVector w = v + step;
                if (!w.is_zero() && r.is_root(w) && reach.insert(w).second) work.push_back(w);
            }
        }
    }
    for (const auto& v : r.roots())
        if (!v.is_zero() && !reach.count(v)) return false;
    return true;
}

}  // namespace

IntegralBase integral_base(const RootSupersystem& r) {
    IntCoords ic(r);
    IntLattice full(r.basis().size());
    for (const auto& v : r.roots()) full.add(ic.row(v));
    const std::size_t dim = full.rank();
    const Int covol = full.covolume();
    std::vector<LatticeVector> candidates = sorted_roots(r);
    bool skip_partial_sum = r.descriptor().family == Family::ALL;

    std::vector<LatticeVector> chosen;
    std::optional<std::vector<LatticeVector>> fallback;
    long budget = 500000;

    std::function<bool(std::size_t, const IntLattice&)> dfs =
        [&](std::size_t start, const IntLattice& partial) -> bool {
        if (--budget < 0) return false;
        if (chosen.size() == dim) {
            if (partial.covolume() != covol) return false;
            if (skip_partial_sum) {
                fallback = chosen;
                return true;
            }
            if (partial_sum_holds(r, chosen)) return true;
            if (!fallback) fallback = chosen;
            return false;
        }
        for (std::size_t i = start; i < candidates.size(); ++i) {
            IntLattice next = partial;
            next.add(ic.row(candidates[i]));
            if (next.rank() != chosen.size() + 1) continue;
            chosen.push_back(candidates[i]);
            if (dfs(i + 1, next)) return true;
            chosen.pop_back();
            if (budget < 0) return false;
        }
        return false;
    };

    IntLattice empty(r.basis().size());
    if (dfs(0, empty)) {
        if (skip_partial_sum) return IntegralBase{*fallback, false};
        return IntegralBase{chosen, true};
    }
    if (fallback) return IntegralBase{*fallback, false};
    throw NoBaseFound(r.descriptor().str());
}

std::vector<ChainLink> direct_union_chain(Family family, const std::vector<std::vector<int>>& rank_tuples) {
    if (rank_tuples.empty()) throw IncompatibleFamily("empty chain");
    auto letter = [](Family f) -> char {
        switch (f) {
            case Family::B: case Family::B0T: case Family::B1T:
            case Family::BT1: case Family::BTT: return 'B';
            case Family::C: case Family::C1T: case Family::CTT: return 'C';
            case Family::D: case Family::D1T: case Family::D2T: case Family::DTT: return 'D';
            case Family::BC: case Family::BCTT: return 'b';
            case Family::A: case Family::DotA0T: return 'a';
            case Family::DotC0T: return 'c';
            case Family::DotATT: return 't';
            default: return '?';
        }
    };
    char want = letter(family);
    if (want == '?') throw IncompatibleFamily(family_str(family) + " does not form chains");

    std::vector<ChainLink> chain;
    for (const auto& ranks : rank_tuples) {
        TypeDescriptor d = dispatch_descriptor(family, ranks);
        if (letter(d.family) != want)
            throw IncompatibleFamily(d.str() + " is not in the " + family_str(family) + " tower");
        chain.push_back(ChainLink{build(d)});
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const auto& small = chain[i].system;
        const auto& big = chain[i + 1].system;
        if (rank_tuples[i].size() != rank_tuples[i + 1].size())
            throw IncompatibleFamily("rank tuple shapes differ along the chain");
        bool strictly_bigger = false;
        for (std::size_t j = 0; j < rank_tuples[i].size(); ++j) {
            if (rank_tuples[i][j] > rank_tuples[i + 1][j])
                throw IncompatibleFamily("ranks must be nondecreasing along the chain");
            if (rank_tuples[i][j] < rank_tuples[i + 1][j]) strictly_bigger = true;
        }
        if (!strictly_bigger) throw IncompatibleFamily("ranks must grow along the chain");
        for (const auto& v : small.roots())
            if (!big.is_root(v))
                throw IncompatibleFamily("inclusion fails: " + v.str() + " not a root of " +
                                         big.descriptor().str());
        // shared-symbol form agreement
        for (const auto& s : small.basis())
            for (const auto& t : small.basis())
                if (small.form().eval(LatticeVector::unit(s), LatticeVector::unit(t)) !=
                    big.form().eval(LatticeVector::unit(s), LatticeVector::unit(t)))
                    throw IncompatibleFamily("form mismatch on shared symbols");
        // the image is a closed sub-supersystem
        for (const auto& a : small.roots())
            for (const auto& b : small.roots()) {
                LatticeVector sum = a + b;
                if (big.is_root(sum) && !small.is_root(sum))
                    throw IncompatibleFamily("image not closed: " + a.str() + " + " + b.str());
            }
    }
    return chain;
}

NonrootReport nonroot_audit(const RootSupersystem& r) {
    NonrootReport rep;
    Family f = r.descriptor().family;
    if (f != Family::C1T && f != Family::CTT && f != Family::BCTT) {
        rep.violations.push_back("audit applies to C(T,T') and BC(T,T') only");
        return rep;
    }
    int delta_rank = r.descriptor().ranks.size() == 2 ? r.descriptor().ranks[1] : 0;
    if (delta_rank < 2) {
        rep.violations.push_back("audit needs |T'| > 1");
        return rep;
    }
    LatticeVector gamma = LatticeVector::unit(delta(1)) + LatticeVector::unit(delta(2));
    LatticeVector theta1 = LatticeVector::unit(eps(1)) + LatticeVector::unit(delta(1));
    LatticeVector theta2 = LatticeVector::unit(eps(1)) - LatticeVector::unit(delta(1));
    auto fe = [&](const LatticeVector& a, const LatticeVector& b) { return r.form().eval(a, b); };

    if (!r.is_root(gamma)) rep.violations.push_back("gamma is not a root");
    if (!r.is_root(theta1)) rep.violations.push_back("theta1 is not a root");
    if (!r.is_root(theta2)) rep.violations.push_back("theta2 is not a root");
    if (fe(theta1 + theta2, gamma) != 0) rep.violations.push_back("(theta1+theta2, gamma) != 0");
    if (fe(theta1 - theta2, theta1 - theta2) != Rat(2) * fe(theta1 - theta2, gamma))
        rep.violations.push_back("(theta1-theta2)^2 != 2(theta1-theta2, gamma)");
    if (fe(theta1 - theta2, gamma) != fe(gamma, gamma))
        rep.violations.push_back("(theta1-theta2, gamma) != (gamma, gamma)");
    if (fe(gamma, theta1) == 0) rep.violations.push_back("(gamma, theta1) = 0");
    if (fe(gamma, theta2) == 0) rep.violations.push_back("(gamma, theta2) = 0");

    const LatticeVector t1 = theta1, t2 = theta2, g = gamma;
    auto R2 = [](const LatticeVector& v) { return Rat(2) * v; };
    std::vector<LatticeVector> listed = {
        R2(t1 - t2) - g,        R2(t1 - t2) - Rat(3) * g, t1 - t2 - Rat(3) * g,
        R2(t1 - t2 - g),        R2(t1) - t2 - g,
        t1 - R2(t2) - g,        R2(t1) - t2 - R2(g),      t1 - R2(t2) - R2(g),
        R2(t1) - t2 - Rat(3) * g, t1 - R2(t2) - Rat(3) * g,
        R2(t1) + t2 - g,        t1 + R2(t2) + g,          t1 - t2 + g,
        t1 + t2 + g,            t1 + t2 - g,
        R2(t2) - R2(g),         R2(t2) + R2(g),           R2(t1) - R2(g),
        t1 - R2(g),             t2 + R2(g),
        R2(t1) + t2,            R2(t1) - t2,              t1 + R2(t2),
        t1 - R2(t2),            R2(t1) - g,
        R2(t2) + g,             t1 + g,                   t2 - g,
        R2(t1),                 R2(t2),
    };
    for (const auto& v : listed)
        if (r.is_root(v)) rep.violations.push_back("listed non-root is present: " + v.str());
    return rep;
}

}  // namespace lfrs
