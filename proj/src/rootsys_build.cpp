#include "lfrs/rootsys.hpp"

#include <algorithm>
#include <deque>

namespace lfrs {

namespace {

const std::vector<std::pair<Family, const char*>> kFamilyNames = {
    {Family::A, "A"},
    {Family::B, "B"},
    {Family::C, "C"},
    {Family::D, "D"},
    {Family::BC, "BC"},
    {Family::DotA0T, "dotA(0,T)"},
    {Family::DotC0T, "dotC(0,T)"},
    {Family::DotATT, "dotA(T,T')"},
    {Family::ALL, "A(l,l)"},
    {Family::B0T, "B(0,T)"},
    {Family::BTT, "B(T,T')"},
    {Family::BCTT, "BC(T,T')"},
    {Family::CTT, "C(T,T')"},
    {Family::DTT, "D(T,T')"},
    {Family::B1T, "B(1,T)"},
    {Family::C1T, "C(1,T)"},
    {Family::D1T, "D(1,T)"},
    {Family::BT1, "B(T,1)"},
    {Family::AB13, "AB(1,3)"},
    {Family::G12, "G(1,2)"},
    {Family::D21L, "D(2,1,lambda)"},
    {Family::D2T, "D(2,T)"},
};

using VecSet = std::set<LatticeVector>;

LatticeVector ev(int i) { return LatticeVector::unit(eps(i)); }
LatticeVector dv(int i) { return LatticeVector::unit(delta(i)); }

void add_pm(VecSet& out, const LatticeVector& v) {
    out.insert(v);
    out.insert(-v);
}

// Plain locally finite root systems over one symbol kind, indices 1..n.
VecSet roots_A(int n, SymbolKind k) {
    VecSet out;
    auto u = [&](int i) { return LatticeVector::unit({k, i}); };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) out.insert(u(i) - u(j));
    return out;
}

VecSet roots_D(int n, SymbolKind k) {
    VecSet out = roots_A(n, k);
    auto u = [&](int i) { return LatticeVector::unit({k, i}); };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) add_pm(out, u(i) + u(j));
    return out;
}

VecSet roots_B(int n, SymbolKind k) {
    VecSet out = roots_D(n, k);
    auto u = [&](int i) { return LatticeVector::unit({k, i}); };
    for (int i = 1; i <= n; ++i) add_pm(out, u(i));
    return out;
}

VecSet roots_C(int n, SymbolKind k) {
    VecSet out = roots_D(n, k);
    auto u = [&](int i) { return LatticeVector::unit({k, i}); };
    for (int i = 1; i <= n; ++i) add_pm(out, Rat(2) * u(i));
    return out;
}

VecSet roots_BC(int n, SymbolKind k) {
    VecSet out = roots_B(n, k);
    auto c = roots_C(n, k);
    out.insert(c.begin(), c.end());
    return out;
}

VecSet roots_G2_eps() {
    VecSet out = roots_A(3, SymbolKind::Eps);
    for (int i = 1; i <= 3; ++i) {
        LatticeVector v;
        for (int j = 1; j <= 3; ++j) v += (j == i ? Rat(2) : Rat(-1)) * ev(j);
        add_pm(out, v);
    }
    return out;
}

// Standard symbol grams: +1 on eps diagonal, -1 on delta diagonal.
SymmetricForm standard_form(int n_eps, int n_delta, bool with_alphastar = false,
                            bool alphastar_pairs_delta = false) {
    std::vector<BasisSymbol> basis;
    for (int i = 1; i <= n_eps; ++i) basis.push_back(eps(i));
    for (int i = 1; i <= n_delta; ++i) basis.push_back(delta(i));
    if (with_alphastar) basis.push_back(alphastar());
    std::size_t n = basis.size();
    RatMat g(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (basis[i].kind == SymbolKind::Eps) g[i][i] = 1;
        if (basis[i].kind == SymbolKind::Delta) g[i][i] = -1;
    }
    if (with_alphastar) {
        std::size_t a = n - 1;
        if (n_eps > 0) g[a][0] = g[0][a] = 1;  // (a*, eps_1) = 1
        if (alphastar_pairs_delta && n_delta > 0) {
            std::size_t d1 = static_cast<std::size_t>(n_eps);
            g[a][d1] = g[d1][a] = 1;  // (a*, delta_1) = 1
        }
    }
    return SymmetricForm(std::move(basis), std::move(g));
}

// Reflection closure of {start} under the real roots, using the given form.
VecSet orbit_closure(const SymmetricForm& form, const VecSet& reals, const LatticeVector& start) {
    VecSet seen{start};
    std::deque<LatticeVector> work{start};
    while (!work.empty()) {
        LatticeVector v = work.front();
        work.pop_front();
        for (const auto& a : reals) {
            Rat aa = form.eval(a, a);
            if (aa == 0) continue;
            LatticeVector w = v - (Rat(2) * form.eval(v, a) / aa) * a;
            if (seen.insert(w).second) work.push_back(w);
        }
    }
    return seen;
}

RootSupersystem assemble(SymmetricForm form, VecSet reals, const TypeDescriptor& d,
                         const std::optional<LatticeVector>& delta_star, bool plus_minus_orbit) {
    VecSet roots = reals;
    if (delta_star) {
        VecSet orbit = orbit_closure(form, reals, *delta_star);
        for (const auto& v : orbit) {
            roots.insert(v);
            if (plus_minus_orbit) roots.insert(-v);
        }
    }
    roots.insert(LatticeVector{});
    std::vector<BasisSymbol> basis = form.basis();
    return RootSupersystem(std::move(basis), std::move(form), std::move(roots), d);
}

[[noreturn]] void bad_ranks(const TypeDescriptor& d, const std::string& why) {
    throw InvalidRanks(d.str() + ": " + why);
}

}  // namespace

std::string family_str(Family f) {
    for (const auto& [fam, name] : kFamilyNames)
        if (fam == f) return name;
    return "?";
}

std::optional<Family> family_parse(const std::string& name) {
    for (const auto& [fam, fname] : kFamilyNames)
        if (name == fname) return fam;
    return std::nullopt;
}

TypeDescriptor dispatch_descriptor(Family f, const std::vector<int>& ranks, const Rat& lambda) {
    TypeDescriptor d{f, ranks, lambda};
    if (ranks.size() != 2) return d;
    int m = ranks[0], n = ranks[1];
    switch (f) {
        case Family::B:
            if (m == 0) d.family = Family::B0T;
            else if (m == 1) d.family = Family::B1T;
            else if (n == 1) d.family = Family::BT1;
            else d.family = Family::BTT;
            break;
        case Family::C:
            if (m == 1) d.family = Family::C1T;
            else d.family = Family::CTT;
            break;
        case Family::D:
            if (m == 1) d.family = Family::D1T;
            else if (m == 2 && n == 1) d.family = Family::D21L;
            else if (m == 2) d.family = Family::D2T;
            else d.family = Family::DTT;
            break;
        case Family::BC:
            d.family = Family::BCTT;
            break;
        case Family::A:
            // equal ranks are read as A(l, l); unequal as the imaginary row
            d.family = (m == n) ? Family::ALL : Family::DotATT;
            break;
        default:
            break;
    }
    return d;
}

std::string TypeDescriptor::str() const {
    std::string s = family_str(family) + "[";
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ranks[i]);
    }
    s += "]";
    if (family == Family::D21L) s += " lambda=" + rat_str(lambda);
    return s;
}

RootSupersystem::RootSupersystem(std::vector<BasisSymbol> basis, SymmetricForm form,
                                 std::set<LatticeVector> roots, TypeDescriptor descriptor)
    : basis_(std::move(basis)), form_(std::move(form)), roots_(std::move(roots)),
      descriptor_(std::move(descriptor)) {
    for (const auto& r : roots_) {
        if (r.is_zero()) continue;
        if (form_.eval(r, r) != 0)
            real_.push_back(r);
        else
            ns_.push_back(r);
    }
}

RootSupersystem RootSupersystem::with_form_scaled(const Rat& c) const {
    return RootSupersystem(basis_, form_.scaled(c), roots_, descriptor_);
}

RootSupersystem build(const TypeDescriptor& d) {
    const auto& rk = d.ranks;
    auto need = [&](bool cond, const char* why) {
        if (!cond) bad_ranks(d, why);
    };
    switch (d.family) {
        case Family::A: {
            need(rk.size() == 1 && rk[0] >= 2, "A needs one index-set size >= 2");
            return assemble(standard_form(rk[0], 0), roots_A(rk[0], SymbolKind::Eps), d, {}, false);
        }
        case Family::B: {
            need(rk.size() == 1 && rk[0] >= 1, "B needs one rank >= 1");
            return assemble(standard_form(rk[0], 0), roots_B(rk[0], SymbolKind::Eps), d, {}, false);
        }
        case Family::C: {
            need(rk.size() == 1 && rk[0] >= 1, "C needs one rank >= 1");
            return assemble(standard_form(rk[0], 0), roots_C(rk[0], SymbolKind::Eps), d, {}, false);
        }
        case Family::D: {
            need(rk.size() == 1 && rk[0] >= 2, "D needs one rank >= 2");
            return assemble(standard_form(rk[0], 0), roots_D(rk[0], SymbolKind::Eps), d, {}, false);
        }
        case Family::BC: {
            need(rk.size() == 1 && rk[0] >= 1, "BC needs one rank >= 1");
            return assemble(standard_form(rk[0], 0), roots_BC(rk[0], SymbolKind::Eps), d, {}, false);
        }
        case Family::B0T: {
            need(rk.size() == 2 && rk[0] == 0 && rk[1] >= 1, "B(0,T) needs ranks (0, n>=1)");
            // BC_T over the deltas with the negated form, the odd orthosymplectic reading
            return assemble(standard_form(0, rk[1]), roots_BC(rk[1], SymbolKind::Delta), d, {}, false);
        }
        case Family::B1T: {
            need(rk.size() == 2 && rk[0] == 1 && rk[1] >= 1, "B(1,T) needs ranks (1, n>=1)");
            VecSet reals = roots_B(1, SymbolKind::Eps);
            auto bc = roots_BC(rk[1], SymbolKind::Delta);
            reals.insert(bc.begin(), bc.end());
            return assemble(standard_form(1, rk[1]), reals, d, ev(1) + dv(1), false);
        }
        case Family::BT1: {
            need(rk.size() == 2 && rk[0] >= 2 && rk[1] == 1, "B(T,1) needs ranks (m>=2, 1)");
            VecSet reals = roots_B(rk[0], SymbolKind::Eps);
            auto bc = roots_BC(1, SymbolKind::Delta);
            reals.insert(bc.begin(), bc.end());
            return assemble(standard_form(rk[0], 1), reals, d, ev(1) + dv(1), false);
        }
        case Family::BTT: {
            need(rk.size() == 2 && rk[0] >= 2 && rk[1] >= 2, "B(T,T') needs ranks (m>=2, n>=2)");
            VecSet reals = roots_B(rk[0], SymbolKind::Eps);
            auto bc = roots_BC(rk[1], SymbolKind::Delta);
            reals.insert(bc.begin(), bc.end());
            return assemble(standard_form(rk[0], rk[1]), reals, d, ev(1) + dv(1), false);
        }
        case Family::C1T: {
            need(rk.size() == 2 && rk[0] == 1 && rk[1] >= 2, "C(1,T) needs ranks (1, n>=2)");
            VecSet reals = roots_C(1, SymbolKind::Eps);
            auto c2 = roots_C(rk[1], SymbolKind::Delta);
            reals.insert(c2.begin(), c2.end());
            return assemble(standard_form(1, rk[1]), reals, d, ev(1) + dv(1), false);
        }
        case Family::CTT: {
            need(rk.size() == 2 && rk[0] >= 2 && rk[1] >= 2, "C(T,T') needs ranks (m>=2, n>=2)");
            VecSet reals = roots_C(rk[0], SymbolKind::Eps);
            auto c2 = roots_C(rk[1], SymbolKind::Delta);
            reals.insert(c2.begin(), c2.end());
            return assemble(standard_form(rk[0], rk[1]), reals, d, ev(1) + dv(1), false);
        }
        case Family::D1T: {
            need(rk.size() == 2 && rk[0] == 1 && rk[1] >= 3, "D(1,T) needs ranks (1, n>=3)");
            VecSet reals = roots_D(rk[1], SymbolKind::Eps);
            auto c1 = roots_C(1, SymbolKind::Delta);
            reals.insert(c1.begin(), c1.end());
            return assemble(standard_form(rk[1], 1), reals, d, ev(1) + dv(1), false);
        }
        case Family::DTT: {
            need(rk.size() == 2 && rk[0] >= 3 && rk[1] >= 2, "D(T,T') needs ranks (m>=3, n>=2)");
            VecSet reals = roots_D(rk[0], SymbolKind::Eps);
            auto c2 = roots_C(rk[1], SymbolKind::Delta);
            reals.insert(c2.begin(), c2.end());
            return assemble(standard_form(rk[0], rk[1]), reals, d, ev(1) + dv(1), false);
        }
        case Family::D2T: {
            need(rk.size() == 2 && rk[0] == 2 && rk[1] >= 2, "D(2,T) needs ranks (2, n>=2)");
            VecSet reals = roots_D(2, SymbolKind::Eps);
            auto c2 = roots_C(rk[1], SymbolKind::Delta);
            reals.insert(c2.begin(), c2.end());
            return assemble(standard_form(2, rk[1]), reals, d, ev(1) + dv(1), false);
        }
        case Family::BCTT: {
            need(rk.size() == 2, "BC(T,T') needs two ranks");
            bool listed = (rk[0] == 1 && rk[1] == 1) || (rk[0] == 1 && rk[1] >= 2) ||
                          (rk[0] >= 2 && rk[1] >= 2);
            need(listed, "BC(T,T') rows: (1,1), (1,n>=2), (m>=2,n>=2)");
            VecSet reals = roots_BC(rk[0], SymbolKind::Eps);
            auto bc = roots_BC(rk[1], SymbolKind::Delta);
            reals.insert(bc.begin(), bc.end());
            return assemble(standard_form(rk[0], rk[1]), reals, d, ev(1) + dv(1), false);
        }
        case Family::ALL: {
            need(rk.size() == 2 && rk[0] >= 1 && rk[0] == rk[1], "A(l,l) needs ranks (l, l), l>=1");
            int l = rk[0];
            // Coordinates of the quotient by the form radical: delta_{l+1} is
            // eliminated via eps_1+...+eps_{l+1}+delta_1+...+delta_{l+1} = 0.
            auto dvec = [&](int p) {
                if (p <= l) return dv(p);
                LatticeVector v;
                for (int i = 1; i <= l + 1; ++i) v -= ev(i);
                for (int q = 1; q <= l; ++q) v -= dv(q);
                return v;
            };
            VecSet roots;
            for (int i = 1; i <= l + 1; ++i)
                for (int j = 1; j <= l + 1; ++j)
                    if (i != j) roots.insert(ev(i) - ev(j));
            for (int p = 1; p <= l + 1; ++p)
                for (int q = 1; q <= l + 1; ++q)
                    if (p != q) roots.insert(dvec(p) - dvec(q));
            for (int i = 1; i <= l + 1; ++i)
                for (int p = 1; p <= l + 1; ++p) add_pm(roots, ev(i) + dvec(p));
            roots.insert(LatticeVector{});
            SymmetricForm form = standard_form(l + 1, l);
            return RootSupersystem(form.basis(), form, std::move(roots), d);
        }
        case Family::D21L: {
            need(rk.size() == 2 && rk[0] == 2 && rk[1] == 1, "D(2,1,lambda) has ranks (2,1)");
            if (d.lambda == 0 || d.lambda == -1)
                throw InvalidLambda("D(2,1,lambda) needs lambda not in {0,-1}");
            std::vector<BasisSymbol> basis{eps(1), eps(2), eps(3)};
            RatMat g(3, RatVec(3, Rat(0)));
            g[0][0] = 1;
            g[1][1] = d.lambda;
            g[2][2] = Rat(-1) - d.lambda;
            SymmetricForm form(basis, g);
            VecSet reals;
            for (int i = 1; i <= 3; ++i) add_pm(reals, Rat(2) * ev(i));
            return assemble(form, reals, d, ev(1) + ev(2) + ev(3), false);
        }
        case Family::AB13: {
            need(rk.size() == 2 && rk[0] == 1 && rk[1] == 3, "AB(1,3) has ranks (1,3)");
            std::vector<BasisSymbol> basis{eps(1), eps(2), eps(3), delta(1)};
            RatMat g(4, RatVec(4, Rat(0)));
            g[0][0] = g[1][1] = g[2][2] = 1;
            g[3][3] = -3;  // scaled so (delta*, delta*) = 0
            SymmetricForm form(basis, g);
            VecSet reals = roots_B(3, SymbolKind::Eps);
            add_pm(reals, dv(1));
            LatticeVector dstar = Rat(1, 2) * (ev(1) + ev(2) + ev(3) + dv(1));
            return assemble(form, reals, d, dstar, false);
        }
        case Family::G12: {
            need(rk.size() == 2 && rk[0] == 1 && rk[1] == 2, "G(1,2) has ranks (1,2)");
            std::vector<BasisSymbol> basis{eps(1), eps(2), eps(3), delta(1)};
            RatMat g(4, RatVec(4, Rat(0)));
            g[0][0] = g[1][1] = g[2][2] = 1;
            g[3][3] = -2;  // scaled so (delta*, delta*) = 0
            SymmetricForm form(basis, g);
            VecSet reals = roots_G2_eps();
            auto bc1 = roots_BC(1, SymbolKind::Delta);
            reals.insert(bc1.begin(), bc1.end());
            LatticeVector dstar = dv(1) + ev(1) - ev(3);  // delta + highest short root
            return assemble(form, reals, d, dstar, false);
        }
        case Family::DotA0T: {
            need(rk.size() == 1 && rk[0] >= 2, "dotA(0,T) needs |T| >= 2");
            SymmetricForm form = standard_form(rk[0], 0, true);
            return assemble(form, roots_A(rk[0], SymbolKind::Eps), d,
                            LatticeVector::unit(alphastar()), true);
        }
        case Family::DotC0T: {
            need(rk.size() == 1 && rk[0] >= 2, "dotC(0,T) needs |T| >= 2");
            SymmetricForm form = standard_form(rk[0], 0, true);
            return assemble(form, roots_C(rk[0], SymbolKind::Eps), d,
                            LatticeVector::unit(alphastar()), true);
        }
        case Family::DotATT: {
            need(rk.size() == 2 && rk[0] >= 2 && rk[1] >= 2, "dotA(T,T') needs |T|,|T'| >= 2");
            if (rk[0] == rk[1])
                bad_ranks(d, "|T| = |T'| finite falls under A(l,l)");
            SymmetricForm form = standard_form(rk[0], rk[1], true, true);
            VecSet reals = roots_A(rk[0], SymbolKind::Eps);
            auto a2 = roots_A(rk[1], SymbolKind::Delta);
            reals.insert(a2.begin(), a2.end());
            return assemble(form, reals, d, LatticeVector::unit(alphastar()), true);
        }
    }
    throw InvalidRanks("unknown family");
}

}  // namespace lfrs
