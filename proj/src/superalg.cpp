#include "lfrs/superalg.hpp"

#include <algorithm>

namespace lfrs {

std::string GradedBasisElement::str() const {
    if (kind == Kind::Cartan) return "h" + std::to_string(cartan_index);
    std::string s = "e(" + root.str() + ")";
    if (slot > 0) s += "#" + std::to_string(slot);
    return s;
}

LieSuperalgebra LieSuperalgebra::from_table(std::vector<GradedBasisElement> basis,
                                            std::vector<std::vector<SparseVec>> table,
                                            std::optional<RatMat> form_gram) {
    LieSuperalgebra l;
    std::size_t n = basis.size();
    if (table.size() != n) throw DimensionMismatch("table rows != basis size");
    for (const auto& row : table)
        if (row.size() != n) throw DimensionMismatch("table cols != basis size");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Parity pij = parity_sum(basis[i].parity, basis[j].parity);
            for (const auto& [k, c] : table[i][j]) {
                if (c == 0) continue;
                if (basis[static_cast<std::size_t>(k)].parity != pij)
                    throw ParityViolation("[" + basis[i].str() + "," + basis[j].str() +
                                          "] hits wrong parity at " + basis[k].str());
            }
            int sign = parity_sign(basis[i].parity, basis[j].parity);
            // [x,y] = -(-1)^{|x||y|} [y,x]
            SparseVec expect;
            for (const auto& [k, c] : table[j][i]) {
                Rat v = Rat(-sign) * c;
                if (v != 0) expect[k] = v;
            }
            if (expect != table[i][j])
                throw NotAntisupersymmetric("[" + basis[i].str() + "," + basis[j].str() + "]");
        }
    }
    if (form_gram) {
        if (form_gram->size() != n) throw DimensionMismatch("form gram size");
        for (const auto& row : *form_gram)
            if (row.size() != n) throw DimensionMismatch("form gram shape");
    }
    l.basis_ = std::move(basis);
    l.table_ = std::move(table);
    l.form_gram_ = std::move(form_gram);
    return l;
}

RatVec LieSuperalgebra::bracket(const RatVec& x, const RatVec& y) const {
    std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket operands");
    RatVec out(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            for (const auto& [k, c] : table_[i][j]) out[static_cast<std::size_t>(k)] += x[i] * y[j] * c;
        }
    }
    return out;
}

Rat LieSuperalgebra::form(const RatVec& x, const RatVec& y) const {
    if (!form_gram_) throw DimensionMismatch("algebra carries no form");
    Rat acc(0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (y[j] != 0) acc += x[i] * y[j] * (*form_gram_)[i][j];
    }
    return acc;
}

std::vector<int> LieSuperalgebra::cartan_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].kind == GradedBasisElement::Kind::Cartan) out.push_back(static_cast<int>(i));
    return out;
}

RatMat LieSuperalgebra::ad_matrix(const RatVec& x) const {
    std::size_t n = dim();
    RatMat m(n, RatVec(n, Rat(0)));
    for (std::size_t j = 0; j < n; ++j) {
        RatVec col = bracket(x, basis_vector(j));
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    }
    return m;
}

RatVec LieSuperalgebra::basis_vector(std::size_t i) const {
    RatVec v(dim(), Rat(0));
    v[i] = 1;
    return v;
}

namespace {

// [[x_a, x_b], x_c] as a sparse vector, straight off the table
SparseVec double_bracket(const LieSuperalgebra& l, std::size_t a, std::size_t b, std::size_t c) {
    SparseVec out;
    for (const auto& [mid, coeff] : l.bracket_basis(a, b)) {
        for (const auto& [k, c2] : l.bracket_basis(static_cast<std::size_t>(mid), c)) {
            Rat v = out.count(k) ? out[k] : Rat(0);
            v += coeff * c2;
            if (v == 0)
                out.erase(k);
            else
                out[k] = v;
        }
    }
    return out;
}

}  // namespace

CheckReport jacobi_check(const LieSuperalgebra& l) {
    CheckReport rep;
    std::size_t n = l.dim();
    auto sgn = [&](std::size_t a, std::size_t b) { return Rat(parity_sign(l.parity(a), l.parity(b))); };
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                SparseVec total;
                auto acc = [&](const Rat& sign, const SparseVec& term) {
                    for (const auto& [k, v] : term) {
                        Rat nv = total.count(k) ? total[k] : Rat(0);
                        nv += sign * v;
                        if (nv == 0)
                            total.erase(k);
                        else
                            total[k] = nv;
                    }
                };
                acc(sgn(a, c), double_bracket(l, a, b, c));
                acc(sgn(c, b), double_bracket(l, c, a, b));
                acc(sgn(b, a), double_bracket(l, b, c, a));
                if (!total.empty())
                    rep.violations.push_back("Jacobi fails on (" + l.basis()[a].str() + ", " +
                                             l.basis()[b].str() + ", " + l.basis()[c].str() + ")");
            }
        }
    }
    return rep;
}

CheckReport form_check(const LieSuperalgebra& l) {
    CheckReport rep;
    if (!l.form_gram()) {
        rep.violations.push_back("no form present");
        return rep;
    }
    std::size_t n = l.dim();
    const RatMat& g = *l.form_gram();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            int sign = parity_sign(l.parity(i), l.parity(j));
            if (g[i][j] != Rat(sign) * g[j][i])
                rep.violations.push_back("supersymmetry fails at (" + l.basis()[i].str() + "," +
                                         l.basis()[j].str() + ")");
            if (l.parity(i) != l.parity(j) && g[i][j] != 0)
                rep.violations.push_back("form is not even at (" + l.basis()[i].str() + "," +
                                         l.basis()[j].str() + ")");
        }
    }
    if (mat_rank(g) != n) rep.violations.push_back("form is degenerate");
    // invariance ([x,y],z) = (x,[y,z]) on basis triples, sparse
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const SparseVec& bij = l.bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Rat lhs(0), rhs(0);
                for (const auto& [t, c] : bij) lhs += c * g[static_cast<std::size_t>(t)][k];
                for (const auto& [t, c] : l.bracket_basis(j, k)) rhs += c * g[i][static_cast<std::size_t>(t)];
                if (lhs != rhs)
                    rep.violations.push_back("invariance fails on (" + l.basis()[i].str() + "," +
                                             l.basis()[j].str() + "," + l.basis()[k].str() + ")");
            }
        }
    }
    // (L^a, L^b) = 0 unless a + b = 0, Cartan counted as weight 0
    if (!l.grading().empty()) {
        auto weight_of = [&](std::size_t i) -> LatticeVector {
            if (l.basis()[i].kind == GradedBasisElement::Kind::Cartan) return LatticeVector{};
            return l.basis()[i].root;
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!(weight_of(i) + weight_of(j)).is_zero() && g[i][j] != 0)
                    rep.violations.push_back("(L^a, L^b) != 0 for a+b != 0 at (" +
                                             l.basis()[i].str() + "," + l.basis()[j].str() + ")");
            }
    }
    return rep;
}

namespace {

// functional values (alpha(h_i))_i for every grading weight, read off the table
RatVec weight_action(const LieSuperalgebra& l, const LatticeVector& weight,
                     const std::vector<int>& cartan) {
    auto it = l.grading().find(weight);
    if (it == l.grading().end() || it->second.empty())
        throw std::invalid_argument("weight_action: " + weight.str() + " is not a grading weight");
    int idx = it->second.front();
    RatVec out;
    out.reserve(cartan.size());
    RatVec ev = l.basis_vector(static_cast<std::size_t>(idx));
    for (int h : cartan) {
        RatVec b = l.bracket(l.basis_vector(static_cast<std::size_t>(h)), ev);
        // diagonal action: b = c * ev
        Rat c = b[static_cast<std::size_t>(idx)];
        out.push_back(c);
    }
    return out;
}

}  // namespace

RatVec cartan_representative(const LieSuperalgebra& l, const LatticeVector& alpha) {
    std::vector<int> cartan = l.cartan_indices();
    if (cartan.empty()) throw SingularCartanForm("no Cartan labels");
    if (!l.form_gram()) throw SingularCartanForm("no form present");

    // express alpha over an independent set of grading weights
    std::vector<LatticeVector> weights;
    for (const auto& [w, idxs] : l.grading())
        if (!w.is_zero()) weights.push_back(w);
    std::set<BasisSymbol> symbols;
    for (const auto& w : weights)
        for (const auto& [s, c] : w.coords()) symbols.insert(s);
    for (const auto& [s, c] : alpha.coords()) symbols.insert(s);
    std::vector<BasisSymbol> symlist(symbols.begin(), symbols.end());

    RowSpan span(symlist.size());
    std::vector<LatticeVector> indep;
    for (const auto& w : weights)
        if (span.add(dense_coords(w, symlist))) indep.push_back(w);
    RatMat m(symlist.size(), RatVec(indep.size(), Rat(0)));
    for (std::size_t j = 0; j < indep.size(); ++j) {
        RatVec col = dense_coords(indep[j], symlist);
        for (std::size_t i = 0; i < symlist.size(); ++i) m[i][j] = col[i];
    }
    auto combo = solve(m, dense_coords(alpha, symlist));
    if (!combo) throw std::invalid_argument("alpha is outside the root span");

    // alpha(h_i) by linearity
    RatVec alpha_action(cartan.size(), Rat(0));
    for (std::size_t j = 0; j < indep.size(); ++j) {
        if ((*combo)[j] == 0) continue;
        RatVec wa = weight_action(l, indep[j], cartan);
        for (std::size_t i = 0; i < cartan.size(); ++i) alpha_action[i] += (*combo)[j] * wa[i];
    }

    // solve (t, h_i) = alpha(h_i) over the Cartan
    RatMat gram(cartan.size(), RatVec(cartan.size()));
    for (std::size_t i = 0; i < cartan.size(); ++i)
        for (std::size_t j = 0; j < cartan.size(); ++j)
            gram[i][j] = (*l.form_gram())[static_cast<std::size_t>(cartan[j])]
                                         [static_cast<std::size_t>(cartan[i])];
    auto x = solve(gram, alpha_action);
    if (!x) throw SingularCartanForm("form singular on the Cartan");
    RatVec t(l.dim(), Rat(0));
    for (std::size_t j = 0; j < cartan.size(); ++j) t[static_cast<std::size_t>(cartan[j])] = (*x)[j];
    return t;
}

Rat induced_form(const LieSuperalgebra& l, const LatticeVector& a, const LatticeVector& b) {
    RatVec ta = cartan_representative(l, a);
    RatVec tb = cartan_representative(l, b);
    return l.form(ta, tb);
}

std::map<RatVec, std::vector<int>> root_decomposition(const LieSuperalgebra& l,
                                                      const std::vector<int>& cartan) {
    std::set<int> cartan_set(cartan.begin(), cartan.end());
    for (int h1 : cartan)
        for (int h2 : cartan)
            if (!l.bracket_basis(static_cast<std::size_t>(h1), static_cast<std::size_t>(h2)).empty())
                throw NotDiagonalizable("Cartan is not abelian");
    std::map<RatVec, std::vector<int>> out;
    for (std::size_t k = 0; k < l.dim(); ++k) {
        if (cartan_set.count(static_cast<int>(k))) continue;
        RatVec weight;
        for (int h : cartan) {
            const SparseVec& b = l.bracket_basis(static_cast<std::size_t>(h), k);
            for (const auto& [idx, c] : b)
                if (idx != static_cast<int>(k) && c != 0)
                    throw NotDiagonalizable("ad(h) is not diagonal on basis element " +
                                            l.basis()[k].str());
            auto it = b.find(static_cast<int>(k));
            weight.push_back(it == b.end() ? Rat(0) : it->second);
        }
        bool zero = std::all_of(weight.begin(), weight.end(), [](const Rat& x) { return x == 0; });
        if (zero)
            throw NonSelfCentralizing("weight-zero space exceeds the Cartan at " +
                                      l.basis()[k].str());
        out[weight].push_back(static_cast<int>(k));
    }
    return out;
}

namespace {

RatMat exp_nilpotent(const RatMat& m, std::size_t bound) {
    std::size_t n = m.size();
    RatMat acc = identity_mat(n);
    RatMat power = identity_mat(n);
    Rat factorial(1);
    for (std::size_t k = 1; k <= bound + 1; ++k) {
        power = matmul(power, m);
        bool zero = true;
        for (const auto& row : power)
            for (const auto& x : row)
                if (x != 0) zero = false;
        if (zero) return acc;
        factorial *= Rat(k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) acc[i][j] += power[i][j] / factorial;
    }
    throw NotNilpotent("ad series does not terminate");
}

}  // namespace

RatMat theta_automorphism(const LieSuperalgebra& l, const LatticeVector& alpha) {
    auto it = l.grading().find(alpha);
    auto itm = l.grading().find(-alpha);
    if (it == l.grading().end() || itm == l.grading().end() || it->second.size() != 1 ||
        itm->second.size() != 1)
        throw NoTriple("need one-dimensional root spaces at " + alpha.str());
    std::size_t ei = static_cast<std::size_t>(it->second.front());
    std::size_t fi = static_cast<std::size_t>(itm->second.front());
    if (l.parity(ei) != Parity::Even) throw NoTriple(alpha.str() + " is not an even root");

    RatVec t_alpha = cartan_representative(l, alpha);
    Rat norm = induced_form(l, alpha, alpha);
    if (norm == 0) throw NoTriple(alpha.str() + " is isotropic");
    RatVec h_alpha(l.dim(), Rat(0));
    for (std::size_t i = 0; i < l.dim(); ++i) h_alpha[i] = Rat(2) * t_alpha[i] / norm;

    RatVec e = l.basis_vector(ei);
    RatVec f0 = l.basis_vector(fi);
    RatVec ef = l.bracket(e, f0);
    // [e, c f0] = h_alpha; the bracket lands in the Cartan, solve the scalar
    Rat c(0);
    bool found = false;
    for (std::size_t i = 0; i < l.dim(); ++i) {
        if (ef[i] != 0) {
            c = h_alpha[i] / ef[i];
            found = true;
            break;
        }
    }
    if (!found || c == 0) throw NoTriple("[e, L^{-alpha}] vanishes at " + alpha.str());
    for (std::size_t i = 0; i < l.dim(); ++i)
        if (ef[i] * c != h_alpha[i]) throw NoTriple("[e, f] is not proportional to h_alpha");
    RatVec f = f0;
    for (auto& x : f) x *= c;

    // sl2 relations
    RatVec he = l.bracket(h_alpha, e);
    RatVec hf = l.bracket(h_alpha, f);
    for (std::size_t i = 0; i < l.dim(); ++i) {
        if (he[i] != Rat(2) * e[i] || hf[i] != Rat(-2) * f[i])
            throw NoTriple("sl2 relations fail at " + alpha.str());
    }

    RatMat ad_e = l.ad_matrix(e);
    RatMat ad_f = l.ad_matrix(f);
    for (auto& row : ad_f)
        for (auto& x : row) x = -x;
    RatMat theta = matmul(exp_nilpotent(ad_e, l.dim()),
                          matmul(exp_nilpotent(ad_f, l.dim()), exp_nilpotent(ad_e, l.dim())));

    // theta(h) = h - alpha(h) h_alpha on the Cartan
    std::vector<int> cartan = l.cartan_indices();
    for (std::size_t ci = 0; ci < cartan.size(); ++ci) {
        std::size_t h = static_cast<std::size_t>(cartan[ci]);
        RatVec hv = l.basis_vector(h);
        RatVec lhs = matvec(theta, hv);
        // alpha(h) = (t_alpha, h)
        Rat ah = l.form(t_alpha, hv);
        for (std::size_t i = 0; i < l.dim(); ++i)
            if (lhs[i] != hv[i] - ah * h_alpha[i])
                throw NoTriple("theta does not act as the reflection on the Cartan");
    }
    return theta;
}

namespace {

bool ideal_is_full(const LieSuperalgebra& l, const RatVec& seed) {
    RowSpan span(l.dim());
    std::vector<RatVec> frontier{seed};
    span.add(seed);
    while (!frontier.empty()) {
        std::vector<RatVec> next;
        for (const auto& v : frontier) {
            for (std::size_t j = 0; j < l.dim(); ++j) {
                RatVec w = l.bracket(v, l.basis_vector(j));
                if (span.add(w)) next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    return span.rank() == l.dim();
}

}  // namespace

bool is_simple(const LieSuperalgebra& l) {
    if (l.dim() == 0) return false;
    // center
    RatMat system;
    for (std::size_t j = 0; j < l.dim(); ++j) {
        RatMat adj(l.dim(), RatVec(l.dim(), Rat(0)));
        for (std::size_t i = 0; i < l.dim(); ++i)
            for (const auto& [k, c] : l.bracket_basis(i, j)) adj[static_cast<std::size_t>(k)][i] = c;
        for (const auto& row : adj) system.push_back(row);
    }
    if (!nullspace(system).empty()) return false;

    if (l.grading().empty())
        throw std::invalid_argument("is_simple needs a root grading");
    for (const auto& [weight, idxs] : l.grading()) {
        if (weight.is_zero()) continue;
        if (idxs.size() == 1) {
            if (!ideal_is_full(l, l.basis_vector(static_cast<std::size_t>(idxs.front()))))
                return false;
        } else {
            // multi-dimensional root space: any nonzero vector generates t_w
            // through the form pairing, so t_w is the right seed
            if (!l.form_gram())
                throw std::invalid_argument("is_simple needs a form for multi-dim root spaces");
            auto opp = l.grading().find(-weight);
            if (opp == l.grading().end()) return false;
            RatMat block(idxs.size(), RatVec(opp->second.size()));
            for (std::size_t a = 0; a < idxs.size(); ++a)
                for (std::size_t b = 0; b < opp->second.size(); ++b)
                    block[a][b] = (*l.form_gram())[static_cast<std::size_t>(idxs[a])]
                                                  [static_cast<std::size_t>(opp->second[b])];
            if (mat_rank(block) != idxs.size()) return false;
            if (!ideal_is_full(l, cartan_representative(l, weight))) return false;
        }
    }
    return true;
}

std::vector<RatVec> center_of_even_part(const LieSuperalgebra& l) {
    std::vector<std::size_t> even;
    for (std::size_t i = 0; i < l.dim(); ++i)
        if (l.parity(i) == Parity::Even) even.push_back(i);
    // unknowns: coefficients over the even basis
    RatMat system;
    for (std::size_t j : even) {
        RatMat rows(l.dim(), RatVec(even.size(), Rat(0)));
        for (std::size_t a = 0; a < even.size(); ++a) {
            for (const auto& [k, c] : l.bracket_basis(even[a], j)) rows[static_cast<std::size_t>(k)][a] = c;
        }
        for (auto& row : rows) system.push_back(std::move(row));
    }
    std::vector<RatVec> null = nullspace(system);
    std::vector<RatVec> out;
    for (const auto& v : null) {
        RatVec full(l.dim(), Rat(0));
        for (std::size_t a = 0; a < even.size(); ++a) full[even[a]] = v[a];
        out.push_back(std::move(full));
    }
    return out;
}

}  // namespace lfrs
