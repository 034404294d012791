#include "lfrs/realize.hpp"

#include <algorithm>
#include <sstream>

namespace lfrs {

SuperIndex SuperIndex::bar() const {
    switch (cls) {
        case Cls::Ev: return {Cls::EvBar, id};
        case Cls::EvBar: return {Cls::Ev, id};
        case Cls::Od: return {Cls::OdBar, id};
        case Cls::OdBar: return {Cls::Od, id};
        default: return *this;
    }
}

std::string SuperIndex::str() const {
    switch (cls) {
        case Cls::Zero: return "0";
        case Cls::Ev: return "i" + std::to_string(id);
        case Cls::EvBar: return "i" + std::to_string(id) + "~";
        case Cls::Od: return "j" + std::to_string(id);
        case Cls::OdBar: return "j" + std::to_string(id) + "~";
    }
    return "?";
}

SuperMatrix SuperMatrix::unit(const SuperIndex& r, const SuperIndex& c, const Rat& v) {
    SuperMatrix m((r.odd() != c.odd()) ? Parity::Odd : Parity::Even);
    m.set(r, c, v);
    return m;
}

Rat SuperMatrix::entry(const SuperIndex& r, const SuperIndex& c) const {
    auto it = rows_.find(r);
    if (it == rows_.end()) return Rat(0);
    auto jt = it->second.find(c);
    return jt == it->second.end() ? Rat(0) : jt->second;
}

void SuperMatrix::set(const SuperIndex& r, const SuperIndex& c, const Rat& v) {
    if (v == 0) {
        auto it = rows_.find(r);
        if (it != rows_.end()) {
            it->second.erase(c);
            if (it->second.empty()) rows_.erase(it);
        }
        return;
    }
    Parity p = (r.odd() != c.odd()) ? Parity::Odd : Parity::Even;
    if (rows_.empty())
        parity_ = p;
    else if (p != parity_)
        throw std::invalid_argument("SuperMatrix: inhomogeneous entry at (" + r.str() + "," +
                                    c.str() + ")");
    rows_[r][c] = v;
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
    for (const auto& [r, row] : o.rows_) {
        for (const auto& [c, v] : row) {
            Rat nv = entry(r, c) + v;
            set(r, c, nv);
        }
    }
    return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
    for (const auto& [r, row] : o.rows_) {
        for (const auto& [c, v] : row) set(r, c, entry(r, c) - v);
    }
    return *this;
}

SuperMatrix& SuperMatrix::operator*=(const Rat& c) {
    if (c == 0) {
        rows_.clear();
        return *this;
    }
    for (auto& [r, row] : rows_)
        for (auto& [col, v] : row) v *= c;
    return *this;
}

std::string SuperMatrix::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [r, row] : rows_) {
        for (const auto& [c, v] : row) {
            if (!first) os << " + ";
            if (v != 1) os << rat_str(v) << "*";
            os << "E(" << r.str() << "," << c.str() << ")";
            first = false;
        }
    }
    return first ? "0" : os.str();
}

SuperMatrix matmul(const SuperMatrix& a, const SuperMatrix& b) {
    SuperMatrix out(parity_sum(a.parity(), b.parity()));
    for (const auto& [r, row] : a.rows()) {
        for (const auto& [mid, va] : row) {
            auto it = b.rows().find(mid);
            if (it == b.rows().end()) continue;
            for (const auto& [c, vb] : it->second) out.set(r, c, out.entry(r, c) + va * vb);
        }
    }
    return out;
}

SuperMatrix superbracket(const SuperMatrix& a, const SuperMatrix& b) {
    SuperMatrix ab = matmul(a, b);
    SuperMatrix ba = matmul(b, a);
    int sign = parity_sign(a.parity(), b.parity());
    SuperMatrix out = ab;
    if (sign > 0)
        out -= ba;
    else
        out += ba;
    return out;
}

SuperMatrix supertranspose(const SuperMatrix& a) {
    SuperMatrix out(a.parity());
    for (const auto& [r, row] : a.rows()) {
        for (const auto& [c, v] : row) {
            // b_{ij} = a_{ji}, except -a_{ji} when |i| = 0, |j| = 1
            Rat sign = (!c.odd() && r.odd()) ? Rat(-1) : Rat(1);
            out.set(c, r, sign * v);
        }
    }
    return out;
}

Rat supertrace(const SuperMatrix& a) {
    Rat acc(0);
    for (const auto& [r, row] : a.rows()) {
        auto it = row.find(r);
        if (it != row.end()) acc += (r.odd() ? Rat(-1) : Rat(1)) * it->second;
    }
    return acc;
}

namespace {

LatticeVector evec(int i) { return LatticeVector::unit(eps(i)); }
LatticeVector dvec(int i) { return LatticeVector::unit(delta(i)); }

SuperMatrix model_identity(const MatrixModel& model) {
    SuperMatrix one(Parity::Even);
    for (const auto& idx : model.indices) one.set(idx, idx, Rat(1));
    return one;
}

// canonical representative of X + F.1 for sl(l|l): zero entry at (j1, j1)
SuperMatrix reduce_rep(const MatrixModel& model, SuperMatrix x) {
    if (!model.quotient_center) return x;
    Rat c = x.entry(od_j(1), od_j(1));
    if (c == 0) return x;
    SuperMatrix one = model_identity(model);
    one *= c;
    x -= one;
    return x;
}

SuperMatrix model_bracket(const MatrixModel& model, const SuperMatrix& a, const SuperMatrix& b) {
    return reduce_rep(model, superbracket(a, b));
}

// weight functional on a diagonal-ish Cartan element; the delta coordinates
// read the odd diagonal with a minus sign in the sl convention
Rat eval_weight(const MatrixModel& model, const LatticeVector& weight, const SuperMatrix& h) {
    Rat acc(0);
    for (const auto& [s, c] : weight.coords()) {
        if (s.kind == SymbolKind::Eps) {
            acc += c * h.entry(ev_i(s.index), ev_i(s.index));
        } else if (s.kind == SymbolKind::Delta) {
            Rat diag = h.entry(od_j(s.index), od_j(s.index));
            Rat term = c * diag;
            acc += (model.kind == ModelKind::Sl) ? Rat(-term) : term;
        } else {
            throw BadIndexSets("unexpected weight symbol");
        }
    }
    return acc;
}

void check_root_vector(const MatrixModel& model, const LatticeVector& weight,
                       const SuperMatrix& x) {
    if (!satisfies_defining_relation(model, x))
        throw BadIndexSets("root vector at " + weight.str() + " violates the defining relation: " +
                           x.str());
    // weight equation [h, x] = weight(h) x against every Cartan element
    for (std::size_t i = 0; i < model.cartan.size(); ++i) {
        SuperMatrix lhs = model_bracket(model, model.cartan[i], x);
        SuperMatrix expect = x;
        expect *= eval_weight(model, weight, model.cartan[i]);
        if (!(lhs == expect)) throw BadIndexSets("weight equation fails at " + weight.str());
    }
}

int cartan_count(const MatrixModel& model) { return static_cast<int>(model.cartan.size()); }

}  // namespace

std::string MatrixModel::name() const {
    switch (kind) {
        case ModelKind::OspOdd:
            return "osp(" + std::to_string(2 * m + 1) + "," + std::to_string(2 * n) + ")";
        case ModelKind::OspEven:
            return "osp(" + std::to_string(2 * m) + "," + std::to_string(2 * n) + ")";
        case ModelKind::Sl:
            return (quotient_center ? "sl_s(" : "sl(") + std::to_string(m) + "|" +
                   std::to_string(n) + ")";
    }
    return "?";
}

bool satisfies_defining_relation(const MatrixModel& model, const SuperMatrix& x) {
    if (model.kind == ModelKind::Sl) return supertrace(x) == 0;
    SuperMatrix lhs = matmul(supertranspose(x), model.q);
    SuperMatrix rhs = matmul(model.q, x);
    rhs *= Rat(-1);
    return lhs == rhs;
}

MatrixModel build_model(ModelKind kind, int m, int n) {
    MatrixModel model;
    model.kind = kind;
    model.m = m;
    model.n = n;

    if (kind == ModelKind::Sl) {
        if (m < 1 || n < 1) throw EmptyOddPart("sl needs both parts nonempty");
        for (int i = 1; i <= m; ++i) model.indices.push_back(ev_i(i));
        for (int j = 1; j <= n; ++j) model.indices.push_back(od_j(j));
        model.quotient_center = (m == n);
        int dn = model.quotient_center ? n - 1 : n;  // section coordinates
        for (int i = 1; i <= m; ++i) model.weight_symbols.push_back(eps(i));
        for (int j = 1; j <= dn; ++j) model.weight_symbols.push_back(delta(j));
        auto delta_coord = [&](int p) {
            if (!model.quotient_center || p <= dn) return dvec(p);
            LatticeVector v;
            for (int i = 1; i <= m; ++i) v -= evec(i);
            for (int q = 1; q <= dn; ++q) v -= dvec(q);
            return v;
        };
        auto unit = [&](const SuperIndex& r, const SuperIndex& c) {
            return reduce_rep(model, SuperMatrix::unit(r, c));
        };
        for (int i = 2; i <= m; ++i)
            model.cartan.push_back(unit(ev_i(i), ev_i(i)) - unit(ev_i(1), ev_i(1)));
        for (int j = 2; j <= n; ++j)
            model.cartan.push_back(unit(od_j(j), od_j(j)) - unit(od_j(1), od_j(1)));
        if (!model.quotient_center)
            model.cartan.push_back(unit(ev_i(1), ev_i(1)) + unit(od_j(1), od_j(1)));
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j)
                if (i != j) model.root_vectors[evec(i) - evec(j)] = {unit(ev_i(i), ev_i(j))};
        for (int p = 1; p <= n; ++p)
            for (int q = 1; q <= n; ++q)
                if (p != q)
                    model.root_vectors[delta_coord(p) - delta_coord(q)].push_back(
                        unit(od_j(q), od_j(p)));
        for (int i = 1; i <= m; ++i)
            for (int p = 1; p <= n; ++p) {
                model.root_vectors[evec(i) + delta_coord(p)].push_back(unit(ev_i(i), od_j(p)));
                model.root_vectors[-(evec(i) + delta_coord(p))].push_back(unit(od_j(p), ev_i(i)));
            }
    } else {
        bool odd_model = kind == ModelKind::OspOdd;
        if (n < 1) throw BadIndexSets("osp needs a nonempty symplectic part");
        if (!odd_model && m < 1) throw BadIndexSets("osp(2I,2J) needs a nonempty I");
        if (m < 0) throw BadIndexSets("negative rank");
        if (odd_model) model.indices.push_back(idx0());
        for (int i = 1; i <= m; ++i) model.indices.push_back(ev_i(i));
        for (int i = 1; i <= m; ++i) model.indices.push_back(ev_bar(i));
        for (int j = 1; j <= n; ++j) model.indices.push_back(od_j(j));
        for (int j = 1; j <= n; ++j) model.indices.push_back(od_bar(j));
        SuperMatrix q(Parity::Even);
        if (odd_model) q.set(idx0(), idx0(), Rat(-2));
        for (int i = 1; i <= m; ++i) {
            q.set(ev_i(i), ev_bar(i), Rat(1));
            q.set(ev_bar(i), ev_i(i), Rat(1));
        }
        for (int j = 1; j <= n; ++j) {
            q.set(od_j(j), od_bar(j), Rat(1));
            q.set(od_bar(j), od_j(j), Rat(-1));
        }
        model.q = q;
        for (int i = 1; i <= m; ++i) model.weight_symbols.push_back(eps(i));
        for (int j = 1; j <= n; ++j) model.weight_symbols.push_back(delta(j));
        auto u = [](const SuperIndex& r, const SuperIndex& c) { return SuperMatrix::unit(r, c); };
        for (int t = 1; t <= m; ++t)
            model.cartan.push_back(u(ev_i(t), ev_i(t)) - u(ev_bar(t), ev_bar(t)));
        for (int k = 1; k <= n; ++k)
            model.cartan.push_back(u(od_j(k), od_j(k)) - u(od_bar(k), od_bar(k)));
        auto put = [&](const LatticeVector& w, const SuperMatrix& x) {
            model.root_vectors[w] = {x};
        };
        for (int r = 1; r <= m; ++r) {
            for (int s = 1; s <= m; ++s) {
                if (r == s) continue;
                if (r < s) {
                    put(evec(r) + evec(s), u(ev_i(r), ev_bar(s)) - u(ev_i(s), ev_bar(r)));
                    put(-evec(r) - evec(s), u(ev_bar(r), ev_i(s)) - u(ev_bar(s), ev_i(r)));
                }
                put(evec(r) - evec(s), u(ev_i(r), ev_i(s)) - u(ev_bar(s), ev_bar(r)));
            }
        }
        for (int p = 1; p <= n; ++p) {
            for (int q2 = 1; q2 <= n; ++q2) {
                if (p == q2) continue;
                if (p < q2) {
                    put(dvec(p) + dvec(q2), u(od_j(p), od_bar(q2)) + u(od_j(q2), od_bar(p)));
                    put(-dvec(p) - dvec(q2), u(od_bar(p), od_j(q2)) + u(od_bar(q2), od_j(p)));
                }
                put(dvec(p) - dvec(q2), u(od_j(p), od_j(q2)) - u(od_bar(q2), od_bar(p)));
            }
            put(Rat(2) * dvec(p), u(od_j(p), od_bar(p)));
            put(Rat(-2) * dvec(p), u(od_bar(p), od_j(p)));
        }
        for (int r = 1; r <= m; ++r) {
            for (int p = 1; p <= n; ++p) {
                put(evec(r) + dvec(p), u(ev_i(r), od_bar(p)) + u(od_j(p), ev_bar(r)));
                put(-evec(r) - dvec(p), u(ev_bar(r), od_j(p)) - u(od_bar(p), ev_i(r)));
                put(evec(r) - dvec(p), u(ev_i(r), od_j(p)) - u(od_bar(p), ev_bar(r)));
                put(-evec(r) + dvec(p), u(ev_bar(r), od_bar(p)) + u(od_j(p), ev_i(r)));
            }
        }
        if (odd_model) {
            for (int r = 1; r <= m; ++r) {
                put(evec(r), u(idx0(), ev_bar(r)) + Rat(2) * u(ev_i(r), idx0()));
                put(-evec(r), u(idx0(), ev_i(r)) + Rat(2) * u(ev_bar(r), idx0()));
            }
            for (int p = 1; p <= n; ++p) {
                put(dvec(p), u(idx0(), od_bar(p)) - Rat(2) * u(od_j(p), idx0()));
                put(-dvec(p), u(idx0(), od_j(p)) + Rat(2) * u(od_bar(p), idx0()));
            }
        }
    }

    for (const auto& [w, vecs] : model.root_vectors)
        for (const auto& x : vecs) check_root_vector(model, w, x);
    for (const auto& h : model.cartan)
        if (!satisfies_defining_relation(model, h))
            throw BadIndexSets("Cartan element violates the defining relation");
    return model;
}

Rat supertrace_form(const MatrixModel& model, const SuperMatrix& x, const SuperMatrix& y) {
    (void)model;
    return supertrace(matmul(x, y));
}

std::vector<std::pair<LatticeVector, int>> model_basis_order(const MatrixModel& model) {
    std::vector<std::pair<LatticeVector, int>> order;
    for (int i = 0; i < cartan_count(model); ++i) order.push_back({LatticeVector{}, i});
    std::vector<LatticeVector> weights;
    for (const auto& [w, vecs] : model.root_vectors) weights.push_back(w);
    std::sort(weights.begin(), weights.end(), [](const LatticeVector& a, const LatticeVector& b) {
        Rat wa(0), wb(0);
        for (const auto& [s, c] : a.coords()) wa += (c < 0 ? Rat(-c) : c);
        for (const auto& [s, c] : b.coords()) wb += (c < 0 ? Rat(-c) : c);
        if (wa != wb) return wa < wb;
        return a < b;
    });
    for (const auto& w : weights)
        for (std::size_t s = 0; s < model.root_vectors.at(w).size(); ++s)
            order.push_back({w, static_cast<int>(s)});
    return order;
}

namespace {

std::vector<SuperMatrix> model_matrices(const MatrixModel& model) {
    std::vector<SuperMatrix> out;
    for (const auto& h : model.cartan) out.push_back(h);
    auto order = model_basis_order(model);
    for (std::size_t k = model.cartan.size(); k < order.size(); ++k)
        out.push_back(model.root_vectors.at(order[k].first)[static_cast<std::size_t>(order[k].second)]);
    return out;
}

// express x over the given candidate matrices; nullopt if outside the span
std::optional<RatVec> express(const std::vector<SuperMatrix>& candidates, const SuperMatrix& x) {
    std::set<std::pair<SuperIndex, SuperIndex>> positions;
    for (const auto& c : candidates)
        for (const auto& [r, row] : c.rows())
            for (const auto& [col, v] : row) positions.insert({r, col});
    for (const auto& [r, row] : x.rows())
        for (const auto& [col, v] : row) positions.insert({r, col});
    RatMat a(positions.size(), RatVec(candidates.size(), Rat(0)));
    RatVec b(positions.size(), Rat(0));
    std::size_t pi = 0;
    for (const auto& pos : positions) {
        for (std::size_t j = 0; j < candidates.size(); ++j)
            a[pi][j] = candidates[j].entry(pos.first, pos.second);
        b[pi] = x.entry(pos.first, pos.second);
        ++pi;
    }
    return solve(a, b);
}

}  // namespace

LieSuperalgebra to_abstract(const MatrixModel& model) {
    auto order = model_basis_order(model);
    auto matrices = model_matrices(model);
    std::size_t n = matrices.size();
    std::size_t ell = model.cartan.size();

    std::vector<GradedBasisElement> basis;
    for (std::size_t i = 0; i < n; ++i) {
        GradedBasisElement e;
        if (i < ell) {
            e.kind = GradedBasisElement::Kind::Cartan;
            e.cartan_index = static_cast<int>(i);
            e.parity = Parity::Even;
        } else {
            e.kind = GradedBasisElement::Kind::Root;
            e.root = order[i].first;
            e.slot = order[i].second;
            e.parity = matrices[i].parity();
        }
        basis.push_back(e);
    }

    std::vector<std::vector<SparseVec>> table(n, std::vector<SparseVec>(n));
    auto weight_of = [&](std::size_t i) { return i < ell ? LatticeVector{} : order[i].first; };
    auto indices_of_weight = [&](const LatticeVector& w) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n; ++i)
            if (weight_of(i) == w) out.push_back(i);
        return out;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            SuperMatrix br = model_bracket(model, matrices[i], matrices[j]);
            if (br.is_zero()) continue;
            LatticeVector w = weight_of(i) + weight_of(j);
            std::vector<std::size_t> target;
            if (w.is_zero() || model.root_vectors.count(w))
                target = indices_of_weight(w);
            if (target.empty())
                throw NotClosed("bracket of " + basis[i].str() + ", " + basis[j].str() +
                                " leaves the span");
            std::vector<SuperMatrix> cands;
            for (std::size_t t : target) cands.push_back(matrices[t]);
            auto coords = express(cands, br);
            if (!coords)
                throw NotClosed("bracket of " + basis[i].str() + ", " + basis[j].str() +
                                " leaves the span");
            for (std::size_t t = 0; t < target.size(); ++t)
                if ((*coords)[t] != 0) table[i][j][static_cast<int>(target[t])] = (*coords)[t];
        }
    }

    RatMat gram(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram[i][j] = supertrace_form(model, matrices[i], matrices[j]);

    LieSuperalgebra alg = LieSuperalgebra::from_table(std::move(basis), std::move(table), gram);
    std::map<LatticeVector, std::vector<int>> grading;
    for (std::size_t i = ell; i < n; ++i) grading[order[i].first].push_back(static_cast<int>(i));
    alg.set_grading(std::move(grading));
    return alg;
}

RootSupersystem root_supersystem(const MatrixModel& model) {
    LieSuperalgebra alg = to_abstract(model);
    std::set<LatticeVector> roots;
    roots.insert(LatticeVector{});
    for (const auto& [w, vecs] : model.root_vectors) roots.insert(w);

    // standard symbol gram, then fit the supertrace scale on the root span
    std::size_t ns = model.weight_symbols.size();
    RatMat g0(ns, RatVec(ns, Rat(0)));
    for (std::size_t i = 0; i < ns; ++i)
        g0[i][i] = model.weight_symbols[i].kind == SymbolKind::Delta ? Rat(-1) : Rat(1);
    SymmetricForm standard(model.weight_symbols, g0);

    std::vector<LatticeVector> nonzero;
    for (const auto& w : roots)
        if (!w.is_zero()) nonzero.push_back(w);
    // (a, b) through the supertrace form: b(t_a), with one Cartan solve per root
    std::vector<int> cartan = alg.cartan_indices();
    std::size_t ell = cartan.size();
    RatMat cgram(ell, RatVec(ell));
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t j = 0; j < ell; ++j)
            cgram[i][j] = (*alg.form_gram())[static_cast<std::size_t>(cartan[j])]
                                            [static_cast<std::size_t>(cartan[i])];
    auto ginv = inverse(cgram);
    if (!ginv) throw BadIndexSets("supertrace form singular on the Cartan");
    std::map<LatticeVector, RatVec> action;  // weight -> (w(h_i))_i
    for (const auto& w : nonzero) {
        int idx = alg.grading().at(w).front();
        RatVec a(ell);
        for (std::size_t i = 0; i < ell; ++i) {
            const SparseVec& b = alg.bracket_basis(static_cast<std::size_t>(cartan[i]),
                                                   static_cast<std::size_t>(idx));
            auto it = b.find(idx);
            a[i] = it == b.end() ? Rat(0) : it->second;
        }
        action[w] = a;
    }
    auto str_form = [&](const LatticeVector& a, const LatticeVector& b) {
        RatVec t = matvec(*ginv, action.at(b));
        Rat acc(0);
        for (std::size_t i = 0; i < ell; ++i) acc += action.at(a)[i] * t[i];
        return acc;
    };
    Rat scale(0);
    for (const auto& a : nonzero) {
        for (const auto& b : nonzero) {
            Rat std_val = standard.eval(a, b);
            if (std_val != 0) {
                scale = str_form(a, b) / std_val;
                break;
            }
        }
        if (scale != 0) break;
    }
    if (scale == 0) throw BadIndexSets("degenerate induced form");
    for (const auto& a : nonzero)
        for (const auto& b : nonzero)
            if (str_form(a, b) != scale * standard.eval(a, b))
                throw BadIndexSets("supertrace form is not proportional on the root span");

    RootSupersystem sys(model.weight_symbols, standard.scaled(scale), roots, TypeDescriptor{});
    sys.set_descriptor(recognize(sys));
    return sys;
}

MatrixMap congruence_iso(const MatrixModel& model, const SuperMatrix& q2, const SuperMatrix& t) {
    if (t.parity() != Parity::Even) throw CongruenceFails("T must be even");
    // invert T over the model index set
    std::size_t n = model.indices.size();
    std::map<SuperIndex, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos[model.indices[i]] = i;
    RatMat dense(n, RatVec(n, Rat(0)));
    for (const auto& [r, row] : t.rows())
        for (const auto& [c, v] : row) dense[pos.at(r)][pos.at(c)] = v;
    auto inv = inverse(dense);
    if (!inv) throw CongruenceFails("T is singular");
    SuperMatrix tinv(Parity::Even);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((*inv)[i][j] != 0) tinv.set(model.indices[i], model.indices[j], (*inv)[i][j]);

    SuperMatrix check = matmul(supertranspose(t), matmul(model.q, t));
    if (!(check == q2)) throw CongruenceFails("T^st Q1 T != Q2");

    MatrixModel target = model;  // same index set, new defining matrix
    target.q = q2;

    MatrixMap map;
    auto matrices = model_matrices(model);
    for (const auto& x : matrices) {
        SuperMatrix y = matmul(tinv, matmul(x, t));
        if (!satisfies_defining_relation(target, y))
            throw CongruenceFails("image violates the Q2 relation");
        map.images.push_back(y);
    }
    // bracket preservation on basis pairs
    for (std::size_t i = 0; i < matrices.size(); ++i)
        for (std::size_t j = 0; j < matrices.size(); ++j) {
            SuperMatrix lhs = superbracket(map.images[i], map.images[j]);
            SuperMatrix b = superbracket(matrices[i], matrices[j]);
            SuperMatrix rhs = matmul(tinv, matmul(b, t));
            if (!(lhs == rhs)) throw CongruenceFails("conjugation is not a homomorphism");
        }
    return map;
}

Embedding embed(const MatrixModel& small, const MatrixModel& big) {
    if (small.kind != big.kind) throw NotSubset("different model kinds");
    if (small.m > big.m || small.n > big.n) throw NotSubset("index sets are not nested");
    if (small.quotient_center || big.quotient_center)
        throw NotSubset("central quotients do not embed by index inclusion");
    // Cartan goes into the Cartan
    for (const auto& h : small.cartan) {
        bool found = false;
        for (const auto& hb : big.cartan)
            if (h == hb) found = true;
        if (!found) throw NotSubset("small Cartan element missing upstairs");
    }
    // root vectors land on root vectors, verbatim
    for (const auto& [w, vecs] : small.root_vectors) {
        auto it = big.root_vectors.find(w);
        if (it == big.root_vectors.end()) throw NotSubset("weight " + w.str() + " missing upstairs");
        for (const auto& x : vecs) {
            bool found = false;
            for (const auto& y : it->second)
                if (x == y) found = true;
            if (!found) throw NotSubset("root vector at " + w.str() + " differs upstairs");
            if (!satisfies_defining_relation(big, x))
                throw NotSubset("root vector at " + w.str() + " violates the big relation");
        }
    }
    // identity on matrices is automatically injective and bracket preserving;
    // the structure tables still get an explicit audit
    auto ms = model_matrices(small);
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = 0; j < ms.size(); ++j) {
            SuperMatrix inside = model_bracket(small, ms[i], ms[j]);
            SuperMatrix outside = model_bracket(big, ms[i], ms[j]);
            if (!(inside == outside)) throw NotSubset("bracket changes under the embedding");
        }
    return Embedding{&small, &big};
}

ConstantsTable extract_constants(const MatrixModel& model, const TotalOrder& order,
                                 const std::map<RootPair, Rat>& seeds, const Rat& r_scale) {
    for (const auto& [w, vecs] : model.root_vectors)
        if (vecs.size() != 1)
            throw TypeA11Unsupported("two-dimensional root spaces in " + model.name());
    RootSupersystem sys = root_supersystem(model);
    LieSuperalgebra alg = to_abstract(model);

    auto [positives, signs] = order_and_signs(sys, order);
    PairClass pc = pair_classes(sys, order);

    // Cartan representative of alpha as a matrix
    auto t_matrix = [&](const LatticeVector& alpha) {
        RatVec t = cartan_representative(alg, alpha);
        SuperMatrix out(Parity::Even);
        for (std::size_t i = 0; i < model.cartan.size(); ++i) {
            if (t[i] == 0) continue;
            SuperMatrix h = model.cartan[i];
            h *= t[i];
            out += h;
        }
        return out;
    };

    std::map<LatticeVector, SuperMatrix> e;
    // positive side, ascending: seeds pin the extraspecial sums
    for (const auto& a : positives) {
        bool is_extra_sum = false;
        RootPair ex;
        auto it = pc.extraspecial.find(a);
        if (it != pc.extraspecial.end()) {
            is_extra_sum = true;
            ex = it->second;
        }
        if (!is_extra_sum) {
            e[a] = model.root_vectors.at(a).front();
        } else {
            auto seed_it = seeds.find(ex);
            if (seed_it == seeds.end())
                throw SeedMissing("extraspecial pair " + ex.first.str() + ", " + ex.second.str());
            SuperMatrix br = model_bracket(model, e.at(ex.first), e.at(ex.second));
            if (br.is_zero())
                throw ZeroBracket("extraspecial bracket vanishes at " + a.str());
            br *= Rat(1) / seed_it->second;
            e[a] = br;
        }
    }
    // negative side: [e_a, e_{-a}] = h_a = r_scale * t_a
    for (const auto& a : positives) {
        SuperMatrix v = model.root_vectors.at(-a).front();
        SuperMatrix br = model_bracket(model, e.at(a), v);
        SuperMatrix h = t_matrix(a);
        h *= r_scale;
        if (br.is_zero()) throw ZeroBracket("pairing bracket vanishes at " + a.str());
        // h = c * br for a scalar c
        Rat c(0);
        for (const auto& [r, row] : br.rows()) {
            for (const auto& [col, val] : row) {
                c = h.entry(r, col) / val;
                break;
            }
            break;
        }
        SuperMatrix scaled = br;
        scaled *= c;
        if (!(scaled == h) || c == 0)
            throw ZeroBracket("[e_a, L^{-a}] is not proportional to h_a at " + a.str());
        v *= c;
        e[-a] = v;
    }

    ConstantsTable table;
    table.signs = signs;
    table.r_scale = r_scale;
    table.seeds = seeds;
    std::vector<LatticeVector> nonzero = sorted_roots(sys);
    for (const auto& a : nonzero) {
        for (const auto& b : nonzero) {
            LatticeVector sum = a + b;
            SuperMatrix br = model_bracket(model, e.at(a), e.at(b));
            if (sum.is_zero()) continue;
            if (!sys.is_root(sum)) {
                if (!br.is_zero()) throw ZeroBracket("unexpected nonzero bracket at " + a.str() +
                                                     ", " + b.str());
                continue;
            }
            if (br.is_zero()) throw ZeroBracket("vanishing constant at " + a.str() + ", " + b.str());
            const SuperMatrix& target = e.at(sum);
            Rat ratio(0);
            bool first = true;
            for (const auto& [r, row] : target.rows()) {
                for (const auto& [col, val] : row) {
                    Rat num = br.entry(r, col);
                    if (first) {
                        ratio = num / val;
                        first = false;
                    }
                }
            }
            SuperMatrix scaled = target;
            scaled *= ratio;
            if (!(scaled == br))
                throw ZeroBracket("bracket is not proportional to the root vector at " + a.str() +
                                  ", " + b.str());
            table.n[{a, b}] = ratio;
        }
    }

    IntegralBase base = integral_base(sys);
    table.cartan_base = base.roots;
    RatMat solver(sys.basis().size(), RatVec(base.roots.size(), Rat(0)));
    for (std::size_t j = 0; j < base.roots.size(); ++j) {
        RatVec col = dense_coords(base.roots[j], sys.basis());
        for (std::size_t i = 0; i < sys.basis().size(); ++i) solver[i][j] = col[i];
    }
    for (const auto& a : nonzero) {
        auto coords = solve(solver, dense_coords(a, sys.basis()));
        if (!coords) throw InternalInconsistency("root outside its lattice: " + a.str());
        table.h_coords[a] = *coords;
    }
    return table;
}

}  // namespace lfrs
