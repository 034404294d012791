#include "lfrs/json_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace lfrs {

using nlohmann::json;

namespace {

json symbol_to_json(const BasisSymbol& s) {
    json j;
    switch (s.kind) {
        case SymbolKind::Eps: j["kind"] = "eps"; j["idx"] = s.index; break;
        case SymbolKind::Delta: j["kind"] = "delta"; j["idx"] = s.index; break;
        case SymbolKind::AlphaStar: j["kind"] = "alphastar"; break;
    }
    return j;
}

BasisSymbol symbol_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "eps") return eps(j.at("idx").get<int>());
    if (kind == "delta") return delta(j.at("idx").get<int>());
    if (kind == "alphastar") return alphastar();
    throw std::invalid_argument("unknown symbol kind '" + kind + "'");
}

json vector_to_json(const LatticeVector& v, const std::vector<BasisSymbol>& basis) {
    json arr = json::array();
    for (const auto& c : dense_coords(v, basis)) arr.push_back(rat_str(c));
    return arr;
}

LatticeVector vector_from_json(const json& j, const std::vector<BasisSymbol>& basis) {
    if (j.size() != basis.size()) throw std::invalid_argument("coordinate arity mismatch");
    LatticeVector v;
    for (std::size_t i = 0; i < basis.size(); ++i)
        v.set(basis[i], rat_parse(j[i].get<std::string>()));
    return v;
}

json descriptor_to_json(const TypeDescriptor& d) {
    json j;
    j["family"] = family_str(d.family);
    j["ranks"] = d.ranks;
    if (d.family == Family::D21L) j["lambda"] = rat_str(d.lambda);
    return j;
}

TypeDescriptor descriptor_from_json(const json& j) {
    TypeDescriptor d;
    auto fam = family_parse(j.at("family").get<std::string>());
    if (!fam) throw std::invalid_argument("unknown family '" + j.at("family").get<std::string>() + "'");
    d.family = *fam;
    d.ranks = j.at("ranks").get<std::vector<int>>();
    if (j.contains("lambda")) d.lambda = rat_parse(j.at("lambda").get<std::string>());
    return d;
}

}  // namespace

json rootsys_to_json(const RootSupersystem& r) {
    json j;
    j["schema"] = "rootsys.v1";
    json basis = json::array();
    for (const auto& s : r.basis()) basis.push_back(symbol_to_json(s));
    j["basis"] = basis;
    json gram = json::array();
    for (const auto& row : r.form().gram()) {
        json jrow = json::array();
        for (const auto& x : row) jrow.push_back(rat_str(x));
        gram.push_back(jrow);
    }
    j["form"] = gram;
    json roots = json::array();
    for (const auto& v : sorted_roots(r, /*include_zero=*/true))
        roots.push_back(vector_to_json(v, r.basis()));
    j["roots"] = roots;
    j["descriptor"] = descriptor_to_json(r.descriptor());
    return j;
}

RootSupersystem rootsys_from_json(const json& j) {
    if (j.at("schema").get<std::string>() != "rootsys.v1")
        throw std::invalid_argument("expected schema rootsys.v1");
    std::vector<BasisSymbol> basis;
    for (const auto& js : j.at("basis")) basis.push_back(symbol_from_json(js));
    RatMat gram;
    for (const auto& jrow : j.at("form")) {
        RatVec row;
        for (const auto& x : jrow) row.push_back(rat_parse(x.get<std::string>()));
        gram.push_back(std::move(row));
    }
    std::set<LatticeVector> roots;
    for (const auto& jv : j.at("roots")) roots.insert(vector_from_json(jv, basis));
    return RootSupersystem(basis, SymmetricForm(basis, gram), roots,
                           descriptor_from_json(j.at("descriptor")));
}

json constants_to_json(const ConstantsTable& t, const RootSupersystem& r) {
    json j;
    j["schema"] = "constants.v1";
    json order = json::array();
    for (const auto& s : r.basis()) order.push_back(symbol_to_json(s));
    j["order"] = order;
    j["rScale"] = rat_str(t.r_scale);
    json seeds = json::array();
    for (const auto& [pair, value] : t.seeds) {
        json js;
        js["a"] = vector_to_json(pair.first, r.basis());
        js["b"] = vector_to_json(pair.second, r.basis());
        js["N"] = rat_str(value);
        seeds.push_back(js);
    }
    j["seeds"] = seeds;
    json table = json::array();
    for (const auto& [pair, value] : t.n) {
        json jn;
        jn["a"] = vector_to_json(pair.first, r.basis());
        jn["b"] = vector_to_json(pair.second, r.basis());
        jn["val"] = rat_str(value);
        table.push_back(jn);
    }
    j["N"] = table;
    json base = json::array();
    for (const auto& v : t.cartan_base) base.push_back(vector_to_json(v, r.basis()));
    j["cartanBase"] = base;
    j["rootsys"] = rootsys_to_json(r);
    return j;
}

std::pair<ConstantsTable, RootSupersystem> constants_from_json(const json& j) {
    if (j.at("schema").get<std::string>() != "constants.v1")
        throw std::invalid_argument("expected schema constants.v1");
    RootSupersystem r = rootsys_from_json(j.at("rootsys"));
    std::vector<BasisSymbol> order_syms;
    for (const auto& js : j.at("order")) order_syms.push_back(symbol_from_json(js));
    TotalOrder order = TotalOrder::symbol_order(order_syms);

    ConstantsTable t;
    t.r_scale = rat_parse(j.at("rScale").get<std::string>());
    auto [positives, signs] = order_and_signs(r, order);
    t.signs = signs;
    for (const auto& js : j.at("seeds"))
        t.seeds[{vector_from_json(js.at("a"), r.basis()), vector_from_json(js.at("b"), r.basis())}] =
            rat_parse(js.at("N").get<std::string>());
    for (const auto& jn : j.at("N"))
        t.n[{vector_from_json(jn.at("a"), r.basis()), vector_from_json(jn.at("b"), r.basis())}] =
            rat_parse(jn.at("val").get<std::string>());
    for (const auto& jv : j.at("cartanBase")) t.cartan_base.push_back(vector_from_json(jv, r.basis()));

    RatMat solver(r.basis().size(), RatVec(t.cartan_base.size(), Rat(0)));
    for (std::size_t col = 0; col < t.cartan_base.size(); ++col) {
        RatVec dense = dense_coords(t.cartan_base[col], r.basis());
        for (std::size_t row = 0; row < r.basis().size(); ++row) solver[row][col] = dense[row];
    }
    for (const auto& v : r.roots()) {
        if (v.is_zero()) continue;
        auto coords = solve(solver, dense_coords(v, r.basis()));
        if (!coords) throw std::invalid_argument("cartanBase does not span the root lattice");
        t.h_coords[v] = *coords;
    }
    return {std::move(t), std::move(r)};
}

json superalg_to_json(const LieSuperalgebra& l) {
    json j;
    j["schema"] = "superalg.v1";
    std::set<BasisSymbol> symset;
    for (const auto& e : l.basis())
        if (e.kind == GradedBasisElement::Kind::Root)
            for (const auto& [s, c] : e.root.coords()) symset.insert(s);
    std::vector<BasisSymbol> symbols(symset.begin(), symset.end());
    json jsyms = json::array();
    for (const auto& s : symbols) jsyms.push_back(symbol_to_json(s));
    j["symbols"] = jsyms;

    json basis = json::array();
    for (const auto& e : l.basis()) {
        json je;
        je["parity"] = static_cast<int>(e.parity);
        if (e.kind == GradedBasisElement::Kind::Cartan) {
            je["kind"] = "cartan";
            je["idx"] = e.cartan_index;
        } else {
            je["kind"] = "root";
            je["root"] = vector_to_json(e.root, symbols);
            je["slot"] = e.slot;
        }
        basis.push_back(je);
    }
    j["basis"] = basis;
    json table = json::array();
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t k = 0; k < l.dim(); ++k)
            for (const auto& [target, c] : l.bracket_basis(i, k))
                table.push_back(json::array(
                    {static_cast<int>(i), static_cast<int>(k), target, rat_str(c)}));
    j["table"] = table;
    if (l.form_gram()) {
        json gram = json::array();
        for (const auto& row : *l.form_gram()) {
            json jrow = json::array();
            for (const auto& x : row) jrow.push_back(rat_str(x));
            gram.push_back(jrow);
        }
        j["form"] = gram;
    }
    return j;
}

LieSuperalgebra superalg_from_json(const json& j) {
    if (j.at("schema").get<std::string>() != "superalg.v1")
        throw std::invalid_argument("expected schema superalg.v1");
    std::vector<BasisSymbol> symbols;
    for (const auto& js : j.at("symbols")) symbols.push_back(symbol_from_json(js));
    std::vector<GradedBasisElement> basis;
    for (const auto& je : j.at("basis")) {
        GradedBasisElement e;
        e.parity = je.at("parity").get<int>() ? Parity::Odd : Parity::Even;
        if (je.at("kind").get<std::string>() == "cartan") {
            e.kind = GradedBasisElement::Kind::Cartan;
            e.cartan_index = je.at("idx").get<int>();
        } else {
            e.kind = GradedBasisElement::Kind::Root;
            e.root = vector_from_json(je.at("root"), symbols);
            e.slot = je.at("slot").get<int>();
        }
        basis.push_back(e);
    }
    std::vector<std::vector<SparseVec>> table(basis.size(), std::vector<SparseVec>(basis.size()));
    for (const auto& jt : j.at("table"))
        table[jt[0].get<std::size_t>()][jt[1].get<std::size_t>()][jt[2].get<int>()] =
            rat_parse(jt[3].get<std::string>());
    std::optional<RatMat> gram;
    if (j.contains("form")) {
        RatMat g;
        for (const auto& jrow : j.at("form")) {
            RatVec row;
            for (const auto& x : jrow) row.push_back(rat_parse(x.get<std::string>()));
            g.push_back(std::move(row));
        }
        gram = std::move(g);
    }
    LieSuperalgebra l = LieSuperalgebra::from_table(std::move(basis), std::move(table), std::move(gram));
    std::map<LatticeVector, std::vector<int>> grading;
    for (std::size_t i = 0; i < l.dim(); ++i)
        if (l.basis()[i].kind == GradedBasisElement::Kind::Root)
            grading[l.basis()[i].root].push_back(static_cast<int>(i));
    l.set_grading(std::move(grading));
    return l;
}

json model_to_json(const MatrixModel& m, bool with_algebra) {
    json j;
    j["schema"] = "model.v1";
    switch (m.kind) {
        case ModelKind::OspOdd: j["kind"] = "osp-odd"; break;
        case ModelKind::OspEven: j["kind"] = "osp-even"; break;
        case ModelKind::Sl: j["kind"] = "sl"; break;
    }
    j["I"] = m.m;
    j["J"] = m.n;
    if (with_algebra) j["algebra"] = superalg_to_json(to_abstract(m));
    return j;
}

MatrixModel model_from_json(const json& j) {
    if (j.at("schema").get<std::string>() != "model.v1")
        throw std::invalid_argument("expected schema model.v1");
    std::string kind = j.at("kind").get<std::string>();
    ModelKind k;
    if (kind == "osp-odd") k = ModelKind::OspOdd;
    else if (kind == "osp-even") k = ModelKind::OspEven;
    else if (kind == "sl") k = ModelKind::Sl;
    else throw std::invalid_argument("unknown model kind '" + kind + "'");
    return build_model(k, j.at("I").get<int>(), j.at("J").get<int>());
}

json algebra_map_to_json(const AlgebraMap& map) {
    json j;
    j["schema"] = "algebramap.v1";
    j["source"] = superalg_to_json(*map.source);
    j["target"] = superalg_to_json(*map.target);
    j["iso"] = map.iso_flag;
    json m = json::array();
    for (const auto& row : map.matrix) {
        json jrow = json::array();
        for (const auto& x : row) jrow.push_back(rat_str(x));
        m.push_back(jrow);
    }
    j["matrix"] = m;
    return j;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace lfrs
