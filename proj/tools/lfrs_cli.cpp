// Command line frontend: build / check / chevalley / realize / extract /
// compare / audit over the JSON schemas rootsys.v1, constants.v1,
// superalg.v1, model.v1.
//
// Exit codes: 0 success, 1 audit violation or comparison mismatch, 2 usage
// or input errors. All output is canonical and deterministic.

#include "lfrs/chevalley.hpp"
#include "lfrs/compare.hpp"
#include "lfrs/json_io.hpp"
#include "lfrs/realize.hpp"
#include "lfrs/rootsys.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace lfrs;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string out_path(const std::string& name) {
    if (name.empty()) return name;
    if (name.front() == '/' || name.front() == '.') return name;
    const char* dir = std::getenv("LFRS_OUT_DIR");
    if (!dir || !*dir) return name;
    return std::string(dir) + "/" + name;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

void emit(const json& j, const std::string& out, bool quiet) {
    std::string text = canonical_dump(j);
    if (out.empty()) {
        if (!quiet) std::cout << text;
        return;
    }
    std::ofstream f(out_path(out));
    if (!f) throw UsageError("cannot write '" + out + "'");
    f << text;
}

// flags win over config-file values
template <typename T>
void config_default(const json& cfg, const std::string& key, CLI::Option* opt, T& slot) {
    if (!cfg.contains(key) || !opt || opt->count() > 0) return;
    slot = cfg.at(key).get<T>();
}

TypeDescriptor descriptor_from_flags(const std::string& family, const std::vector<int>& ranks,
                                     const std::string& lambda) {
    auto fam = family_parse(family);
    if (!fam) throw UsageError("unknown family '" + family + "'");
    Rat lam(0);
    if (!lambda.empty()) lam = rat_parse(lambda);
    return dispatch_descriptor(*fam, ranks, lam);
}

// "1", "2/3", or "random" (deterministic, driven by --rng-seed)
std::map<RootPair, Rat> make_seeds(const RootSupersystem& r, const TotalOrder& order,
                                   const std::string& spec, unsigned long rng_seed) {
    if (spec != "random") return uniform_seeds(r, order, rat_parse(spec));
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<int> num(1, 9), den(1, 9), sign(0, 1);
    std::map<RootPair, Rat> seeds;
    for (const auto& [sum, pair] : pair_classes(r, order).extraspecial) {
        Rat v(num(rng), den(rng));
        if (sign(rng)) v = -v;
        seeds[pair] = v;
    }
    return seeds;
}

RootSupersystem system_from_file(const json& j) {
    std::string schema = j.at("schema").get<std::string>();
    if (schema == "rootsys.v1") return rootsys_from_json(j);
    if (schema == "model.v1") return root_supersystem(model_from_json(j));
    throw UsageError("expected rootsys.v1 or model.v1, got '" + schema + "'");
}

int run(int argc, char** argv) {
    CLI::App app{"exact computer algebra for locally finite root supersystems"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    bool quiet = false;
    std::string config_path;
    app.add_flag("--quiet", quiet, "suppress reports; exit codes stay authoritative");
    app.add_option("--config", config_path, "JSON config file; flags take precedence");

    auto* cmd_build = app.add_subcommand("build", "construct a root supersystem");
    std::string family, lambda, out;
    std::vector<int> ranks;
    auto* f_opt = cmd_build->add_option("--family", family, "family name (A, B, ..., B(T,T'), ...)");
    auto* r_opt = cmd_build->add_option("--ranks", ranks, "rank tuple")->delimiter(',');
    auto* l_opt = cmd_build->add_option("--lambda", lambda, "parameter for D(2,1,lambda)");
    cmd_build->add_option("--out", out, "output file (defaults to stdout)");

    auto* cmd_check = app.add_subcommand("check", "axiom and remark audits on a rootsys file");
    std::string check_file;
    cmd_check->add_option("file", check_file)->required();

    auto* cmd_chev = app.add_subcommand("chevalley", "structure constants from free seeds");
    std::string chev_file, chev_seeds = "1", chev_scale = "1", chev_out;
    unsigned long rng_seed = 1;
    cmd_chev->add_option("file", chev_file, "rootsys.v1 or model.v1 input")->required();
    cmd_chev->add_option("--seeds", chev_seeds, "seed value or 'random'");
    cmd_chev->add_option("--scale", chev_scale, "rScale");
    cmd_chev->add_option("--rng-seed", rng_seed, "rng seed for --seeds random");
    cmd_chev->add_option("--out", chev_out);

    auto* cmd_real = app.add_subcommand("realize", "matrix superalgebra model");
    std::string kind, real_out;
    int opt_i = 0, opt_j = 0;
    bool with_algebra = false;
    auto* k_opt = cmd_real->add_option("--kind", kind, "osp-odd | osp-even | sl");
    auto* i_opt = cmd_real->add_option("--I", opt_i, "|I| (even part size for sl)");
    auto* j_opt = cmd_real->add_option("--J", opt_j, "|J| (odd part size for sl)");
    cmd_real->add_flag("--algebra", with_algebra, "embed the structure table");
    cmd_real->add_option("--out", real_out);

    auto* cmd_ext = app.add_subcommand("extract", "constants read off a matrix model");
    std::string ext_file, ext_seeds = "1", ext_scale = "1", ext_out;
    unsigned long ext_rng = 1;
    cmd_ext->add_option("file", ext_file, "model.v1 input")->required();
    cmd_ext->add_option("--seeds", ext_seeds);
    cmd_ext->add_option("--scale", ext_scale);
    cmd_ext->add_option("--rng-seed", ext_rng);
    cmd_ext->add_option("--out", ext_out);

    auto* cmd_cmp = app.add_subcommand("compare", "exact equality of two constants files");
    std::string cmp_a, cmp_b;
    cmd_cmp->add_option("a", cmp_a)->required();
    cmd_cmp->add_option("b", cmp_b)->required();

    auto* cmd_audit = app.add_subcommand("audit", "structure constant identity audit");
    std::string audit_file;
    cmd_audit->add_option("file", audit_file, "constants.v1 input")->required();

    for (CLI::App* sub : {cmd_build, cmd_check, cmd_chev, cmd_real, cmd_ext, cmd_cmp, cmd_audit})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    json cfg;
    if (!config_path.empty()) cfg = load_json(config_path);

    if (*cmd_build) {
        config_default(cfg, "family", f_opt, family);
        config_default(cfg, "ranks", r_opt, ranks);
        config_default(cfg, "lambda", l_opt, lambda);
        if (family.empty()) throw UsageError("build needs --family");
        auto sys = build(descriptor_from_flags(family, ranks, lambda));
        emit(rootsys_to_json(sys), out, false);
        return 0;
    }
    if (*cmd_check) {
        auto sys = system_from_file(load_json(check_file));
        AxiomReport rep = check_axioms(sys);
        Family fam = sys.descriptor().family;
        NonrootReport rem;
        bool rem_applies = (fam == Family::CTT || fam == Family::BCTT || fam == Family::C1T) &&
                           sys.descriptor().ranks.size() == 2 && sys.descriptor().ranks[1] > 1;
        if (rem_applies) rem = nonroot_audit(sys);
        if (!quiet) {
            std::cout << "descriptor: " << sys.descriptor().str() << "\n";
            std::cout << "axioms: " << (rep.ok() ? "pass" : "FAIL") << "\n";
            for (const auto& v : rep.violations) std::cout << "  " << v << "\n";
            if (rem_applies) {
                std::cout << "non-root exclusion audit: " << (rem.ok() ? "pass" : "FAIL") << "\n";
                for (const auto& v : rem.violations) std::cout << "  " << v << "\n";
            }
        }
        return rep.ok() && rem.ok() ? 0 : 1;
    }
    if (*cmd_chev) {
        auto sys = system_from_file(load_json(chev_file));
        TotalOrder order = TotalOrder::symbol_order(sys.basis());
        auto seeds = make_seeds(sys, order, chev_seeds, rng_seed);
        auto table = constants_from_seeds(sys, order, seeds, rat_parse(chev_scale));
        emit(constants_to_json(table, sys), chev_out, false);
        return 0;
    }
    if (*cmd_real) {
        config_default(cfg, "kind", k_opt, kind);
        config_default(cfg, "I", i_opt, opt_i);
        config_default(cfg, "J", j_opt, opt_j);
        ModelKind mk;
        if (kind == "osp-odd") mk = ModelKind::OspOdd;
        else if (kind == "osp-even") mk = ModelKind::OspEven;
        else if (kind == "sl") mk = ModelKind::Sl;
        else throw UsageError("unknown kind '" + kind + "'");
        auto model = build_model(mk, opt_i, opt_j);
        emit(model_to_json(model, with_algebra), real_out, false);
        return 0;
    }
    if (*cmd_ext) {
        auto model = model_from_json(load_json(ext_file));
        auto sys = root_supersystem(model);
        TotalOrder order = TotalOrder::symbol_order(sys.basis());
        auto seeds = make_seeds(sys, order, ext_seeds, ext_rng);
        auto table = extract_constants(model, order, seeds, rat_parse(ext_scale));
        emit(constants_to_json(table, sys), ext_out, false);
        return 0;
    }
    if (*cmd_cmp) {
        std::string a = canonical_dump(load_json(cmp_a));
        std::string b = canonical_dump(load_json(cmp_b));
        if (a == b) {
            if (!quiet) std::cout << "equal\n";
            return 0;
        }
        if (!quiet) std::cout << "DIFFER\n";
        return 1;
    }
    if (*cmd_audit) {
        auto [table, sys] = constants_from_json(load_json(audit_file));
        TotalOrder order = TotalOrder::symbol_order(sys.basis());
        CheckReport rep = verify_constants(sys, order, table);
        if (!quiet) {
            std::cout << "identities: " << (rep.ok() ? "pass" : "FAIL") << "\n";
            for (const auto& v : rep.violations) std::cout << "  " << v << "\n";
        }
        return rep.ok() ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
