#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tq/ccr.hpp"
#include "tq/model_config.hpp"
#include "tq/quantize.hpp"
#include "tq/render.hpp"

using json = nlohmann::ordered_json;

namespace {

bool color_enabled() {
    const char* v = std::getenv("TQ_COLOR");
    if (v) return std::string(v) == "1";
    return isatty(fileno(stderr));
}

void print_diag(const std::string& file, const tq::Diagnostic& d) {
    bool color = color_enabled();
    std::cerr << file;
    if (d.line > 0) std::cerr << ":" << d.line << ":" << d.col;
    std::cerr << ": " << (color ? "\033[31merror:\033[0m " : "error: ") << d.message << "\n";
}

void print_error(const std::string& msg) {
    std::cerr << (color_enabled() ? "\033[31merror:\033[0m " : "error: ") << msg << "\n";
}

json model_json(const tq::ModelConfig& cfg) {
    json m;
    m["generators"] = cfg.generators;
    switch (cfg.gram_kind) {
        case tq::GramKind::bargmann: m["gram"] = "bargmann"; break;
        case tq::GramKind::qbargmann: m["gram"] = "q-bargmann"; break;
        case tq::GramKind::explicit_blocks: m["gram"] = "explicit"; break;
    }
    json params = json::object();
    for (const auto& [k, v] : cfg.params) params[k] = v.str();
    m["params"] = params;
    m["degree"] = cfg.degree;
    m["dmax"] = cfg.dmax;
    return m;
}

json matrix_json(const tq::ScalarMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(tq::scalar_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json relation_json(const tq::Relation& r, const std::vector<std::string>& names) {
    json terms = json::array();
    for (auto it = r.terms.rbegin(); it != r.terms.rend(); ++it)
        terms.push_back(
            {{"word", tq::word_str(it->first, names)}, {"coeff", tq::scalar_str(it->second)}});
    return {{"text", tq::relation_str(r, names)}, {"terms", std::move(terms)}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

struct Opts {
    std::string model_path;
    std::string symbol;
    int degree = -1;
    int dmax = -1;
    int trials = 20;
    unsigned long long seed = 1;
    int table_degree = 10;
};

int run_check(const tq::ModelConfig& cfg, const Opts& opt) {
    tq::Model model = tq::build_model(cfg);
    json doc;
    doc["command"] = "check";
    doc["model"] = model_json(cfg);

    json conf;
    tq::ConfluenceReport crep = tq::check_confluence(model.pres, 3);
    conf["degree_bound"] = crep.degree_bound;
    conf["consistent"] = crep.consistent();
    json fails = json::array();
    for (const auto& f : crep.failures) {
        std::string w;
        for (int g : f.word) {
            if (!w.empty()) w += ' ';
            w += cfg.generators[static_cast<std::size_t>(g)];
        }
        fails.push_back({{"word", w},
                         {"leftmost", tq::poly_str(f.left, cfg.generators)},
                         {"rightmost", tq::poly_str(f.right, cfg.generators)}});
    }
    conf["failures"] = std::move(fails);
    doc["confluence"] = std::move(conf);

    if (!crep.consistent()) {
        doc["pass"] = false;
        emit(doc);
        return 1;
    }

    tq::AxiomReport arep = tq::verify_axioms(model, cfg.degree, opt.trials, opt.seed);
    json ax;
    ax["degree"] = arep.degree;
    ax["trials"] = arep.trials;
    ax["seed"] = arep.seed;
    json checks = json::array();
    for (const auto& c : arep.checks) {
        json e = {{"name", c.name}, {"pass", c.pass}};
        if (!c.pass) e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    ax["checks"] = std::move(checks);
    ax["all_pass"] = arep.all_pass();
    doc["axioms"] = std::move(ax);
    doc["pass"] = arep.all_pass();
    emit(doc);
    return arep.all_pass() ? 0 : 1;
}

int run_quantize(const tq::ModelConfig& cfg, const Opts& opt, const std::string& file) {
    std::vector<tq::Diagnostic> diags;
    tq::SymbolElem g = tq::parse_symbol_expr(opt.symbol, cfg, diags);
    if (!diags.empty()) {
        for (const auto& d : diags) print_diag("<symbol>", d);
        return 2;
    }
    (void)file;
    tq::Model model = tq::build_model(cfg);
    tq::Space sp = tq::build_space(cfg.degree, model.pres, model.gram);
    tq::TruncatedOperator t = tq::toeplitz_op(g, sp, model.pres);

    json doc;
    doc["command"] = "quantize";
    doc["model"] = model_json(cfg);
    doc["symbol"] = tq::symbol_str(g, cfg.generators);
    json basis = json::array();
    json col_valid = json::array();
    for (int i = 0; i < sp.dim(); ++i) {
        basis.push_back(tq::monomial_str(sp.elems[i], cfg.generators));
        col_valid.push_back(sp.degree_of(i) <= t.valid_in_degree);
    }
    doc["basis"] = std::move(basis);
    doc["matrix"] = matrix_json(t.mat);
    doc["raise"] = t.raise;
    doc["valid_in_degree"] = t.valid_in_degree;
    doc["columns_valid"] = std::move(col_valid);
    emit(doc);
    return 0;
}

int require_ccr_config(const tq::ModelConfig& cfg, const char* cmd) {
    if (cfg.degree < 2 * cfg.dmax) {
        print_error(std::string(cmd) + " requires degree >= 2*dmax (have degree " +
                    std::to_string(cfg.degree) + ", dmax " + std::to_string(cfg.dmax) + ")");
        return 2;
    }
    auto it = cfg.params.find("hbar");
    if (it != cfg.params.end() && !(it->second == tq::Rational(1))) {
        print_error(std::string(cmd) + " requires the model at hbar = 1");
        return 2;
    }
    return 0;
}

json finding_json(const tq::RelationFinding& f, const std::vector<std::string>& names) {
    json doc;
    doc["dmax"] = f.dmax;
    doc["certified_at"] = {f.D, f.D + 2};
    doc["dim_at_D"] = f.dim_at_D;
    doc["dim_at_D+2"] = f.dim_at_D2;
    json rels = json::array();
    for (const auto& r : f.relations) rels.push_back(relation_json(r, names));
    doc["relations"] = std::move(rels);
    doc["note"] =
        "vector-space basis of the evaluation kernel on words of degree <= dmax, "
        "certified at both truncations; ideal-generator minimality is not attempted";
    return doc;
}

int run_relations(const tq::ModelConfig& cfg, const Opts&) {
    if (int rc = require_ccr_config(cfg, "relations")) return rc;
    tq::Model model = tq::build_model(cfg);
    tq::RelationFinding f = tq::find_relations(model, cfg.dmax, cfg.degree);
    json doc;
    doc["command"] = "relations";
    doc["model"] = model_json(cfg);
    doc.update(finding_json(f, cfg.generators));
    emit(doc);
    return 0;
}

int run_deform(const tq::ModelConfig& cfg, const Opts&) {
    if (int rc = require_ccr_config(cfg, "deform")) return rc;
    tq::Model model = tq::build_model(cfg);
    tq::RelationFinding f = tq::find_relations(model, cfg.dmax, cfg.degree);
    json doc;
    doc["command"] = "deform";
    doc["model"] = model_json(cfg);
    doc["certified_at"] = {f.D, f.D + 2};
    json rels = json::array();
    for (const auto& r : f.relations) {
        tq::DeformedRelation d = tq::hbar_deform(r);
        tq::ClassicalRelation cl = tq::classical_relation(r, model);
        json parts = json::array();
        for (const auto& p : tq::homogeneous_parts(r))
            parts.push_back(tq::relation_str(p, cfg.generators));
        rels.push_back({{"relation", tq::relation_str(r, cfg.generators)},
                        {"top_degree", r.top_degree()},
                        {"parts", std::move(parts)},
                        {"deformed", tq::deformed_str(d, cfg.generators)},
                        {"classical", tq::relation_str(cl.part, cfg.generators)},
                        {"classical_in_kernel", cl.in_kernel}});
    }
    doc["relations"] = std::move(rels);
    emit(doc);
    return 0;
}

int run_dequantize(const tq::ModelConfig& cfg, const Opts& opt) {
    if (int rc = require_ccr_config(cfg, "dequantize")) return rc;
    tq::Model model = tq::build_model(cfg);
    tq::RelationFinding f = tq::find_relations(model, cfg.dmax, cfg.degree);
    tq::DqReport rep = tq::dequantize(f.relations, static_cast<int>(cfg.generators.size()),
                                      opt.table_degree);
    json doc;
    doc["command"] = "dequantize";
    doc["model"] = model_json(cfg);
    doc["certified_at"] = {f.D, f.D + 2};
    json gens = json::array();
    for (const auto& name : cfg.generators) gens.push_back("G[" + name + "]");
    for (const auto& name : cfg.generators) gens.push_back("G[" + name + "*]");
    doc["dq_generators"] = std::move(gens);
    json cls = json::array();
    for (const auto& r : rep.classical) cls.push_back(tq::relation_str(r, cfg.generators));
    doc["classical_relations"] = std::move(cls);
    doc["graded_dims"] = rep.graded_dims;
    doc["dimension_bound"] = rep.bound;
    emit(doc);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tq: exact Toeplitz quantization on noncommutative polynomial models"};
    app.require_subcommand(1);
    Opts opt;

    auto add_common = [&](CLI::App* sc) {
        sc->add_option("--model", opt.model_path, "model file")->required();
        sc->add_option("--degree", opt.degree, "override the truncation degree");
        sc->add_option("--dmax", opt.dmax, "override the ccr word degree bound");
        sc->add_option("--trials", opt.trials, "randomized trials for identity checks");
        sc->add_option("--seed", opt.seed, "random seed");
    };

    CLI::App* sc_check =
        app.add_subcommand("check", "validate confluence and the operator identities");
    add_common(sc_check);
    CLI::App* sc_quant = app.add_subcommand("quantize", "exact matrix of a Toeplitz operator");
    add_common(sc_quant);
    sc_quant->add_option("symbol", opt.symbol, "symbol expression, e.g. \"z z*\"")->required();
    CLI::App* sc_rel = app.add_subcommand("relations", "discover commutation relations");
    add_common(sc_rel);
    CLI::App* sc_def = app.add_subcommand("deform", "hbar-deform the discovered relations");
    add_common(sc_def);
    CLI::App* sc_dq = app.add_subcommand("dequantize", "present the dequantized algebra");
    add_common(sc_dq);
    sc_dq->add_option("--table-degree", opt.table_degree,
                      "degree bound of the dimension table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::ifstream in(opt.model_path);
    if (!in) {
        print_error("cannot open model file " + opt.model_path);
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    bool is_check = app.got_subcommand(sc_check);
    tq::ParseResult parsed = tq::parse_model(buf.str(), !is_check);
    if (!parsed.ok()) {
        for (const auto& d : parsed.diagnostics) print_diag(opt.model_path, d);
        return 2;
    }
    tq::ModelConfig cfg = parsed.config;
    if (opt.degree != -1) {
        if (opt.degree < 0 || opt.degree > 64) {
            print_error("degree out of range (0..64)");
            return 2;
        }
        cfg.degree = opt.degree;
    }
    if (opt.dmax != -1) {
        if (opt.dmax < 1 || opt.dmax > 8) {
            print_error("dmax out of range (1..8)");
            return 2;
        }
        cfg.dmax = opt.dmax;
    }
    if (opt.trials < 1) {
        print_error("trials must be at least 1");
        return 2;
    }
    if (opt.table_degree < 0 || opt.table_degree > 16) {
        print_error("table-degree out of range (0..16)");
        return 2;
    }

    try {
        if (is_check) return run_check(cfg, opt);
        if (app.got_subcommand(sc_quant)) return run_quantize(cfg, opt, opt.model_path);
        if (app.got_subcommand(sc_rel)) return run_relations(cfg, opt);
        if (app.got_subcommand(sc_def)) return run_deform(cfg, opt);
        if (app.got_subcommand(sc_dq)) return run_dequantize(cfg, opt);
    } catch (const std::exception& e) {
        print_error(e.what());
        return 2;
    }
    return 2;
}
