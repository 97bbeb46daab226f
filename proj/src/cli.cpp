#include "weylinv/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "weylinv/coker.hpp"
#include "weylinv/generators.hpp"
#include "weylinv/rings.hpp"
#include "weylinv/theta.hpp"
#include "weylinv/verification.hpp"
#include "weylinv/weyl.hpp"

namespace weylinv {

namespace {

using ojson = nlohmann::ordered_json;

std::string rat_str(const Rat& r) { return r.get_str(); }

ojson claim(const std::string& name, const std::string& source, const std::string& status,
            bool asserted) {
    return ojson{{"name", name}, {"source", source}, {"status", status}, {"asserted", asserted}};
}

ojson label_json(const GeneratorLabel& l) {
    const char* kind = l.kind == LabelKind::HomZ ? "z" : l.kind == LabelKind::HomW ? "w" : "z_map";
    return ojson{{"name", l.to_string()},
                 {"kind", kind},
                 {"degree", l.degree()},
                 {"param", l.param},
                 {"I", l.I}};
}

void render_pretty(std::ostream& out, const ojson& j, int indent) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) {
            if (v.is_object() || v.is_array()) {
                out << pad << k << ":\n";
                render_pretty(out, v, indent + 2);
            } else {
                out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                    << "\n";
            }
        }
    } else if (j.is_array()) {
        for (auto& v : j) {
            if (v.is_object() || v.is_array()) {
                out << pad << "-\n";
                render_pretty(out, v, indent + 2);
            } else {
                out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void render_csv(std::ostream& out, const ojson& doc) {
    // Tabular part of the document: the first top-level array of objects.
    const ojson* table = nullptr;
    std::string table_key;
    for (auto& [k, v] : doc.items()) {
        if (k == "claims") continue;
        if (v.is_array() && !v.empty() && v.front().is_object()) {
            table = &v;
            table_key = k;
            break;
        }
    }
    auto field = [](const ojson& v) {
        std::string s = v.is_string() ? v.get<std::string>() : v.dump();
        if (s.find_first_of(",\"\n") != std::string::npos) {
            std::string quoted = "\"";
            for (char c : s) {
                if (c == '"') quoted += '"';
                quoted += c;
            }
            quoted += '"';
            return quoted;
        }
        return s;
    };
    if (!table) {
        out << "key,value\n";
        for (auto& [k, v] : doc.items())
            if (!v.is_object() && !v.is_array()) out << k << "," << field(v) << "\n";
        return;
    }
    std::vector<std::string> cols;
    for (auto& [k, v] : table->front().items()) cols.push_back(k);
    for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << cols[c];
    out << "\n";
    for (auto& row : *table) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            out << (c ? "," : "");
            if (row.contains(cols[c])) out << field(row.at(cols[c]));
        }
        out << "\n";
    }
}

// Writes the document and turns asserted failing claims into exit code 1.
int finalize(const ojson& doc, const std::string& format, const std::string& output_path) {
    std::ostringstream body;
    if (format == "json") body << doc.dump(2) << "\n";
    else if (format == "csv") render_csv(body, doc);
    else render_pretty(body, doc, 0);
    if (output_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(output_path);
        if (!f) throw std::runtime_error("cannot open output file " + output_path);
        f << body.str();
    }
    if (doc.contains("claims"))
        for (const auto& c : doc.at("claims"))
            if (c.at("asserted").get<bool>() && c.at("status") == "fail") return 1;
    return 0;
}

struct CommonOpts {
    std::string family = "u";
    int n = 2;
    int m = 1;
    int max_degree = 6;
    int degree = -1;
    std::string model = "coinvariant";
    std::string format = "json";
    std::string output;
    int jobs = 1;
};

RingModel make_model(const std::string& name, FamilyTag family, int n, int m) {
    if (name == "free") return RingModel::free_model(n, m);
    if (name == "su-quotient") {
        if (family != FamilyTag::SU)
            throw CLI::ValidationError("--model su-quotient requires --family su");
        return RingModel::su_quotient(n, m);
    }
    if (name == "coinvariant") return RingModel::coinvariant(family, n, m);
    throw CLI::ValidationError("unknown model " + name);
}

ojson cmd_invariants(const CommonOpts& o, const Budget& budget) {
    FamilyTag family = parse_family(o.family);
    InvariantContext ctx(make_model(o.model, family, o.n, o.m), family, budget);
    ojson doc{{"command", "invariants"}, {"family", o.family}, {"n", o.n},
              {"m", o.m},               {"model", o.model},    {"max_degree", o.max_degree}};
    ojson degrees = ojson::array();
    for (int d = 1; d <= o.max_degree; ++d) {
        ojson basis = ojson::array();
        for (const Element& b : ctx.invariant_basis(d)) basis.push_back(to_string(b));
        degrees.push_back(ojson{{"degree", d},
                                {"ambient_invariant_dim", ctx.ambient_invariant_dim(d)},
                                {"dimension", ctx.invariant_dim(d)},
                                {"source", "rank"},
                                {"basis", basis}});
    }
    doc["degrees"] = std::move(degrees);
    return doc;
}

ojson cmd_generators(const CommonOpts& o) {
    FamilyTag family = parse_family(o.family);
    AlgebraShape shape(o.n, o.m, false);
    ojson doc{{"command", "generators"}, {"family", o.family}, {"n", o.n}, {"m", o.m}};
    ojson hom = ojson::array();
    for (const auto& l : build_S(family, o.n, o.m)) {
        ojson j = label_json(l);
        j["element"] = to_string(realize(l, shape));
        hom.push_back(std::move(j));
    }
    ojson mp = ojson::array();
    for (const auto& l : build_Smap(family, o.n, o.m)) mp.push_back(label_json(l));
    doc["hom_labels"] = std::move(hom);
    doc["map_labels"] = std::move(mp);
    doc["claims"] = ojson::array(
        {claim("label-enumeration-deterministic", "enumeration", "pass", true)});
    return doc;
}

ojson cmd_verify_generation(const CommonOpts& o, const Budget& budget) {
    FamilyTag family = parse_family(o.family);
    GenerationReport rep = verify_generation(family, o.n, o.m, o.max_degree, budget);
    ojson doc{{"command", "verify-generation"}, {"family", o.family}, {"n", o.n},
              {"m", o.m},                       {"max_degree", o.max_degree},
              {"d_bound", rep.d_bound}};
    ojson degrees = ojson::array();
    for (const auto& d : rep.degrees) {
        ojson row{{"degree", d.degree},
                  {"invariant_dim", d.invariant_dim},
                  {"subalgebra_dim", d.subalgebra_dim},
                  {"free_dim", d.free_dim},
                  {"generation", d.generation},
                  {"minimal", d.minimal}};
        row["freeness"] = d.freeness ? ojson(*d.freeness) : ojson(nullptr);
        degrees.push_back(std::move(row));
    }
    doc["degrees"] = std::move(degrees);
    doc["claims"] = ojson::array(
        {claim("generation-all-degrees", "rank", rep.all_generated ? "pass" : "fail", true),
         claim("freeness-below-bound", "rank",
               rep.d_bound < 1 ? "out-of-validity-range"
                               : (rep.all_free_in_range ? "pass" : "fail"),
               rep.d_bound >= 1),
         claim("minimality", "rank", rep.all_minimal ? "pass" : "fail", true)});
    return doc;
}

ojson cmd_theta(const CommonOpts& o) {
    FamilyTag family = parse_family(o.family);
    AlgebraShape shape(o.n, o.m, false);
    ojson doc{{"command", "theta"}, {"family", o.family}, {"n", o.n}, {"m", o.m}};
    if (family == FamilyTag::SOeven) {
        ojson gens = ojson::array();
        for (const Element& bg : bg_generators(family, shape)) {
            ojson comps = ojson::array();
            for (auto& [mask, comp] : theta_expand(bg)) {
                if (comp.is_zero()) continue;
                comps.push_back(ojson{{"I", set_from_mask(mask)},
                                      {"degree", comp.degree()},
                                      {"image", to_string(comp)}});
            }
            gens.push_back(ojson{{"generator", to_string(bg)}, {"components", comps}});
        }
        doc["expansions"] = std::move(gens);
        doc["claims"] = ojson::array();
        return doc;
    }
    const bool typeA = family == FamilyTag::U || family == FamilyTag::SU;
    ojson rows = ojson::array();
    bool all_agree = true;
    std::map<int, std::map<std::uint64_t, Element>> cache;
    for (const auto& l : build_Smap(family, o.n, o.m)) {
        auto it = cache.find(l.param);
        if (it == cache.end())
            it = cache.emplace(l.param,
                               theta_expand(power_sum(shape, typeA ? l.param : 2 * l.param)))
                     .first;
        Element closed = theta_closed(l, shape);
        const Element& expanded = it->second.at(l.imask());
        bool agree = closed == expanded;
        if (!agree) all_agree = false;
        rows.push_back(ojson{{"label", l.to_string()},
                             {"degree", l.degree()},
                             {"closed_form", to_string(closed)},
                             {"expansion", to_string(expanded)},
                             {"agree", agree}});
    }
    doc["images"] = std::move(rows);
    doc["claims"] = ojson::array(
        {claim("closed-form-matches-expansion", "enumeration", all_agree ? "pass" : "fail",
               true)});
    return doc;
}

ojson cmd_surjectivity(const CommonOpts& o, const Budget& budget) {
    FamilyTag family = parse_family(o.family);
    SurjectivityReport rep = check_surjectivity(family, o.n, o.m, o.max_degree, budget);
    ojson doc{{"command", "surjectivity"}, {"family", o.family}, {"n", o.n},
              {"m", o.m},                  {"max_degree", o.max_degree}};
    ojson degrees = ojson::array();
    ojson claims = ojson::array();
    for (const auto& d : rep.degrees) {
        degrees.push_back(ojson{{"degree", d.degree},
                                {"invariant_dim", d.invariant_dim},
                                {"image_dim", d.image_dim},
                                {"surjective", d.surjective}});
        claims.push_back(claim("surjective-degree-" + std::to_string(d.degree), "rank",
                               d.surjective ? "pass" : "fail", true));
    }
    doc["degrees"] = std::move(degrees);
    doc["all_surjective"] = rep.all_surjective;
    doc["claims"] = std::move(claims);
    return doc;
}

ojson cmd_witness(const CommonOpts& o, const Budget& budget) {
    SoEvenWitnessReport rep = so_even_witness(o.n, o.m, budget);
    ojson doc{{"command", "witness-so-even"}, {"family", "so-even"}, {"n", o.n}, {"m", o.m},
              {"degree", rep.degree}};
    doc["abar"] = to_string(rep.abar);
    doc["abar_coeff"] = rat_str(rep.abar_coeff);
    doc["abar_coeff_expected"] = rat_str(rep.abar_coeff_expected);
    doc["nonzero"] = rep.nonzero;
    doc["indecomposable"] = rep.indecomposable;
    doc["in_image"] = rep.in_image;
    doc["surjective_at_degree"] = rep.surjective_at_degree;
    doc["claims"] = ojson::array(
        {claim("reynolds-coefficient", "enumeration", rep.coeff_ok ? "pass" : "fail", true),
         claim("class-nonzero", "rank", rep.nonzero ? "pass" : "fail", true),
         claim("class-indecomposable", "rank", rep.indecomposable ? "pass" : "fail", true),
         claim("class-outside-image", "rank", !rep.in_image ? "pass" : "fail", true),
         claim("not-surjective-at-degree", "rank", !rep.surjective_at_degree ? "pass" : "fail",
               true)});
    return doc;
}

ojson cmd_coker(const CommonOpts& o, const Budget& budget) {
    FamilyTag family = parse_family(o.family);
    const bool typeA = family == FamilyTag::U || family == FamilyTag::SU;
    int lo = o.degree >= 1 ? o.degree : 1;
    int hi = o.degree >= 1 ? o.degree : o.max_degree;
    InvariantContext ctx(RingModel::coinvariant(family, o.n, o.m), family, budget);
    ojson doc{{"command", "coker"}, {"family", o.family}, {"n", o.n}, {"m", o.m}};
    ojson rows = ojson::array();
    ojson claims = ojson::array();
    for (int i = lo; i <= hi; ++i) {
        CokerReport rep = coker_dim(ctx, i);
        rows.push_back(ojson{{"i", i},
                             {"dim_S_i", rep.dim_S_i},
                             {"dim_S_i_hom", rep.dim_S_i_hom},
                             {"kernel_dim", rep.kernel_dim},
                             {"kernel_source", "rank"},
                             {"enum_diff", rep.enum_diff},
                             {"enum_source", "enumeration"},
                             {"proof_formula", rep.proof_formula},
                             {"statement_formula", rep.statement_formula},
                             {"formula_source", "printed-formula"},
                             {"validity", rep.validity}});
        const std::string sfx = "-i" + std::to_string(i);
        claims.push_back(claim("kernel-matches-enumeration" + sfx, "rank",
                               !rep.validity ? "out-of-validity-range"
                                             : (rep.kernel_dim == rep.enum_diff ? "pass" : "fail"),
                               rep.validity));
        claims.push_back(claim("kernel-matches-proof-formula" + sfx, "printed-formula",
                               rep.kernel_dim == rep.proof_formula ? "pass" : "fail", typeA));
        claims.push_back(claim("kernel-matches-statement-formula" + sfx, "printed-formula",
                               rep.kernel_dim == rep.statement_formula ? "pass" : "fail", false));
    }
    doc["reports"] = std::move(rows);
    doc["claims"] = std::move(claims);
    return doc;
}

ojson cmd_molien(const CommonOpts& o, const Budget& budget) {
    FamilyTag family = parse_family(o.family);
    std::vector<long> dims = molien_dims(family, o.n, o.m, o.max_degree, budget);
    ojson doc{{"command", "molien"}, {"family", o.family}, {"n", o.n},
              {"m", o.m},            {"max_degree", o.max_degree}};
    doc["dims"] = dims;
    doc["source"] = "enumeration";
    return doc;
}

ojson manifest_doc(const Budget& budget) {
    ojson doc{{"command", "manifest"}};
    ojson rows = ojson::array();
    ojson claims = ojson::array();
    bool all = true;
    for (const CriterionResult& c : run_acceptance(budget)) {
        rows.push_back(ojson{{"id", c.id}, {"name", c.name}, {"pass", c.pass},
                             {"detail", c.detail}});
        claims.push_back(claim("criterion-" + std::to_string(c.id), "rank",
                               c.pass ? "pass" : "fail", true));
        if (!c.pass) all = false;
    }
    doc["criteria"] = std::move(rows);
    doc["all_pass"] = all;
    doc["claims"] = std::move(claims);
    return doc;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Weyl-invariant rings of commuting-variety models"};
    app.require_subcommand(0, 1);

    CommonOpts o;
    std::string manifest_path;
    auto* manifest_opt = app.add_option(
        "--manifest", manifest_path,
        "replay the full acceptance battery and write the results file");
    manifest_opt->expected(0, 1);

    auto add_common = [&o](CLI::App* sub, bool with_family = true) {
        if (with_family)
            sub->add_option("--family", o.family, "family: u, su, sp, so-odd, so-even")
                ->check(CLI::IsMember({"u", "su", "sp", "so-odd", "so-even"}));
        sub->add_option("--rank", o.n, "rank n of the family")->check(CLI::PositiveNumber);
        sub->add_option("-m,--copies", o.m, "number of commuting coordinates m")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_option("--output", o.output, "write the report to this path");
        sub->add_option("--jobs", o.jobs, "worker count (accepted; execution is serial)")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* c_inv = app.add_subcommand("invariants", "invariant bases per degree");
    add_common(c_inv);
    c_inv->add_option("--max-degree", o.max_degree)->check(CLI::PositiveNumber);
    c_inv->add_option("--model", o.model)
        ->check(CLI::IsMember({"free", "coinvariant", "su-quotient"}));

    CLI::App* c_gen = app.add_subcommand("generators", "generator label enumerations");
    add_common(c_gen);

    CLI::App* c_ver = app.add_subcommand("verify-generation",
                                         "generation/freeness/minimality per degree");
    add_common(c_ver);
    c_ver->add_option("--max-degree", o.max_degree)->check(CLI::PositiveNumber);

    CLI::App* c_theta = app.add_subcommand("theta", "Theta images, closed form vs expansion");
    add_common(c_theta);

    CLI::App* c_surj = app.add_subcommand("surjectivity", "Theta surjectivity per degree");
    add_common(c_surj);
    c_surj->add_option("--max-degree", o.max_degree)->check(CLI::PositiveNumber);

    CLI::App* c_wit = app.add_subcommand("witness-so-even", "the SO(2n) counterexample class");
    add_common(c_wit, false);

    CLI::App* c_coker = app.add_subcommand("coker", "cokernel dimension bookkeeping");
    add_common(c_coker);
    c_coker->add_option("--degree", o.degree, "single homotopy degree i")
        ->check(CLI::PositiveNumber);
    c_coker->add_option("--max-degree", o.max_degree)->check(CLI::PositiveNumber);

    CLI::App* c_mol = app.add_subcommand("molien", "invariant dimension series");
    add_common(c_mol);
    c_mol->add_option("--max-degree", o.max_degree)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Budget budget = Budget::from_env();
    try {
        if (*manifest_opt) {
            ojson doc = manifest_doc(budget);
            std::string path = manifest_path.empty() ? "acceptance_manifest.json" : manifest_path;
            {
                std::ofstream f(path);
                if (!f) throw std::runtime_error("cannot open manifest file " + path);
                f << doc.dump(2) << "\n";
            }
            return finalize(doc, o.format, o.output);
        }
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
            return 2;
        }
        ojson doc;
        if (c_inv->parsed()) doc = cmd_invariants(o, budget);
        else if (c_gen->parsed()) doc = cmd_generators(o);
        else if (c_ver->parsed()) doc = cmd_verify_generation(o, budget);
        else if (c_theta->parsed()) doc = cmd_theta(o);
        else if (c_surj->parsed()) doc = cmd_surjectivity(o, budget);
        else if (c_wit->parsed()) doc = cmd_witness(o, budget);
        else if (c_coker->parsed()) doc = cmd_coker(o, budget);
        else if (c_mol->parsed()) doc = cmd_molien(o, budget);
        return finalize(doc, o.format, o.output);
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid request: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace weylinv
