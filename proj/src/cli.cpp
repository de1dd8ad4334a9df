#include "hms/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "hms/builtin_specs.hpp"
#include "hms/monomial_text.hpp"
#include "hms/report.hpp"
#include "hms/spec_io.hpp"
#include "hms/version.hpp"

namespace hms {

namespace {

std::string trimmed(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trimmed(item);
        if (item.empty()) throw input_error("empty entry in index list '" + text + "'");
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw input_error("bad index '" + item + "' in list '" + text + "'");
        }
    }
    if (out.empty()) throw input_error("empty index list");
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(trimmed(item)));
    if (out.empty()) throw input_error("empty coordinate list");
    return out;
}

LaurentPolySpec builtin_example(const std::string& name) {
    if (name.rfind("pants", 0) == 0) {
        const std::string rest = name.substr(5);
        if (!rest.empty() && rest.find_first_not_of("0123456789") == std::string::npos) {
            const int n = std::stoi(rest);
            if (n >= 1 && n <= 6) return pants_spec(n);
        }
    }
    if (name.rfind("local-p", 0) == 0) {
        const std::string rest = name.substr(7);
        if (!rest.empty() && rest.find_first_not_of("0123456789") == std::string::npos) {
            const int n = std::stoi(rest);
            if (n >= 1 && n <= 4) return local_pn_spec(n);
        }
    }
    if (name == "hirzebruch3") return hirzebruch3_spec();
    throw input_error("unknown example '" + name +
                      "' (use pantsN, local-pN, or hirzebruch3)");
}

LaurentPolySpec resolve_spec(const std::string& path, const std::string& example) {
    if (!path.empty() && !example.empty())
        throw input_error("give either a spec file or --example, not both");
    if (!path.empty()) return load_spec_file(path);
    if (!example.empty()) return builtin_example(example);
    throw input_error("missing input: give a spec file or --example");
}

PantsLabel label_from(const std::string& text, int n) {
    return canonical_label(indices_to_mask(parse_index_list(text), n), n);
}

MonomialModule module_from(const std::string& text, int n) {
    MonomialModule m;
    m.n = n;
    m.S = indices_to_mask(parse_index_list(text), n);
    validate_module(m);
    return m;
}

void emit(std::string& out, const Json& doc) { out = doc.dump(2) + "\n"; }

}  // namespace

int run_command(const std::vector<std::string>& args, std::string& out, std::string& err) {
    CLI::App app{"exact toolkit for the tropical mirror dictionary of pants complements"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string spec_path, example, xi_text, I_text, J_text, K_text, S_text, T_text;
    std::string a_text, b_text, out_path;
    int n = 1, d = 0, max_deg = 10, max_k = 6, truncation = 12, window = 3;

    auto* trop = app.add_subcommand("trop", "tropicalization and regular subdivision");
    trop->require_subcommand(1);
    auto* trop_subdivide = trop->add_subcommand("subdivide", "maximal cells and degeneration flags");
    trop_subdivide->add_option("spec", spec_path, "spec JSON file");
    trop_subdivide->add_option("--example", example, "builtin example name");
    auto* trop_eval = trop->add_subcommand("eval", "evaluate the tropical function");
    trop_eval->add_option("spec", spec_path, "spec JSON file");
    trop_eval->add_option("--example", example, "builtin example name");
    trop_eval->add_option("--xi", xi_text, "comma-separated rational coordinates")->required();

    auto* mirror = app.add_subcommand("mirror", "toric mirror data");
    mirror->require_subcommand(1);
    auto* mirror_fan = mirror->add_subcommand("fan", "rays and maximal cones");
    mirror_fan->add_option("spec", spec_path, "spec JSON file");
    mirror_fan->add_option("--example", example, "builtin example name");
    auto* mirror_polytope = mirror->add_subcommand("polytope", "moment polytope facets");
    mirror_polytope->add_option("spec", spec_path, "spec JSON file");
    mirror_polytope->add_option("--example", example, "builtin example name");

    auto* pants = app.add_subcommand("pants", "morphism spaces of the pants complement");
    pants->require_subcommand(1);
    auto* pants_hw = pants->add_subcommand("hw", "graded basis of a morphism space");
    pants_hw->add_option("--n", n, "pants dimension")->required();
    pants_hw->add_option("--I", I_text, "first label, comma-separated indices")->required();
    pants_hw->add_option("--J", J_text, "second label")->required();
    pants_hw->add_option("--max-deg", max_deg, "total doubled degree bound");
    auto* pants_product = pants->add_subcommand("product", "compose two basis monomials");
    pants_product->add_option("--n", n, "pants dimension")->required();
    pants_product->add_option("--I", I_text, "first label")->required();
    pants_product->add_option("--J", J_text, "middle label")->required();
    pants_product->add_option("--K", K_text, "last label")->required();
    pants_product->add_option("--a", a_text, "monomial in HW(I,J)")->required();
    pants_product->add_option("--b", b_text, "monomial in HW(J,K)")->required();
    auto* pants_triangles = pants->add_subcommand("triangles", "run the exact-triangle suite");
    pants_triangles->add_option("--n", n, "pants dimension")->required();
    auto* pants_localize = pants->add_subcommand("localize", "stabilized dimensions at the base variable");
    pants_localize->add_option("--n", n, "pants dimension")->required();
    pants_localize->add_option("--I", I_text, "first label")->required();
    pants_localize->add_option("--J", J_text, "second label")->required();
    pants_localize->add_option("--truncation", truncation, "internal doubled degree bound");

    auto* ext = app.add_subcommand("ext", "mirror-side Ext computations");
    ext->require_subcommand(1);
    auto* ext_dims = ext->add_subcommand("dims", "Ext dimension series per degree");
    ext_dims->add_option("--n", n, "number of variables minus one")->required();
    ext_dims->add_option("--S", S_text, "source module variables")->required();
    ext_dims->add_option("--T", T_text, "target module variables")->required();
    ext_dims->add_option("--max-k", max_k, "cohomological bound");
    ext_dims->add_option("--max-deg", max_deg, "total degree bound");
    auto* ext_sg = ext->add_subcommand("sg", "stabilized quotient-category morphisms");
    ext_sg->add_option("--n", n, "number of variables minus one")->required();
    ext_sg->add_option("--S", S_text, "source module variables")->required();
    ext_sg->add_option("--T", T_text, "target module variables")->required();
    ext_sg->add_option("--max-k", max_k, "cohomological bound");
    ext_sg->add_option("--max-deg", max_deg, "total degree bound");
    ext_sg->add_option("--window", window, "plateau width");

    auto* compare = app.add_subcommand("compare", "two-sided dictionary checks");
    compare->require_subcommand(1);
    auto* compare_hw_ext_cmd = compare->add_subcommand("hw-ext", "aligned-series comparison");
    compare_hw_ext_cmd->add_option("--n", n, "pants dimension")->required();
    compare_hw_ext_cmd->add_option("--I", I_text, "first label (omit for all pairs)");
    compare_hw_ext_cmd->add_option("--J", J_text, "second label (omit for all pairs)");
    compare_hw_ext_cmd->add_option("--max-k", max_k, "cohomological bound");
    compare_hw_ext_cmd->add_option("--max-deg", max_deg, "total degree bound");

    auto* functors = app.add_subcommand("functors", "restriction and sheaf-side functors");
    functors->require_subcommand(1);
    auto* functors_square = functors->add_subcommand("square", "commutation and recursion checks");
    functors_square->add_option("--n", n, "pants dimension")->required();
    functors_square->add_option("--truncation", truncation, "tower bound");
    int square_max_k = 8;
    functors_square->add_option("--max-k", square_max_k, "cohomological bound");
    functors_square->add_option("--max-deg", max_deg, "total degree bound");
    functors_square->add_option("--window", window, "plateau width");

    auto* examples = app.add_subcommand("examples", "worked closed-form identities");
    examples->require_subcommand(1);
    auto* examples_local_pn = examples->add_subcommand("local-pn", "weight-piece dimension identity");
    examples_local_pn->add_option("--n", n, "projective dimension")->required();
    examples_local_pn->add_option("--d", d, "winding weight")->required();

    auto* report = app.add_subcommand("report", "bundled report emission");
    report->require_subcommand(1);
    auto* report_all = report->add_subcommand("all", "all sections for one spec");
    report_all->add_option("spec", spec_path, "spec JSON file");
    report_all->add_option("--example", example, "builtin example name");
    report_all->add_option("-o,--output", out_path, "output path stem (writes .json and .md)");

    std::vector<const char*> argv;
    argv.push_back("hmskit");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out = app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out = app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out = std::string(kVersion) + "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err = std::string(e.what()) + "\n" + app.help();
        return 2;
    }

    try {
        if (trop_subdivide->parsed()) {
            const auto spec = resolve_spec(spec_path, example);
            const auto P = regular_subdivision(spec);
            emit(out, json_subdivision(spec, P, degeneration_report(spec, P)));
            return 0;
        }
        if (trop_eval->parsed()) {
            const auto spec = resolve_spec(spec_path, example);
            const auto xi = parse_rat_list(xi_text);
            const auto value = tropical_eval(tropical_function(spec), xi);
            emit(out, json_eval(xi, value, region_classify(spec, xi)));
            return 0;
        }
        if (mirror_fan->parsed()) {
            const auto spec = resolve_spec(spec_path, example);
            emit(out, json_fan(build_fan(regular_subdivision(spec), spec)));
            return 0;
        }
        if (mirror_polytope->parsed()) {
            const auto spec = resolve_spec(spec_path, example);
            emit(out, json_polytope(moment_polytope(spec)));
            return 0;
        }
        if (pants_hw->parsed()) {
            emit(out, json_hw(hw_basis(label_from(I_text, n), label_from(J_text, n), max_deg)));
            return 0;
        }
        if (pants_product->parsed()) {
            const auto I = label_from(I_text, n);
            const auto J = label_from(J_text, n);
            const auto K = label_from(K_text, n);
            const auto a = parse_monomial(a_text, n);
            const auto b = parse_monomial(b_text, n);
            const auto product = mu2(I, J, K, a, b);
            Json doc;
            doc["zero"] = !product.has_value();
            doc["result"] = product ? print_monomial(*product) : "0";
            emit(out, doc);
            return 0;
        }
        if (pants_triangles->parsed()) {
            const auto doc = json_triangle_suite(n);
            emit(out, doc);
            return doc["all_pass"].get<bool>() ? 0 : 1;
        }
        if (pants_localize->parsed()) {
            const auto I = label_from(I_text, n);
            const auto J = label_from(J_text, n);
            emit(out, json_localized(I, J, localized_hw_dims(I, J, truncation)));
            return 0;
        }
        if (ext_dims->parsed()) {
            const auto src = module_from(S_text, n);
            const auto tgt = module_from(T_text, n);
            emit(out, json_ext_dims(src, tgt, ext_classes(src, tgt, max_k, max_deg)));
            return 0;
        }
        if (ext_sg->parsed()) {
            const auto src = module_from(S_text, n);
            const auto tgt = module_from(T_text, n);
            emit(out, json_sg(src, tgt, sg_stabilized_dims(src, tgt, max_k, max_deg, window)));
            return 0;
        }
        if (compare_hw_ext_cmd->parsed()) {
            if (I_text.empty() != J_text.empty())
                throw input_error("give both --I and --J, or neither");
            if (!I_text.empty()) {
                const auto report_one =
                    compare_hw_ext(n, label_from(I_text, n), label_from(J_text, n), max_k, max_deg);
                emit(out, json_compare(report_one));
                return report_one.pass ? 0 : 1;
            }
            const auto doc = json_compare_all(n, max_k, max_deg);
            emit(out, doc);
            return doc["pass"].get<bool>() ? 0 : 1;
        }
        if (functors_square->parsed()) {
            const auto doc = json_square(check_square(n, truncation, square_max_k, max_deg, window));
            emit(out, doc);
            return doc["pass"].get<bool>() ? 0 : 1;
        }
        if (examples_local_pn->parsed()) {
            const auto doc = json_local_pn(n, d, local_pn_dims(n, d));
            emit(out, doc);
            return doc["match"].get<bool>() ? 0 : 1;
        }
        if (report_all->parsed()) {
            const auto spec = resolve_spec(spec_path, example);
            const std::string title = example.empty() ? spec_path : example;
            const auto full = build_full_report(spec, title);
            if (!out_path.empty()) {
                const std::string json_path = out_path + ".json";
                const std::string md_path = out_path + ".md";
                std::ofstream jf(json_path);
                if (!jf) throw input_error("cannot write " + json_path);
                jf << full.doc.dump(2) << "\n";
                std::ofstream mf(md_path);
                if (!mf) throw input_error("cannot write " + md_path);
                mf << full.markdown;
                Json doc;
                doc["written"] = Json::array({json_path, md_path});
                doc["pass"] = full.pass;
                emit(out, doc);
            } else {
                emit(out, full.doc);
            }
            return full.pass ? 0 : 1;
        }
    } catch (const input_error& e) {
        err = std::string("input error: ") + e.what() + "\n";
        return 2;
    }

    err = "no subcommand dispatched\n" + app.help();
    return 2;
}

}  // namespace hms
