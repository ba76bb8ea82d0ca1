// Command-line front end: construct representations from labels or extension
// parameters, verify or classify externally supplied representations, query
// existence, and emit Clebsch-Gordan decompositions. All I/O is JSON with
// exact "p/q" scalars.
//
// Exit codes: 0 success, 2 malformed input, 3 domain error, 4 inconsistency.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <uniserial/uniserial.hpp>

namespace {

using uniserial::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw uniserial::InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw uniserial::InputError("JSON parse failure in '" + path + "': " + e.what());
    }
}

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw uniserial::InputError("cannot write '" + out_path + "'");
    out << text;
}

json run_construct(const std::string& label_path) {
    auto label = read_json_file(label_path).get<uniserial::ClassLabel>();
    return json(uniserial::construct_R(label));
}

json run_verify(const std::string& rep_path) {
    auto rep = read_json_file(rep_path).get<uniserial::Representation>();
    uniserial::Verdict verdict = uniserial::verify_representation(rep);
    json out;
    out["ok"] = verdict.ok;
    out["violations"] = verdict.violations;
    if (verdict.ok) {
        uniserial::SocleSeries socle = uniserial::socle_series(rep);
        bool uniserial_flag = true;
        for (int f : socle.factor_dims)
            if (f != 1) uniserial_flag = false;
        out["faithful"] = uniserial::is_faithful(rep);
        out["uniserial"] = uniserial_flag;
        out["socle_factor_dims"] = socle.factor_dims;
    } else {
        out["faithful"] = nullptr;
        out["uniserial"] = nullptr;
        out["socle_factor_dims"] = nullptr;
    }
    return out;
}

json run_classify(const std::string& rep_path, unsigned seed) {
    auto rep = read_json_file(rep_path).get<uniserial::Representation>();
    uniserial::Classification cls = uniserial::classify_single_block(rep, seed);
    json out = cls;
    out["seed"] = seed;
    return out;
}

json run_exists(const std::string& spec_path) {
    auto spec = read_json_file(spec_path).get<uniserial::JordanSpec>();
    return json(uniserial::existence_check(spec));
}

json run_cg(int p, int q) {
    return json(uniserial::cg_elementary_divisors(p, q));
}

json run_extensions(const std::string& spec_path, int k, const std::string& alpha_str,
                    const std::string& params_path) {
    auto spec = read_json_file(spec_path).get<uniserial::JordanSpec>();
    uniserial::Rational alpha = uniserial::parse_rational(alpha_str);
    int n = 0;
    for (const auto& b : spec.blocks) n = std::max(n, b.size);
    uniserial::Matrix x_block(std::max(k - 1, 0), std::max(n - k, 0));
    uniserial::ExtensionSpace space = uniserial::extension_space(spec, alpha, k, x_block);
    if (params_path.empty()) return json(space);
    uniserial::ParameterAssignment params =
        uniserial::parameter_assignment_from_json(read_json_file(params_path));
    uniserial::ExtensionResult built = uniserial::build_extension(space, params);
    json out;
    out["space"] = space;
    out["representation"] = built.rep;
    out["injective"] = built.injective;
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact constructions and classification of uniserial representations "
                 "of <x> |x V over Q"};
    app.require_subcommand(1);

    std::string label_path, rep_path, spec_path, params_path, out_path, alpha_str = "0";
    unsigned seed = uniserial::kDefaultSeed;
    int p = 0, q = 0, k = 0;

    CLI::App* construct = app.add_subcommand("construct", "Build a representation from a label");
    construct->add_option("--label", label_path, "label JSON file")->required();
    construct->add_option("-o,--output", out_path, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "Check the defining relations and report "
                                                    "faithfulness, uniseriality, socle factors");
    verify->add_option("rep", rep_path, "representation JSON file")->required();
    verify->add_option("-o,--output", out_path, "output path (default stdout)");

    CLI::App* classify = app.add_subcommand("classify", "Canonical label of a faithful "
                                                        "uniserial single-block representation");
    classify->add_option("rep", rep_path, "representation JSON file")->required();
    classify->add_option("--seed", seed, "seed for the randomized invertibility sampler");
    classify->add_option("-o,--output", out_path, "output path (default stdout)");

    CLI::App* exists = app.add_subcommand("exists", "Existence of a faithful uniserial "
                                                    "representation for a Jordan specification");
    exists->add_option("spec", spec_path, "Jordan specification JSON file")->required();
    exists->add_option("-o,--output", out_path, "output path (default stdout)");

    CLI::App* cg = app.add_subcommand("cg", "Clebsch-Gordan elementary divisors of M_{p,q}");
    cg->add_option("-p", p, "number of rows")->required();
    cg->add_option("-q", q, "number of columns")->required();
    cg->add_option("-o,--output", out_path, "output path (default stdout)");

    CLI::App* extensions = app.add_subcommand("extensions", "Extension space of the split "
                                                            "representation, optionally built "
                                                            "with a parameter file");
    extensions->add_option("spec", spec_path, "Jordan specification JSON file")->required();
    extensions->add_option("--k", k, "split index, 1 < k < n")->required();
    extensions->add_option("--alpha", alpha_str, "top eigenvalue of the image of x");
    extensions->add_option("--params", params_path, "parameter assignment JSON file");
    extensions->add_option("-o,--output", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        json out;
        if (construct->parsed()) out = run_construct(label_path);
        else if (verify->parsed()) out = run_verify(rep_path);
        else if (classify->parsed()) out = run_classify(rep_path, seed);
        else if (exists->parsed()) out = run_exists(spec_path);
        else if (cg->parsed()) out = run_cg(p, q);
        else out = run_extensions(spec_path, k, alpha_str, params_path);
        emit(out, out_path);
        return 0;
    } catch (const uniserial::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const uniserial::InconsistencyError& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return 4;
    } catch (const uniserial::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    }
}
