// Batch front end: classification tables, unitarizable censuses, generator
// matrices, expression evaluation on modules, and the invariant suite.
//
// Exit codes: 0 success, 1 verification/computation failure, 2 usage error.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pbq/io.hpp"
#include "pbq/parse.hpp"
#include "pbq/sweep.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    unsigned precision = pbq::kDefaultDigits;
    std::string format = "pretty";
    std::string out;

    long m = 0;
    long k = 0;
    std::string p_grid;
    std::string p_text;
    long L = 0;
    bool orthonormal = false;
    std::string expr;
    long max_k = 0;
    std::string fixtures;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty())
        std::cout << text;
    else
        pbq::write_text_file(opt.out, text);
}

// Non-integer grid entries become classification samples; integer weights are
// part of every classification table already.
std::vector<pbq::Rational> noninteger_samples(const std::string& grid_text) {
    std::vector<pbq::Rational> samples;
    for (const pbq::Rational& r : pbq::parse_weight_grid(grid_text))
        if (!pbq::is_integer(r)) samples.push_back(r);
    return samples;
}

int run_classify(const Options& opt) {
    pbq::AlgebraParams params = pbq::algebra_params(opt.m, opt.k);
    std::vector<pbq::IrrepDescriptor> list =
        pbq::vacuum_irreps(params, opt.p_grid.empty() ? std::vector<pbq::Rational>{}
                                                      : noninteger_samples(opt.p_grid));
    if (opt.format == "csv") {
        emit(opt, pbq::descriptors_csv(list, opt.precision));
    } else if (opt.format == "json") {
        emit(opt, pbq::descriptors_json_string(list));
    } else {
        std::string text = "algebra m=" + std::to_string(params.m) + " k=" +
                           std::to_string(params.k) + " (" + pbq::case_tag_name(params.tag) +
                           ")\n";
        text += "p\tL\tdim\tcasimir\n";
        for (const pbq::IrrepDescriptor& d : list)
            text += d.p.to_string() + "\t" + std::to_string(d.L) + "\t" +
                    std::to_string(d.dimension()) + "\t" + pbq::scalar_brief(d.casimir) + "\n";
        emit(opt, text);
    }
    return kExitSuccess;
}

int run_unitary(const Options& opt) {
    pbq::AlgebraParams params = pbq::algebra_params(opt.m, opt.k);
    std::vector<pbq::CensusRow> rows = pbq::classify_unitarizable(
        params,
        opt.p_grid.empty() ? std::vector<pbq::Rational>{} : pbq::parse_weight_grid(opt.p_grid));
    if (opt.format == "csv") {
        emit(opt, pbq::census_csv(params, rows));
    } else if (opt.format == "json") {
        emit(opt, pbq::census_json_string(params, rows));
    } else {
        std::string text = "algebra m=" + std::to_string(params.m) + " k=" +
                           std::to_string(params.k) + " (" + pbq::case_tag_name(params.tag) +
                           ")\n";
        text += "p\tL\tdim\tstatus\n";
        for (const pbq::CensusRow& row : rows)
            text += pbq::to_string(row.p) + "\t" + std::to_string(row.L) + "\t" +
                    std::to_string(row.L + 1) + "\t" + pbq::unitary_status_name(row.status) +
                    "\n";
        emit(opt, text);
    }
    return kExitSuccess;
}

std::string matrix_pretty(const std::string& name, const pbq::Matrix& mat) {
    std::string text = name + " =\n";
    for (std::size_t r = 0; r < mat.rows(); ++r) {
        text += "  [";
        for (std::size_t c = 0; c < mat.cols(); ++c) {
            if (c) text += ", ";
            text += pbq::scalar_brief(mat.at(r, c));
        }
        text += "]\n";
    }
    return text;
}

std::string rep_pretty(const pbq::RepMatrices& rep) {
    std::string text;
    text += matrix_pretty("a+", rep.A_plus);
    text += matrix_pretty("a-", rep.A_minus);
    text += matrix_pretty("K", rep.Kmat);
    text += matrix_pretty("K^-1", rep.Kinv);
    return text;
}

int run_matrices(const Options& opt) {
    pbq::Weight p = pbq::weight_from_string(opt.p_text, opt.precision);
    pbq::RepMatrices rep;
    if (opt.orthonormal) {
        pbq::AlgebraParams params = pbq::algebra_params_raw(opt.m, opt.k);
        rep = pbq::orthonormal_matrices(params, p, opt.L, opt.precision);
    } else {
        rep = pbq::module_matrices(pbq::ModuleSpec{opt.m, opt.k, p, 0, opt.L});
    }
    emit(opt, opt.format == "pretty" ? rep_pretty(rep) : pbq::rep_to_json_string(rep));
    return kExitSuccess;
}

int run_verify(const Options& opt) {
    std::string fixtures = opt.fixtures;
    if (fixtures.empty() && std::filesystem::is_directory("fixtures")) fixtures = "fixtures";

    std::vector<pbq::VerifySummary> summaries;
    if (opt.max_k > 0)
        summaries = pbq::verify_sweep(opt.max_k, fixtures);
    else
        summaries.push_back(pbq::verify_algebra(opt.m, opt.k, fixtures));

    std::string text;
    bool all_pass = true;
    for (const pbq::VerifySummary& s : summaries) {
        all_pass = all_pass && s.pass;
        text += "(m=" + std::to_string(s.m) + ", k=" + std::to_string(s.k) + ") " +
                (s.pass ? "PASS" : "FAIL") + "\n";
        for (const pbq::CheckResult& c : s.checks)
            if (!c.pass || opt.format == "pretty")
                text += "  [" + std::string(c.pass ? "ok" : "FAIL") + "] " + c.name +
                        (c.detail.empty() ? "" : " -- " + c.detail) + "\n";
    }
    emit(opt, text);
    return all_pass ? kExitSuccess : kExitFailure;
}

int run_eval(const Options& opt) {
    pbq::QContext ctx{opt.m, opt.k};
    pbq::AlgebraElement element = pbq::parse_expression(opt.expr, ctx);
    pbq::Weight p = pbq::weight_from_string(opt.p_text, opt.precision);
    pbq::RepMatrices rep = pbq::module_matrices(pbq::ModuleSpec{opt.m, opt.k, p, 0, opt.L});
    pbq::Matrix mat = pbq::evaluate_element(element, rep);

    pbq::Scalar scalar_value;
    const bool zero = mat.is_zero();
    const bool scalar = mat.is_scalar(&scalar_value);
    if (opt.format == "json") {
        std::string text = "{\n \"normal_form\": \"" + pbq::pretty_print(element) + "\",\n";
        text += " \"is_zero\": " + std::string(zero ? "true" : "false") + ",\n";
        text += " \"is_scalar\": " + std::string(scalar ? "true" : "false") + ",\n";
        text += " \"matrix\": " + pbq::matrix_to_json_string(mat) + "}\n";
        emit(opt, text);
    } else {
        std::string text = "normal form: " + pbq::pretty_print(element) + "\n";
        text += matrix_pretty("matrix", mat);
        text += std::string("zero: ") + (zero ? "yes" : "no") + "\n";
        text += "scalar: " +
                (scalar ? "yes (" + pbq::scalar_brief(scalar_value) + ")" : std::string("no")) +
                "\n";
        emit(opt, text);
    }
    return kExitSuccess;
}

int run_canon(const Options& opt) {
    pbq::CanonicalizationResult result = pbq::canonicalize(opt.m, opt.k);
    if (opt.format == "json") {
        std::string text = "{\n \"m\": " + std::to_string(result.params.m) +
                           ",\n \"k\": " + std::to_string(result.params.k) + ",\n \"case\": \"" +
                           pbq::case_tag_name(result.params.tag) + "\",\n \"generator_map\": \"" +
                           result.map.describe() + "\"\n}\n";
        emit(opt, text);
    } else {
        emit(opt, "m=" + std::to_string(result.params.m) + " k=" +
                      std::to_string(result.params.k) + " (" +
                      pbq::case_tag_name(result.params.tag) + ")\ngenerator map: " +
                      result.map.describe() + "\n");
    }
    return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Exact-arithmetic engine for root-of-unity representations of the deformed "
                 "para-Bose superalgebra"};
    app.require_subcommand(1);
    app.add_option("--precision", opt.precision, "decimal digits for approximate evaluation")
        ->check(CLI::Range(16u, 1000000u))
        ->capture_default_str();
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", opt.out, "write output to a file instead of stdout");

    auto add_mk = [&](CLI::App* cmd) {
        cmd->add_option("--m", opt.m, "numerator of the deformation fraction")->required();
        cmd->add_option("--k", opt.k, "denominator of the deformation fraction")->required();
    };

    CLI::App* classify = app.add_subcommand("classify", "table of simple vacuum modules")->fallthrough();
    add_mk(classify);
    classify->add_option("--p-grid", opt.p_grid, "extra weights: list and/or start:step:end");

    CLI::App* unitary = app.add_subcommand("unitary", "unitarizable module census")->fallthrough();
    add_mk(unitary);
    unitary->add_option("--p-grid", opt.p_grid, "weight grid: list and/or start:step:end");

    CLI::App* matrices = app.add_subcommand("matrices", "generator matrices of one module")->fallthrough();
    add_mk(matrices);
    matrices->add_option("--p", opt.p_text, "vacuum weight (fraction or decimal)")->required();
    matrices->add_option("--L", opt.L, "top basis index")->required()->check(CLI::NonNegativeNumber);
    matrices->add_flag("--orthonormal", opt.orthonormal, "orthonormal basis instead of the ladder basis");

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suite")->fallthrough();
    verify->add_option("--m", opt.m, "numerator of the deformation fraction");
    verify->add_option("--k", opt.k, "denominator of the deformation fraction");
    verify->add_option("--max-k", opt.max_k, "verify every admissible algebra up to this k");
    verify->add_option("--fixtures", opt.fixtures, "directory of stored golden matrices");

    CLI::App* eval = app.add_subcommand("eval", "evaluate an expression on a module")->fallthrough();
    add_mk(eval);
    eval->add_option("--p", opt.p_text, "vacuum weight (fraction or decimal)")->required();
    eval->add_option("--L", opt.L, "top basis index")->required()->check(CLI::NonNegativeNumber);
    eval->add_option("--expr", opt.expr, "expression in a+, a-, K, q, zeta(N), rationals")
        ->required();

    CLI::App* canon = app.add_subcommand("canon", "canonicalize deformation parameters")->fallthrough();
    add_mk(canon);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    if (verify->parsed() && opt.max_k <= 0 && (opt.m <= 0 || opt.k <= 0)) {
        std::cerr << "verify needs either --m and --k, or --max-k\n";
        return kExitUsage;
    }

    try {
        if (classify->parsed()) return run_classify(opt);
        if (unitary->parsed()) return run_unitary(opt);
        if (matrices->parsed()) return run_matrices(opt);
        if (verify->parsed()) return run_verify(opt);
        if (eval->parsed()) return run_eval(opt);
        if (canon->parsed()) return run_canon(opt);
    } catch (const pbq::ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const pbq::OutOfRangeError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const pbq::UndefinedParameterError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const pbq::Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
