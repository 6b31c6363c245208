// tdkit command-line front end. Every subcommand prints one JSON report:
//   {"command", "inputs", "verdict", "exit_code"}
// Exit codes: 0 checks passed, 1 checks failed, 2 usage or input error.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tdkit/generators.hpp"
#include "tdkit/json_io.hpp"
#include "tdkit/linalg.hpp"
#include "tdkit/polymod.hpp"
#include "tdkit/spectral.hpp"

using namespace tdkit;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr long kDefaultDegree = 16;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int emit(const std::string& command, Json inputs, Json verdict, int code)
{
    Json report{{"command", command}, {"inputs", std::move(inputs)}, {"verdict", std::move(verdict)},
                {"exit_code", code}};
    std::cout << report.dump(2) << '\n';
    return code;
}

Json read_json(const std::string& path)
{
    std::string text;
    if (path.empty() || path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

// Two matrix files, or one document (file or stdin) holding "A" and "Astar",
// possibly nested under "verdict" as printed by gen-example.
std::pair<Mat, Mat> read_pair(const std::vector<std::string>& files)
{
    if (files.size() == 2) return {mat_from_json(read_json(files[0])), mat_from_json(read_json(files[1]))};
    Json doc = read_json(files.empty() ? std::string("-") : files[0]);
    if (doc.is_object() && doc.contains("verdict") && doc["verdict"].is_object() && doc["verdict"].contains("A")) {
        doc = doc["verdict"];
    }
    if (!doc.is_object() || !doc.contains("A") || !doc.contains("Astar")) {
        throw FormatError("expected an object with \"A\" and \"Astar\"");
    }
    return {mat_from_json(doc["A"]), mat_from_json(doc["Astar"])};
}

Rat parse_rat(const std::string& text)
{
    try {
        return Rat::parse(text);
    } catch (const std::exception& e) {
        throw UsageError("bad rational \"" + text + "\": " + e.what());
    }
}

long parse_long(const std::string& text, const char* what)
{
    try {
        std::size_t used = 0;
        const long v = std::stol(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("bad ") + what + " \"" + text + "\"");
}

std::vector<Rat> parse_rats(const std::vector<std::string>& texts)
{
    std::vector<Rat> out;
    for (const auto& t : texts) out.push_back(parse_rat(t));
    return out;
}

struct Degree {
    long requested;
    long effective;
    bool capped;
};

// Working degree, clamped by TDKIT_MAX_DEGREE when set.
Degree working_degree(long requested)
{
    if (requested < 1) throw UsageError("degree must be positive");
    Degree d{requested, requested, false};
    if (const char* env = std::getenv("TDKIT_MAX_DEGREE")) {
        const long cap = parse_long(env, "TDKIT_MAX_DEGREE");
        if (cap < 1) throw UsageError("TDKIT_MAX_DEGREE must be positive");
        if (cap < requested) d = {requested, cap, true};
    }
    return d;
}

Json degree_json(const Degree& d)
{
    return {{"requested", d.requested}, {"effective", d.effective}, {"degree_capped", d.capped}};
}

Json residual_summary(const std::vector<XPoly>& residuals, long n)
{
    Json first = Json::array(), second = Json::array();
    for (long k = 0; k <= n; ++k) {
        if (!residuals[static_cast<std::size_t>(k)].is_zero()) first.push_back(k);
        if (!residuals[static_cast<std::size_t>(n + 1 + k)].is_zero()) second.push_back(k);
    }
    return {{"passed", first.empty() && second.empty()},
            {"nonzero_first_relation", std::move(first)},
            {"nonzero_second_relation", std::move(second)}};
}

Json index_check(const std::vector<long>& failures)
{
    return {{"passed", failures.empty()}, {"failures", failures}};
}

int cmd_verify_pair(const std::vector<std::string>& files)
{
    const auto [a, a_star] = read_pair(files);
    if (!a.is_square() || !a_star.is_square() || a.rows() != a_star.rows()) {
        throw FormatError("A and A* must be square of equal size");
    }
    const PairReport rep = verify_td_pair(a, a_star);
    return emit("verify-pair", {{"A", to_json(a)}, {"Astar", to_json(a_star)}}, to_json(rep),
                rep.is_td_pair ? kPass : kFail);
}

int cmd_solve_params(const std::vector<std::string>& files)
{
    const auto [a, a_star] = read_pair(files);
    if (!a.is_square() || !a_star.is_square() || a.rows() != a_star.rows()) {
        throw FormatError("A and A* must be square of equal size");
    }
    const ParamSolution s = solve_param_sequence(a, a_star);
    Json verdict = to_json(s);
    verdict["special_case"] = s.kind == ParamKind::unique ? special_case_name(detect_special_case(s.particular))
                                                          : std::string("undetermined");
    return emit("solve-params", {{"A", to_json(a)}, {"Astar", to_json(a_star)}}, std::move(verdict),
                s.kind == ParamKind::none ? kFail : kPass);
}

int cmd_fit_eigenvalues(const std::vector<std::string>& values, const std::vector<std::string>& dual)
{
    const EigSeq theta(parse_rats(values));
    Json inputs{{"eigenvalues", to_json(theta)}};
    const FitResult fit = fit_closed_form(theta);
    Json verdict{{"fit", to_json(fit)}};
    bool ok = fit.status != FitStatus::inconsistent;

    if (dual.empty()) {
        const auto half = half_params_from_sequence(theta);
        if (half) verdict["half_params"] = to_json(*half);
        return emit("fit-eigenvalues", std::move(inputs), std::move(verdict), ok ? kPass : kFail);
    }

    const EigSeq theta_star(parse_rats(dual));
    inputs["dual_eigenvalues"] = to_json(theta_star);
    if (theta.size() != theta_star.size()) throw UsageError("eigenvalue and dual sequences differ in length");
    if (theta.size() < 2) throw UsageError("need at least two eigenvalues");
    const FitResult dual_fit = fit_closed_form(theta_star);
    verdict["dual_fit"] = to_json(dual_fit);
    const ParamSolution params = params_from_sequences(theta, theta_star);
    verdict["params"] = to_json(params);
    ok = ok && dual_fit.status != FitStatus::inconsistent && params.kind != ParamKind::none;
    if (fit.status == FitStatus::fitted && dual_fit.status == FitStatus::fitted &&
        fit.form->kind == dual_fit.form->kind) {
        try {
            verdict["closed_form_params"] = to_json(params_from_closed_form(*fit.form, *dual_fit.form));
        } catch (const std::invalid_argument& e) {
            verdict["closed_form_params_error"] = e.what();
            ok = false;
        }
    }
    return emit("fit-eigenvalues", std::move(inputs), std::move(verdict), ok ? kPass : kFail);
}

int cmd_gen_example(const std::vector<std::string>& args)
{
    if (args.empty()) throw UsageError("gen-example needs a family: krawtchouk, paper-4x4, uq-sl2");
    const std::string& family = args[0];
    Json inputs{{"family", family}};
    auto generate = [&]() -> GeneratedPair {
        if (family == "krawtchouk") {
            if (args.size() != 2) throw UsageError("usage: gen-example krawtchouk <d>");
            const long d = parse_long(args[1], "d");
            inputs["d"] = d;
            return krawtchouk_pair(d);
        }
        if (family == "paper-4x4") {
            if (args.size() != 1) throw UsageError("usage: gen-example paper-4x4");
            return paper_4x4();
        }
        if (family == "uq-sl2") {
            if (args.size() != 6) throw UsageError("usage: gen-example uq-sl2 <d> <eps> <p> <alpha> <alpha_star>");
            const long d = parse_long(args[1], "d");
            const long eps = parse_long(args[2], "eps");
            const Rat p = parse_rat(args[3]), alpha = parse_rat(args[4]), alpha_star = parse_rat(args[5]);
            inputs.update({{"d", d}, {"eps", eps}, {"p", to_json(p)}, {"alpha", to_json(alpha)},
                           {"alpha_star", to_json(alpha_star)}});
            return uq_sl2_pair(d, static_cast<int>(eps), p, alpha, alpha_star);
        }
        throw UsageError("unknown family \"" + family + "\"");
    };
    GeneratedPair g = [&] {
        try {
            return generate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    return emit("gen-example", std::move(inputs), to_json(g), kPass);
}

int cmd_aw_check(const std::vector<std::string>& args)
{
    if (args.size() != 5 && args.size() != 6) throw UsageError("usage: aw-check <q> <a> <b> <c> <d> [N]");
    const AWParams p{parse_rat(args[0]), parse_rat(args[1]), parse_rat(args[2]), parse_rat(args[3]),
                     parse_rat(args[4])};
    const Degree deg = working_degree(args.size() == 6 ? parse_long(args[5], "N") : kDefaultDegree);
    const long n = deg.effective;
    Json inputs{{"q", to_json(p.q)}, {"a", to_json(p.a)}, {"b", to_json(p.b)}, {"c", to_json(p.c)},
                {"d", to_json(p.d)}, {"degree", degree_json(deg)}};
    try {
        p.validate(n);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }

    const OperatorFixture fx = aw_fixture(p, n);
    std::vector<XPoly> polys;
    for (long k = 0; k <= n + 1; ++k) polys.push_back(aw_poly(k, p));

    std::vector<long> eigen_fail, recurrence_fail, phi_fail;
    for (long k = 0; k <= n; ++k) {
        const XPoly& pk = polys[static_cast<std::size_t>(k)];
        if (fx.a_star(pk) != pk * aw_dual_eigenvalue(k, p)) eigen_fail.push_back(k);
        const AWCoeffs co = aw_recurrence_coeffs(k, p);
        XPoly rec = XPoly::x() * pk - polys[static_cast<std::size_t>(k + 1)] * co.b - pk * co.a;
        if (k > 0) rec -= polys[static_cast<std::size_t>(k - 1)] * co.c;
        if (!rec.is_zero()) recurrence_fail.push_back(k);
    }
    const std::vector<Rat> sample_y{Rat(2), Rat(3), Rat(-1, 2)};
    for (long k = 0; k <= std::min<long>(n, 6); ++k) {
        for (const Rat& y : sample_y) {
            if (phi43_value(k, p, y) != polys[static_cast<std::size_t>(k)].eval(y + y.inverse())) {
                phi_fail.push_back(k);
                break;
            }
        }
    }
    const std::vector<XPoly> residuals = graded_td_residual(fx.a, fx.a_star, fx.params, n);
    const XPoly omega = aw_omega(p);

    Json checks{{"eigen_equation", index_check(eigen_fail)},
                {"recurrence", index_check(recurrence_fail)},
                {"phi43_agreement", index_check(phi_fail)},
                {"td_residuals", residual_summary(residuals, n)}};
    const bool ok = eigen_fail.empty() && recurrence_fail.empty() && phi_fail.empty() && all_zero(residuals);
    Json verdict{{"passed", ok}, {"params", to_json(fx.params)}, {"checks", std::move(checks)},
                 {"omega", to_json(omega)}};
    return emit("aw-check", std::move(inputs), std::move(verdict), ok ? kPass : kFail);
}

int cmd_hermite_check(const std::vector<std::string>& args)
{
    if (args.size() > 1) throw UsageError("usage: hermite-check [N]");
    const Degree deg = working_degree(args.empty() ? kDefaultDegree : parse_long(args[0], "N"));
    const long n = deg.effective;
    const OperatorFixture fx = hermite_fixture(n);

    std::vector<long> eigen_fail, recurrence_fail;
    for (long k = 0; k <= n; ++k) {
        const XPoly h = hermite_poly(k);
        if (fx.a_star(h) != h * Rat(k)) eigen_fail.push_back(k);
        XPoly rec = XPoly::x() * h - hermite_poly(k + 1);
        if (k > 0) rec -= hermite_poly(k - 1) * Rat(2 * k);
        if (!rec.is_zero()) recurrence_fail.push_back(k);
    }
    const std::vector<XPoly> residuals = graded_td_residual(fx.a, fx.a_star, fx.params, n);
    ParamSeq perturbed = fx.params;
    perturbed.rho += Rat(1);
    const bool perturbation_seen = !all_zero(graded_td_residual(fx.a, fx.a_star, perturbed, n));

    Json checks{{"eigen_equation", index_check(eigen_fail)},
                {"recurrence", index_check(recurrence_fail)},
                {"td_residuals", residual_summary(residuals, n)},
                {"perturbed_rho_detected", perturbation_seen}};
    const bool ok = eigen_fail.empty() && recurrence_fail.empty() && all_zero(residuals) && perturbation_seen;
    Json verdict{{"passed", ok}, {"params", to_json(fx.params)}, {"checks", std::move(checks)}};
    return emit("hermite-check", {{"degree", degree_json(deg)}}, std::move(verdict), ok ? kPass : kFail);
}

// Lets negative rationals such as -1 or -1/3 pass through as positionals.
std::vector<std::string> protect_negative_numbers(int argc, char** argv)
{
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg.size() > 1 && arg[0] == '-' && (std::isdigit(static_cast<unsigned char>(arg[1])) != 0)) {
            arg = "\x01" + arg;
        }
        out.push_back(std::move(arg));
    }
    std::reverse(out.begin(), out.end()); // CLI11 consumes the vector from the back
    return out;
}

std::vector<std::string> unprotect(std::vector<std::string> args)
{
    for (auto& a : args) {
        if (!a.empty() && a[0] == '\x01') a.erase(0, 1);
    }
    return args;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of Leonard pairs, tridiagonal pairs and their polynomial modules"};
    app.require_subcommand(1);

    std::vector<std::string> pair_files, solve_files, fit_values, fit_dual, gen_args, aw_args, hermite_args;

    auto* verify = app.add_subcommand("verify-pair", "Verify a pair given as two matrix files or one {A, Astar} document");
    verify->add_option("files", pair_files, "Matrix files (default: stdin)")->expected(0, 2);

    auto* solve = app.add_subcommand("solve-params", "Solve the tridiagonal relations for (beta, gamma, gamma*, rho, rho*)");
    solve->add_option("files", solve_files, "Matrix files (default: stdin)")->expected(0, 2);

    auto* fit = app.add_subcommand("fit-eigenvalues", "Fit an eigenvalue sequence to its closed form");
    fit->add_option("values", fit_values, "Eigenvalues as p/q")->required();
    fit->add_option("--dual", fit_dual, "Dual eigenvalue sequence");

    auto* gen = app.add_subcommand("gen-example", "Emit a generated pair: krawtchouk <d> | paper-4x4 | uq-sl2 <d> <eps> <p> <alpha> <alpha_star>");
    gen->add_option("args", gen_args, "Family and its arguments")->required();

    auto* aw = app.add_subcommand("aw-check", "Askey-Wilson module identities: q a b c d [N]");
    aw->add_option("args", aw_args, "q a b c d [N]")->required();

    auto* hermite = app.add_subcommand("hermite-check", "Hermite module identities: [N]");
    hermite->add_option("args", hermite_args, "[N]");

    std::string command = "tdkit";
    try {
        app.parse(protect_negative_numbers(argc, argv));
        for (auto* sub : app.get_subcommands()) command = sub->get_name();
        if (verify->parsed()) return cmd_verify_pair(pair_files);
        if (solve->parsed()) return cmd_solve_params(solve_files);
        if (fit->parsed()) return cmd_fit_eigenvalues(unprotect(fit_values), unprotect(fit_dual));
        if (gen->parsed()) return cmd_gen_example(unprotect(gen_args));
        if (aw->parsed()) return cmd_aw_check(unprotect(aw_args));
        if (hermite->parsed()) return cmd_hermite_check(unprotect(hermite_args));
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n' << app.help();
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return emit(command, Json::object(), {{"error", e.what()}}, kUsage);
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return emit(command, Json::object(), {{"error", e.what()}}, kUsage);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return emit(command, Json::object(), {{"error", e.what()}}, kUsage);
    }
    return kUsage;
}
