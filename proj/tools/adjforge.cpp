// Command-line front-end: load JSON inputs, dispatch to the validators,
// batteries and star verdicts, and emit reports with stable exit codes.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "adjforge/json_io.hpp"

using namespace adjforge;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLawViolation = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUndecided = 3;

struct Output {
    std::string format = "json";
    std::string path;

    void emit(const json& report, const std::string& text) const {
        std::string payload = format == "text" ? text : report.dump(2) + "\n";
        if (path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream out(path);
            out << payload;
        }
    }
};

std::string battery_text(const json& report) {
    std::string out;
    for (auto it = report.at("conditions").begin(); it != report.at("conditions").end(); ++it)
        out += "condition " + it.key() + ": " + (it.value().get<bool>() ? "true" : "false") + "\n";
    out += std::string("coherent: ") + (report.at("coherent").get<bool>() ? "yes" : "no") + "\n";
    out += std::string("verdict: ") + (report.at("verdict").get<bool>() ? "true" : "false") + "\n";
    return out;
}

int finish_validation(const fincat::Validation& v) {
    if (v.ok()) {
        std::cout << "valid\n";
        return kExitOk;
    }
    std::cerr << v.describe();
    return v.malformed() ? kExitInputError : kExitLawViolation;
}

int cmd_check(const std::string& kind, const std::string& path, int budget) {
    json j = json_io::load_file(path);
    std::string dir = json_io::dirname_of(path);
    if (kind == "category")
        return finish_validation(fincat::validate_category(*json_io::load_category(j, dir), budget));
    if (kind == "functor")
        return finish_validation(fincat::validate_functor(json_io::load_functor(j, dir)));
    if (kind == "monad")
        return finish_validation(monadics::validate_monad(json_io::load_monad(j, dir)));
    if (kind == "comonad")
        return finish_validation(monadics::validate_comonad(json_io::load_comonad(j, dir)));
    if (kind == "adjunction")
        return finish_validation(
            adjunctions::validate_adjunction(json_io::load_adjunction(j, dir)));
    if (kind == "algebra")
        return finish_validation(algmod::validate_algebra(*json_io::load_algebra(j, dir)));
    if (kind == "module")
        return finish_validation(algmod::validate_module(json_io::load_module(j, dir)));
    if (kind == "bimodule")
        return finish_validation(algmod::validate_bimodule(json_io::load_bimodule(j, dir)));
    std::cerr << "unknown kind: " << kind << "\n";
    return kExitInputError;
}

int cmd_battery(const std::string& kind, const std::string& path, int budget,
                const Output& out, const std::string& expect) {
    json j = json_io::load_file(path);
    std::string dir = json_io::dirname_of(path);
    json report;
    bool coherent = false, verdict = false;
    if (kind == "monad") {
        auto m = json_io::load_monad(j, dir);
        auto v = monadics::validate_monad(m);
        if (!v.ok()) {
            std::cerr << v.describe();
            return kExitInputError;
        }
        auto r = monadics::idempotence_battery(m, budget);
        report = json_io::battery_json(r);
        coherent = r.coherent();
        verdict = r.verdict();
    } else if (kind == "comonad") {
        auto s = json_io::load_comonad(j, dir);
        auto v = monadics::validate_comonad(s);
        if (!v.ok()) {
            std::cerr << v.describe();
            return kExitInputError;
        }
        auto r = monadics::idempotence_battery_comonad(s, budget);
        report = json_io::battery_json(r);
        coherent = r.coherent();
        verdict = r.verdict();
    } else if (kind == "pair") {
        auto a = json_io::load_adjunction(j, dir);
        auto v = adjunctions::validate_adjunction(a);
        if (!v.ok()) {
            std::cerr << v.describe();
            return kExitInputError;
        }
        auto r = adjunctions::idempotent_pair_battery(a, budget);
        report = json_io::pair_battery_json(r);
        coherent = r.coherent();
        verdict = r.verdict();
    } else {
        std::cerr << "unknown kind: " << kind << "\n";
        return kExitInputError;
    }
    out.emit(report, battery_text(report));
    if (!expect.empty()) {
        bool want = expect == "true" || expect == "all-true";
        if (verdict != want) {
            std::cerr << "verdict mismatch: expected " << expect << "\n";
            return kExitLawViolation;
        }
    }
    // equivalent conditions disagreeing is a self-test alarm
    return coherent ? kExitOk : kExitLawViolation;
}

starlab::StarContext context_from_json(const json& j, const std::string& dir, int max_dim,
                                       long budget) {
    if (j.contains("right_algebra")) {
        auto b = json_io::load_bimodule(j, dir);
        auto v = algmod::validate_bimodule(b);
        if (!v.ok()) throw json_io::ParseError(v.describe());
        return starlab::make_context(b, max_dim, budget);
    }
    auto m = json_io::load_module(j, dir);
    auto v = algmod::validate_module(m);
    if (!v.ok()) throw json_io::ParseError(v.describe());
    return starlab::make_context(m, max_dim, budget);
}

int cmd_star(const std::string& path, int max_dim, long budget, const Output& out,
             const std::string& expect) {
    json j = json_io::load_file(path);
    auto ctx = context_from_json(j, json_io::dirname_of(path), max_dim, budget);
    auto verdict = starlab::star_verdict(ctx);
    json report = json_io::star_report_json(ctx, verdict);
    std::string text = "verdict: " + report.at("verdict").get<std::string>() + " (window dim " +
                       std::to_string(max_dim) + ", " +
                       std::to_string(verdict.certificates.size()) + " certificates)\n";
    out.emit(report, text);
    if (!expect.empty() && report.at("verdict").get<std::string>() != expect) {
        std::cerr << "verdict mismatch: expected " << expect << "\n";
        return kExitLawViolation;
    }
    switch (verdict.status) {
        case starlab::StarStatus::StarOnWindow: return kExitOk;
        case starlab::StarStatus::Refuted: return kExitLawViolation;
        case starlab::StarStatus::Undecided: return kExitUndecided;
    }
    return kExitInputError;
}

int cmd_enumerate(const std::string& path, int max_dim, long budget, const Output& out) {
    json j = json_io::load_file(path);
    auto alg = json_io::load_algebra(j, json_io::dirname_of(path));
    auto v = algmod::validate_algebra(*alg);
    if (!v.ok()) {
        std::cerr << v.describe();
        return kExitInputError;
    }
    auto result = algmod::enumerate_modules(alg, max_dim, budget);
    json mods = json::array();
    for (const auto& m : result.modules) mods.push_back(json_io::module_json(m));
    json report = {{"modules", mods}, {"complete", result.complete}, {"max_dim", max_dim}};
    std::string text = std::to_string(result.modules.size()) + " modules up to dim " +
                       std::to_string(max_dim) + (result.complete ? "" : " (incomplete)") + "\n";
    out.emit(report, text);
    return kExitOk;
}

int cmd_report(const std::string& path, long budget) {
    json j = json_io::load_file(path);
    const json& ctx_json = j.at("context");
    auto b = json_io::load_bimodule(ctx_json.at("bimodule"), "");
    int max_dim = ctx_json.at("window_dim").get<int>();
    auto ctx = starlab::make_context(b, max_dim, budget);
    bool all_ok = true;
    for (const auto& cj : j.at("certificates")) {
        auto cert = json_io::load_certificate(cj, b.left_algebra->p, b.left_algebra);
        bool ok = starlab::revalidate_certificate(ctx, cert);
        std::cout << "certificate " << cj.at("kind").get<std::string>() << " on "
                  << cert.module.name << ": " << (ok ? "reproduced" : "NOT reproduced") << "\n";
        all_ok = all_ok && ok;
    }
    auto verdict = starlab::star_verdict(ctx);
    json fresh = json_io::star_report_json(ctx, verdict);
    if (fresh.at("verdict") != j.at("verdict")) {
        std::cout << "verdict mismatch: stored " << j.at("verdict") << ", recomputed "
                  << fresh.at("verdict") << "\n";
        all_ok = false;
    }
    std::cout << (all_ok ? "report reproduced\n" : "report NOT reproduced\n");
    return all_ok ? kExitOk : kExitLawViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adjforge: verification toolkit for adjunctions, idempotent monads "
                 "and star-modules over finite fields"};
    app.require_subcommand(1);

    // read but only recorded: all checks are currently single-threaded
    int threads = 1;
    if (const char* env = std::getenv("ADJFORGE_THREADS")) threads = std::max(1, atoi(env));
    (void)threads;

    std::string kind, path, expect;
    int max_dim = 3;
    long budget = fincat::kDefaultMorphismBudget;
    Output out;

    auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_option("--format", out.format, "Report format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--out", out.path, "Write the report to a file");
    };

    auto* check = app.add_subcommand("check", "Validate a JSON input against the laws");
    check->add_option("kind", kind, "category|functor|monad|comonad|adjunction|algebra|module|bimodule")
        ->required();
    check->add_option("path", path, "Input file")->required();
    check->add_option("--budget", budget, "Morphism budget")->check(CLI::PositiveNumber);

    auto* battery = app.add_subcommand("battery", "Run an idempotence battery");
    battery->add_option("kind", kind, "monad|comonad|pair")->required();
    battery->add_option("path", path, "Input file")->required();
    battery->add_option("--budget", budget, "Morphism budget")->check(CLI::PositiveNumber);
    battery->add_option("--expect-verdict", expect, "Fail unless the verdict matches (true|false)");
    add_output_flags(battery);

    long enum_budget = 100'000'000;
    auto* star = app.add_subcommand("star", "Star-module verdict for a module or bimodule");
    star->add_option("path", path, "Module (End auto-computed) or bimodule JSON")->required();
    star->add_option("--max-dim", max_dim, "Window dimension bound");
    star->add_option("--budget", enum_budget, "Enumeration budget")->check(CLI::PositiveNumber);
    star->add_option("--expect-verdict", expect,
                     "Fail unless the verdict matches (star-on-window|refuted|undecided)");
    add_output_flags(star);

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate modules up to isomorphism");
    enumerate->add_option("path", path, "Algebra JSON")->required();
    enumerate->add_option("--max-dim", max_dim, "Dimension bound");
    enumerate->add_option("--budget", enum_budget, "Enumeration budget")->check(CLI::PositiveNumber);
    add_output_flags(enumerate);

    auto* report = app.add_subcommand("report", "Re-validate a stored star report");
    report->add_option("path", path, "Star report JSON")->required();
    report->add_option("--budget", enum_budget, "Enumeration budget")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(kind, path, int(budget));
        if (battery->parsed()) return cmd_battery(kind, path, int(budget), out, expect);
        if (star->parsed()) return cmd_star(path, max_dim, enum_budget, out, expect);
        if (enumerate->parsed()) return cmd_enumerate(path, max_dim, enum_budget, out);
        if (report->parsed()) return cmd_report(path, enum_budget);
    } catch (const json_io::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const fincat::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
