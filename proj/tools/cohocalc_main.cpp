#include "cohocalc/dsl.hpp"
#include "cohocalc/errors.hpp"
#include "cohocalc/report.hpp"
#include "cohocalc/scenarios.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

// Exit codes: 0 every step passed, 1 a computation mismatched, 2 input error.
constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

int emit(const cohocalc::Report& report, bool json) {
    if (json)
        std::cout << cohocalc::report_to_json(report) << "\n";
    else
        std::cout << cohocalc::report_to_text(report);
    return report.passed() ? kExitPass : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection-theory calculator for the rank-2 genus-2 Mukai system"};
    app.require_subcommand(1);

    std::string file;
    std::string scenario;
    bool eval_json = false;
    bool repro_json = false;
    bool selfcheck_json = false;

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a ring-DSL file");
    eval_cmd->add_option("file", file, "DSL input file")->required();
    eval_cmd->add_flag("--json", eval_json, "machine-readable output");

    CLI::App* repro_cmd =
        app.add_subcommand("repro", "re-derive the nilpotent-cone identities");
    repro_cmd->add_option("scenario", scenario,
                          "fiber | n0 | n1 | multiplicities | thm1 | thm2 | independence | "
                          "verlinde | lambda-check | all")
        ->required();
    repro_cmd->add_flag("--json", repro_json, "machine-readable output");

    CLI::App* selfcheck_cmd = app.add_subcommand("selfcheck", "run the kernel property suites");
    selfcheck_cmd->add_flag("--json", selfcheck_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInputError;
    }

    try {
        if (eval_cmd->parsed()) {
            std::ifstream in(file);
            if (!in) {
                std::cerr << "error: cannot open '" << file << "'\n";
                return kExitInputError;
            }
            std::ostringstream text;
            text << in.rdbuf();
            cohocalc::DslProgram program = cohocalc::parse(text.str());
            cohocalc::Report report =
                cohocalc::eval_program(program, std::filesystem::path(file).filename().string());
            return emit(report, eval_json);
        }
        if (repro_cmd->parsed())
            return emit(cohocalc::repro(scenario), repro_json);
        if (selfcheck_cmd->parsed())
            return emit(cohocalc::selfcheck(), selfcheck_json);
    } catch (const cohocalc::UnknownScenario& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const cohocalc::DslError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const cohocalc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
