// ecoc — the ECO-mini pre-compiler and interpreter driver.
//
//   ecoc check FILES...                  parse + analyze, report diagnostics
//   ecoc emit  FILES... [-o PATH]        additionally desugar and write core text
//   ecoc run   FILES... [--entry NAME] [--max-steps N]
//                                        full pipeline, then interpret
//
// Exit codes: 0 ok, 1 diagnostics or uncaught program throw, 2 runtime
// error, 3 usage error. Diagnostics and runtime errors go to stderr, program
// output to stdout.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "eco/emitter.hpp"
#include "eco/interpreter.hpp"
#include "eco/lowering.hpp"
#include "eco/pipeline.hpp"

namespace {

const char* kUsage =
    "usage: ecoc <check|emit|run> FILES... [options]\n"
    "  check                 report diagnostics and stop\n"
    "  emit                  write desugared core text\n"
    "  run                   compile and interpret\n"
    "options:\n"
    "  -o PATH               output path for emit (default: first input with\n"
    "                        its .eco suffix replaced by .core.eco)\n"
    "  --entry NAME          static method of Main to run (default: main)\n"
    "  --max-steps N         evaluation step budget (default: 10000000)\n"
    "  --dump-ast            print the parsed AST before analysis\n";

struct Options {
    std::string command;
    std::vector<std::string> inputs;
    std::string output_path;
    std::string entry = "main";
    long long max_steps = 10000000;
    bool dump_ast = false;
};

int usage_error(const std::string& message) {
    std::cerr << "ecoc: " << message << '\n' << kUsage;
    return 3;
}

bool parse_args(int argc, char** argv, Options& opts, std::string& error) {
    if (argc < 2) {
        error = "missing subcommand";
        return false;
    }
    opts.command = argv[1];
    if (opts.command != "check" && opts.command != "emit" &&
        opts.command != "run") {
        error = "unknown subcommand '" + opts.command + "'";
        return false;
    }
    for (int i = 2; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "-o") {
            if (++i >= argc) {
                error = "-o needs a path";
                return false;
            }
            opts.output_path = argv[i];
        } else if (arg == "--entry") {
            if (++i >= argc) {
                error = "--entry needs a name";
                return false;
            }
            opts.entry = argv[i];
        } else if (arg == "--max-steps") {
            if (++i >= argc) {
                error = "--max-steps needs a number";
                return false;
            }
            try {
                opts.max_steps = std::stoll(argv[i]);
            } catch (...) {
                error = "--max-steps needs a number";
                return false;
            }
            if (opts.max_steps <= 0) {
                error = "--max-steps must be positive";
                return false;
            }
        } else if (arg == "--dump-ast") {
            opts.dump_ast = true;
        } else if (!arg.empty() && arg[0] == '-') {
            error = "unknown option '" + arg + "'";
            return false;
        } else {
            opts.inputs.push_back(std::move(arg));
        }
    }
    if (opts.inputs.empty()) {
        error = "no input files";
        return false;
    }
    return true;
}

std::string default_output_path(const std::string& first_input) {
    const std::string suffix = ".eco";
    std::string base = first_input;
    if (base.size() > suffix.size() &&
        base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0)
        base.resize(base.size() - suffix.size());
    return base + ".core.eco";
}

void print_diagnostics(const std::vector<eco::Diagnostic>& diags) {
    for (const auto& d : diags) std::cerr << eco::format_diagnostic(d) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    Options opts;
    std::string error;
    if (!parse_args(argc, argv, opts, error)) return usage_error(error);

    std::vector<eco::SourceFile> files;
    for (const std::string& path : opts.inputs) {
        auto file = eco::read_source_file(path);
        if (!file) return usage_error("cannot read '" + path + "'");
        files.push_back(std::move(*file));
    }

    eco::CheckResult checked = eco::check_sources(files);
    if (opts.dump_ast) std::cout << eco::dump_module(checked.module);
    if (!checked.ok) {
        print_diagnostics(checked.diags);
        return 1;
    }
    if (opts.command == "check") return 0;

    eco::CoreProgram core = eco::lower(checked.module, checked.table);
    std::string core_text = eco::emit(core);

    if (opts.command == "emit") {
        std::string path = opts.output_path.empty()
                               ? default_output_path(opts.inputs.front())
                               : opts.output_path;
        std::ofstream out(path, std::ios::binary);
        if (!out) return usage_error("cannot write '" + path + "'");
        out << core_text;
        return 0;
    }

    // run
    eco::InterpreterOptions interp_opts;
    interp_opts.max_steps = opts.max_steps;
    eco::RunOutcome outcome =
        eco::run_program(core_text, opts.entry, interp_opts);
    std::cout << outcome.stdout_text;
    if (!outcome.error_text.empty())
        std::cerr << outcome.error_text << '\n';
    return outcome.exit_code;
}
