#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eco/analysis.hpp"
#include "eco/ast.hpp"
#include "eco/diagnostics.hpp"
#include "eco/lowering.hpp"

namespace eco {

struct SourceFile {
    std::string path;  // reported in diagnostics
    std::string text;
};

// check = tokenize + parse + analyze over the concatenation of the inputs
// (one global namespace, command-line order).
struct CheckResult {
    Module module;                  // merged, only meaningful when ok
    SymbolTable table;              // only meaningful when ok
    std::vector<Diagnostic> diags;  // sorted by (file order, line, col)
    bool ok = false;
};

CheckResult check_sources(const std::vector<SourceFile>& files);

// Reads a file into a SourceFile; nullopt when unreadable.
std::optional<SourceFile> read_source_file(const std::string& path);

// check + lower + emit; empty optional when check failed.
std::optional<std::string> emit_sources(const std::vector<SourceFile>& files,
                                        std::vector<Diagnostic>* diags_out = nullptr);

}  // namespace eco
