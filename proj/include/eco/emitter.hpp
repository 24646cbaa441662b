#pragma once

#include <string>
#include <vector>

#include "eco/diagnostics.hpp"
#include "eco/lowering.hpp"

namespace eco {

// Canonical pretty-print of a core program: `// eco-core v1` header, 4-space
// indent, one statement per line, declarations in input order, trailing
// `//#eco-meta` block. Byte-identical across runs.
std::string emit(const CoreProgram& core);

struct CoreParseResult {
    CoreProgram core;
    std::vector<Diagnostic> diags;
    bool ok() const { return diags.empty(); }
};

// Parses core text produced by emit (or written by hand): the meta block is
// read from `//#eco-meta` lines, everything else goes through the frontend.
CoreParseResult parse_core(const std::string& text, const std::string& file);

}  // namespace eco
