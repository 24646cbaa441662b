#pragma once

#include <string>
#include <vector>

#include "eco/ast.hpp"
#include "eco/diagnostics.hpp"
#include "eco/token.hpp"

namespace eco {

struct ParseResult {
    Module module;
    std::vector<Diagnostic> diags;
    bool ok() const { return diags.empty(); }
};

// Recursive descent over the token stream. On error inside a class the
// parser recovers at the next class boundary so that later classes still
// get parsed and reported.
ParseResult parse(const std::vector<Token>& tokens, const std::string& file);

// Convenience: tokenize + parse. Lexical errors suppress parsing.
ParseResult parse_source(const std::string& source, const std::string& file);

}  // namespace eco
