#pragma once

#include <string>
#include <vector>

#include "eco/diagnostics.hpp"
#include "eco/token.hpp"

namespace eco {

struct LexResult {
    std::vector<Token> tokens;       // always ends in EndOfInput when ok
    std::vector<Diagnostic> diags;   // one per lexical error
    bool ok() const { return diags.empty(); }
};

// Maximal-munch tokenizer. Keywords win over identifiers. `//` comments run
// to end of line. Lexing continues past errors so every lexical error in the
// input is reported.
LexResult tokenize(const std::string& source, const std::string& file);

}  // namespace eco
