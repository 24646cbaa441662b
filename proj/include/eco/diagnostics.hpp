#pragma once

#include <string>
#include <vector>

namespace eco {

// Diagnostic codes form a closed catalog. Static codes are E###, runtime
// codes are R###.
//
//   E001  lexical error / unknown name
//   E002  parse error (unexpected token, reserved identifier misuse)
//   E003  inheritance cycle
//   E010  'extend' target is not an extensible class
//   E011  e-method behavior with no matching signature in the support class
//   E012  call_e_method outside an extensible class method, or unknown
//         signature, or argument count mismatch
//   E013  extender constructor missing the leading support parameter
//   E020  'dynamic' on a class without an 'extend' head
//   E021  classer with a non-private constructor
//   E022  classer access on a receiver whose class does not support it
//   E023  e-method signature declared in a non-extensible class
//   E030  duplicate definition
//
//   R100  classer already instantiated for this support object
//   R101  object still supports live extensions
//   R102  write barrier violation
//   R103  classer not instantiated
//   R104  general runtime error (arity, dead object, arithmetic, limits)
//   R105  behavior threw during a Pre_/Post_ dispatch
struct Diagnostic {
    std::string code;
    std::string message;
    std::string file;
    int line = 0;
    int col = 0;
};

// Render as "FILE:LINE:COL: error[CODE]: MESSAGE".
std::string format_diagnostic(const Diagnostic& d);

// Stable order: file as first seen, then line, col, code.
// `file_order` lists file names in command-line order; unknown files sort
// after known ones in name order.
void sort_diagnostics(std::vector<Diagnostic>& diags,
                      const std::vector<std::string>& file_order = {});

}  // namespace eco
