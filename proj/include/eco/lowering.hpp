#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eco/analysis.hpp"
#include "eco/ast.hpp"

namespace eco {

// A desugared program in the ECO-free core language. `meta` records which
// classes define which e-method behaviors ((class, e-method) pairs, in
// declaration order); it is serialized as a trailing `//#eco-meta` comment
// block so emitted text stays self-contained.
struct CoreProgram {
    Module module;
    std::vector<std::pair<std::string, std::string>> meta;
};

// Desugars ECO constructs into core statements plus runtime intrinsic calls:
//   - extender/classer constructors gain an eco_attach prologue
//   - call_e_method(M, a...)      -> eco_dispatch(this, "M", [a...])
//   - obj.{C}                     -> eco_has(obj, "C")
//   - obj.{C}.m(a...)             -> eco_get(obj, "C").m(a...)
//   - delete e                    -> eco_destroy(e)
//   - behavior `extend M(p){B}`   -> method __eco_b_M(p){B}
//   - signatures erased (meta only), flags and extend heads dropped
//   - hidden fields injected: __eco_registry on former extensible classes,
//     __eco_support on former extenders/classers
// Total on analyzed input.
CoreProgram lower(const Module& module, const SymbolTable& table);

}  // namespace eco
