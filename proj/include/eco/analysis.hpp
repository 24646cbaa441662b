#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eco/ast.hpp"
#include "eco/diagnostics.hpp"

namespace eco {

enum class ClassKind { Plain, Extensible, Extender, Classer };

enum class MemberKind { Field, Method, StaticMethod, Ctor };

struct ClassInfo {
    std::string name;
    ClassKind kind = ClassKind::Plain;
    bool is_extensible = false;            // the declared flag; extenders may
                                           // carry it to accept extensions
    std::optional<std::string> support_class;
    std::optional<std::string> base;
    std::vector<std::pair<std::string, std::size_t>> emethod_sigs;  // name, arity
    std::map<std::string, MemberKind> members;
    bool ctor_private = false;
    const ClassDecl* decl = nullptr;
};

struct SymbolTable {
    std::map<std::string, ClassInfo> classes;

    const ClassInfo* find(const std::string& name) const {
        auto it = classes.find(name);
        return it != classes.end() ? &it->second : nullptr;
    }
    // Signature lookup walks the base chain.
    std::optional<std::size_t> sig_arity(const std::string& class_name,
                                         const std::string& sig) const;
    // True when `maybe_ancestor` is `cls` or one of its bases.
    bool is_ancestor_or_self(const std::string& cls,
                             const std::string& maybe_ancestor) const;
};

struct AnalysisResult {
    SymbolTable table;
    std::vector<Diagnostic> diags;
    bool ok() const { return diags.empty(); }
};

// Name resolution: duplicate classes/members, unknown names in `extends`,
// `extend` heads and `new`, inheritance cycles.
AnalysisResult resolve(const Module& module);

// Static ECO rules E010..E023. Requires a table from a successful resolve.
std::vector<Diagnostic> check_eco_rules(const Module& module,
                                        const SymbolTable& table);

// resolve + check_eco_rules with merged, sorted diagnostics.
AnalysisResult analyze(const Module& module,
                       const std::vector<std::string>& file_order = {});

}  // namespace eco
