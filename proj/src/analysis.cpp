#include "eco/analysis.hpp"

#include <functional>
#include <set>

namespace eco {

std::optional<std::size_t> SymbolTable::sig_arity(
    const std::string& class_name, const std::string& sig) const {
    const ClassInfo* info = find(class_name);
    std::set<std::string> seen;
    while (info && seen.insert(info->name).second) {
        for (const auto& [name, arity] : info->emethod_sigs)
            if (name == sig) return arity;
        info = info->base ? find(*info->base) : nullptr;
    }
    return std::nullopt;
}

bool SymbolTable::is_ancestor_or_self(const std::string& cls,
                                      const std::string& maybe_ancestor) const {
    const ClassInfo* info = find(cls);
    std::set<std::string> seen;
    while (info && seen.insert(info->name).second) {
        if (info->name == maybe_ancestor) return true;
        info = info->base ? find(*info->base) : nullptr;
    }
    return false;
}

namespace {

bool reserved_user_name(const std::string& name) {
    return name.rfind("__eco", 0) == 0;
}

class Resolver {
public:
    explicit Resolver(const Module& module) : module_(module) {}

    AnalysisResult run() {
        collect_classes();
        resolve_names();
        detect_cycles();
        AnalysisResult result;
        result.table = std::move(table_);
        result.diags = std::move(diags_);
        return result;
    }

private:
    void diag(const char* code, const std::string& message,
              const std::string& file, int line, int col) {
        diags_.push_back({code, message, file, line, col});
    }

    void check_decl_name(const std::string& name, const std::string& file,
                         int line, int col) {
        if (reserved_user_name(name))
            diag("E002", "identifiers beginning with '__eco' are reserved",
                 file, line, col);
    }

    void collect_classes() {
        for (const ClassDecl& c : module_.classes) {
            check_decl_name(c.name, c.file, c.line, c.col);
            if (table_.classes.count(c.name)) {
                diag("E030", "duplicate definition of class '" + c.name + "'",
                     c.file, c.line, c.col);
                continue;
            }
            ClassInfo info;
            info.name = c.name;
            info.is_extensible = c.is_extensible;
            if (!c.extend_target.empty()) {
                info.kind = c.is_classer ? ClassKind::Classer
                                         : ClassKind::Extender;
                info.support_class = c.extend_target;
            } else {
                info.kind = c.is_extensible ? ClassKind::Extensible
                                            : ClassKind::Plain;
            }
            if (!c.base_class.empty()) info.base = c.base_class;
            info.decl = &c;

            auto add_member = [&](const std::string& name, MemberKind kind,
                                  int line, int col) {
                check_decl_name(name, c.file, line, col);
                if (!info.members.emplace(name, kind).second)
                    diag("E030",
                         "duplicate definition of member '" + name +
                             "' in class '" + c.name + "'",
                         c.file, line, col);
            };
            for (const FieldDecl& f : c.fields)
                add_member(f.name, MemberKind::Field, f.line, f.col);
            for (const MethodDecl& m : c.methods) {
                add_member(m.name,
                           m.is_static ? MemberKind::StaticMethod
                                       : MemberKind::Method,
                           m.line, m.col);
                for (const Param& p : m.params)
                    check_decl_name(p.name, c.file, p.line, p.col);
            }
            for (std::size_t i = 0; i < c.ctors.size(); ++i) {
                const CtorDecl& k = c.ctors[i];
                for (const Param& p : k.params)
                    check_decl_name(p.name, c.file, p.line, p.col);
                if (i == 0) {
                    info.ctor_private = k.is_private;
                    info.members.emplace("constructor", MemberKind::Ctor);
                } else {
                    diag("E030",
                         "duplicate constructor in class '" + c.name + "'",
                         c.file, k.line, k.col);
                }
            }
            std::set<std::string> sig_names;
            for (const EMethodSigDecl& s : c.emethod_sigs) {
                check_decl_name(s.name, c.file, s.line, s.col);
                if (!sig_names.insert(s.name).second) {
                    diag("E030",
                         "duplicate e-method signature '" + s.name +
                             "' in class '" + c.name + "'",
                         c.file, s.line, s.col);
                    continue;
                }
                info.emethod_sigs.emplace_back(s.name, s.params.size());
            }
            std::set<std::string> behavior_names;
            for (const EMethodBehaviorDecl& b : c.emethod_behaviors) {
                check_decl_name(b.name, c.file, b.line, b.col);
                for (const Param& p : b.params)
                    check_decl_name(p.name, c.file, p.line, p.col);
                if (!behavior_names.insert(b.name).second)
                    diag("E030",
                         "duplicate e-method behavior '" + b.name +
                             "' in class '" + c.name + "'",
                         c.file, b.line, b.col);
            }
            table_.classes.emplace(c.name, std::move(info));
        }
    }

    void resolve_names() {
        for (const ClassDecl& c : module_.classes) {
            if (!c.base_class.empty() && !table_.find(c.base_class))
                diag("E001", "unknown class '" + c.base_class + "'", c.file,
                     c.line, c.col);
            if (!c.extend_target.empty() && !table_.find(c.extend_target))
                diag("E001", "unknown class '" + c.extend_target + "'", c.file,
                     c.line, c.col);
            walk_class_bodies(c);
        }
    }

    void walk_class_bodies(const ClassDecl& c) {
        auto walk_expr = [&](const Expr& e, const auto& self) -> void {
            if (e.kind == Expr::Kind::New && !table_.find(e.name))
                diag("E001", "unknown class '" + e.name + "'", c.file, e.line,
                     e.col);
            if (e.object) self(*e.object, self);
            if (e.rhs) self(*e.rhs, self);
            for (const auto& a : e.args) self(*a, self);
        };
        auto walk_stmt = [&](const Stmt& s, const auto& self) -> void {
            if (s.kind == Stmt::Kind::VarDecl ||
                s.kind == Stmt::Kind::TryCatch)
                check_decl_name(s.name, c.file, s.line, s.col);
            if (s.target) walk_expr(*s.target, walk_expr);
            if (s.expr) walk_expr(*s.expr, walk_expr);
            for (const auto& t : s.body.stmts) self(*t, self);
            for (const auto& t : s.else_body.stmts) self(*t, self);
        };
        auto walk_block = [&](const Block& b) {
            for (const auto& s : b.stmts) walk_stmt(*s, walk_stmt);
        };
        for (const MethodDecl& m : c.methods) walk_block(m.body);
        for (const CtorDecl& k : c.ctors) walk_block(k.body);
        for (const EMethodBehaviorDecl& b : c.emethod_behaviors)
            walk_block(b.body);
    }

    void detect_cycles() {
        // DFS coloring over base edges; report once per cycle entry point.
        std::map<std::string, int> color;  // 0 white, 1 gray, 2 black
        std::function<void(const ClassInfo&)> visit =
            [&](const ClassInfo& info) {
                color[info.name] = 1;
                if (info.base) {
                    const ClassInfo* base = table_.find(*info.base);
                    if (base) {
                        int c = color[base->name];
                        if (c == 1) {
                            const ClassDecl* d = info.decl;
                            diag("E003",
                                 "inheritance cycle involving class '" +
                                     info.name + "'",
                                 d->file, d->line, d->col);
                        } else if (c == 0) {
                            visit(*base);
                        }
                    }
                }
                color[info.name] = 2;
            };
        for (auto& [name, info] : table_.classes)
            if (color[name] == 0) visit(info);
    }

    const Module& module_;
    SymbolTable table_;
    std::vector<Diagnostic> diags_;
};

// Context for rule checking inside one member body.
struct BodyContext {
    const ClassDecl* cls = nullptr;
    const ClassInfo* info = nullptr;
    bool in_ctor = false;
    bool is_static = false;
    bool is_behavior = false;
    std::string first_ctor_param;  // support parameter inside extender ctors
};

class RuleChecker {
public:
    RuleChecker(const Module& module, const SymbolTable& table)
        : module_(module), table_(table) {}

    std::vector<Diagnostic> run() {
        for (const ClassDecl& c : module_.classes) {
            const ClassInfo* info = table_.find(c.name);
            if (!info || info->decl != &c) continue;  // duplicate definition
            check_class(c, *info);
        }
        return std::move(diags_);
    }

private:
    void diag(const char* code, const std::string& message,
              const std::string& file, int line, int col) {
        diags_.push_back({code, message, file, line, col});
    }

    bool is_extend_headed(const ClassInfo& info) const {
        return info.kind == ClassKind::Extender ||
               info.kind == ClassKind::Classer;
    }

    void check_class(const ClassDecl& c, const ClassInfo& info) {
        // E020: dynamic without an extend head
        if (c.is_classer && c.extend_target.empty())
            diag("E020",
                 "'dynamic' requires an 'extend' head on class '" + c.name +
                     "'",
                 c.file, c.line, c.col);

        // E010: extend target must be declared extensible
        if (!c.extend_target.empty()) {
            const ClassInfo* target = table_.find(c.extend_target);
            if (target && !target->is_extensible)
                diag("E010",
                     "'extend " + c.extend_target + "': class '" +
                         c.extend_target + "' is not declared extensible",
                     c.file, c.line, c.col);
        }

        // E023: signatures only in extensible classes
        if (!c.is_extensible)
            for (const EMethodSigDecl& s : c.emethod_sigs)
                diag("E023",
                     "e-method signature '" + s.name +
                         "' declared in non-extensible class '" + c.name + "'",
                     c.file, s.line, s.col);

        // E011: behaviors need an extender class and a matching signature
        for (const EMethodBehaviorDecl& b : c.emethod_behaviors) {
            if (!is_extend_headed(info)) {
                diag("E011",
                     "e-method behavior '" + b.name +
                         "' in class '" + c.name + "' with no 'extend' head",
                     c.file, b.line, b.col);
                continue;
            }
            if (!info.support_class) continue;
            auto arity = table_.sig_arity(*info.support_class, b.name);
            if (!arity || *arity != b.params.size())
                diag("E011",
                     "no e-method signature '" + b.name + "' with " +
                         std::to_string(b.params.size()) +
                         " parameter(s) in support class '" +
                         *info.support_class + "'",
                     c.file, b.line, b.col);
        }

        if (is_extend_headed(info)) {
            // E013: constructors must take the support object first
            if (c.ctors.empty())
                diag("E013",
                     "extender class '" + c.name +
                         "' must declare a constructor taking the support "
                         "object as first parameter",
                     c.file, c.line, c.col);
            for (const CtorDecl& k : c.ctors)
                if (k.params.empty())
                    diag("E013",
                         "constructor of extender class '" + c.name +
                             "' is missing the leading support parameter",
                         c.file, k.line, k.col);
            // E021: classer constructors must be private
            if (info.kind == ClassKind::Classer)
                for (const CtorDecl& k : c.ctors)
                    if (!k.is_private)
                        diag("E021",
                             "classer '" + c.name +
                                 "' has a non-private constructor",
                             c.file, k.line, k.col);
        }

        // body-level rules
        for (const MethodDecl& m : c.methods) {
            BodyContext ctx{&c, &info, false, m.is_static, false, ""};
            walk_block(m.body, ctx);
        }
        for (const CtorDecl& k : c.ctors) {
            BodyContext ctx{&c, &info, true, false, false, ""};
            if (is_extend_headed(info) && !k.params.empty())
                ctx.first_ctor_param = k.params[0].name;
            walk_block(k.body, ctx);
        }
        for (const EMethodBehaviorDecl& b : c.emethod_behaviors) {
            BodyContext ctx{&c, &info, false, false, true, ""};
            walk_block(b.body, ctx);
        }
    }

    void walk_block(const Block& b, const BodyContext& ctx) {
        for (const auto& s : b.stmts) walk_stmt(*s, ctx);
    }

    void walk_stmt(const Stmt& s, const BodyContext& ctx) {
        if (s.target) walk_expr(*s.target, ctx);
        if (s.expr) walk_expr(*s.expr, ctx);
        walk_block(s.body, ctx);
        walk_block(s.else_body, ctx);
    }

    // Static class of a receiver when it is knowable without a type system:
    // `this`, `new C(...)`, or the support parameter of an extender ctor.
    std::optional<std::string> static_class_of(const Expr& e,
                                               const BodyContext& ctx) {
        if (e.kind == Expr::Kind::This && !ctx.is_static)
            return ctx.cls->name;
        if (e.kind == Expr::Kind::New && table_.find(e.name)) return e.name;
        if (e.kind == Expr::Kind::Ident && ctx.in_ctor &&
            !ctx.first_ctor_param.empty() && e.name == ctx.first_ctor_param &&
            ctx.info->support_class)
            return *ctx.info->support_class;
        return std::nullopt;
    }

    void check_classer_use(const Expr& e, const BodyContext& ctx) {
        auto cls = static_class_of(*e.object, ctx);
        if (!cls) return;  // deferred to runtime (R103)
        const ClassInfo* classer = table_.find(e.name);
        if (!classer || classer->kind != ClassKind::Classer ||
            !classer->support_class ||
            !table_.is_ancestor_or_self(*cls, *classer->support_class))
            diag("E022",
                 "'" + e.name + "' is not a classer declared over class '" +
                     *cls + "'",
                 ctx.cls->file, e.line, e.col);
    }

    void walk_expr(const Expr& e, const BodyContext& ctx) {
        switch (e.kind) {
            case Expr::Kind::CallEMethod: {
                bool method_of_extensible =
                    ctx.info->is_extensible && !ctx.in_ctor && !ctx.is_static;
                if (!method_of_extensible) {
                    diag("E012",
                         "call_e_method used outside a method of an "
                         "extensible class",
                         ctx.cls->file, e.line, e.col);
                } else {
                    auto arity = table_.sig_arity(ctx.cls->name, e.name);
                    if (!arity)
                        diag("E012",
                             "'" + e.name +
                                 "' is not an e-method signature of class '" +
                                 ctx.cls->name + "'",
                             ctx.cls->file, e.line, e.col);
                    else if (*arity != e.args.size())
                        diag("E012",
                             "call_e_method('" + e.name + "') passes " +
                                 std::to_string(e.args.size()) +
                                 " argument(s), signature expects " +
                                 std::to_string(*arity),
                             ctx.cls->file, e.line, e.col);
                }
                break;
            }
            case Expr::Kind::ClasserTest:
            case Expr::Kind::ClasserCall:
                check_classer_use(e, ctx);
                break;
            default:
                break;
        }
        if (e.object) walk_expr(*e.object, ctx);
        if (e.rhs) walk_expr(*e.rhs, ctx);
        for (const auto& a : e.args) walk_expr(*a, ctx);
    }

    const Module& module_;
    const SymbolTable& table_;
    std::vector<Diagnostic> diags_;
};

}  // namespace

AnalysisResult resolve(const Module& module) {
    return Resolver(module).run();
}

std::vector<Diagnostic> check_eco_rules(const Module& module,
                                        const SymbolTable& table) {
    return RuleChecker(module, table).run();
}

AnalysisResult analyze(const Module& module,
                       const std::vector<std::string>& file_order) {
    AnalysisResult result = resolve(module);
    if (result.ok()) {
        result.diags = check_eco_rules(module, result.table);
    }
    sort_diagnostics(result.diags, file_order);
    return result;
}

}  // namespace eco
