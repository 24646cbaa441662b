#include "eco/ast.hpp"

#include <sstream>

namespace eco {

const char* intrinsic_name(Intrinsic which) {
    switch (which) {
        case Intrinsic::Attach: return "eco_attach";
        case Intrinsic::Detach: return "eco_detach";
        case Intrinsic::Dispatch: return "eco_dispatch";
        case Intrinsic::Has: return "eco_has";
        case Intrinsic::Get: return "eco_get";
        case Intrinsic::Destroy: return "eco_destroy";
    }
    return "?";
}

bool is_intrinsic_name(const std::string& name, Intrinsic* out) {
    static const struct { const char* name; Intrinsic which; } table[] = {
        {"eco_attach", Intrinsic::Attach},   {"eco_detach", Intrinsic::Detach},
        {"eco_dispatch", Intrinsic::Dispatch}, {"eco_has", Intrinsic::Has},
        {"eco_get", Intrinsic::Get},         {"eco_destroy", Intrinsic::Destroy},
    };
    for (const auto& row : table) {
        if (name == row.name) {
            if (out) *out = row.which;
            return true;
        }
    }
    return false;
}

ExprPtr clone_expr(const Expr& e) {
    auto out = std::make_unique<Expr>();
    out->kind = e.kind;
    out->line = e.line;
    out->col = e.col;
    out->int_val = e.int_val;
    out->bool_val = e.bool_val;
    out->str_val = e.str_val;
    out->name = e.name;
    out->member = e.member;
    out->bin_op = e.bin_op;
    out->intrinsic = e.intrinsic;
    if (e.object) out->object = clone_expr(*e.object);
    if (e.rhs) out->rhs = clone_expr(*e.rhs);
    out->args.reserve(e.args.size());
    for (const auto& a : e.args) out->args.push_back(clone_expr(*a));
    return out;
}

Block clone_block(const Block& b) {
    Block out;
    out.stmts.reserve(b.stmts.size());
    for (const auto& s : b.stmts) out.stmts.push_back(clone_stmt(*s));
    return out;
}

StmtPtr clone_stmt(const Stmt& s) {
    auto out = std::make_unique<Stmt>();
    out->kind = s.kind;
    out->line = s.line;
    out->col = s.col;
    out->name = s.name;
    out->has_expr = s.has_expr;
    if (s.target) out->target = clone_expr(*s.target);
    if (s.expr) out->expr = clone_expr(*s.expr);
    out->body = clone_block(s.body);
    out->else_body = clone_block(s.else_body);
    return out;
}

ClassDecl clone_class(const ClassDecl& c) {
    ClassDecl out;
    out.name = c.name;
    out.is_extensible = c.is_extensible;
    out.is_classer = c.is_classer;
    out.extend_target = c.extend_target;
    out.base_class = c.base_class;
    out.file = c.file;
    out.line = c.line;
    out.col = c.col;
    out.fields = c.fields;
    out.emethod_sigs = c.emethod_sigs;
    out.methods.reserve(c.methods.size());
    for (const auto& m : c.methods) {
        MethodDecl md;
        md.name = m.name;
        md.is_static = m.is_static;
        md.params = m.params;
        md.body = clone_block(m.body);
        md.line = m.line;
        md.col = m.col;
        out.methods.push_back(std::move(md));
    }
    out.ctors.reserve(c.ctors.size());
    for (const auto& k : c.ctors) {
        CtorDecl cd;
        cd.is_private = k.is_private;
        cd.params = k.params;
        cd.body = clone_block(k.body);
        cd.line = k.line;
        cd.col = k.col;
        out.ctors.push_back(std::move(cd));
    }
    out.emethod_behaviors.reserve(c.emethod_behaviors.size());
    for (const auto& b : c.emethod_behaviors) {
        EMethodBehaviorDecl bd;
        bd.name = b.name;
        bd.params = b.params;
        bd.body = clone_block(b.body);
        bd.line = b.line;
        bd.col = b.col;
        out.emethod_behaviors.push_back(std::move(bd));
    }
    out.member_order = c.member_order;
    return out;
}

Module clone_module(const Module& m) {
    Module out;
    out.classes.reserve(m.classes.size());
    for (const auto& c : m.classes) out.classes.push_back(clone_class(c));
    return out;
}

namespace {

bool params_equal(const std::vector<Param>& a, const std::vector<Param>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].name != b[i].name) return false;
    return true;
}

bool block_equal(const Block& a, const Block& b) {
    if (a.stmts.size() != b.stmts.size()) return false;
    for (std::size_t i = 0; i < a.stmts.size(); ++i)
        if (!stmt_equal(*a.stmts[i], *b.stmts[i])) return false;
    return true;
}

bool opt_expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a && !b) return true;
    if (!a || !b) return false;
    return expr_equal(*a, *b);
}

}  // namespace

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    if (a.int_val != b.int_val || a.bool_val != b.bool_val ||
        a.str_val != b.str_val || a.name != b.name || a.member != b.member ||
        a.bin_op != b.bin_op || a.intrinsic != b.intrinsic)
        return false;
    if (!opt_expr_equal(a.object, b.object)) return false;
    if (!opt_expr_equal(a.rhs, b.rhs)) return false;
    if (a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!expr_equal(*a.args[i], *b.args[i])) return false;
    return true;
}

bool stmt_equal(const Stmt& a, const Stmt& b) {
    if (a.kind != b.kind || a.name != b.name || a.has_expr != b.has_expr)
        return false;
    if (!opt_expr_equal(a.target, b.target)) return false;
    if (!opt_expr_equal(a.expr, b.expr)) return false;
    return block_equal(a.body, b.body) && block_equal(a.else_body, b.else_body);
}

bool module_equal(const Module& a, const Module& b) {
    if (a.classes.size() != b.classes.size()) return false;
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
        const ClassDecl& ca = a.classes[i];
        const ClassDecl& cb = b.classes[i];
        if (ca.name != cb.name || ca.is_extensible != cb.is_extensible ||
            ca.is_classer != cb.is_classer ||
            ca.extend_target != cb.extend_target ||
            ca.base_class != cb.base_class)
            return false;
        if (ca.member_order.size() != cb.member_order.size()) return false;
        for (std::size_t j = 0; j < ca.member_order.size(); ++j) {
            auto ra = ca.member_order[j];
            auto rb = cb.member_order[j];
            if (ra.kind != rb.kind) return false;
            switch (ra.kind) {
                case ClassDecl::MemberKind::Field:
                    if (ca.fields[ra.index].name != cb.fields[rb.index].name)
                        return false;
                    break;
                case ClassDecl::MemberKind::Method: {
                    const auto& ma = ca.methods[ra.index];
                    const auto& mb = cb.methods[rb.index];
                    if (ma.name != mb.name || ma.is_static != mb.is_static ||
                        !params_equal(ma.params, mb.params) ||
                        !block_equal(ma.body, mb.body))
                        return false;
                    break;
                }
                case ClassDecl::MemberKind::Ctor: {
                    const auto& ka = ca.ctors[ra.index];
                    const auto& kb = cb.ctors[rb.index];
                    if (ka.is_private != kb.is_private ||
                        !params_equal(ka.params, kb.params) ||
                        !block_equal(ka.body, kb.body))
                        return false;
                    break;
                }
                case ClassDecl::MemberKind::EMethodSig: {
                    const auto& sa = ca.emethod_sigs[ra.index];
                    const auto& sb = cb.emethod_sigs[rb.index];
                    if (sa.name != sb.name || !params_equal(sa.params, sb.params))
                        return false;
                    break;
                }
                case ClassDecl::MemberKind::EMethodBehavior: {
                    const auto& ba = ca.emethod_behaviors[ra.index];
                    const auto& bb = cb.emethod_behaviors[rb.index];
                    if (ba.name != bb.name ||
                        !params_equal(ba.params, bb.params) ||
                        !block_equal(ba.body, bb.body))
                        return false;
                    break;
                }
            }
        }
    }
    return true;
}

namespace {

void dump_expr(std::ostringstream& os, const Expr& e);

void dump_args(std::ostringstream& os, const std::vector<ExprPtr>& args) {
    for (const auto& a : args) {
        os << ' ';
        dump_expr(os, *a);
    }
}

const char* bin_op_text(BinOp op) {
    switch (op) {
        case BinOp::Or: return "||";
        case BinOp::And: return "&&";
        case BinOp::Eq: return "==";
        case BinOp::NotEq: return "!=";
        case BinOp::Lt: return "<";
        case BinOp::LtEq: return "<=";
        case BinOp::Gt: return ">";
        case BinOp::GtEq: return ">=";
        case BinOp::Add: return "+";
        case BinOp::Sub: return "-";
        case BinOp::Mul: return "*";
        case BinOp::Div: return "/";
        case BinOp::Mod: return "%";
    }
    return "?";
}

void dump_expr(std::ostringstream& os, const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::IntLit: os << e.int_val; break;
        case K::StrLit: os << '"' << e.str_val << '"'; break;
        case K::BoolLit: os << (e.bool_val ? "true" : "false"); break;
        case K::NullLit: os << "null"; break;
        case K::This: os << "this"; break;
        case K::Ident: os << e.name; break;
        case K::ListLit:
            os << "(list";
            dump_args(os, e.args);
            os << ')';
            break;
        case K::New:
            os << "(new " << e.name;
            dump_args(os, e.args);
            os << ')';
            break;
        case K::FieldAccess:
            os << "(field ";
            dump_expr(os, *e.object);
            os << ' ' << e.name << ')';
            break;
        case K::MethodCall:
            os << "(call ";
            dump_expr(os, *e.object);
            os << ' ' << e.name;
            dump_args(os, e.args);
            os << ')';
            break;
        case K::ClasserTest:
            os << "(classer-test ";
            dump_expr(os, *e.object);
            os << ' ' << e.name << ')';
            break;
        case K::ClasserCall:
            os << "(classer-call ";
            dump_expr(os, *e.object);
            os << ' ' << e.name << ' ' << e.member;
            dump_args(os, e.args);
            os << ')';
            break;
        case K::CallEMethod:
            os << "(call-e-method " << e.name;
            dump_args(os, e.args);
            os << ')';
            break;
        case K::Binary:
            os << '(' << bin_op_text(e.bin_op) << ' ';
            dump_expr(os, *e.object);
            os << ' ';
            dump_expr(os, *e.rhs);
            os << ')';
            break;
        case K::Not:
            os << "(! ";
            dump_expr(os, *e.object);
            os << ')';
            break;
        case K::Index:
            os << "(index ";
            dump_expr(os, *e.object);
            os << ' ';
            dump_expr(os, *e.rhs);
            os << ')';
            break;
        case K::FreeCall:
            os << "(free-call " << e.name;
            dump_args(os, e.args);
            os << ')';
            break;
        case K::IntrinsicCall:
            os << '(' << intrinsic_name(e.intrinsic);
            dump_args(os, e.args);
            os << ')';
            break;
    }
}

void dump_block(std::ostringstream& os, const Block& b, int indent);

void dump_stmt(std::ostringstream& os, const Stmt& s, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    os << pad;
    using K = Stmt::Kind;
    switch (s.kind) {
        case K::VarDecl:
            os << "(var " << s.name << ' ';
            dump_expr(os, *s.expr);
            os << ")\n";
            break;
        case K::Assign:
            os << "(set ";
            dump_expr(os, *s.target);
            os << ' ';
            dump_expr(os, *s.expr);
            os << ")\n";
            break;
        case K::If:
            os << "(if ";
            dump_expr(os, *s.expr);
            os << "\n";
            dump_block(os, s.body, indent + 1);
            if (!s.else_body.stmts.empty()) {
                os << pad << " else\n";
                dump_block(os, s.else_body, indent + 1);
            }
            os << pad << ")\n";
            break;
        case K::While:
            os << "(while ";
            dump_expr(os, *s.expr);
            os << "\n";
            dump_block(os, s.body, indent + 1);
            os << pad << ")\n";
            break;
        case K::Return:
            os << "(return";
            if (s.has_expr) {
                os << ' ';
                dump_expr(os, *s.expr);
            }
            os << ")\n";
            break;
        case K::Throw:
            os << "(throw ";
            dump_expr(os, *s.expr);
            os << ")\n";
            break;
        case K::TryCatch:
            os << "(try\n";
            dump_block(os, s.body, indent + 1);
            os << pad << " catch " << s.name << "\n";
            dump_block(os, s.else_body, indent + 1);
            os << pad << ")\n";
            break;
        case K::Delete:
            os << "(delete ";
            dump_expr(os, *s.expr);
            os << ")\n";
            break;
        case K::ExprStmt:
            os << "(expr ";
            dump_expr(os, *s.expr);
            os << ")\n";
            break;
    }
}

void dump_block(std::ostringstream& os, const Block& b, int indent) {
    for (const auto& s : b.stmts) dump_stmt(os, *s, indent);
}

void dump_params(std::ostringstream& os, const std::vector<Param>& params) {
    os << '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) os << ' ';
        os << params[i].name;
    }
    os << ')';
}

}  // namespace

std::string dump_module(const Module& m) {
    std::ostringstream os;
    for (const auto& c : m.classes) {
        os << "(class " << c.name;
        if (c.is_extensible) os << " extensible";
        if (c.is_classer) os << " dynamic";
        if (!c.extend_target.empty()) os << " extend=" << c.extend_target;
        if (!c.base_class.empty()) os << " extends=" << c.base_class;
        os << "\n";
        for (const auto& ref : c.member_order) {
            switch (ref.kind) {
                case ClassDecl::MemberKind::Field:
                    os << "  (var " << c.fields[ref.index].name << ")\n";
                    break;
                case ClassDecl::MemberKind::Method: {
                    const auto& md = c.methods[ref.index];
                    os << "  (" << (md.is_static ? "static-method " : "method ")
                       << md.name << ' ';
                    dump_params(os, md.params);
                    os << "\n";
                    dump_block(os, md.body, 2);
                    os << "  )\n";
                    break;
                }
                case ClassDecl::MemberKind::Ctor: {
                    const auto& cd = c.ctors[ref.index];
                    os << "  (" << (cd.is_private ? "private-constructor "
                                                  : "constructor ");
                    dump_params(os, cd.params);
                    os << "\n";
                    dump_block(os, cd.body, 2);
                    os << "  )\n";
                    break;
                }
                case ClassDecl::MemberKind::EMethodSig: {
                    const auto& sd = c.emethod_sigs[ref.index];
                    os << "  (e-method-sig " << sd.name << ' ';
                    dump_params(os, sd.params);
                    os << ")\n";
                    break;
                }
                case ClassDecl::MemberKind::EMethodBehavior: {
                    const auto& bd = c.emethod_behaviors[ref.index];
                    os << "  (e-method-behavior " << bd.name << ' ';
                    dump_params(os, bd.params);
                    os << "\n";
                    dump_block(os, bd.body, 2);
                    os << "  )\n";
                    break;
                }
            }
        }
        os << ")\n";
    }
    return os.str();
}

}  // namespace eco
