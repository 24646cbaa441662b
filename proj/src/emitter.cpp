#include "eco/emitter.hpp"

#include <sstream>

#include "eco/parser.hpp"

namespace eco {

namespace {

const char* kHeader = "// eco-core v1\n";
const char* kMetaPrefix = "//#eco-meta ";

// Binding strength, loosest to tightest. Postfix and primary forms share the
// top level.
enum Prec {
    kPrecOr = 1,
    kPrecAnd,
    kPrecEq,
    kPrecRel,
    kPrecAdd,
    kPrecMul,
    kPrecUnary,
    kPrecPostfix,
};

int bin_prec(BinOp op) {
    switch (op) {
        case BinOp::Or: return kPrecOr;
        case BinOp::And: return kPrecAnd;
        case BinOp::Eq:
        case BinOp::NotEq: return kPrecEq;
        case BinOp::Lt:
        case BinOp::LtEq:
        case BinOp::Gt:
        case BinOp::GtEq: return kPrecRel;
        case BinOp::Add:
        case BinOp::Sub: return kPrecAdd;
        case BinOp::Mul:
        case BinOp::Div:
        case BinOp::Mod: return kPrecMul;
    }
    return kPrecOr;
}

const char* bin_text(BinOp op) {
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

int expr_prec(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Binary: return bin_prec(e.bin_op);
        case Expr::Kind::Not: return kPrecUnary;
        default: return kPrecPostfix;
    }
}

std::string escape_string(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out.push_back(c); break;
        }
    }
    return out;
}

class Printer {
public:
    std::string render(const CoreProgram& core) {
        os_ << kHeader;
        for (const ClassDecl& c : core.module.classes) {
            os_ << '\n';
            print_class(c);
        }
        if (!core.meta.empty()) {
            os_ << '\n';
            for (const auto& [cls, name] : core.meta)
                os_ << kMetaPrefix << cls << ' ' << name << '\n';
        }
        return os_.str();
    }

private:
    void indent() { os_ << std::string(static_cast<std::size_t>(depth_) * 4, ' '); }

    void print_class(const ClassDecl& c) {
        if (c.is_extensible) os_ << "extensible ";
        if (c.is_classer) os_ << "dynamic ";
        if (!c.extend_target.empty()) os_ << "extend " << c.extend_target << ' ';
        os_ << "class " << c.name;
        if (!c.base_class.empty()) os_ << " extends " << c.base_class;
        os_ << " {\n";
        ++depth_;
        for (const auto& ref : c.member_order) {
            switch (ref.kind) {
                case ClassDecl::MemberKind::Field:
                    indent();
                    os_ << "var " << c.fields[ref.index].name << ";\n";
                    break;
                case ClassDecl::MemberKind::Method: {
                    const MethodDecl& m = c.methods[ref.index];
                    indent();
                    if (m.is_static) os_ << "static ";
                    os_ << "method " << m.name;
                    print_params(m.params);
                    print_body(m.body);
                    break;
                }
                case ClassDecl::MemberKind::Ctor: {
                    const CtorDecl& k = c.ctors[ref.index];
                    indent();
                    if (k.is_private) os_ << "private ";
                    os_ << "constructor";
                    print_params(k.params);
                    print_body(k.body);
                    break;
                }
                case ClassDecl::MemberKind::EMethodSig: {
                    const EMethodSigDecl& s = c.emethod_sigs[ref.index];
                    indent();
                    os_ << "extend " << s.name;
                    print_params(s.params);
                    os_ << ";\n";
                    break;
                }
                case ClassDecl::MemberKind::EMethodBehavior: {
                    const EMethodBehaviorDecl& b = c.emethod_behaviors[ref.index];
                    indent();
                    os_ << "extend " << b.name;
                    print_params(b.params);
                    print_body(b.body);
                    break;
                }
            }
        }
        --depth_;
        os_ << "}\n";
    }

    void print_params(const std::vector<Param>& params) {
        os_ << '(';
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) os_ << ", ";
            os_ << params[i].name;
        }
        os_ << ')';
    }

    void print_body(const Block& body) {
        os_ << " {\n";
        ++depth_;
        for (const auto& s : body.stmts) print_stmt(*s);
        --depth_;
        indent();
        os_ << "}\n";
    }

    void print_stmt(const Stmt& s) {
        indent();
        switch (s.kind) {
            case Stmt::Kind::VarDecl:
                os_ << "var " << s.name << " = ";
                print_expr(*s.expr);
                os_ << ";\n";
                break;
            case Stmt::Kind::Assign:
                print_expr(*s.target);
                os_ << " = ";
                print_expr(*s.expr);
                os_ << ";\n";
                break;
            case Stmt::Kind::If:
                os_ << "if (";
                print_expr(*s.expr);
                os_ << ") {\n";
                ++depth_;
                for (const auto& t : s.body.stmts) print_stmt(*t);
                --depth_;
                indent();
                if (s.else_body.stmts.empty()) {
                    os_ << "}\n";
                } else {
                    os_ << "} else {\n";
                    ++depth_;
                    for (const auto& t : s.else_body.stmts) print_stmt(*t);
                    --depth_;
                    indent();
                    os_ << "}\n";
                }
                break;
            case Stmt::Kind::While:
                os_ << "while (";
                print_expr(*s.expr);
                os_ << ") {\n";
                ++depth_;
                for (const auto& t : s.body.stmts) print_stmt(*t);
                --depth_;
                indent();
                os_ << "}\n";
                break;
            case Stmt::Kind::Return:
                os_ << "return";
                if (s.has_expr) {
                    os_ << ' ';
                    print_expr(*s.expr);
                }
                os_ << ";\n";
                break;
            case Stmt::Kind::Throw:
                os_ << "throw ";
                print_expr(*s.expr);
                os_ << ";\n";
                break;
            case Stmt::Kind::TryCatch:
                os_ << "try {\n";
                ++depth_;
                for (const auto& t : s.body.stmts) print_stmt(*t);
                --depth_;
                indent();
                os_ << "} catch (" << s.name << ") {\n";
                ++depth_;
                for (const auto& t : s.else_body.stmts) print_stmt(*t);
                --depth_;
                indent();
                os_ << "}\n";
                break;
            case Stmt::Kind::Delete:
                os_ << "delete ";
                print_expr(*s.expr);
                os_ << ";\n";
                break;
            case Stmt::Kind::ExprStmt:
                print_expr(*s.expr);
                os_ << ";\n";
                break;
        }
    }

    void print_args(const std::vector<ExprPtr>& args) {
        os_ << '(';
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i) os_ << ", ";
            print_expr(*args[i]);
        }
        os_ << ')';
    }

    void print_child(const Expr& child, int min_prec) {
        bool parens = expr_prec(child) < min_prec;
        if (parens) os_ << '(';
        print_expr(child);
        if (parens) os_ << ')';
    }

    void print_expr(const Expr& e) {
        switch (e.kind) {
            case Expr::Kind::IntLit:
                os_ << e.int_val;
                break;
            case Expr::Kind::StrLit:
                os_ << '"' << escape_string(e.str_val) << '"';
                break;
            case Expr::Kind::BoolLit:
                os_ << (e.bool_val ? "true" : "false");
                break;
            case Expr::Kind::NullLit:
                os_ << "null";
                break;
            case Expr::Kind::This:
                os_ << "this";
                break;
            case Expr::Kind::Ident:
                os_ << e.name;
                break;
            case Expr::Kind::ListLit:
                os_ << '[';
                for (std::size_t i = 0; i < e.args.size(); ++i) {
                    if (i) os_ << ", ";
                    print_expr(*e.args[i]);
                }
                os_ << ']';
                break;
            case Expr::Kind::New:
                os_ << "new " << e.name;
                print_args(e.args);
                break;
            case Expr::Kind::FieldAccess:
                print_child(*e.object, kPrecPostfix);
                os_ << '.' << e.name;
                break;
            case Expr::Kind::MethodCall:
                print_child(*e.object, kPrecPostfix);
                os_ << '.' << e.name;
                print_args(e.args);
                break;
            case Expr::Kind::ClasserTest:
                print_child(*e.object, kPrecPostfix);
                os_ << ".{" << e.name << '}';
                break;
            case Expr::Kind::ClasserCall:
                print_child(*e.object, kPrecPostfix);
                os_ << ".{" << e.name << "}." << e.member;
                print_args(e.args);
                break;
            case Expr::Kind::CallEMethod:
                os_ << "call_e_method(" << e.name;
                for (const auto& a : e.args) {
                    os_ << ", ";
                    print_expr(*a);
                }
                os_ << ')';
                break;
            case Expr::Kind::Binary: {
                int prec = bin_prec(e.bin_op);
                print_child(*e.object, prec);
                os_ << ' ' << bin_text(e.bin_op) << ' ';
                print_child(*e.rhs, prec + 1);  // left associative
                break;
            }
            case Expr::Kind::Not:
                os_ << '!';
                print_child(*e.object, kPrecUnary);
                break;
            case Expr::Kind::Index:
                print_child(*e.object, kPrecPostfix);
                os_ << '[';
                print_expr(*e.rhs);
                os_ << ']';
                break;
            case Expr::Kind::FreeCall:
                os_ << e.name;
                print_args(e.args);
                break;
            case Expr::Kind::IntrinsicCall:
                os_ << intrinsic_name(e.intrinsic);
                print_args(e.args);
                break;
        }
    }

    std::ostringstream os_;
    int depth_ = 0;
};

}  // namespace

std::string emit(const CoreProgram& core) {
    return Printer().render(core);
}

CoreParseResult parse_core(const std::string& text, const std::string& file) {
    CoreParseResult result;

    // meta lines are comments to the lexer; pull them out by line scan
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(kMetaPrefix, 0) != 0) continue;
        std::istringstream fields(line.substr(std::string(kMetaPrefix).size()));
        std::string cls, name;
        if (fields >> cls >> name)
            result.core.meta.emplace_back(cls, name);
    }

    ParseResult parsed = parse_source(text, file);
    result.diags = std::move(parsed.diags);
    result.core.module = std::move(parsed.module);
    return result;
}

}  // namespace eco
