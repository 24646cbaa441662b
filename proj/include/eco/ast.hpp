#pragma once

#include <memory>
#include <string>
#include <vector>

namespace eco {

struct Expr;
struct Stmt;
using ExprPtr = std::unique_ptr<Expr>;
using StmtPtr = std::unique_ptr<Stmt>;

enum class BinOp {
    Or,
    And,
    Eq,
    NotEq,
    Lt,
    LtEq,
    Gt,
    GtEq,
    Add,
    Sub,
    Mul,
    Div,
    Mod,
};

// The eco_* intrinsics are reserved names in core text. The frontend accepts
// them only in call position and rejects them as user identifiers.
enum class Intrinsic {
    Attach,    // eco_attach(support, ext, "Type", isClasser)
    Detach,    // eco_detach(ext)
    Dispatch,  // eco_dispatch(support, "Name", [args])
    Has,       // eco_has(obj, "Type")
    Get,       // eco_get(obj, "Type")
    Destroy,   // eco_destroy(obj)
};

const char* intrinsic_name(Intrinsic which);
bool is_intrinsic_name(const std::string& name, Intrinsic* out = nullptr);

struct Expr {
    enum class Kind {
        IntLit,       // int_val
        StrLit,       // str_val
        BoolLit,      // bool_val
        NullLit,      //
        ListLit,      // args
        New,          // name, args
        This,         //
        Ident,        // name
        FieldAccess,  // object, name
        MethodCall,   // object, name, args
        ClasserTest,  // object, name           -- obj.{C}
        ClasserCall,  // object, name, member, args -- obj.{C}.m(...)
        CallEMethod,  // name, args
        Binary,       // bin_op, object (lhs), rhs
        Not,          // object
        Index,        // object, rhs
        FreeCall,     // name, args             -- print(...), builtin_is_planar(...)
        IntrinsicCall // intrinsic, args
    };

    Kind kind;
    int line = 0;
    int col = 0;

    long long int_val = 0;
    bool bool_val = false;
    std::string str_val;
    std::string name;    // identifier / class / e-method / classer name
    std::string member;  // method name in ClasserCall
    BinOp bin_op = BinOp::Or;
    Intrinsic intrinsic = Intrinsic::Attach;

    ExprPtr object;  // receiver / lhs / operand
    ExprPtr rhs;     // binary rhs / index expression
    std::vector<ExprPtr> args;
};

struct Block {
    std::vector<StmtPtr> stmts;
};

struct Stmt {
    enum class Kind {
        VarDecl,   // name, expr
        Assign,    // target, expr
        If,        // expr, body, else_body
        While,     // expr, body
        Return,    // expr (optional)
        Throw,     // expr
        TryCatch,  // body, name (catch variable), else_body (catch block)
        Delete,    // expr
        ExprStmt,  // expr
    };

    Kind kind;
    int line = 0;
    int col = 0;

    std::string name;
    ExprPtr target;  // assignment lvalue
    ExprPtr expr;
    Block body;
    Block else_body;
    bool has_expr = false;  // Return with value
};

struct Param {
    std::string name;
    int line = 0;
    int col = 0;
};

struct FieldDecl {
    std::string name;
    int line = 0;
    int col = 0;
};

struct MethodDecl {
    std::string name;
    bool is_static = false;
    std::vector<Param> params;
    Block body;
    int line = 0;
    int col = 0;
};

struct CtorDecl {
    bool is_private = false;
    std::vector<Param> params;
    Block body;
    int line = 0;
    int col = 0;
};

struct EMethodSigDecl {
    std::string name;
    std::vector<Param> params;
    int line = 0;
    int col = 0;
};

struct EMethodBehaviorDecl {
    std::string name;
    std::vector<Param> params;
    Block body;
    int line = 0;
    int col = 0;
};

struct ClassDecl {
    std::string name;
    bool is_extensible = false;
    bool is_classer = false;          // the `dynamic` flag
    std::string extend_target;        // empty when no `extend` head
    std::string base_class;           // empty when no `extends`
    std::string file;
    int line = 0;
    int col = 0;

    // member order is declaration order, tracked per family plus a merged
    // order used by the emitter
    std::vector<FieldDecl> fields;
    std::vector<MethodDecl> methods;
    std::vector<CtorDecl> ctors;
    std::vector<EMethodSigDecl> emethod_sigs;
    std::vector<EMethodBehaviorDecl> emethod_behaviors;

    enum class MemberKind { Field, Method, Ctor, EMethodSig, EMethodBehavior };
    struct MemberRef {
        MemberKind kind;
        std::size_t index;
    };
    std::vector<MemberRef> member_order;
};

struct Module {
    std::vector<ClassDecl> classes;
};

ExprPtr clone_expr(const Expr& e);
StmtPtr clone_stmt(const Stmt& s);
Block clone_block(const Block& b);
ClassDecl clone_class(const ClassDecl& c);
Module clone_module(const Module& m);

// Structural equality ignoring positions and file names.
bool expr_equal(const Expr& a, const Expr& b);
bool stmt_equal(const Stmt& a, const Stmt& b);
bool module_equal(const Module& a, const Module& b);

// Deterministic s-expression style dump (positions omitted), used by
// --dump-ast and by determinism tests.
std::string dump_module(const Module& m);

}  // namespace eco
