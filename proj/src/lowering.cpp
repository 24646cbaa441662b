#include "eco/lowering.hpp"

namespace eco {

namespace {

ExprPtr str_lit(const std::string& value, int line, int col) {
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::StrLit;
    e->str_val = value;
    e->line = line;
    e->col = col;
    return e;
}

ExprPtr intrinsic_call(Intrinsic which, std::vector<ExprPtr> args, int line,
                       int col) {
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::IntrinsicCall;
    e->intrinsic = which;
    e->args = std::move(args);
    e->line = line;
    e->col = col;
    return e;
}

void rewrite_expr(ExprPtr& e, const std::string& class_name);

void rewrite_children(Expr& e, const std::string& class_name) {
    if (e.object) rewrite_expr(e.object, class_name);
    if (e.rhs) rewrite_expr(e.rhs, class_name);
    for (auto& a : e.args) rewrite_expr(a, class_name);
}

void rewrite_expr(ExprPtr& e, const std::string& class_name) {
    rewrite_children(*e, class_name);
    switch (e->kind) {
        case Expr::Kind::CallEMethod: {
            auto self = std::make_unique<Expr>();
            self->kind = Expr::Kind::This;
            self->line = e->line;
            self->col = e->col;
            auto arg_list = std::make_unique<Expr>();
            arg_list->kind = Expr::Kind::ListLit;
            arg_list->line = e->line;
            arg_list->col = e->col;
            arg_list->args = std::move(e->args);
            std::vector<ExprPtr> args;
            args.push_back(std::move(self));
            args.push_back(str_lit(e->name, e->line, e->col));
            args.push_back(std::move(arg_list));
            e = intrinsic_call(Intrinsic::Dispatch, std::move(args), e->line,
                               e->col);
            break;
        }
        case Expr::Kind::ClasserTest: {
            std::vector<ExprPtr> args;
            args.push_back(std::move(e->object));
            args.push_back(str_lit(e->name, e->line, e->col));
            e = intrinsic_call(Intrinsic::Has, std::move(args), e->line,
                               e->col);
            break;
        }
        case Expr::Kind::ClasserCall: {
            std::vector<ExprPtr> get_args;
            get_args.push_back(std::move(e->object));
            get_args.push_back(str_lit(e->name, e->line, e->col));
            auto call = std::make_unique<Expr>();
            call->kind = Expr::Kind::MethodCall;
            call->line = e->line;
            call->col = e->col;
            call->object = intrinsic_call(Intrinsic::Get, std::move(get_args),
                                          e->line, e->col);
            call->name = e->member;
            call->args = std::move(e->args);
            e = std::move(call);
            break;
        }
        default:
            break;
    }
}

void rewrite_block(Block& block, const std::string& class_name);

void rewrite_stmt(StmtPtr& s, const std::string& class_name) {
    if (s->target) rewrite_expr(s->target, class_name);
    if (s->expr) rewrite_expr(s->expr, class_name);
    rewrite_block(s->body, class_name);
    rewrite_block(s->else_body, class_name);
    if (s->kind == Stmt::Kind::Delete) {
        std::vector<ExprPtr> args;
        args.push_back(std::move(s->expr));
        auto out = std::make_unique<Stmt>();
        out->kind = Stmt::Kind::ExprStmt;
        out->line = s->line;
        out->col = s->col;
        out->expr = intrinsic_call(Intrinsic::Destroy, std::move(args),
                                   s->line, s->col);
        s = std::move(out);
    }
}

void rewrite_block(Block& block, const std::string& class_name) {
    for (auto& s : block.stmts) rewrite_stmt(s, class_name);
}

}  // namespace

CoreProgram lower(const Module& module, const SymbolTable& table) {
    CoreProgram core;
    core.module = clone_module(module);

    for (ClassDecl& c : core.module.classes) {
        const ClassInfo* info = table.find(c.name);
        bool extend_headed = info && (info->kind == ClassKind::Extender ||
                                      info->kind == ClassKind::Classer);

        // behaviors become ordinary methods, recorded in the meta table
        std::vector<std::size_t> method_index_of_behavior;
        for (EMethodBehaviorDecl& b : c.emethod_behaviors) {
            core.meta.emplace_back(c.name, b.name);
            MethodDecl md;
            md.name = "__eco_b_" + b.name;
            md.is_static = false;
            md.params = std::move(b.params);
            md.body = std::move(b.body);
            md.line = b.line;
            md.col = b.col;
            method_index_of_behavior.push_back(c.methods.size());
            c.methods.push_back(std::move(md));
        }
        std::vector<ClassDecl::MemberRef> order;
        for (const auto& ref : c.member_order) {
            switch (ref.kind) {
                case ClassDecl::MemberKind::EMethodSig:
                    break;  // erased
                case ClassDecl::MemberKind::EMethodBehavior:
                    order.push_back({ClassDecl::MemberKind::Method,
                                     method_index_of_behavior[ref.index]});
                    break;
                default:
                    order.push_back(ref);
                    break;
            }
        }
        c.member_order = std::move(order);
        c.emethod_behaviors.clear();
        c.emethod_sigs.clear();

        // attach prologue in extender/classer constructors
        if (extend_headed) {
            for (CtorDecl& k : c.ctors) {
                if (k.params.empty()) continue;
                int line = k.line, col = k.col;
                auto support = std::make_unique<Expr>();
                support->kind = Expr::Kind::Ident;
                support->name = k.params[0].name;
                support->line = line;
                support->col = col;
                auto self = std::make_unique<Expr>();
                self->kind = Expr::Kind::This;
                self->line = line;
                self->col = col;
                auto flag = std::make_unique<Expr>();
                flag->kind = Expr::Kind::BoolLit;
                flag->bool_val = info->kind == ClassKind::Classer;
                flag->line = line;
                flag->col = col;
                std::vector<ExprPtr> args;
                args.push_back(std::move(support));
                args.push_back(std::move(self));
                args.push_back(str_lit(c.name, line, col));
                args.push_back(std::move(flag));
                auto prologue = std::make_unique<Stmt>();
                prologue->kind = Stmt::Kind::ExprStmt;
                prologue->line = line;
                prologue->col = col;
                prologue->expr = intrinsic_call(Intrinsic::Attach,
                                                std::move(args), line, col);
                k.body.stmts.insert(k.body.stmts.begin(), std::move(prologue));
            }
        }

        // hidden runtime marker fields, injected ahead of user members
        std::vector<ClassDecl::MemberRef> injected;
        if (c.is_extensible) {
            injected.push_back(
                {ClassDecl::MemberKind::Field, c.fields.size()});
            c.fields.push_back({"__eco_registry", c.line, c.col});
        }
        if (extend_headed) {
            injected.push_back(
                {ClassDecl::MemberKind::Field, c.fields.size()});
            c.fields.push_back({"__eco_support", c.line, c.col});
        }
        c.member_order.insert(c.member_order.begin(), injected.begin(),
                              injected.end());

        // drop the ECO surface flags
        c.is_extensible = false;
        c.is_classer = false;
        c.extend_target.clear();

        // rewrite bodies
        for (MethodDecl& m : c.methods) rewrite_block(m.body, c.name);
        for (CtorDecl& k : c.ctors) rewrite_block(k.body, c.name);
    }
    return core;
}

}  // namespace eco
