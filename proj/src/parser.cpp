#include "eco/parser.hpp"

#include "eco/lexer.hpp"

namespace eco {

namespace {

// Unwound to the class boundary for panic-mode recovery.
struct ParseBail {};

class Parser {
public:
    Parser(const std::vector<Token>& tokens, const std::string& file)
        : toks_(tokens), file_(file) {}

    ParseResult run() {
        ParseResult result;
        while (!at(TokenKind::EndOfInput)) {
            if (!at_class_start()) {
                error_here("expected a class declaration");
                skip_to_class_boundary();
                continue;
            }
            try {
                result.module.classes.push_back(parse_class());
            } catch (const ParseBail&) {
                skip_to_class_boundary();
            }
        }
        result.diags = std::move(diags_);
        sort_diagnostics(result.diags);
        return result;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    const Token& peek(std::size_t ahead = 1) const {
        std::size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    bool at(TokenKind kind) const { return cur().kind == kind; }
    const Token& advance() { return toks_[pos_++]; }

    bool accept(TokenKind kind) {
        if (!at(kind)) return false;
        advance();
        return true;
    }

    const Token& expect(TokenKind kind, const std::string& what) {
        if (!at(kind)) {
            error_here("expected " + what + ", found " + describe_token(cur()));
            throw ParseBail{};
        }
        return advance();
    }

    void error_here(const std::string& message) {
        diags_.push_back({"E002", message, file_, cur().line, cur().col});
    }

    void error_at(const Token& tok, const std::string& message) {
        diags_.push_back({"E002", message, file_, tok.line, tok.col});
    }

    bool at_class_start() const {
        switch (cur().kind) {
            case TokenKind::KwExtensible:
            case TokenKind::KwDynamic:
            case TokenKind::KwExtend:
            case TokenKind::KwClass:
                return true;
            default:
                return false;
        }
    }

    void skip_to_class_boundary() {
        int depth = 0;
        while (!at(TokenKind::EndOfInput)) {
            if (depth <= 0 && at_class_start()) return;
            if (at(TokenKind::LBrace)) ++depth;
            if (at(TokenKind::RBrace)) {
                --depth;
                if (depth < 0) depth = 0;  // left the broken class body
            }
            advance();
        }
    }

    std::string expect_user_ident(const std::string& what) {
        const Token& tok = expect(TokenKind::Ident, what);
        if (is_intrinsic_name(tok.text)) {
            error_at(tok, "'" + tok.text + "' is a reserved identifier");
            throw ParseBail{};
        }
        return tok.text;
    }

    ClassDecl parse_class() {
        ClassDecl decl;
        decl.file = file_;
        decl.line = cur().line;
        decl.col = cur().col;
        decl.is_extensible = accept(TokenKind::KwExtensible);
        decl.is_classer = accept(TokenKind::KwDynamic);
        if (accept(TokenKind::KwExtend))
            decl.extend_target = expect_user_ident("identifier after 'extend'");
        expect(TokenKind::KwClass, "'class'");
        decl.name = expect_user_ident("class name");
        if (accept(TokenKind::KwExtends))
            decl.base_class = expect_user_ident("base class name");
        expect(TokenKind::LBrace, "'{'");
        while (!at(TokenKind::RBrace)) {
            if (at(TokenKind::EndOfInput)) {
                error_here("unexpected end of input inside class '" +
                           decl.name + "'");
                throw ParseBail{};
            }
            parse_member(decl);
        }
        expect(TokenKind::RBrace, "'}'");
        return decl;
    }

    void parse_member(ClassDecl& decl) {
        switch (cur().kind) {
            case TokenKind::KwVar: {
                const Token& kw = advance();
                FieldDecl fd;
                fd.line = kw.line;
                fd.col = kw.col;
                fd.name = expect_user_ident("field name");
                expect(TokenKind::Semicolon, "';'");
                decl.member_order.push_back(
                    {ClassDecl::MemberKind::Field, decl.fields.size()});
                decl.fields.push_back(std::move(fd));
                return;
            }
            case TokenKind::KwStatic:
            case TokenKind::KwMethod: {
                MethodDecl md;
                md.line = cur().line;
                md.col = cur().col;
                md.is_static = accept(TokenKind::KwStatic);
                expect(TokenKind::KwMethod, "'method'");
                md.name = expect_user_ident("method name");
                md.params = parse_params();
                md.body = parse_block();
                decl.member_order.push_back(
                    {ClassDecl::MemberKind::Method, decl.methods.size()});
                decl.methods.push_back(std::move(md));
                return;
            }
            case TokenKind::KwPrivate:
            case TokenKind::KwConstructor: {
                CtorDecl cd;
                cd.line = cur().line;
                cd.col = cur().col;
                cd.is_private = accept(TokenKind::KwPrivate);
                expect(TokenKind::KwConstructor, "'constructor'");
                cd.params = parse_params();
                cd.body = parse_block();
                decl.member_order.push_back(
                    {ClassDecl::MemberKind::Ctor, decl.ctors.size()});
                decl.ctors.push_back(std::move(cd));
                return;
            }
            case TokenKind::KwExtend: {
                const Token& kw = advance();
                std::string name = expect_user_ident("e-method name");
                std::vector<Param> params = parse_params();
                if (accept(TokenKind::Semicolon)) {
                    EMethodSigDecl sd;
                    sd.name = std::move(name);
                    sd.params = std::move(params);
                    sd.line = kw.line;
                    sd.col = kw.col;
                    decl.member_order.push_back(
                        {ClassDecl::MemberKind::EMethodSig,
                         decl.emethod_sigs.size()});
                    decl.emethod_sigs.push_back(std::move(sd));
                } else {
                    EMethodBehaviorDecl bd;
                    bd.name = std::move(name);
                    bd.params = std::move(params);
                    bd.body = parse_block();
                    bd.line = kw.line;
                    bd.col = kw.col;
                    decl.member_order.push_back(
                        {ClassDecl::MemberKind::EMethodBehavior,
                         decl.emethod_behaviors.size()});
                    decl.emethod_behaviors.push_back(std::move(bd));
                }
                return;
            }
            default:
                error_here("expected a class member, found " +
                           describe_token(cur()));
                throw ParseBail{};
        }
    }

    std::vector<Param> parse_params() {
        expect(TokenKind::LParen, "'('");
        std::vector<Param> params;
        if (!at(TokenKind::RParen)) {
            do {
                Param p;
                p.line = cur().line;
                p.col = cur().col;
                p.name = expect_user_ident("parameter name");
                params.push_back(std::move(p));
            } while (accept(TokenKind::Comma));
        }
        expect(TokenKind::RParen, "')'");
        return params;
    }

    Block parse_block() {
        expect(TokenKind::LBrace, "'{'");
        Block block;
        while (!at(TokenKind::RBrace)) {
            if (at(TokenKind::EndOfInput)) {
                error_here("unexpected end of input inside block");
                throw ParseBail{};
            }
            block.stmts.push_back(parse_stmt());
        }
        expect(TokenKind::RBrace, "'}'");
        return block;
    }

    StmtPtr make_stmt(Stmt::Kind kind, const Token& tok) {
        auto s = std::make_unique<Stmt>();
        s->kind = kind;
        s->line = tok.line;
        s->col = tok.col;
        return s;
    }

    StmtPtr parse_stmt() {
        const Token& tok = cur();
        switch (tok.kind) {
            case TokenKind::KwVar: {
                advance();
                auto s = make_stmt(Stmt::Kind::VarDecl, tok);
                s->name = expect_user_ident("variable name");
                expect(TokenKind::Assign, "'='");
                s->expr = parse_expr();
                expect(TokenKind::Semicolon, "';'");
                return s;
            }
            case TokenKind::KwIf: {
                advance();
                auto s = make_stmt(Stmt::Kind::If, tok);
                expect(TokenKind::LParen, "'('");
                s->expr = parse_expr();
                expect(TokenKind::RParen, "')'");
                s->body = parse_block();
                if (accept(TokenKind::KwElse)) s->else_body = parse_block();
                return s;
            }
            case TokenKind::KwWhile: {
                advance();
                auto s = make_stmt(Stmt::Kind::While, tok);
                expect(TokenKind::LParen, "'('");
                s->expr = parse_expr();
                expect(TokenKind::RParen, "')'");
                s->body = parse_block();
                return s;
            }
            case TokenKind::KwReturn: {
                advance();
                auto s = make_stmt(Stmt::Kind::Return, tok);
                if (!at(TokenKind::Semicolon)) {
                    s->expr = parse_expr();
                    s->has_expr = true;
                }
                expect(TokenKind::Semicolon, "';'");
                return s;
            }
            case TokenKind::KwThrow: {
                advance();
                auto s = make_stmt(Stmt::Kind::Throw, tok);
                s->expr = parse_expr();
                expect(TokenKind::Semicolon, "';'");
                return s;
            }
            case TokenKind::KwTry: {
                advance();
                auto s = make_stmt(Stmt::Kind::TryCatch, tok);
                s->body = parse_block();
                expect(TokenKind::KwCatch, "'catch'");
                expect(TokenKind::LParen, "'('");
                s->name = expect_user_ident("catch variable");
                expect(TokenKind::RParen, "')'");
                s->else_body = parse_block();
                return s;
            }
            case TokenKind::KwDelete: {
                advance();
                auto s = make_stmt(Stmt::Kind::Delete, tok);
                s->expr = parse_expr();
                expect(TokenKind::Semicolon, "';'");
                return s;
            }
            default:
                break;
        }
        // expression statement or assignment
        ExprPtr e = parse_expr();
        if (accept(TokenKind::Assign)) {
            if (e->kind != Expr::Kind::Ident &&
                e->kind != Expr::Kind::FieldAccess &&
                e->kind != Expr::Kind::Index) {
                error_at(tok, "invalid assignment target");
                throw ParseBail{};
            }
            auto s = make_stmt(Stmt::Kind::Assign, tok);
            s->target = std::move(e);
            s->expr = parse_expr();
            expect(TokenKind::Semicolon, "';'");
            return s;
        }
        auto s = make_stmt(Stmt::Kind::ExprStmt, tok);
        s->expr = std::move(e);
        expect(TokenKind::Semicolon, "';'");
        return s;
    }

    ExprPtr make_expr(Expr::Kind kind, const Token& tok) {
        auto e = std::make_unique<Expr>();
        e->kind = kind;
        e->line = tok.line;
        e->col = tok.col;
        return e;
    }

    ExprPtr parse_expr() { return parse_or(); }

    ExprPtr parse_binary_chain(ExprPtr (Parser::*next)(),
                               std::initializer_list<std::pair<TokenKind, BinOp>>
                                   ops) {
        ExprPtr lhs = (this->*next)();
        for (;;) {
            bool matched = false;
            for (const auto& [kind, op] : ops) {
                if (at(kind)) {
                    const Token& tok = advance();
                    auto e = make_expr(Expr::Kind::Binary, tok);
                    e->bin_op = op;
                    e->object = std::move(lhs);
                    e->rhs = (this->*next)();
                    lhs = std::move(e);
                    matched = true;
                    break;
                }
            }
            if (!matched) return lhs;
        }
    }

    ExprPtr parse_or() {
        return parse_binary_chain(&Parser::parse_and,
                                  {{TokenKind::OrOr, BinOp::Or}});
    }
    ExprPtr parse_and() {
        return parse_binary_chain(&Parser::parse_equality,
                                  {{TokenKind::AndAnd, BinOp::And}});
    }
    ExprPtr parse_equality() {
        return parse_binary_chain(&Parser::parse_relational,
                                  {{TokenKind::EqEq, BinOp::Eq},
                                   {TokenKind::NotEq, BinOp::NotEq}});
    }
    ExprPtr parse_relational() {
        return parse_binary_chain(&Parser::parse_additive,
                                  {{TokenKind::Lt, BinOp::Lt},
                                   {TokenKind::LtEq, BinOp::LtEq},
                                   {TokenKind::Gt, BinOp::Gt},
                                   {TokenKind::GtEq, BinOp::GtEq}});
    }
    ExprPtr parse_additive() {
        return parse_binary_chain(&Parser::parse_multiplicative,
                                  {{TokenKind::Plus, BinOp::Add},
                                   {TokenKind::Minus, BinOp::Sub}});
    }
    ExprPtr parse_multiplicative() {
        return parse_binary_chain(&Parser::parse_unary,
                                  {{TokenKind::Star, BinOp::Mul},
                                   {TokenKind::Slash, BinOp::Div},
                                   {TokenKind::Percent, BinOp::Mod}});
    }

    ExprPtr parse_unary() {
        if (at(TokenKind::Bang)) {
            const Token& tok = advance();
            auto e = make_expr(Expr::Kind::Not, tok);
            e->object = parse_unary();
            return e;
        }
        return parse_postfix();
    }

    ExprPtr parse_postfix() {
        ExprPtr e = parse_primary();
        for (;;) {
            if (at(TokenKind::Dot)) {
                const Token& dot = cur();
                if (peek().kind == TokenKind::LBrace) {
                    advance();  // .
                    advance();  // {
                    std::string classer =
                        expect_user_ident("classer name in '.{ }'");
                    expect(TokenKind::RBrace, "'}'");
                    if (at(TokenKind::Dot) &&
                        peek().kind == TokenKind::Ident &&
                        peek(2).kind == TokenKind::LParen) {
                        advance();  // .
                        auto call = make_expr(Expr::Kind::ClasserCall, dot);
                        call->object = std::move(e);
                        call->name = std::move(classer);
                        call->member = advance().text;
                        call->args = parse_args();
                        e = std::move(call);
                    } else {
                        auto test = make_expr(Expr::Kind::ClasserTest, dot);
                        test->object = std::move(e);
                        test->name = std::move(classer);
                        e = std::move(test);
                    }
                    continue;
                }
                advance();  // .
                std::string member = expect_user_ident("member name after '.'");
                if (at(TokenKind::LParen)) {
                    auto call = make_expr(Expr::Kind::MethodCall, dot);
                    call->object = std::move(e);
                    call->name = std::move(member);
                    call->args = parse_args();
                    e = std::move(call);
                } else {
                    auto access = make_expr(Expr::Kind::FieldAccess, dot);
                    access->object = std::move(e);
                    access->name = std::move(member);
                    e = std::move(access);
                }
                continue;
            }
            if (at(TokenKind::LBracket)) {
                const Token& tok = advance();
                auto idx = make_expr(Expr::Kind::Index, tok);
                idx->object = std::move(e);
                idx->rhs = parse_expr();
                expect(TokenKind::RBracket, "']'");
                e = std::move(idx);
                continue;
            }
            return e;
        }
    }

    std::vector<ExprPtr> parse_args() {
        expect(TokenKind::LParen, "'('");
        std::vector<ExprPtr> args;
        if (!at(TokenKind::RParen)) {
            do {
                args.push_back(parse_expr());
            } while (accept(TokenKind::Comma));
        }
        expect(TokenKind::RParen, "')'");
        return args;
    }

    std::size_t intrinsic_arity(Intrinsic which) {
        switch (which) {
            case Intrinsic::Attach: return 4;
            case Intrinsic::Detach: return 1;
            case Intrinsic::Dispatch: return 3;
            case Intrinsic::Has: return 2;
            case Intrinsic::Get: return 2;
            case Intrinsic::Destroy: return 1;
        }
        return 0;
    }

    ExprPtr parse_primary() {
        const Token& tok = cur();
        switch (tok.kind) {
            case TokenKind::IntLit: {
                advance();
                auto e = make_expr(Expr::Kind::IntLit, tok);
                e->int_val = std::stoll(tok.text);
                return e;
            }
            case TokenKind::StrLit: {
                advance();
                auto e = make_expr(Expr::Kind::StrLit, tok);
                e->str_val = tok.value;
                return e;
            }
            case TokenKind::KwTrue:
            case TokenKind::KwFalse: {
                advance();
                auto e = make_expr(Expr::Kind::BoolLit, tok);
                e->bool_val = tok.kind == TokenKind::KwTrue;
                return e;
            }
            case TokenKind::KwNull:
                advance();
                return make_expr(Expr::Kind::NullLit, tok);
            case TokenKind::KwThis:
                advance();
                return make_expr(Expr::Kind::This, tok);
            case TokenKind::LParen: {
                advance();
                ExprPtr e = parse_expr();
                expect(TokenKind::RParen, "')'");
                return e;
            }
            case TokenKind::LBracket: {
                advance();
                auto e = make_expr(Expr::Kind::ListLit, tok);
                if (!at(TokenKind::RBracket)) {
                    do {
                        e->args.push_back(parse_expr());
                    } while (accept(TokenKind::Comma));
                }
                expect(TokenKind::RBracket, "']'");
                return e;
            }
            case TokenKind::KwNew: {
                advance();
                auto e = make_expr(Expr::Kind::New, tok);
                e->name = expect_user_ident("class name after 'new'");
                e->args = parse_args();
                return e;
            }
            case TokenKind::KwCallEMethod: {
                advance();
                auto e = make_expr(Expr::Kind::CallEMethod, tok);
                expect(TokenKind::LParen, "'('");
                e->name = expect_user_ident("e-method name");
                while (accept(TokenKind::Comma))
                    e->args.push_back(parse_expr());
                expect(TokenKind::RParen, "')'");
                return e;
            }
            case TokenKind::Ident: {
                advance();
                Intrinsic which;
                if (is_intrinsic_name(tok.text, &which)) {
                    if (!at(TokenKind::LParen)) {
                        error_at(tok, "'" + tok.text +
                                          "' is a reserved identifier");
                        throw ParseBail{};
                    }
                    auto e = make_expr(Expr::Kind::IntrinsicCall, tok);
                    e->intrinsic = which;
                    e->args = parse_args();
                    if (e->args.size() != intrinsic_arity(which)) {
                        error_at(tok, "'" + tok.text + "' expects " +
                                          std::to_string(intrinsic_arity(which)) +
                                          " arguments");
                        throw ParseBail{};
                    }
                    return e;
                }
                if (at(TokenKind::LParen)) {
                    auto e = make_expr(Expr::Kind::FreeCall, tok);
                    e->name = tok.text;
                    e->args = parse_args();
                    return e;
                }
                auto e = make_expr(Expr::Kind::Ident, tok);
                e->name = tok.text;
                return e;
            }
            default:
                error_here("expected an expression, found " +
                           describe_token(tok));
                throw ParseBail{};
        }
    }

    const std::vector<Token>& toks_;
    std::string file_;
    std::size_t pos_ = 0;
    std::vector<Diagnostic> diags_;
};

}  // namespace

ParseResult parse(const std::vector<Token>& tokens, const std::string& file) {
    return Parser(tokens, file).run();
}

ParseResult parse_source(const std::string& source, const std::string& file) {
    LexResult lexed = tokenize(source, file);
    if (!lexed.ok()) {
        ParseResult result;
        result.diags = std::move(lexed.diags);
        sort_diagnostics(result.diags);
        return result;
    }
    return parse(lexed.tokens, file);
}

}  // namespace eco
