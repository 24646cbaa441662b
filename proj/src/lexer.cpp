#include "eco/lexer.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_map>

namespace eco {

namespace {

const std::unordered_map<std::string, TokenKind>& keyword_table() {
    static const std::unordered_map<std::string, TokenKind> table = {
        {"extensible", TokenKind::KwExtensible},
        {"dynamic", TokenKind::KwDynamic},
        {"extend", TokenKind::KwExtend},
        {"class", TokenKind::KwClass},
        {"extends", TokenKind::KwExtends},
        {"var", TokenKind::KwVar},
        {"method", TokenKind::KwMethod},
        {"static", TokenKind::KwStatic},
        {"constructor", TokenKind::KwConstructor},
        {"private", TokenKind::KwPrivate},
        {"if", TokenKind::KwIf},
        {"else", TokenKind::KwElse},
        {"while", TokenKind::KwWhile},
        {"return", TokenKind::KwReturn},
        {"throw", TokenKind::KwThrow},
        {"try", TokenKind::KwTry},
        {"catch", TokenKind::KwCatch},
        {"delete", TokenKind::KwDelete},
        {"new", TokenKind::KwNew},
        {"this", TokenKind::KwThis},
        {"true", TokenKind::KwTrue},
        {"false", TokenKind::KwFalse},
        {"null", TokenKind::KwNull},
        {"call_e_method", TokenKind::KwCallEMethod},
    };
    return table;
}

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
public:
    Lexer(const std::string& source, const std::string& file)
        : src_(source), file_(file) {}

    LexResult run() {
        while (!at_end()) {
            skip_space_and_comments();
            if (at_end()) break;
            start_line_ = line_;
            start_col_ = col_;
            start_pos_ = pos_;
            lex_one();
        }
        Token eoi;
        eoi.kind = TokenKind::EndOfInput;
        eoi.line = line_;
        eoi.col = col_;
        result_.tokens.push_back(std::move(eoi));
        return std::move(result_);
    }

private:
    bool at_end() const { return pos_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }
    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space_and_comments() {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (!at_end() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    void emit(TokenKind kind, std::string value = "") {
        Token tok;
        tok.kind = kind;
        tok.text = src_.substr(start_pos_, pos_ - start_pos_);
        tok.value = std::move(value);
        tok.line = start_line_;
        tok.col = start_col_;
        result_.tokens.push_back(std::move(tok));
    }

    void error(const std::string& message) {
        result_.diags.push_back(
            {"E001", message, file_, start_line_, start_col_});
    }

    void lex_one() {
        char c = advance();
        switch (c) {
            case '{': emit(TokenKind::LBrace); return;
            case '}': emit(TokenKind::RBrace); return;
            case '(': emit(TokenKind::LParen); return;
            case ')': emit(TokenKind::RParen); return;
            case '[': emit(TokenKind::LBracket); return;
            case ']': emit(TokenKind::RBracket); return;
            case ';': emit(TokenKind::Semicolon); return;
            case ',': emit(TokenKind::Comma); return;
            case '.': emit(TokenKind::Dot); return;
            case '+': emit(TokenKind::Plus); return;
            case '-': emit(TokenKind::Minus); return;
            case '*': emit(TokenKind::Star); return;
            case '/': emit(TokenKind::Slash); return;
            case '%': emit(TokenKind::Percent); return;
            case '=':
                if (peek() == '=') { advance(); emit(TokenKind::EqEq); }
                else emit(TokenKind::Assign);
                return;
            case '!':
                if (peek() == '=') { advance(); emit(TokenKind::NotEq); }
                else emit(TokenKind::Bang);
                return;
            case '<':
                if (peek() == '=') { advance(); emit(TokenKind::LtEq); }
                else emit(TokenKind::Lt);
                return;
            case '>':
                if (peek() == '=') { advance(); emit(TokenKind::GtEq); }
                else emit(TokenKind::Gt);
                return;
            case '&':
                if (peek() == '&') { advance(); emit(TokenKind::AndAnd); }
                else error("stray '&', did you mean '&&'?");
                return;
            case '|':
                if (peek() == '|') { advance(); emit(TokenKind::OrOr); }
                else error("stray '|', did you mean '||'?");
                return;
            case '"': lex_string(); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            lex_number();
            return;
        }
        if (is_ident_start(c)) {
            lex_ident();
            return;
        }
        error(std::string("illegal character '") + c + "'");
    }

    void lex_string() {
        std::string value;
        while (true) {
            if (at_end() || peek() == '\n') {
                error("unterminated string literal");
                return;
            }
            char c = advance();
            if (c == '"') break;
            if (c == '\\') {
                if (at_end() || peek() == '\n') {
                    error("unterminated string literal");
                    return;
                }
                char esc = advance();
                switch (esc) {
                    case 'n': value.push_back('\n'); break;
                    case 't': value.push_back('\t'); break;
                    case 'r': value.push_back('\r'); break;
                    case '\\': value.push_back('\\'); break;
                    case '"': value.push_back('"'); break;
                    default:
                        error(std::string("unknown escape '\\") + esc + "'");
                        return;
                }
            } else {
                value.push_back(c);
            }
        }
        emit(TokenKind::StrLit, std::move(value));
    }

    void lex_number() {
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            advance();
        std::string text = src_.substr(start_pos_, pos_ - start_pos_);
        // range-check now so the parser can trust the literal
        try {
            (void)std::stoll(text);
        } catch (const std::out_of_range&) {
            error("integer literal out of 64-bit range");
            return;
        }
        emit(TokenKind::IntLit);
    }

    void lex_ident() {
        while (!at_end() && is_ident_char(peek())) advance();
        std::string text = src_.substr(start_pos_, pos_ - start_pos_);
        auto it = keyword_table().find(text);
        emit(it != keyword_table().end() ? it->second : TokenKind::Ident);
    }

    const std::string& src_;
    std::string file_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    std::size_t start_pos_ = 0;
    int start_line_ = 1;
    int start_col_ = 1;
    LexResult result_;
};

}  // namespace

LexResult tokenize(const std::string& source, const std::string& file) {
    return Lexer(source, file).run();
}

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::KwExtensible: return "'extensible'";
        case TokenKind::KwDynamic: return "'dynamic'";
        case TokenKind::KwExtend: return "'extend'";
        case TokenKind::KwClass: return "'class'";
        case TokenKind::KwExtends: return "'extends'";
        case TokenKind::KwVar: return "'var'";
        case TokenKind::KwMethod: return "'method'";
        case TokenKind::KwStatic: return "'static'";
        case TokenKind::KwConstructor: return "'constructor'";
        case TokenKind::KwPrivate: return "'private'";
        case TokenKind::KwIf: return "'if'";
        case TokenKind::KwElse: return "'else'";
        case TokenKind::KwWhile: return "'while'";
        case TokenKind::KwReturn: return "'return'";
        case TokenKind::KwThrow: return "'throw'";
        case TokenKind::KwTry: return "'try'";
        case TokenKind::KwCatch: return "'catch'";
        case TokenKind::KwDelete: return "'delete'";
        case TokenKind::KwNew: return "'new'";
        case TokenKind::KwThis: return "'this'";
        case TokenKind::KwTrue: return "'true'";
        case TokenKind::KwFalse: return "'false'";
        case TokenKind::KwNull: return "'null'";
        case TokenKind::KwCallEMethod: return "'call_e_method'";
        case TokenKind::Ident: return "identifier";
        case TokenKind::IntLit: return "integer literal";
        case TokenKind::StrLit: return "string literal";
        case TokenKind::LBrace: return "'{'";
        case TokenKind::RBrace: return "'}'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::LBracket: return "'['";
        case TokenKind::RBracket: return "']'";
        case TokenKind::Semicolon: return "';'";
        case TokenKind::Comma: return "','";
        case TokenKind::Dot: return "'.'";
        case TokenKind::Assign: return "'='";
        case TokenKind::EqEq: return "'=='";
        case TokenKind::NotEq: return "'!='";
        case TokenKind::Lt: return "'<'";
        case TokenKind::LtEq: return "'<='";
        case TokenKind::Gt: return "'>'";
        case TokenKind::GtEq: return "'>='";
        case TokenKind::Plus: return "'+'";
        case TokenKind::Minus: return "'-'";
        case TokenKind::Star: return "'*'";
        case TokenKind::Slash: return "'/'";
        case TokenKind::Percent: return "'%'";
        case TokenKind::AndAnd: return "'&&'";
        case TokenKind::OrOr: return "'||'";
        case TokenKind::Bang: return "'!'";
        case TokenKind::EndOfInput: return "end of input";
    }
    return "?";
}

std::string describe_token(const Token& tok) {
    if (tok.kind == TokenKind::EndOfInput) return "end of input";
    if (tok.kind == TokenKind::Ident || tok.kind == TokenKind::IntLit ||
        tok.kind == TokenKind::StrLit)
        return "'" + tok.text + "'";
    return token_kind_name(tok.kind);
}

}  // namespace eco
