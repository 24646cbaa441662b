#pragma once

#include <string>
#include <vector>

namespace eco {

enum class TokenKind {
    // keywords
    KwExtensible,
    KwDynamic,
    KwExtend,
    KwClass,
    KwExtends,
    KwVar,
    KwMethod,
    KwStatic,
    KwConstructor,
    KwPrivate,
    KwIf,
    KwElse,
    KwWhile,
    KwReturn,
    KwThrow,
    KwTry,
    KwCatch,
    KwDelete,
    KwNew,
    KwThis,
    KwTrue,
    KwFalse,
    KwNull,
    KwCallEMethod,
    // literals and names
    Ident,
    IntLit,
    StrLit,
    // punctuation
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Semicolon,
    Comma,
    Dot,
    // operators
    Assign,
    EqEq,
    NotEq,
    Lt,
    LtEq,
    Gt,
    GtEq,
    Plus,
    Minus,
    Star,
    Slash,
    Percent,
    AndAnd,
    OrOr,
    Bang,
    // end of input
    EndOfInput,
};

struct Token {
    TokenKind kind;
    std::string text;   // exact source slice; for StrLit the unescaped value
                        // lives in `value`
    std::string value;  // unescaped payload for StrLit, empty otherwise
    int line = 1;       // 1-based
    int col = 1;        // 1-based
};

const char* token_kind_name(TokenKind kind);

// Human-readable description used in "expected X, found Y" messages.
std::string describe_token(const Token& tok);

}  // namespace eco
