#include "unrollsem/parser.hpp"

#include <cctype>
#include <charconv>

#include "unrollsem/errors.hpp"

namespace unrollsem {

namespace {

enum class Tok {
    Eof,
    Ident,
    Int,
    // keywords
    KwVar,
    KwSkip,
    KwFail,
    KwCheck,
    KwEnd,
    KwIf,
    KwThen,
    KwElse,
    KwUntil,
    KwLoop,
    KwRepeat,
    KwAnd,
    KwOr,
    KwNot,
    KwTrue,
    KwFalse,
    KwAt,
    // symbols
    Assign,     // :=
    Colon,      // :
    Semicolon,  // ;
    DotDot,     // ..
    LParen,
    RParen,
    Bar,        // |
    Plus,
    Minus,
    Star,
    EqOp,       // =
    NeOp,       // /=
    LtOp,       // <
    LeOp,       // <=
    GtOp,       // >
    GeOp,       // >=
    Comma,
};

struct Token {
    Tok kind;
    std::string text;
    long long int_value = 0;
    int line = 0;
    int col = 0;
};

Tok keyword_kind(const std::string& word) {
    if (word == "var") return Tok::KwVar;
    if (word == "skip") return Tok::KwSkip;
    if (word == "fail") return Tok::KwFail;
    if (word == "check") return Tok::KwCheck;
    if (word == "end") return Tok::KwEnd;
    if (word == "if") return Tok::KwIf;
    if (word == "then") return Tok::KwThen;
    if (word == "else") return Tok::KwElse;
    if (word == "until") return Tok::KwUntil;
    if (word == "loop") return Tok::KwLoop;
    if (word == "repeat") return Tok::KwRepeat;
    if (word == "and") return Tok::KwAnd;
    if (word == "or") return Tok::KwOr;
    if (word == "not") return Tok::KwNot;
    if (word == "true" || word == "True") return Tok::KwTrue;
    if (word == "false" || word == "False") return Tok::KwFalse;
    if (word == "at") return Tok::KwAt;
    return Tok::Ident;
}

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string text, int l, int c) {
        out.push_back(Token{k, std::move(text), 0, l, c});
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
            while (i < src.size() && src[i] != '\n') ++i;
            continue;
        }
        int l = line, co = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            std::string word = src.substr(i, j - i);
            col += static_cast<int>(j - i);
            i = j;
            Tok kind = keyword_kind(word);
            push(kind, std::move(word), l, co);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            std::string digits = src.substr(i, j - i);
            long long value = 0;
            auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
            if (ec != std::errc())
                throw ParseError("integer literal out of range", l, co);
            col += static_cast<int>(j - i);
            i = j;
            Token t{Tok::Int, std::move(digits), value, l, co};
            out.push_back(std::move(t));
            continue;
        }
        auto two = [&](char a, char b) {
            return c == a && i + 1 < src.size() && src[i + 1] == b;
        };
        if (two(':', '=')) { push(Tok::Assign, ":=", l, co); i += 2; col += 2; continue; }
        if (two('.', '.')) { push(Tok::DotDot, "..", l, co); i += 2; col += 2; continue; }
        if (two('<', '=')) { push(Tok::LeOp, "<=", l, co); i += 2; col += 2; continue; }
        if (two('>', '=')) { push(Tok::GeOp, ">=", l, co); i += 2; col += 2; continue; }
        if (two('/', '=')) { push(Tok::NeOp, "/=", l, co); i += 2; col += 2; continue; }
        Tok k;
        switch (c) {
            case ':': k = Tok::Colon; break;
            case ';': k = Tok::Semicolon; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case '|': k = Tok::Bar; break;
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '=': k = Tok::EqOp; break;
            case '<': k = Tok::LtOp; break;
            case '>': k = Tok::GtOp; break;
            case ',': k = Tok::Comma; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", l, co);
        }
        push(k, std::string(1, c), l, co);
        ++i;
        ++col;
    }
    out.push_back(Token{Tok::Eof, "", 0, line, col});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& src) : tokens_(lex(src)) {}

    Program parse_program() {
        Program p;
        while (peek().kind == Tok::KwVar) p.decls.push_back(parse_decl());
        p.body = parse_instr();
        expect(Tok::Eof, "end of input");
        return p;
    }

    InstrPtr parse_instr_only() {
        InstrPtr i = parse_instr();
        expect(Tok::Eof, "end of input");
        return i;
    }

    ExprPtr parse_expr_only() {
        ExprPtr e = parse_expr();
        expect(Tok::Eof, "end of input");
        return e;
    }

    TestSpec parse_test_only() {
        TestSpec t;
        if (peek().kind == Tok::KwAt) {
            advance();
            Token name = expect(Tok::Ident, "label name");
            expect(Tok::Colon, "':' after label");
            t.anchor = StepLabel{name.text};
        }
        t.predicate = parse_expr();
        expect(Tok::Eof, "end of input");
        return t;
    }

    ExprPtr parse_input_only() {
        ExprPtr conj;
        for (;;) {
            Token name = expect(Tok::Ident, "variable name");
            expect(Tok::EqOp, "'=' in input binding");
            ExprPtr value = parse_signed_literal();
            ExprPtr pair = eq(with_pos(var_ref(name.text), name), value);
            conj = conj ? land(std::move(conj), std::move(pair)) : pair;
            if (peek().kind != Tok::Comma) break;
            advance();
        }
        expect(Tok::Eof, "end of input");
        return conj;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return tokens_[i < tokens_.size() ? i : tokens_.size() - 1];
    }
    Token advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        advance();
        return true;
    }
    Token expect(Tok k, const char* what) {
        if (peek().kind != k)
            throw ParseError("expected " + std::string(what) + ", found '" +
                                 (peek().kind == Tok::Eof ? "end of input" : peek().text) + "'",
                             peek().line, peek().col);
        return advance();
    }

    static ExprPtr with_pos(ExprPtr e, const Token& t) {
        Expr copy = *e;
        copy.pos = {t.line, t.col};
        return std::make_shared<const Expr>(std::move(copy));
    }
    static InstrPtr instr_with_pos(InstrPtr i, const Token& t) {
        Instr copy = *i;
        copy.pos = {t.line, t.col};
        return std::make_shared<const Instr>(std::move(copy));
    }

    VarDomain parse_decl() {
        expect(Tok::KwVar, "'var'");
        Token name = expect(Tok::Ident, "variable name");
        expect(Tok::Colon, "':' after variable name");
        long long lo = parse_signed_bound();
        expect(Tok::DotDot, "'..' between bounds");
        long long hi = parse_signed_bound();
        expect(Tok::Semicolon, "';' after declaration");
        return VarDomain{name.text, lo, hi};
    }

    long long parse_signed_bound() {
        bool neg = accept(Tok::Minus);
        Token t = expect(Tok::Int, "integer bound");
        return neg ? -t.int_value : t.int_value;
    }

    ExprPtr parse_signed_literal() {
        bool neg = accept(Tok::Minus);
        Token t = expect(Tok::Int, "integer literal");
        return with_pos(int_lit(neg ? -t.int_value : t.int_value), t);
    }

    // instr := choice; choice := seq ("|" seq)*; seq := atom (";" atom)*.
    InstrPtr parse_instr() {
        Token start = peek();
        InstrPtr lhs = parse_seq();
        while (peek().kind == Tok::Bar) {
            advance();
            InstrPtr rhs = parse_seq();
            lhs = instr_with_pos(make_choice(std::move(lhs), std::move(rhs)), start);
        }
        return lhs;
    }

    InstrPtr parse_seq() {
        Token start = peek();
        std::vector<InstrPtr> items;
        items.push_back(parse_atom());
        while (peek().kind == Tok::Semicolon) {
            advance();
            items.push_back(parse_atom());
        }
        if (items.size() == 1) return items.front();
        return instr_with_pos(make_seq(std::move(items)), start);
    }

    InstrPtr parse_atom() {
        Token t = peek();
        switch (t.kind) {
            case Tok::KwSkip:
                advance();
                return instr_with_pos(make_skip(), t);
            case Tok::KwFail:
                advance();
                return instr_with_pos(make_fail(), t);
            case Tok::KwCheck: {
                advance();
                ExprPtr cond = parse_expr();
                expect(Tok::KwEnd, "'end' after check condition");
                return instr_with_pos(make_check(std::move(cond)), t);
            }
            case Tok::KwIf: {
                advance();
                ExprPtr cond = parse_expr();
                expect(Tok::KwThen, "'then'");
                InstrPtr then_branch = parse_instr();
                InstrPtr else_branch;
                if (accept(Tok::KwElse)) else_branch = parse_instr();
                expect(Tok::KwEnd, "'end' closing 'if'");
                return instr_with_pos(
                    make_if(std::move(cond), std::move(then_branch), std::move(else_branch)), t);
            }
            case Tok::KwUntil: {
                advance();
                ExprPtr cond = parse_expr();
                expect(Tok::KwLoop, "'loop'");
                InstrPtr body = parse_instr();
                expect(Tok::KwEnd, "'end' closing 'until'");
                return instr_with_pos(make_until(std::move(cond), std::move(body)), t);
            }
            case Tok::KwRepeat: {
                advance();
                InstrPtr body = parse_instr();
                expect(Tok::KwUntil, "'until' after repeat body");
                ExprPtr cond = parse_expr();
                return instr_with_pos(make_repeat_until(std::move(body), std::move(cond)), t);
            }
            case Tok::LParen: {
                advance();
                InstrPtr inner = parse_instr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Ident: {
                // "label: target := e" or "target := e".
                if (peek(1).kind == Tok::Colon) {
                    Token label = advance();
                    advance();  // ':'
                    Token target = expect(Tok::Ident, "assignment target after label");
                    expect(Tok::Assign, "':='");
                    ExprPtr rhs = parse_expr();
                    return instr_with_pos(
                        make_assign(target.text, std::move(rhs), label.text, true), target);
                }
                Token target = advance();
                expect(Tok::Assign, "':='");
                ExprPtr rhs = parse_expr();
                std::string label =
                    "L" + std::to_string(target.line) + "_" + std::to_string(target.col);
                return instr_with_pos(
                    make_assign(target.text, std::move(rhs), std::move(label), false), target);
            }
            default:
                throw ParseError("expected an instruction, found '" +
                                     (t.kind == Tok::Eof ? "end of input" : t.text) + "'",
                                 t.line, t.col);
        }
    }

    ExprPtr parse_expr() { return parse_or(); }

    ExprPtr parse_or() {
        ExprPtr lhs = parse_and();
        while (peek().kind == Tok::KwOr) {
            Token t = advance();
            lhs = with_pos(lor(std::move(lhs), parse_and()), t);
        }
        return lhs;
    }

    ExprPtr parse_and() {
        ExprPtr lhs = parse_cmp();
        while (peek().kind == Tok::KwAnd) {
            Token t = advance();
            lhs = with_pos(land(std::move(lhs), parse_cmp()), t);
        }
        return lhs;
    }

    ExprPtr parse_cmp() {
        ExprPtr lhs = parse_sum();
        ExprKind k;
        switch (peek().kind) {
            case Tok::EqOp: k = ExprKind::Eq; break;
            case Tok::NeOp: k = ExprKind::Ne; break;
            case Tok::LtOp: k = ExprKind::Lt; break;
            case Tok::LeOp: k = ExprKind::Le; break;
            case Tok::GtOp: k = ExprKind::Gt; break;
            case Tok::GeOp: k = ExprKind::Ge; break;
            default: return lhs;
        }
        Token t = advance();
        return with_pos(make_binary(k, std::move(lhs), parse_sum()), t);
    }

    ExprPtr parse_sum() {
        ExprPtr lhs = parse_prod();
        for (;;) {
            if (peek().kind == Tok::Plus) {
                Token t = advance();
                lhs = with_pos(add(std::move(lhs), parse_prod()), t);
            } else if (peek().kind == Tok::Minus) {
                Token t = advance();
                lhs = with_pos(sub(std::move(lhs), parse_prod()), t);
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_prod() {
        ExprPtr lhs = parse_unary();
        while (peek().kind == Tok::Star) {
            Token t = advance();
            lhs = with_pos(mul(std::move(lhs), parse_unary()), t);
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        Token t = peek();
        switch (t.kind) {
            case Tok::KwNot:
                advance();
                return with_pos(lnot(parse_unary()), t);
            case Tok::Int:
                advance();
                return with_pos(int_lit(t.int_value), t);
            case Tok::KwTrue:
                advance();
                return with_pos(bool_lit(true), t);
            case Tok::KwFalse:
                advance();
                return with_pos(bool_lit(false), t);
            case Tok::Ident:
                advance();
                return with_pos(var_ref(t.text), t);
            case Tok::LParen: {
                advance();
                ExprPtr inner = parse_expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            default:
                throw ParseError("expected an expression, found '" +
                                     (t.kind == Tok::Eof ? "end of input" : t.text) + "'",
                                 t.line, t.col);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

Program parse_program(const std::string& source) {
    Parser parser(source);
    Program p = parser.parse_program();
    validate(p);
    return p;
}

InstrPtr parse_instr(const std::string& source, const std::vector<VarDomain>& decls) {
    Parser parser(source);
    Program p;
    p.decls = decls;
    p.body = parser.parse_instr_only();
    validate(p);
    return p.body;
}

TestSpec parse_test(const std::string& text, const VarLayout& layout) {
    Parser parser(text);
    TestSpec t = parser.parse_test_only();
    if (typecheck(*t.predicate, layout) != ExprType::Bool)
        throw ParseError("test predicate must be boolean: " + text);
    return t;
}

ExprPtr parse_input_condition(const std::string& text, const VarLayout& layout) {
    if (text.empty()) return nullptr;
    Parser parser(text);
    ExprPtr e = parser.parse_input_only();
    typecheck(*e, layout);
    return e;
}

ExprPtr parse_condition(const std::string& text, const VarLayout& layout) {
    Parser parser(text);
    ExprPtr e = parser.parse_expr_only();
    if (typecheck(*e, layout) != ExprType::Bool)
        throw ParseError("condition must be boolean: " + text);
    return e;
}

}  // namespace unrollsem
