#include "lsk/parser.hpp"

#include <cctype>
#include <utility>

#include "lsk/series.hpp"

namespace lsk {

namespace {

std::string compose_parse_message(const std::string& message, int line, int column,
                                  const std::vector<std::string>& expected) {
    std::string out = "parse error at line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + message;
    if (!expected.empty()) {
        out += " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) out += ", ";
            out += expected[i];
        }
        out += ")";
    }
    return out;
}

}  // namespace

ParseError::ParseError(std::string message, int line, int column,
                       std::vector<std::string> expected)
    : Error(compose_parse_message(message, line, column, expected)),
      line(line),
      column(column),
      expected(std::move(expected)) {}

namespace {

struct Token {
    enum class Kind { number, symbol, punct, end };
    Kind kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(const std::string& source) {
    std::vector<Token> tokens;
    int line = 1;
    int column = 1;
    std::size_t i = 0;
    const std::string punct = "+-*/[](),^";
    while (i < source.size()) {
        char c = source[i];
        if (c == '\n') {
            ++line;
            column = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++column;
            ++i;
            continue;
        }
        int start_column = column;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text;
            while (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i]))) {
                text += source[i++];
                ++column;
            }
            tokens.push_back({Token::Kind::number, std::move(text), line, start_column});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string text;
            while (i < source.size() &&
                   (std::isalnum(static_cast<unsigned char>(source[i])) || source[i] == '_')) {
                text += source[i++];
                ++column;
            }
            tokens.push_back({Token::Kind::symbol, std::move(text), line, start_column});
            continue;
        }
        if (punct.find(c) != std::string::npos) {
            tokens.push_back({Token::Kind::punct, std::string(1, c), line, start_column});
            ++column;
            ++i;
            continue;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", line, column);
    }
    tokens.push_back({Token::Kind::end, "", line, column});
    return tokens;
}

AstPtr make_node(ExprAst node) { return std::make_shared<const ExprAst>(std::move(node)); }

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    AstPtr run() {
        AstPtr root = parse_expr();
        if (!at_end())
            throw ParseError("trailing input after expression", peek().line, peek().column,
                             {"end of input"});
        return root;
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    bool at_end() const { return peek().kind == Token::Kind::end; }
    bool peek_punct(const char* text, std::size_t ahead = 0) const {
        return peek(ahead).kind == Token::Kind::punct && peek(ahead).text == text;
    }
    const Token& advance() { return tokens_[pos_++]; }

    void expect_punct(const char* text) {
        if (!peek_punct(text))
            throw ParseError("unexpected " + describe(peek()), peek().line, peek().column,
                             {std::string("'") + text + "'"});
        advance();
    }

    static std::string describe(const Token& token) {
        switch (token.kind) {
            case Token::Kind::number: return "number '" + token.text + "'";
            case Token::Kind::symbol: return "symbol '" + token.text + "'";
            case Token::Kind::punct: return "'" + token.text + "'";
            case Token::Kind::end: return "end of input";
        }
        return "token";
    }

    AstPtr parse_expr() {
        AstPtr lhs = parse_term();
        while (peek_punct("+") || peek_punct("-")) {
            bool minus = peek().text == "-";
            advance();
            AstPtr rhs = parse_term();
            if (minus)
                rhs = make_node({ExprAst::Kind::negate, Rational(0), "", 0, {std::move(rhs)}});
            lhs = make_node(
                {ExprAst::Kind::sum, Rational(0), "", 0, {std::move(lhs), std::move(rhs)}});
        }
        return lhs;
    }

    AstPtr parse_term() {
        bool negative_literal = peek_punct("-") && peek(1).kind == Token::Kind::number;
        if (peek().kind == Token::Kind::number || negative_literal) {
            Rational value = parse_rational();
            if (peek_punct("*")) {
                advance();
                AstPtr factor = parse_factor();
                return make_node({ExprAst::Kind::scalar_mul, std::move(value), "", 0,
                                  {std::move(factor)}});
            }
            return make_node({ExprAst::Kind::rational, std::move(value), "", 0, {}});
        }
        return parse_factor();
    }

    Rational parse_rational() {
        bool negative = false;
        if (peek_punct("-")) {
            advance();
            negative = true;
        }
        const Token& num = advance();
        Integer numerator(num.text);
        Integer denominator(1);
        if (peek_punct("/") && peek(1).kind == Token::Kind::number) {
            advance();
            const Token& den = advance();
            denominator = Integer(den.text);
            if (denominator == 0)
                throw ParseError("zero denominator in rational literal", den.line, den.column);
        }
        Rational value(numerator, denominator);
        value.canonicalize();
        return negative ? Rational(-value) : value;
    }

    int parse_power() {
        if (peek().kind != Token::Kind::number)
            throw ParseError("unexpected " + describe(peek()), peek().line, peek().column,
                             {"number"});
        const Token& num = advance();
        if (num.text.size() > 6)
            throw ParseError("power exponent too large", num.line, num.column);
        return std::stoi(num.text);
    }

    AstPtr parse_factor() {
        const Token& token = peek();
        if (token.kind == Token::Kind::symbol) {
            if (peek_punct("(", 1)) {
                if (token.text == "ad") return parse_ad();
                if (token.text == "exp_ad") return parse_exp_ad();
                if (token.text == "bch") return parse_pair_call(ExprAst::Kind::bch_pair);
                if (token.text == "gauge") return parse_pair_call(ExprAst::Kind::gauge_pair);
                if (token.text == "diff") return parse_diff();
            }
            advance();
            return make_node({ExprAst::Kind::symbol, Rational(0), token.text, 0, {}});
        }
        if (peek_punct("[")) {
            advance();
            AstPtr first = parse_expr();
            expect_punct(",");
            AstPtr second = parse_expr();
            expect_punct("]");
            return make_node({ExprAst::Kind::bracket_pair, Rational(0), "", 0,
                              {std::move(first), std::move(second)}});
        }
        if (peek_punct("(")) {
            advance();
            AstPtr inner = parse_expr();
            expect_punct(")");
            return inner;
        }
        if (peek_punct("-")) {
            advance();
            AstPtr inner = parse_factor();
            return make_node({ExprAst::Kind::negate, Rational(0), "", 0, {std::move(inner)}});
        }
        throw ParseError("unexpected " + describe(token), token.line, token.column,
                         {"symbol", "'['", "'('", "'-'", "operator call"});
    }

    AstPtr parse_ad() {
        advance();  // ad
        expect_punct("(");
        AstPtr operand = parse_expr();
        expect_punct(")");
        expect_punct("^");
        int power = parse_power();
        expect_punct("(");
        AstPtr target = parse_expr();
        expect_punct(")");
        return make_node({ExprAst::Kind::ad_power, Rational(0), "", power,
                          {std::move(operand), std::move(target)}});
    }

    AstPtr parse_exp_ad() {
        advance();  // exp_ad
        expect_punct("(");
        AstPtr operand = parse_expr();
        expect_punct(")");
        expect_punct("(");
        AstPtr target = parse_expr();
        expect_punct(")");
        return make_node({ExprAst::Kind::exp_ad, Rational(0), "", 0,
                          {std::move(operand), std::move(target)}});
    }

    AstPtr parse_pair_call(ExprAst::Kind kind) {
        advance();  // bch | gauge
        expect_punct("(");
        AstPtr first = parse_expr();
        expect_punct(",");
        AstPtr second = parse_expr();
        expect_punct(")");
        return make_node({kind, Rational(0), "", 0, {std::move(first), std::move(second)}});
    }

    AstPtr parse_diff() {
        advance();  // diff
        expect_punct("(");
        AstPtr operand = parse_expr();
        expect_punct(")");
        return make_node({ExprAst::Kind::diff, Rational(0), "", 0, {std::move(operand)}});
    }
};

}  // namespace

AstPtr parse_expr(const std::string& source) { return Parser(tokenize(source)).run(); }

Element evaluate(const ExprAst& ast, const DglContext& ctx) {
    auto child = [&](std::size_t i) -> Element { return evaluate(*ast.children.at(i), ctx); };
    switch (ast.kind) {
        case ExprAst::Kind::rational:
            return ast.value * Element::unit(ctx.generators(), ctx.truncation());
        case ExprAst::Kind::symbol:
            return ctx.generator_element(ast.name);
        case ExprAst::Kind::negate:
            return -child(0);
        case ExprAst::Kind::sum:
            return child(0) + child(1);
        case ExprAst::Kind::scalar_mul:
            return ast.value * child(0);
        case ExprAst::Kind::bracket_pair:
            return bracket(child(0), child(1));
        case ExprAst::Kind::ad_power:
            return ad_power(child(0), ast.power, child(1));
        case ExprAst::Kind::exp_ad:
            return apply_ad_series(RationalSeries::exponential(), child(0), child(1));
        case ExprAst::Kind::bch_pair:
            return bch(child(0), child(1));
        case ExprAst::Kind::gauge_pair:
            return gauge(ctx, child(0), child(1));
        case ExprAst::Kind::diff:
            return apply_diff(ctx, child(0));
    }
    throw Error("evaluate: malformed syntax tree");
}

namespace {

std::string factor_text(const ExprAst& ast);

std::string expr_text(const ExprAst& ast) { return ast_to_text(ast); }

std::string term_text(const ExprAst& ast) {
    switch (ast.kind) {
        case ExprAst::Kind::rational:
            return to_string(ast.value);
        case ExprAst::Kind::scalar_mul:
            return to_string(ast.value) + " * " + factor_text(*ast.children[0]);
        default:
            return factor_text(ast);
    }
}

std::string factor_text(const ExprAst& ast) {
    switch (ast.kind) {
        case ExprAst::Kind::symbol:
            return ast.name;
        case ExprAst::Kind::negate:
            return "-" + factor_text(*ast.children[0]);
        case ExprAst::Kind::bracket_pair:
            return "[" + expr_text(*ast.children[0]) + ", " + expr_text(*ast.children[1]) + "]";
        case ExprAst::Kind::ad_power:
            return "ad(" + expr_text(*ast.children[0]) + ")^" + std::to_string(ast.power) +
                   "(" + expr_text(*ast.children[1]) + ")";
        case ExprAst::Kind::exp_ad:
            return "exp_ad(" + expr_text(*ast.children[0]) + ")(" +
                   expr_text(*ast.children[1]) + ")";
        case ExprAst::Kind::bch_pair:
            return "bch(" + expr_text(*ast.children[0]) + ", " + expr_text(*ast.children[1]) +
                   ")";
        case ExprAst::Kind::gauge_pair:
            return "gauge(" + expr_text(*ast.children[0]) + ", " +
                   expr_text(*ast.children[1]) + ")";
        case ExprAst::Kind::diff:
            return "diff(" + expr_text(*ast.children[0]) + ")";
        default:
            return "(" + expr_text(ast) + ")";
    }
}

}  // namespace

std::string ast_to_text(const ExprAst& ast) {
    if (ast.kind == ExprAst::Kind::sum) {
        const ExprAst& rhs = *ast.children[1];
        std::string lhs = ast_to_text(*ast.children[0]);
        if (rhs.kind == ExprAst::Kind::negate)
            return lhs + " - " + factor_text(*rhs.children[0]);
        return lhs + " + " + term_text(rhs);
    }
    return term_text(ast);
}

bool ast_equal(const ExprAst& lhs, const ExprAst& rhs) {
    if (lhs.kind != rhs.kind || lhs.value != rhs.value || lhs.name != rhs.name ||
        lhs.power != rhs.power || lhs.children.size() != rhs.children.size())
        return false;
    for (std::size_t i = 0; i < lhs.children.size(); ++i)
        if (!ast_equal(*lhs.children[i], *rhs.children[i])) return false;
    return true;
}

}  // namespace lsk
