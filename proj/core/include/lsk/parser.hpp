#ifndef LSK_PARSER_HPP
#define LSK_PARSER_HPP

#include <memory>
#include <string>
#include <vector>

#include "lsk/dgl.hpp"
#include "lsk/element.hpp"

namespace lsk {

// Expression grammar (whitespace insignificant):
//   expr     := term (('+'|'-') term)*
//   term     := rational '*' factor | rational | factor
//   factor   := symbol | '[' expr ',' expr ']' | 'ad(' expr ')^' nat '(' expr ')'
//             | 'exp_ad(' expr ')(' expr ')' | 'bch(' expr ',' expr ')'
//             | 'gauge(' expr ',' expr ')' | 'diff(' expr ')' | '(' expr ')'
//             | '-' factor
//   rational := int ('/' nat)?
//   symbol   := [a-zA-Z][a-zA-Z0-9_]*
// The operator names are keywords only when followed by '('. Every operator
// the grammar exposes is total at parse time; domain restrictions (gauge on
// non-MC input, series on wrong degrees) surface at evaluation.

struct ExprAst;
using AstPtr = std::shared_ptr<const ExprAst>;

struct ExprAst {
    enum class Kind {
        rational,     // value
        symbol,       // name
        negate,       // children[0]
        sum,          // children[0] + children[1]
        scalar_mul,   // value * children[0]
        bracket_pair, // [children[0], children[1]]
        ad_power,     // ad(children[0])^power (children[1])
        exp_ad,       // exp_ad(children[0])(children[1])
        bch_pair,     // bch(children[0], children[1])
        gauge_pair,   // gauge(children[0], children[1])
        diff          // diff(children[0])
    };

    Kind kind;
    Rational value;
    std::string name;
    int power = 0;
    std::vector<AstPtr> children;
};

// Throws ParseError with position and expected-token set on syntax errors.
// Symbols are resolved against a context only at evaluation time.
AstPtr parse_expr(const std::string& source);

// Exact evaluation in the given context. Unknown symbols raise
// UnknownSymbol; domain errors propagate from the invoked operations.
Element evaluate(const ExprAst& ast, const DglContext& ctx);

// Unparser: emits text that parses back to a structurally equal tree.
std::string ast_to_text(const ExprAst& ast);

bool ast_equal(const ExprAst& lhs, const ExprAst& rhs);

}  // namespace lsk

#endif  // LSK_PARSER_HPP
