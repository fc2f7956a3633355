#ifndef QTENSOR_PRESENT_HPP
#define QTENSOR_PRESENT_HPP

#include "qtensor/core.hpp"
#include "qtensor/io.hpp"
#include "qtensor/tensor.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qtensor {

// Word in the free group on the generators, written multiplicatively:
// factors apply left to right, exponents may be negative, subwords nest.
struct GWord;

struct GWordFactor {
    std::variant<int, std::shared_ptr<const GWord>> base; // generator index or subword
    long long exponent = 1;
};

struct GWord {
    std::vector<GWordFactor> factors;
};

// Expression tree over quandle generators:
//   expr   := term { ("*" | "~") term }      (left associative)
//   term   := atom [ "^" "(" gword ")" ]
//   atom   := name | "(" expr ")"
//   gword  := gfactor+
//   gfactor:= (name | "(" gword ")") [ "^" signed-int ]
// "~" is the right inverse operation; x^(g) is the action of the group word
// g on x. A zero exponent is rejected at parse time.
struct WordExpr {
    enum class Kind { Generator, Op, InvOp, Exp };

    Kind kind;
    int generator = -1;                    // Generator
    std::shared_ptr<const WordExpr> left;  // Op/InvOp left side, Exp base
    std::shared_ptr<const WordExpr> right; // Op/InvOp right side
    GWord exponent;                        // Exp
};

using ExprPtr = std::shared_ptr<const WordExpr>;

struct Relation {
    ExprPtr lhs;
    ExprPtr rhs;
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Relation> relations;

    int generator_index(const std::string& name) const; // -1 when absent
};

// File format, line based with '#' comments:
//   gens a b
//   rel b = a^((b a)^2)
//   rel b^(a^2) = b
// The gens line comes first; every name in a relation must be declared.
Presentation read_qpres(std::istream& in, const std::string& filename = "<stream>");
Presentation read_qpres_file(const std::string& path);

// A standalone expression over the presentation's generators, full input
// consumed. Used for command-line word arguments.
ExprPtr parse_word(const std::string& text, const Presentation& p,
                   const std::string& what = "<word>");

std::string to_string(const GWord& g, const Presentation& p);
std::string to_string(const WordExpr& e, const Presentation& p);

bool gword_equal(const GWord& a, const GWord& b);
bool expr_equal(const WordExpr& a, const WordExpr& b);

// Generator images in a target quandle, indexed like Presentation::generators.
struct Assignment {
    std::vector<int> images;

    bool operator==(const Assignment&) const = default;
};

// Expands a group word to action letters under an assignment: negative
// exponents reverse the subword and flip signs.
Word flatten_gword(const GWord& g, const Assignment& a);

// Evaluates an expression; exponent nodes walk the group word directly
// rather than flattening first, so the two paths check each other.
int eval_word(const Quandle& q, const Assignment& a, const WordExpr& e);

bool satisfies(const Quandle& q, const Presentation& p, const Assignment& a);

// Whether the images generate the whole carrier.
bool surjective_assignment(const Quandle& q, const Assignment& a);

// All assignments satisfying every relation, in lexicographic order. Throws
// BoundError when the search space n^generators exceeds cap.
std::vector<Assignment> enumerate_homs(const Presentation& p, const Quandle& q,
                                       long long cap = 10000000);

enum class HandleKind { Strong, Weak };

// Where the pair (w1, w2) lands in q (x) q, or in its quotient for the weak
// variant. The weak quotient divides by tau, and by rho too when supplied.
struct HandleClass {
    HandleKind kind;
    std::pair<int, int> evaluated; // images of the two words
    int index;                     // class id, or block index for Weak
    std::vector<std::pair<int, int>> class_reps; // one rep per merged class
    std::string label;
};

HandleClass handle_invariant(const Presentation& p, const Assignment& a,
                             const Quandle& q, const WordExpr& w1,
                             const WordExpr& w2, HandleKind kind,
                             const std::optional<GoodInvolution>& rho = {});

} // namespace qtensor

#endif
