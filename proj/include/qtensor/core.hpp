#ifndef QTENSOR_CORE_HPP
#define QTENSOR_CORE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtensor {

// Thrown when an enumeration would exceed its caller-supplied cap.
struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when input data fails semantic validation (axioms, involution laws,
// hom conditions). Distinct from ParseError so callers can map the two to
// different exit codes.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite quandle on carrier {0..n-1}. op_table holds x*y at x*n+y; inv_table
// holds the right inverse x~y, so (x*y)~y == x and (x~y)*y == x. inv_table is
// always derived from op_table, never stored independently.
struct Quandle {
    int n = 0;
    std::vector<int> op_table;
    std::vector<int> inv_table;

    int op(int x, int y) const {
        check_range(x, y);
        return op_table[static_cast<std::size_t>(x) * n + y];
    }
    int inv_op(int x, int y) const {
        check_range(x, y);
        return inv_table[static_cast<std::size_t>(x) * n + y];
    }

    bool operator==(const Quandle&) const = default;

private:
    void check_range(int x, int y) const {
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw std::out_of_range("quandle element out of range");
    }
};

enum class Axiom { Q1, Q2, Q3 };

// Witness data: Q1 uses x only; Q2 records two rows x, y whose entries collide
// in column z (so *z is not injective); Q3 records the failing triple.
struct AxiomViolation {
    Axiom axiom;
    int x = -1;
    int y = -1;
    int z = -1;

    std::string describe() const;
};

struct QuandleCheck {
    std::optional<Quandle> quandle; // set iff shape ok and no violations
    std::vector<std::string> shape_errors;
    std::vector<AxiomViolation> violations;

    bool ok() const { return quandle.has_value(); }
};

// Validates a candidate operation table. Shape problems (non-square rows,
// out-of-range entries) are reported first and suppress axiom checks; axiom
// violations are listed in deterministic order (Q1 by x, Q2 by column then
// row pair, Q3 by lexicographic triple). With early_exit the scan stops at
// the first problem.
QuandleCheck validate_quandle(const std::vector<std::vector<int>>& rows,
                              bool early_exit = false);

// Builds a quandle from a flat row-major table whose columns are known to be
// permutations; throws ValidationError otherwise. Axioms Q1/Q3 are not
// checked here.
Quandle quandle_from_table(int n, std::vector<int> op_table);

Quandle make_trivial(int n);

// Dihedral quandle R_n: x*y = x~y = (2y - x) mod n.
Quandle make_dihedral(int n);

// Conjugation quandle of a finite group given by its Cayley table
// (group_table[a][b] = ab, identity at index 0) and its inverse array:
// x*y = y^-1 x y.  The table is checked to be a group with exactly the
// supplied inverses.
Quandle make_conjugation(const std::vector<std::vector<int>>& group_table,
                         const std::vector<int>& inverse);

// Same, deriving the inverse array from the table.
Quandle make_conjugation(const std::vector<std::vector<int>>& group_table);

// One generator of the free-group action: sign +1 acts by *element,
// sign -1 by ~element.
struct Letter {
    int element;
    int sign;
};
using Word = std::vector<Letter>;

// Right action x . w, folding left to right.
int act_word(const Quandle& q, int x, const Word& w);

// Formal inverse: reversed word with all signs flipped.
Word inverse_word(Word w);

// Left action w . x = x . w^-1.
int act_word_left(const Quandle& q, const Word& w, int x);

// Smallest subset containing seeds and closed under * and ~ among its own
// members. Returned sorted.
std::vector<int> subquandle_closure(const Quandle& q, const std::vector<int>& seeds);

// Orbits of the carrier under the action of all *y / ~y. Blocks sorted,
// ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Quandle& q);

// Involution rho of the carrier satisfying, for all x, y:
//   S1: rho(x*y) == rho(x)*y
//   S2: x*rho(y) == x~y
struct GoodInvolution {
    std::vector<int> rho;

    int operator()(int x) const { return rho.at(static_cast<std::size_t>(x)); }
    bool operator==(const GoodInvolution&) const = default;
};

struct InvolutionCheck {
    bool ok = false;
    std::vector<std::string> errors;
};

InvolutionCheck validate_good_involution(const Quandle& q, const std::vector<int>& rho);

// All good involutions of q, images chosen in lexicographic order. Throws
// BoundError if more than `bound` would be returned.
std::vector<GoodInvolution> enumerate_good_involutions(const Quandle& q,
                                                       long long bound = 10000);

struct SymmetricQuandle {
    Quandle quandle;
    GoodInvolution rho;

    bool operator==(const SymmetricQuandle&) const = default;
};

// Element e of a doubled carrier {0..2n-1}: base b with sign +1 encodes as b,
// with sign -1 as n+b.
struct DoubledElement {
    int base;
    int sign;
};

DoubledElement decode_doubled(int n, int e);
int encode_doubled(int n, DoubledElement d);

// Symmetric double D(q) on 2n elements: the positive and negative copies each
// act like q on themselves; acting by a negative element uses ~ in place of *
// and vice versa; rho swaps the copies.
SymmetricQuandle symmetric_double(const Quandle& q);

struct QuandleHom {
    std::vector<int> map; // map[x] in the target carrier
};

struct HomCheck {
    bool ok = false;
    std::vector<std::pair<int, int>> violations; // pairs (x,y) with f(x*y) != f(x)*f(y)
};

HomCheck validate_hom(const Quandle& source, const Quandle& target,
                      const std::vector<int>& map);

// Extends f : X -> Y to D(X) -> D(Y), preserving signs. The result commutes
// with the swap involutions on both sides.
QuandleHom double_hom(const Quandle& source, const Quandle& target,
                      const QuandleHom& f);

} // namespace qtensor

#endif
