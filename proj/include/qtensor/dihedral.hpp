#ifndef QTENSOR_DIHEDRAL_HPP
#define QTENSOR_DIHEDRAL_HPP

#include "qtensor/core.hpp"
#include "qtensor/tensor.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qtensor {

// Circular distance min((x-y) mod n, (y-x) mod n). Invariant under the
// diagonal action of R_n on pairs, which is why it indexes the classes below.
int dihedral_distance(int n, int x, int y);

// A tensor-product class together with its closed-form name. Members sorted.
struct LabeledClass {
    std::string label;
    std::vector<std::pair<int, int>> members;
};

// Classes of R_n (x) R_n without running the orbit engine.
// Odd n = 2m+1: E(k) = { (i, i+k), (i, i-k) }, k = 0..m; m+1 classes.
// Even n = 2m: each E(k) splits by the parity of the first coordinate into
// E(k)_0 and E(k)_1; 2m+2 classes.
std::vector<LabeledClass> closed_form_tensor(int n);

// Classes of D(R_n) (x) D(R_n): each class E of R_n (x) R_n yields four,
// E^{e,d} = { (a^e, b^d) : (a,b) in E } over signs e, d. Encoded on the
// doubled carrier {0..2n-1}.
std::vector<LabeledClass> closed_form_double_tensor(int n);

long long closed_form_tensor_count(int n);        // m+1, or 2m+2 when even
long long closed_form_double_tensor_count(int n); // 2n+2, or 4n+8 when even

enum class QuotientKind {
    TensorTau,    // R_n (x) R_n modulo tau
    DoubleTau,    // D(R_n) (x) D(R_n) modulo tau
    DoubleRho,    // ... modulo rho
    DoubleTauRho, // ... modulo tau and rho
};

// Which closed-form classes merge in the quotient, by label.
struct LabeledQuotient {
    std::vector<std::vector<std::string>> blocks;

    int count() const { return static_cast<int>(blocks.size()); }
};

LabeledQuotient closed_form_quotient(int n, QuotientKind kind);
long long closed_form_quotient_count(int n, QuotientKind kind);

// Compares every closed form above against the generic orbit engine on the
// same quandle: class partitions must agree pair for pair, quotient blocks
// label for label, and counts with the arithmetic formulas.
struct CrossCheckEntry {
    std::string what;
    bool ok = false;
    std::string detail; // empty when ok
};

struct CrossCheckReport {
    int n = 0;
    bool ok = false;
    std::vector<CrossCheckEntry> entries;
    std::vector<std::string> notes; // caveats that do not affect ok
};

CrossCheckReport cross_check(int n, bool include_double = true);

// Literal table recognition, not isomorphism testing: the closed-form labels
// are defined for the canonical encodings only.
std::optional<int> recognize_dihedral(const Quandle& q);
std::optional<int> recognize_dihedral_double(const Quandle& q); // returns base order

// Labels for the classes of t when its quandle is a canonical R_n or D(R_n);
// result[c] names class c. nullopt for anything else.
std::optional<std::vector<std::string>> dihedral_class_labels(const TensorProduct& t);

} // namespace qtensor

#endif
