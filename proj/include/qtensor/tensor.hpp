#ifndef QTENSOR_TENSOR_HPP
#define QTENSOR_TENSOR_HPP

#include "qtensor/core.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qtensor {

// Orbit decomposition of the pair set X x X under the diagonal action
// (a,b) |-> (a*y, b*y). The *y alone generate the full acting group, since
// each is a permutation of a finite set.
//
// Class ids are assigned by the smallest pair (row-major order) each class
// contains, so the numbering is a function of the quandle, not of traversal
// order. classes[c] is sorted; reps[c] == classes[c].front().
struct TensorProduct {
    Quandle quandle;
    std::vector<int> class_ids; // pair (a,b) lives at index a*n+b
    std::vector<std::vector<std::pair<int, int>>> classes;
    std::vector<std::pair<int, int>> reps;

    int size() const { return static_cast<int>(classes.size()); }
    int class_of(int a, int b) const;
};

TensorProduct tensor_product(const Quandle& q);

// An involution of the class set, induced by an involution of pairs. map is
// its own inverse; order() is 1 for the identity and 2 otherwise.
struct ClassInvolution {
    std::string name;
    std::vector<int> map;

    int order() const;
};

// Induced by (a,b) |-> (b,a). Descends to every tensor product.
ClassInvolution tau_map(const TensorProduct& t);

// Induced by (a,b) |-> (rho(a), rho(b)). Throws ValidationError when rho is
// not a good involution of the underlying quandle.
ClassInvolution rho_map(const TensorProduct& t, const GoodInvolution& rho);

// Partition of class ids under a set of involutions. Blocks sorted, ordered
// by smallest id; block_of maps class id to block index.
struct QuotientSet {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;

    int size() const { return static_cast<int>(blocks.size()); }
};

QuotientSet quotient(const TensorProduct& t, const std::vector<ClassInvolution>& invs);

// Map on class ids induced by a hom f: classes of TX push forward into
// classes of TY. Throws ValidationError when f is not a hom of the stated
// quandles or the tensor products belong to different quandles.
std::vector<int> induced_map(const QuandleHom& f, const Quandle& source,
                             const Quandle& target, const TensorProduct& ts,
                             const TensorProduct& tt);

// Invariant counts for 1-handles attached to a surface-link with knot
// quandle q. With no involution supplied the surface is oriented: oriented
// handle counts come from q (x) q and the all-handles counts from the
// symmetric double D(q). With an involution supplied, (q, rho) is itself the
// symmetric quandle of the surface and only the all-handles counts exist.
struct HandleReport {
    std::optional<TensorProduct> oriented_tensor;
    std::optional<QuotientSet> oriented_weak; // quotient by tau
    SymmetricQuandle all;
    TensorProduct all_tensor;
    QuotientSet all_weak; // quotient by tau and rho

    std::optional<int> strong_oriented() const {
        if (!oriented_tensor) return std::nullopt;
        return oriented_tensor->size();
    }
    std::optional<int> weak_oriented() const {
        if (!oriented_weak) return std::nullopt;
        return oriented_weak->size();
    }
    int strong_all() const { return all_tensor.size(); }
    int weak_all() const { return all_weak.size(); }
};

HandleReport handle_report(const Quandle& q,
                           const std::optional<GoodInvolution>& rho = {});

} // namespace qtensor

#endif
