#include "qtensor/tensor.hpp"

#include "qtensor/union_find.hpp"

#include <algorithm>
#include <sstream>

namespace qtensor {

int TensorProduct::class_of(int a, int b) const {
    const int n = quandle.n;
    if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::out_of_range("class_of: pair out of range");
    return class_ids[static_cast<std::size_t>(a) * n + b];
}

TensorProduct tensor_product(const Quandle& q) {
    const int n = q.n;
    if (n <= 0) throw std::invalid_argument("tensor_product: empty quandle");
    const std::size_t total = static_cast<std::size_t>(n) * n;
    DisjointSets dsu(total);
    std::vector<int> col(n);
    for (int y = 0; y < n; ++y) {
        for (int a = 0; a < n; ++a) col[a] = q.op_table[static_cast<std::size_t>(a) * n + y];
        for (int a = 0; a < n; ++a) {
            const int base = a * n;
            const int image = col[a] * n;
            for (int b = 0; b < n; ++b) dsu.unite(base + b, image + col[b]);
        }
    }

    TensorProduct t;
    t.quandle = q;
    t.class_ids = dsu.canonical_ids();
    const int count = *std::max_element(t.class_ids.begin(), t.class_ids.end()) + 1;
    t.classes.resize(count);
    // Ascending pair index keeps every class sorted and makes front() minimal.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t.classes[t.class_ids[static_cast<std::size_t>(a) * n + b]].push_back({a, b});
    t.reps.reserve(count);
    for (const auto& cls : t.classes) t.reps.push_back(cls.front());
    return t;
}

int ClassInvolution::order() const {
    for (int c = 0; c < static_cast<int>(map.size()); ++c)
        if (map[c] != c) return 2;
    return 1;
}

namespace {

// Builds the class map induced by a pair map, then verifies it is constant on
// classes and involutive. A failure means the pair map does not descend,
// which callers rule out beforehand; it is a logic error here.
template <typename PairImage> // (a, b) -> pair index of the image
ClassInvolution induced_involution(const TensorProduct& t, const std::string& name,
                                   PairImage image) {
    const int n = t.quandle.n;
    std::vector<int> map(t.size());
    for (int c = 0; c < t.size(); ++c) {
        const auto [a, b] = t.reps[c];
        map[c] = t.class_ids[static_cast<std::size_t>(image(a, b))];
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int c = t.class_ids[static_cast<std::size_t>(a) * n + b];
            if (t.class_ids[static_cast<std::size_t>(image(a, b))] != map[c])
                throw std::logic_error(name + " does not descend to the class set");
        }
    for (int c = 0; c < t.size(); ++c)
        if (map[map[c]] != c)
            throw std::logic_error(name + " is not an involution on classes");
    return ClassInvolution{name, std::move(map)};
}

} // namespace

ClassInvolution tau_map(const TensorProduct& t) {
    const int n = t.quandle.n;
    return induced_involution(t, "tau", [n](int a, int b) { return b * n + a; });
}

ClassInvolution rho_map(const TensorProduct& t, const GoodInvolution& rho) {
    const InvolutionCheck check = validate_good_involution(t.quandle, rho.rho);
    if (!check.ok) {
        std::ostringstream os;
        os << "rho_map: involution is not good";
        for (const auto& e : check.errors) os << "\n  " << e;
        throw ValidationError(os.str());
    }
    const int n = t.quandle.n;
    const std::vector<int>& r = rho.rho;
    return induced_involution(t, "rho",
                              [&r, n](int a, int b) { return r[a] * n + r[b]; });
}

QuotientSet quotient(const TensorProduct& t, const std::vector<ClassInvolution>& invs) {
    const int count = t.size();
    for (const auto& inv : invs) {
        if (static_cast<int>(inv.map.size()) != count)
            throw ValidationError("quotient: involution '" + inv.name +
                                  "' has wrong size");
        for (int c = 0; c < count; ++c) {
            if (inv.map[c] < 0 || inv.map[c] >= count)
                throw ValidationError("quotient: involution '" + inv.name +
                                      "' maps outside the class set");
            if (inv.map[inv.map[c]] != c)
                throw ValidationError("quotient: '" + inv.name + "' is not an involution");
        }
    }
    DisjointSets dsu(static_cast<std::size_t>(count));
    for (const auto& inv : invs)
        for (int c = 0; c < count; ++c) dsu.unite(c, inv.map[c]);
    QuotientSet qs;
    qs.block_of = dsu.canonical_ids();
    const int blocks = count == 0 ? 0
                                  : *std::max_element(qs.block_of.begin(),
                                                      qs.block_of.end()) + 1;
    qs.blocks.resize(blocks);
    for (int c = 0; c < count; ++c) qs.blocks[qs.block_of[c]].push_back(c);
    return qs;
}

std::vector<int> induced_map(const QuandleHom& f, const Quandle& source,
                             const Quandle& target, const TensorProduct& ts,
                             const TensorProduct& tt) {
    if (!(ts.quandle == source) || !(tt.quandle == target))
        throw ValidationError("induced_map: tensor products do not match the quandles");
    const HomCheck check = validate_hom(source, target, f.map);
    if (!check.ok) throw ValidationError("induced_map: map is not a homomorphism");
    std::vector<int> map(ts.size(), -1);
    for (int a = 0; a < source.n; ++a)
        for (int b = 0; b < source.n; ++b) {
            const int c = ts.class_ids[static_cast<std::size_t>(a) * source.n + b];
            const int image =
                tt.class_ids[static_cast<std::size_t>(f.map[a]) * target.n + f.map[b]];
            if (map[c] < 0)
                map[c] = image;
            else if (map[c] != image)
                throw std::logic_error("induced_map: image is not constant on a class");
        }
    return map;
}

HandleReport handle_report(const Quandle& q, const std::optional<GoodInvolution>& rho) {
    HandleReport r;
    if (rho) {
        const InvolutionCheck check = validate_good_involution(q, rho->rho);
        if (!check.ok) {
            std::ostringstream os;
            os << "handle_report: involution is not good";
            for (const auto& e : check.errors) os << "\n  " << e;
            throw ValidationError(os.str());
        }
        r.all = SymmetricQuandle{q, *rho};
    } else {
        r.oriented_tensor = tensor_product(q);
        r.oriented_weak = quotient(*r.oriented_tensor, {tau_map(*r.oriented_tensor)});
        r.all = symmetric_double(q);
    }
    r.all_tensor = tensor_product(r.all.quandle);
    r.all_weak = quotient(r.all_tensor,
                          {tau_map(r.all_tensor), rho_map(r.all_tensor, r.all.rho)});
    return r;
}

} // namespace qtensor
