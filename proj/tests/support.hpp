#ifndef QTENSOR_TESTS_SUPPORT_HPP
#define QTENSOR_TESTS_SUPPORT_HPP

#include "qtensor/core.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace support {

// Independent orbit computation for pair classes: plain BFS over the pair
// graph, using both *y and ~y edges (the engine under test only uses *y).
// Classes come out ordered by smallest pair and internally sorted, matching
// the engine's canonical layout.
inline std::vector<std::vector<std::pair<int, int>>>
bfs_tensor_partition(const qtensor::Quandle& q) {
    const int n = q.n;
    std::vector<int> cls(static_cast<std::size_t>(n) * n, -1);
    std::vector<std::vector<std::pair<int, int>>> classes;
    for (int start = 0; start < n * n; ++start) {
        if (cls[start] >= 0) continue;
        const int id = static_cast<int>(classes.size());
        classes.emplace_back();
        std::vector<int> stack{start};
        cls[start] = id;
        while (!stack.empty()) {
            const int cur = stack.back();
            stack.pop_back();
            const int a = cur / n;
            const int b = cur % n;
            classes[id].push_back({a, b});
            for (int y = 0; y < n; ++y) {
                const int fwd = q.op(a, y) * n + q.op(b, y);
                const int bwd = q.inv_op(a, y) * n + q.inv_op(b, y);
                for (const int nxt : {fwd, bwd})
                    if (cls[nxt] < 0) {
                        cls[nxt] = id;
                        stack.push_back(nxt);
                    }
            }
        }
        std::sort(classes[id].begin(), classes[id].end());
    }
    return classes;
}

// Every good involution found by filtering all n! permutations. Only for
// small n; used to validate the pruned enumerator.
inline std::vector<std::vector<int>>
all_good_involutions_bruteforce(const qtensor::Quandle& q) {
    std::vector<int> perm(q.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> found;
    do {
        if (qtensor::validate_good_involution(q, perm).ok) found.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

// Cayley table of the symmetric group on 3 letters, identity at index 0.
// Elements are the permutations of {0,1,2} in lexicographic order; the
// product pq acts by q first, then p.
inline std::vector<std::vector<int>> s3_table() {
    std::vector<std::array<int, 3>> elems;
    std::array<int, 3> p{0, 1, 2};
    do {
        elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> prod;
            for (int i = 0; i < 3; ++i) prod[i] = elems[a][elems[b][i]];
            table[a][b] =
                static_cast<int>(std::find(elems.begin(), elems.end(), prod) - elems.begin());
        }
    return table;
}

// Affine quandle on Z_n: x*y = t*x + (1-t)*y with gcd(t, n) = 1.
inline qtensor::Quandle alexander(int n, int t) {
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            table[static_cast<std::size_t>(x) * n + y] = ((t * x + (1 - t) * y) % n + n) % n;
    return qtensor::quandle_from_table(n, std::move(table));
}

inline qtensor::Quandle direct_product(const qtensor::Quandle& a, const qtensor::Quandle& b) {
    const int n = a.n * b.n;
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int x1 = x / b.n, x2 = x % b.n;
            const int y1 = y / b.n, y2 = y % b.n;
            table[static_cast<std::size_t>(x) * n + y] = a.op(x1, y1) * b.n + b.op(x2, y2);
        }
    return qtensor::quandle_from_table(n, std::move(table));
}

// Transport along a relabeling permutation; axioms survive untouched.
inline qtensor::Quandle relabel(const qtensor::Quandle& q, const std::vector<int>& p) {
    std::vector<int> pinv(q.n);
    for (int x = 0; x < q.n; ++x) pinv[p[x]] = x;
    std::vector<int> table(static_cast<std::size_t>(q.n) * q.n);
    for (int x = 0; x < q.n; ++x)
        for (int y = 0; y < q.n; ++y)
            table[static_cast<std::size_t>(x) * q.n + y] = p[q.op(pinv[x], pinv[y])];
    return qtensor::quandle_from_table(q.n, std::move(table));
}

// Valid-by-construction random quandle: a known family, then a random
// relabeling so tables stop looking canonical.
inline qtensor::Quandle random_quandle(std::mt19937& rng, int max_n) {
    const auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    qtensor::Quandle q;
    switch (pick(0, 4)) {
    case 0:
        q = qtensor::make_trivial(pick(1, max_n));
        break;
    case 1:
        q = qtensor::make_dihedral(pick(1, max_n));
        break;
    case 2: {
        const int n = pick(2, max_n);
        int t = pick(1, n - 1);
        while (std::gcd(t, n) != 1) t = pick(1, n - 1);
        q = alexander(n, t);
        break;
    }
    case 3: {
        const int half = std::max(1, max_n / 2);
        q = qtensor::symmetric_double(qtensor::make_dihedral(pick(1, half))).quandle;
        break;
    }
    default: {
        const int half = std::max(1, max_n / 2);
        q = direct_product(qtensor::make_trivial(pick(1, 2)),
                           qtensor::make_dihedral(pick(1, half)));
        break;
    }
    }
    std::vector<int> perm(q.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(q, perm);
}

inline std::vector<std::vector<int>> rows_of(const qtensor::Quandle& q) {
    std::vector<std::vector<int>> rows(q.n, std::vector<int>(q.n));
    for (int x = 0; x < q.n; ++x)
        for (int y = 0; y < q.n; ++y) rows[x][y] = q.op_table[static_cast<std::size_t>(x) * q.n + y];
    return rows;
}

} // namespace support

#endif
