#include "qtensor/core.hpp"

#include "qtensor/union_find.hpp"

#include <algorithm>
#include <sstream>

namespace qtensor {

std::string AxiomViolation::describe() const {
    std::ostringstream os;
    switch (axiom) {
    case Axiom::Q1:
        os << "Q1: " << x << "*" << x << " != " << x;
        break;
    case Axiom::Q2:
        os << "Q2: column " << z << " is not a bijection, rows " << x << " and "
           << y << " collide";
        break;
    case Axiom::Q3:
        os << "Q3: (x*y)*z != (x*z)*(y*z) at (x,y,z)=(" << x << "," << y << ","
           << z << ")";
        break;
    }
    return os.str();
}

QuandleCheck validate_quandle(const std::vector<std::vector<int>>& rows,
                              bool early_exit) {
    QuandleCheck result;
    const int n = static_cast<int>(rows.size());
    if (n == 0) {
        result.shape_errors.push_back("table is empty");
        return result;
    }
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(rows[x].size()) != n) {
            std::ostringstream os;
            os << "row " << x << " has " << rows[x].size() << " entries, expected "
               << n;
            result.shape_errors.push_back(os.str());
            if (early_exit) return result;
        }
    }
    if (!result.shape_errors.empty()) return result;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const int v = rows[x][y];
            if (v < 0 || v >= n) {
                std::ostringstream os;
                os << "entry at (" << x << "," << y << ") out of range: " << v;
                result.shape_errors.push_back(os.str());
                if (early_exit) return result;
            }
        }
    }
    if (!result.shape_errors.empty()) return result;

    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x) * n + y] = rows[x][y];
    const auto at = [&](int x, int y) { return t[static_cast<std::size_t>(x) * n + y]; };

    for (int x = 0; x < n; ++x) {
        if (at(x, x) != x) {
            result.violations.push_back({Axiom::Q1, x, -1, -1});
            if (early_exit) return result;
        }
    }
    std::vector<int> seen(n);
    for (int z = 0; z < n; ++z) {
        std::fill(seen.begin(), seen.end(), -1);
        for (int x = 0; x < n; ++x) {
            const int v = at(x, z);
            if (seen[v] >= 0) {
                result.violations.push_back({Axiom::Q2, seen[v], x, z});
                if (early_exit) return result;
            } else {
                seen[v] = x;
            }
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (at(at(x, y), z) != at(at(x, z), at(y, z))) {
                    result.violations.push_back({Axiom::Q3, x, y, z});
                    if (early_exit) return result;
                }

    if (result.violations.empty()) result.quandle = quandle_from_table(n, std::move(t));
    return result;
}

Quandle quandle_from_table(int n, std::vector<int> op_table) {
    if (n <= 0) throw ValidationError("carrier must be nonempty");
    if (op_table.size() != static_cast<std::size_t>(n) * n)
        throw ValidationError("operation table has wrong size");
    for (int v : op_table)
        if (v < 0 || v >= n) throw ValidationError("operation table entry out of range");
    std::vector<int> inv(static_cast<std::size_t>(n) * n, -1);
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            const int v = op_table[static_cast<std::size_t>(x) * n + y];
            std::size_t slot = static_cast<std::size_t>(v) * n + y;
            if (inv[slot] >= 0) {
                std::ostringstream os;
                os << "column " << y << " is not a bijection";
                throw ValidationError(os.str());
            }
            inv[slot] = x;
        }
    }
    return Quandle{n, std::move(op_table), std::move(inv)};
}

Quandle make_trivial(int n) {
    if (n <= 0) throw std::invalid_argument("make_trivial: n must be positive");
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x) * n + y] = x;
    return quandle_from_table(n, std::move(t));
}

Quandle make_dihedral(int n) {
    if (n <= 0) throw std::invalid_argument("make_dihedral: n must be positive");
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t[static_cast<std::size_t>(x) * n + y] = ((2 * y - x) % n + n) % n;
    return quandle_from_table(n, std::move(t));
}

Quandle make_conjugation(const std::vector<std::vector<int>>& group_table,
                         const std::vector<int>& inverse) {
    const int n = static_cast<int>(group_table.size());
    if (n == 0) throw ValidationError("group table is empty");
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(group_table[a].size()) != n)
            throw ValidationError("group table is not square");
        for (int v : group_table[a])
            if (v < 0 || v >= n) throw ValidationError("group table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (group_table[0][a] != a || group_table[a][0] != a)
            throw ValidationError("group table: index 0 is not an identity");
    if (static_cast<int>(inverse.size()) != n)
        throw ValidationError("inverse array size does not match the group table");
    for (int a = 0; a < n; ++a) {
        const int b = inverse[a];
        if (b < 0 || b >= n) throw ValidationError("inverse array entry out of range");
        if (group_table[a][b] != 0 || group_table[b][a] != 0) {
            std::ostringstream os;
            os << "inverse array is wrong at element " << a;
            throw ValidationError(os.str());
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (group_table[group_table[a][b]][c] != group_table[a][group_table[b][c]]) {
                    std::ostringstream os;
                    os << "group table is not associative at (" << a << "," << b << ","
                       << c << ")";
                    throw ValidationError(os.str());
                }

    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a) * n + b] =
                group_table[group_table[inverse[b]][a]][b];
    return quandle_from_table(n, std::move(t));
}

Quandle make_conjugation(const std::vector<std::vector<int>>& group_table) {
    const int n = static_cast<int>(group_table.size());
    if (n == 0) throw ValidationError("group table is empty");
    for (const auto& row : group_table)
        if (static_cast<int>(row.size()) != n)
            throw ValidationError("group table is not square");
    std::vector<int> inverse(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n && inverse[a] < 0; ++b)
            if (group_table[a][b] == 0 && group_table[b][a] == 0) inverse[a] = b;
        if (inverse[a] < 0) {
            std::ostringstream os;
            os << "group table: element " << a << " has no inverse";
            throw ValidationError(os.str());
        }
    }
    return make_conjugation(group_table, inverse);
}

int act_word(const Quandle& q, int x, const Word& w) {
    for (const Letter& l : w) {
        if (l.sign == 1)
            x = q.op(x, l.element);
        else if (l.sign == -1)
            x = q.inv_op(x, l.element);
        else
            throw std::invalid_argument("act_word: letter sign must be +1 or -1");
    }
    return x;
}

Word inverse_word(Word w) {
    std::reverse(w.begin(), w.end());
    for (Letter& l : w) l.sign = -l.sign;
    return w;
}

int act_word_left(const Quandle& q, const Word& w, int x) {
    return act_word(q, x, inverse_word(w));
}

std::vector<int> subquandle_closure(const Quandle& q, const std::vector<int>& seeds) {
    std::vector<char> in_set(q.n, 0);
    std::vector<int> members;
    for (int s : seeds) {
        if (s < 0 || s >= q.n) throw std::out_of_range("subquandle_closure: seed out of range");
        if (!in_set[s]) {
            in_set[s] = 1;
            members.push_back(s);
        }
    }
    // Pairwise products of everything found so far; members grows in place.
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const int a = members[i];
            const int b = members[j];
            for (int v : {q.op(a, b), q.op(b, a), q.inv_op(a, b), q.inv_op(b, a)}) {
                if (!in_set[v]) {
                    in_set[v] = 1;
                    members.push_back(v);
                }
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<std::vector<int>> connected_components(const Quandle& q) {
    DisjointSets dsu(static_cast<std::size_t>(q.n));
    // ~y is the inverse permutation of *y, so it connects nothing new.
    for (int x = 0; x < q.n; ++x)
        for (int y = 0; y < q.n; ++y) dsu.unite(x, q.op(x, y));
    const std::vector<int> ids = dsu.canonical_ids();
    const int count = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
    std::vector<std::vector<int>> blocks(count);
    for (int x = 0; x < q.n; ++x) blocks[ids[x]].push_back(x);
    return blocks;
}

InvolutionCheck validate_good_involution(const Quandle& q, const std::vector<int>& rho) {
    InvolutionCheck result;
    const int n = q.n;
    if (static_cast<int>(rho.size()) != n) {
        std::ostringstream os;
        os << "involution has " << rho.size() << " entries, expected " << n;
        result.errors.push_back(os.str());
        return result;
    }
    for (int x = 0; x < n; ++x)
        if (rho[x] < 0 || rho[x] >= n) {
            std::ostringstream os;
            os << "involution image of " << x << " out of range: " << rho[x];
            result.errors.push_back(os.str());
        }
    if (!result.errors.empty()) return result;
    for (int x = 0; x < n; ++x)
        if (rho[rho[x]] != x) {
            std::ostringstream os;
            os << "not an involution: rho(rho(" << x << ")) = " << rho[rho[x]];
            result.errors.push_back(os.str());
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (rho[q.op(x, y)] != q.op(rho[x], y)) {
                std::ostringstream os;
                os << "S1 fails at (x,y)=(" << x << "," << y << "): rho(x*y)="
                   << rho[q.op(x, y)] << " but rho(x)*y=" << q.op(rho[x], y);
                result.errors.push_back(os.str());
            }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (q.op(x, rho[y]) != q.inv_op(x, y)) {
                std::ostringstream os;
                os << "S2 fails at (x,y)=(" << x << "," << y << "): x*rho(y)="
                   << q.op(x, rho[y]) << " but x~y=" << q.inv_op(x, y);
                result.errors.push_back(os.str());
            }
    result.ok = result.errors.empty();
    return result;
}

namespace {

// S2 pins columns: rho(y) = z forces x*z == x~y for every x. Checking that
// when the pair is assigned prunes the search well before the leaf.
bool s2_column_ok(const Quandle& q, int y, int z) {
    for (int x = 0; x < q.n; ++x)
        if (q.op(x, z) != q.inv_op(x, y)) return false;
    return true;
}

void enumerate_involutions_rec(const Quandle& q, std::vector<int>& rho,
                               long long bound,
                               std::vector<GoodInvolution>& out) {
    const int n = q.n;
    int x = 0;
    while (x < n && rho[x] >= 0) ++x;
    if (x == n) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (rho[q.op(a, b)] != q.op(rho[a], b)) return; // S1
        if (static_cast<long long>(out.size()) >= bound)
            throw BoundError("enumerate_good_involutions: bound exceeded");
        out.push_back(GoodInvolution{rho});
        return;
    }
    for (int y = x; y < n; ++y) {
        if (rho[y] >= 0) continue;
        if (!s2_column_ok(q, x, y)) continue;
        if (y != x && !s2_column_ok(q, y, x)) continue;
        rho[x] = y;
        rho[y] = x;
        enumerate_involutions_rec(q, rho, bound, out);
        rho[x] = -1;
        rho[y] = -1;
    }
}

} // namespace

std::vector<GoodInvolution> enumerate_good_involutions(const Quandle& q,
                                                       long long bound) {
    if (bound <= 0) throw std::invalid_argument("enumerate_good_involutions: bound must be positive");
    std::vector<int> rho(q.n, -1);
    std::vector<GoodInvolution> out;
    enumerate_involutions_rec(q, rho, bound, out);
    return out;
}

DoubledElement decode_doubled(int n, int e) {
    if (n <= 0 || e < 0 || e >= 2 * n) throw std::out_of_range("decode_doubled");
    return e < n ? DoubledElement{e, 1} : DoubledElement{e - n, -1};
}

int encode_doubled(int n, DoubledElement d) {
    if (n <= 0 || d.base < 0 || d.base >= n || (d.sign != 1 && d.sign != -1))
        throw std::out_of_range("encode_doubled");
    return d.sign == 1 ? d.base : n + d.base;
}

SymmetricQuandle symmetric_double(const Quandle& q) {
    const int n = q.n;
    const int m = 2 * n;
    std::vector<int> t(static_cast<std::size_t>(m) * m);
    for (int x = 0; x < m; ++x) {
        const int bx = x % n;
        const int off = x - bx; // 0 for the positive copy, n for the negative
        for (int y = 0; y < m; ++y) {
            const int by = y % n;
            const int r = (y < n) ? q.op(bx, by) : q.inv_op(bx, by);
            t[static_cast<std::size_t>(x) * m + y] = r + off;
        }
    }
    std::vector<int> rho(m);
    for (int x = 0; x < m; ++x) rho[x] = (x + n) % m;
    return SymmetricQuandle{quandle_from_table(m, std::move(t)), GoodInvolution{std::move(rho)}};
}

HomCheck validate_hom(const Quandle& source, const Quandle& target,
                      const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != source.n)
        throw ValidationError("hom map has wrong size");
    for (int v : map)
        if (v < 0 || v >= target.n) throw ValidationError("hom map entry out of range");
    HomCheck result;
    // Preserving * forces preserving ~, since columns are bijections.
    for (int x = 0; x < source.n; ++x)
        for (int y = 0; y < source.n; ++y)
            if (map[source.op(x, y)] != target.op(map[x], map[y]))
                result.violations.push_back({x, y});
    result.ok = result.violations.empty();
    return result;
}

QuandleHom double_hom(const Quandle& source, const Quandle& target,
                      const QuandleHom& f) {
    const HomCheck check = validate_hom(source, target, f.map);
    if (!check.ok) throw ValidationError("double_hom: map is not a homomorphism");
    std::vector<int> map(2 * static_cast<std::size_t>(source.n));
    for (int x = 0; x < source.n; ++x) {
        map[x] = f.map[x];
        map[source.n + x] = target.n + f.map[x];
    }
    return QuandleHom{std::move(map)};
}

} // namespace qtensor
