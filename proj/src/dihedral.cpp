#include "qtensor/dihedral.hpp"

#include <algorithm>
#include <sstream>

namespace qtensor {

int dihedral_distance(int n, int x, int y) {
    if (n <= 0) throw std::invalid_argument("dihedral_distance: n must be positive");
    const int d = (((x - y) % n) + n) % n;
    return std::min(d, n - d);
}

namespace {

std::string base_label(int n, int k, int parity) {
    std::ostringstream os;
    os << "E(" << k << ")";
    if (n % 2 == 0) os << "_" << parity;
    return os.str();
}

std::string sign_suffix(int e, int d) {
    std::string s = "^{";
    s += (e > 0 ? '+' : '-');
    s += ',';
    s += (d > 0 ? '+' : '-');
    s += '}';
    return s;
}

// The four sign pairs in their fixed report order.
constexpr std::pair<int, int> kSigns[4] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

std::vector<std::pair<int, int>> distance_class(int n, int k, int parity) {
    std::vector<std::pair<int, int>> members;
    const int step = (n % 2 == 0) ? 2 : 1;
    const int start = (n % 2 == 0) ? parity : 0;
    for (int i = start; i < n; i += step) {
        members.push_back({i, (i + k) % n});
        members.push_back({i, ((i - k) % n + n) % n});
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

} // namespace

std::vector<LabeledClass> closed_form_tensor(int n) {
    if (n <= 0) throw std::invalid_argument("closed_form_tensor: n must be positive");
    const int m = n / 2; // (n-1)/2 when odd
    std::vector<LabeledClass> out;
    for (int k = 0; k <= m; ++k) {
        const int parities = (n % 2 == 0) ? 2 : 1;
        for (int p = 0; p < parities; ++p)
            out.push_back({base_label(n, k, p), distance_class(n, k, p)});
    }
    return out;
}

std::vector<LabeledClass> closed_form_double_tensor(int n) {
    const std::vector<LabeledClass> base = closed_form_tensor(n);
    std::vector<LabeledClass> out;
    out.reserve(base.size() * 4);
    for (const LabeledClass& cls : base) {
        for (const auto& [e, d] : kSigns) {
            LabeledClass dec;
            dec.label = cls.label + sign_suffix(e, d);
            dec.members.reserve(cls.members.size());
            for (const auto& [a, b] : cls.members)
                dec.members.push_back({a + (e < 0 ? n : 0), b + (d < 0 ? n : 0)});
            std::sort(dec.members.begin(), dec.members.end());
            out.push_back(std::move(dec));
        }
    }
    return out;
}

long long closed_form_tensor_count(int n) {
    if (n <= 0) throw std::invalid_argument("closed_form_tensor_count: n must be positive");
    const long long m = n / 2;
    return (n % 2 == 1) ? m + 1 : 2 * m + 2;
}

long long closed_form_double_tensor_count(int n) {
    if (n <= 0) throw std::invalid_argument("closed_form_double_tensor_count: n must be positive");
    return (n % 2 == 1) ? 2LL * n + 2 : 4LL * n + 8;
}

LabeledQuotient closed_form_quotient(int n, QuotientKind kind) {
    if (n <= 0) throw std::invalid_argument("closed_form_quotient: n must be positive");
    const int m = n / 2;
    const bool even = (n % 2 == 0);
    LabeledQuotient out;
    const auto L = [&](int k, int p) { return base_label(n, k, p); };
    const auto S = [](const std::string& b, int e, int d) { return b + sign_suffix(e, d); };

    for (int k = 0; k <= m; ++k) {
        switch (kind) {
        case QuotientKind::TensorTau:
            // tau maps E(k)_p to E(k)_{p+k mod 2}: the second coordinate of a
            // distance-k pair has parity p+k.
            if (!even) {
                out.blocks.push_back({L(k, 0)});
            } else if (k % 2 == 0) {
                out.blocks.push_back({L(k, 0)});
                out.blocks.push_back({L(k, 1)});
            } else {
                out.blocks.push_back({L(k, 0), L(k, 1)});
            }
            break;
        case QuotientKind::DoubleTau:
            // tau also swaps the sign pair: E^{e,d} goes to E^{d,e}.
            if (!even) {
                out.blocks.push_back({S(L(k, 0), 1, 1)});
                out.blocks.push_back({S(L(k, 0), 1, -1), S(L(k, 0), -1, 1)});
                out.blocks.push_back({S(L(k, 0), -1, -1)});
            } else if (k % 2 == 0) {
                for (int p = 0; p < 2; ++p) {
                    out.blocks.push_back({S(L(k, p), 1, 1)});
                    out.blocks.push_back({S(L(k, p), 1, -1), S(L(k, p), -1, 1)});
                    out.blocks.push_back({S(L(k, p), -1, -1)});
                }
            } else {
                out.blocks.push_back({S(L(k, 0), 1, 1), S(L(k, 1), 1, 1)});
                out.blocks.push_back({S(L(k, 0), 1, -1), S(L(k, 1), -1, 1)});
                out.blocks.push_back({S(L(k, 1), 1, -1), S(L(k, 0), -1, 1)});
                out.blocks.push_back({S(L(k, 0), -1, -1), S(L(k, 1), -1, -1)});
            }
            break;
        case QuotientKind::DoubleRho:
            // rho flips both signs and keeps the base class.
            for (int p = 0; p < (even ? 2 : 1); ++p) {
                out.blocks.push_back({S(L(k, p), 1, 1), S(L(k, p), -1, -1)});
                out.blocks.push_back({S(L(k, p), 1, -1), S(L(k, p), -1, 1)});
            }
            break;
        case QuotientKind::DoubleTauRho:
            if (!even || k % 2 == 0) {
                for (int p = 0; p < (even ? 2 : 1); ++p) {
                    out.blocks.push_back({S(L(k, p), 1, 1), S(L(k, p), -1, -1)});
                    out.blocks.push_back({S(L(k, p), 1, -1), S(L(k, p), -1, 1)});
                }
            } else {
                out.blocks.push_back({S(L(k, 0), 1, 1), S(L(k, 1), 1, 1),
                                      S(L(k, 0), -1, -1), S(L(k, 1), -1, -1)});
                out.blocks.push_back({S(L(k, 0), 1, -1), S(L(k, 1), 1, -1),
                                      S(L(k, 0), -1, 1), S(L(k, 1), -1, 1)});
            }
            break;
        }
    }
    return out;
}

long long closed_form_quotient_count(int n, QuotientKind kind) {
    if (n <= 0) throw std::invalid_argument("closed_form_quotient_count: n must be positive");
    const long long m = n / 2;
    const bool even = (n % 2 == 0);
    switch (kind) {
    case QuotientKind::TensorTau:
        if (!even) return m + 1;
        return (m % 2 == 1) ? 3 * (m + 1) / 2 : 3 * m / 2 + 2;
    case QuotientKind::DoubleTau:
        if (!even) return 3 * (m + 1);
        return (m % 2 == 1) ? 5 * (m + 1) : 5 * m + 6;
    case QuotientKind::DoubleRho:
        return even ? 4 * (m + 1) : 2 * (m + 1);
    case QuotientKind::DoubleTauRho:
        if (!even) return 2 * (m + 1);
        return (m % 2 == 1) ? 3 * (m + 1) : 3 * m + 4;
    }
    throw std::logic_error("closed_form_quotient_count: bad kind");
}

namespace {

using Partition = std::vector<std::vector<std::pair<int, int>>>;

Partition canonical(Partition p) {
    for (auto& cls : p) std::sort(cls.begin(), cls.end());
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<std::vector<int>> canonical_ids(std::vector<std::vector<int>> p) {
    for (auto& b : p) std::sort(b.begin(), b.end());
    std::sort(p.begin(), p.end());
    return p;
}

void check_partition(CrossCheckReport& rep, const std::string& what,
                     const std::vector<LabeledClass>& closed, const TensorProduct& t) {
    Partition expected;
    for (const auto& cls : closed) expected.push_back(cls.members);
    const bool ok = canonical(expected) == canonical(t.classes);
    rep.entries.push_back({what, ok, ok ? "" : "class partition differs from the orbit engine"});
}

void check_count(CrossCheckReport& rep, const std::string& what, long long expected,
                 long long got) {
    const bool ok = expected == got;
    std::ostringstream os;
    if (!ok) os << "expected " << expected << ", engine found " << got;
    rep.entries.push_back({what, ok, os.str()});
}

void check_quotient(CrossCheckReport& rep, const std::string& what, int n,
                    QuotientKind kind, const std::vector<LabeledClass>& closed,
                    const TensorProduct& t, const QuotientSet& engine) {
    std::vector<std::vector<int>> expected;
    const LabeledQuotient lq = closed_form_quotient(n, kind);
    // Resolve each label through its class's smallest pair.
    for (const auto& block : lq.blocks) {
        std::vector<int> ids;
        for (const std::string& label : block) {
            const auto it = std::find_if(closed.begin(), closed.end(),
                                         [&](const LabeledClass& c) { return c.label == label; });
            if (it == closed.end()) throw std::logic_error("unknown closed-form label " + label);
            ids.push_back(t.class_of(it->members.front().first, it->members.front().second));
        }
        expected.push_back(std::move(ids));
    }
    const bool ok = canonical_ids(expected) == canonical_ids(engine.blocks);
    rep.entries.push_back({what + " blocks", ok, ok ? "" : "merged blocks differ from the orbit engine"});
    check_count(rep, what + " count", closed_form_quotient_count(n, kind),
                engine.size());
}

} // namespace

CrossCheckReport cross_check(int n, bool include_double) {
    CrossCheckReport rep;
    rep.n = n;
    if (n <= 2)
        rep.notes.push_back("n = " + std::to_string(n) +
                            " is below the stated range of the count formulas; "
                            "comparing against their literal values");

    const Quandle q = make_dihedral(n);
    const TensorProduct t = tensor_product(q);
    const auto closed = closed_form_tensor(n);
    check_partition(rep, "tensor partition", closed, t);
    check_count(rep, "tensor count", closed_form_tensor_count(n), t.size());
    check_quotient(rep, "tensor tau quotient", n, QuotientKind::TensorTau, closed, t,
                   quotient(t, {tau_map(t)}));

    if (include_double) {
        const SymmetricQuandle d = symmetric_double(q);
        const TensorProduct td = tensor_product(d.quandle);
        const auto closed_d = closed_form_double_tensor(n);
        check_partition(rep, "double partition", closed_d, td);
        check_count(rep, "double count", closed_form_double_tensor_count(n), td.size());
        const ClassInvolution tau = tau_map(td);
        const ClassInvolution rho = rho_map(td, d.rho);
        check_quotient(rep, "double tau quotient", n, QuotientKind::DoubleTau, closed_d,
                       td, quotient(td, {tau}));
        check_quotient(rep, "double rho quotient", n, QuotientKind::DoubleRho, closed_d,
                       td, quotient(td, {rho}));
        check_quotient(rep, "double tau+rho quotient", n, QuotientKind::DoubleTauRho,
                       closed_d, td, quotient(td, {tau, rho}));
    }

    rep.ok = std::all_of(rep.entries.begin(), rep.entries.end(),
                         [](const CrossCheckEntry& e) { return e.ok; });
    return rep;
}

std::optional<int> recognize_dihedral(const Quandle& q) {
    if (q.n <= 0) return std::nullopt;
    if (q == make_dihedral(q.n)) return q.n;
    return std::nullopt;
}

std::optional<int> recognize_dihedral_double(const Quandle& q) {
    if (q.n <= 0 || q.n % 2 != 0) return std::nullopt;
    const int base = q.n / 2;
    if (q == symmetric_double(make_dihedral(base)).quandle) return base;
    return std::nullopt;
}

std::optional<std::vector<std::string>> dihedral_class_labels(const TensorProduct& t) {
    std::vector<LabeledClass> closed;
    if (const auto n = recognize_dihedral(t.quandle)) {
        closed = closed_form_tensor(*n);
    } else if (const auto base = recognize_dihedral_double(t.quandle)) {
        closed = closed_form_double_tensor(*base);
    } else {
        return std::nullopt;
    }
    if (static_cast<int>(closed.size()) != t.size()) return std::nullopt;
    std::vector<std::string> labels(closed.size());
    for (const auto& cls : closed) {
        const int id = t.class_of(cls.members.front().first, cls.members.front().second);
        if (t.classes[id] != cls.members) return std::nullopt;
        labels[id] = cls.label;
    }
    return labels;
}

} // namespace qtensor
