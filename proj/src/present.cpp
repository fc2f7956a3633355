#include "qtensor/present.hpp"

#include "qtensor/dihedral.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace qtensor {

int Presentation::generator_index(const std::string& name) const {
    const auto it = std::find(generators.begin(), generators.end(), name);
    return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

namespace {

struct Token {
    enum class Kind { Ident, Int, Star, Tilde, Caret, LParen, RParen, Equals, Minus, End };

    Kind kind;
    std::string text;
    long long value = 0;
    int line = 0;
};

const char* token_name(Token::Kind k) {
    switch (k) {
    case Token::Kind::Ident: return "name";
    case Token::Kind::Int: return "integer";
    case Token::Kind::Star: return "'*'";
    case Token::Kind::Tilde: return "'~'";
    case Token::Kind::Caret: return "'^'";
    case Token::Kind::LParen: return "'('";
    case Token::Kind::RParen: return "')'";
    case Token::Kind::Equals: return "'='";
    case Token::Kind::Minus: return "'-'";
    case Token::Kind::End: return "end of input";
    }
    return "?";
}

void tokenize_line(const std::string& s, int line, const std::string& file,
                   std::vector<Token>& out) {
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Kind::Ident, s.substr(i, j - i), 0, line});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            const std::string digits = s.substr(i, j - i);
            try {
                out.push_back({Token::Kind::Int, digits, std::stoll(digits), line});
            } catch (const std::out_of_range&) {
                throw ParseError(file, line, "integer too large: " + digits);
            }
            i = j;
            continue;
        }
        Token::Kind kind;
        switch (c) {
        case '*': kind = Token::Kind::Star; break;
        case '~': kind = Token::Kind::Tilde; break;
        case '^': kind = Token::Kind::Caret; break;
        case '(': kind = Token::Kind::LParen; break;
        case ')': kind = Token::Kind::RParen; break;
        case '=': kind = Token::Kind::Equals; break;
        case '-': kind = Token::Kind::Minus; break;
        default:
            throw ParseError(file, line, std::string("unexpected character '") + c + "'");
        }
        out.push_back({kind, std::string(1, c), 0, line});
        ++i;
    }
}

class Parser {
public:
    Parser(std::vector<Token> tokens, const Presentation& p, std::string file, int line)
        : tokens_(std::move(tokens)), p_(p), file_(std::move(file)) {
        tokens_.push_back({Token::Kind::End, "", 0, line});
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (peek().kind == Token::Kind::Star || peek().kind == Token::Kind::Tilde) {
            const auto kind =
                get().kind == Token::Kind::Star ? WordExpr::Kind::Op : WordExpr::Kind::InvOp;
            ExprPtr rhs = parse_term();
            auto node = std::make_shared<WordExpr>();
            node->kind = kind;
            node->left = std::move(e);
            node->right = std::move(rhs);
            e = std::move(node);
        }
        return e;
    }

    void expect_end(const std::string& context) {
        if (peek().kind != Token::Kind::End)
            fail("unexpected " + described(peek()) + " after " + context);
    }

private:
    ExprPtr parse_term() {
        ExprPtr base = parse_atom();
        if (peek().kind != Token::Kind::Caret) return base;
        get();
        expect(Token::Kind::LParen, "the exponent of a quandle term must be "
                                    "a parenthesized group word");
        auto node = std::make_shared<WordExpr>();
        node->kind = WordExpr::Kind::Exp;
        node->left = std::move(base);
        node->exponent = parse_gword();
        expect(Token::Kind::RParen, "unbalanced '(' in exponent");
        return node;
    }

    ExprPtr parse_atom() {
        if (peek().kind == Token::Kind::Ident) {
            const Token t = get();
            const int idx = p_.generator_index(t.text);
            if (idx < 0) fail("unknown generator '" + t.text + "'");
            auto node = std::make_shared<WordExpr>();
            node->kind = WordExpr::Kind::Generator;
            node->generator = idx;
            return node;
        }
        if (peek().kind == Token::Kind::LParen) {
            get();
            ExprPtr e = parse_expr();
            expect(Token::Kind::RParen, "unbalanced '('");
            return e;
        }
        fail("expected a generator or '(', got " + described(peek()));
    }

    GWord parse_gword() {
        GWord g;
        while (peek().kind == Token::Kind::Ident || peek().kind == Token::Kind::LParen)
            g.factors.push_back(parse_gfactor());
        if (g.factors.empty())
            fail("empty group word, expected a generator or '(', got " + described(peek()));
        return g;
    }

    GWordFactor parse_gfactor() {
        GWordFactor f;
        if (peek().kind == Token::Kind::Ident) {
            const Token t = get();
            const int idx = p_.generator_index(t.text);
            if (idx < 0) fail("unknown generator '" + t.text + "'");
            f.base = idx;
        } else {
            get(); // '('
            f.base = std::make_shared<const GWord>(parse_gword());
            expect(Token::Kind::RParen, "unbalanced '(' in group word");
        }
        if (peek().kind == Token::Kind::Caret) {
            get();
            const bool negative = peek().kind == Token::Kind::Minus;
            if (negative) get();
            if (peek().kind != Token::Kind::Int)
                fail("expected an integer exponent, got " + described(peek()));
            const long long v = get().value;
            f.exponent = negative ? -v : v;
            if (f.exponent == 0) fail("zero exponent is not allowed");
        }
        return f;
    }

    const Token& peek() const { return tokens_[pos_]; }
    const Token& get() { return tokens_[pos_++]; }

    void expect(Token::Kind kind, const std::string& message) {
        if (peek().kind != kind) fail(message + " (got " + described(peek()) + ")");
        get();
    }

    static std::string described(const Token& t) {
        if (t.kind == Token::Kind::Ident || t.kind == Token::Kind::Int)
            return std::string(token_name(t.kind)) + " '" + t.text + "'";
        return token_name(t.kind);
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(file_, peek().line, message);
    }

    std::vector<Token> tokens_;
    const Presentation& p_;
    std::string file_;
    std::size_t pos_ = 0;
};

} // namespace

Presentation read_qpres(std::istream& in, const std::string& filename) {
    Presentation p;
    bool have_gens = false;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::vector<Token> tokens;
        tokenize_line(raw, line_no, filename, tokens);
        if (tokens.empty()) continue;

        if (tokens.front().kind != Token::Kind::Ident)
            throw ParseError(filename, line_no, "expected 'gens' or 'rel' at line start");
        const std::string keyword = tokens.front().text;
        tokens.erase(tokens.begin());

        if (keyword == "gens") {
            if (have_gens) throw ParseError(filename, line_no, "duplicate gens line");
            if (!p.relations.empty())
                throw ParseError(filename, line_no, "gens line must come before relations");
            if (tokens.empty())
                throw ParseError(filename, line_no, "gens line needs at least one name");
            for (const Token& t : tokens) {
                if (t.kind != Token::Kind::Ident)
                    throw ParseError(filename, line_no,
                                     "generator names must be identifiers, got " +
                                         std::string(token_name(t.kind)));
                if (p.generator_index(t.text) >= 0)
                    throw ParseError(filename, line_no, "duplicate generator '" + t.text + "'");
                p.generators.push_back(t.text);
            }
            have_gens = true;
        } else if (keyword == "rel") {
            if (!have_gens)
                throw ParseError(filename, line_no, "gens line must come before relations");
            // Split at the relation's top-level '='.
            const auto eq = std::find_if(tokens.begin(), tokens.end(), [](const Token& t) {
                return t.kind == Token::Kind::Equals;
            });
            if (eq == tokens.end())
                throw ParseError(filename, line_no, "relation is missing '='");
            std::vector<Token> lhs(tokens.begin(), eq);
            std::vector<Token> rhs(eq + 1, tokens.end());
            if (lhs.empty() || rhs.empty())
                throw ParseError(filename, line_no, "relation side is empty");
            Parser pl(std::move(lhs), p, filename, line_no);
            Parser pr(std::move(rhs), p, filename, line_no);
            Relation rel;
            rel.lhs = pl.parse_expr();
            pl.expect_end("the left side of the relation");
            rel.rhs = pr.parse_expr();
            pr.expect_end("the right side of the relation");
            p.relations.push_back(std::move(rel));
        } else {
            throw ParseError(filename, line_no, "expected 'gens' or 'rel', got '" + keyword + "'");
        }
    }
    if (!have_gens) throw ParseError(filename, 0, "missing gens line");
    return p;
}

Presentation read_qpres_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return read_qpres(in, path);
}

ExprPtr parse_word(const std::string& text, const Presentation& p, const std::string& what) {
    std::vector<Token> tokens;
    tokenize_line(text, 1, what, tokens);
    Parser parser(std::move(tokens), p, what, 1);
    ExprPtr e = parser.parse_expr();
    parser.expect_end("the word");
    return e;
}

std::string to_string(const GWord& g, const Presentation& p) {
    std::ostringstream os;
    bool first = true;
    for (const GWordFactor& f : g.factors) {
        if (!first) os << ' ';
        first = false;
        if (std::holds_alternative<int>(f.base))
            os << p.generators.at(static_cast<std::size_t>(std::get<int>(f.base)));
        else
            os << '(' << to_string(*std::get<std::shared_ptr<const GWord>>(f.base), p) << ')';
        if (f.exponent != 1) os << '^' << f.exponent;
    }
    return os.str();
}

std::string to_string(const WordExpr& e, const Presentation& p) {
    switch (e.kind) {
    case WordExpr::Kind::Generator:
        return p.generators.at(static_cast<std::size_t>(e.generator));
    case WordExpr::Kind::Op:
    case WordExpr::Kind::InvOp: {
        // Chains print flat on the left; a compound right side needs parens
        // to survive reparsing left associatively.
        const std::string lhs = to_string(*e.left, p);
        std::string rhs = to_string(*e.right, p);
        if (e.right->kind == WordExpr::Kind::Op || e.right->kind == WordExpr::Kind::InvOp)
            rhs = "(" + rhs + ")";
        return lhs + (e.kind == WordExpr::Kind::Op ? " * " : " ~ ") + rhs;
    }
    case WordExpr::Kind::Exp: {
        std::string base = to_string(*e.left, p);
        if (e.left->kind != WordExpr::Kind::Generator) base = "(" + base + ")";
        return base + "^(" + to_string(e.exponent, p) + ")";
    }
    }
    throw std::logic_error("to_string: bad expression kind");
}

bool gword_equal(const GWord& a, const GWord& b) {
    if (a.factors.size() != b.factors.size()) return false;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        const GWordFactor& fa = a.factors[i];
        const GWordFactor& fb = b.factors[i];
        if (fa.exponent != fb.exponent) return false;
        if (fa.base.index() != fb.base.index()) return false;
        if (std::holds_alternative<int>(fa.base)) {
            if (std::get<int>(fa.base) != std::get<int>(fb.base)) return false;
        } else if (!gword_equal(*std::get<std::shared_ptr<const GWord>>(fa.base),
                                *std::get<std::shared_ptr<const GWord>>(fb.base))) {
            return false;
        }
    }
    return true;
}

bool expr_equal(const WordExpr& a, const WordExpr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case WordExpr::Kind::Generator:
        return a.generator == b.generator;
    case WordExpr::Kind::Op:
    case WordExpr::Kind::InvOp:
        return expr_equal(*a.left, *b.left) && expr_equal(*a.right, *b.right);
    case WordExpr::Kind::Exp:
        return expr_equal(*a.left, *b.left) && gword_equal(a.exponent, b.exponent);
    }
    return false;
}

namespace {

// Applies `step` reps times, shrinking huge exponents by the cycle length of
// x under step (step is injective on its orbit, so the orbit is a cycle).
template <typename Step>
int iterate_action(int x, long long reps, int carrier, Step step) {
    if (reps <= 2LL * carrier) {
        for (long long i = 0; i < reps; ++i) x = step(x);
        return x;
    }
    long long cycle = 1;
    int y = step(x);
    while (y != x) {
        y = step(y);
        ++cycle;
    }
    for (long long i = reps % cycle; i > 0; --i) x = step(x);
    return x;
}

int apply_gword_signed(const Quandle& q, const Assignment& a, int x, const GWord& g,
                       int sign);

int apply_factor(const Quandle& q, const Assignment& a, int x, const GWordFactor& f,
                 int sign) {
    const long long e = f.exponent * sign;
    const int dir = e > 0 ? 1 : -1;
    const long long reps = e > 0 ? e : -e;
    if (std::holds_alternative<int>(f.base)) {
        const int img = a.images.at(static_cast<std::size_t>(std::get<int>(f.base)));
        return iterate_action(x, reps, q.n, [&](int v) {
            return dir > 0 ? q.op(v, img) : q.inv_op(v, img);
        });
    }
    const GWord& sub = *std::get<std::shared_ptr<const GWord>>(f.base);
    return iterate_action(x, reps, q.n,
                          [&](int v) { return apply_gword_signed(q, a, v, sub, dir); });
}

// Inverting a word reverses the factors and flips every sign.
int apply_gword_signed(const Quandle& q, const Assignment& a, int x, const GWord& g,
                       int sign) {
    if (sign > 0) {
        for (const GWordFactor& f : g.factors) x = apply_factor(q, a, x, f, 1);
    } else {
        for (auto it = g.factors.rbegin(); it != g.factors.rend(); ++it)
            x = apply_factor(q, a, x, *it, -1);
    }
    return x;
}

constexpr std::size_t kFlattenLimit = 1 << 22;

void flatten_into(const GWord& g, const Assignment& a, int sign, Word& out);

void flatten_factor(const GWordFactor& f, const Assignment& a, int sign, Word& out) {
    const long long e = f.exponent * sign;
    const int dir = e > 0 ? 1 : -1;
    const long long reps = e > 0 ? e : -e;
    if (static_cast<long long>(out.size()) + reps > static_cast<long long>(kFlattenLimit))
        throw BoundError("flatten_gword: flattened word too long");
    if (std::holds_alternative<int>(f.base)) {
        const int img = a.images.at(static_cast<std::size_t>(std::get<int>(f.base)));
        for (long long i = 0; i < reps; ++i) out.push_back({img, dir});
        return;
    }
    const GWord& sub = *std::get<std::shared_ptr<const GWord>>(f.base);
    for (long long i = 0; i < reps; ++i) flatten_into(sub, a, dir, out);
}

void flatten_into(const GWord& g, const Assignment& a, int sign, Word& out) {
    if (sign > 0) {
        for (const GWordFactor& f : g.factors) flatten_factor(f, a, 1, out);
    } else {
        for (auto it = g.factors.rbegin(); it != g.factors.rend(); ++it)
            flatten_factor(*it, a, -1, out);
    }
}

} // namespace

Word flatten_gword(const GWord& g, const Assignment& a) {
    Word out;
    flatten_into(g, a, 1, out);
    return out;
}

int eval_word(const Quandle& q, const Assignment& a, const WordExpr& e) {
    switch (e.kind) {
    case WordExpr::Kind::Generator:
        return a.images.at(static_cast<std::size_t>(e.generator));
    case WordExpr::Kind::Op:
        return q.op(eval_word(q, a, *e.left), eval_word(q, a, *e.right));
    case WordExpr::Kind::InvOp:
        return q.inv_op(eval_word(q, a, *e.left), eval_word(q, a, *e.right));
    case WordExpr::Kind::Exp:
        return apply_gword_signed(q, a, eval_word(q, a, *e.left), e.exponent, 1);
    }
    throw std::logic_error("eval_word: bad expression kind");
}

bool satisfies(const Quandle& q, const Presentation& p, const Assignment& a) {
    if (a.images.size() != p.generators.size())
        throw ValidationError("satisfies: assignment size does not match the generators");
    for (const int v : a.images)
        if (v < 0 || v >= q.n) throw ValidationError("satisfies: image out of range");
    for (const Relation& rel : p.relations)
        if (eval_word(q, a, *rel.lhs) != eval_word(q, a, *rel.rhs)) return false;
    return true;
}

bool surjective_assignment(const Quandle& q, const Assignment& a) {
    return static_cast<int>(subquandle_closure(q, a.images).size()) == q.n;
}

std::vector<Assignment> enumerate_homs(const Presentation& p, const Quandle& q,
                                       long long cap) {
    if (cap <= 0) throw std::invalid_argument("enumerate_homs: cap must be positive");
    if (q.n <= 0) throw std::invalid_argument("enumerate_homs: empty quandle");
    const std::size_t g = p.generators.size();
    const int n = q.n;
    long long total = 1;
    for (std::size_t i = 0; i < g; ++i) {
        if (total > cap / n)
            throw BoundError("enumerate_homs: search space exceeds cap");
        total *= n;
    }

    std::vector<Assignment> out;
    std::vector<int> images(g, 0);
    while (true) {
        Assignment a{images};
        if (satisfies(q, p, a)) out.push_back(std::move(a));
        // Odometer, last position fastest: lexicographic output order.
        int i = static_cast<int>(g) - 1;
        while (i >= 0 && images[i] == n - 1) {
            images[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++images[i];
    }
    return out;
}

HandleClass handle_invariant(const Presentation& p, const Assignment& a,
                             const Quandle& q, const WordExpr& w1, const WordExpr& w2,
                             HandleKind kind, const std::optional<GoodInvolution>& rho) {
    if (!satisfies(q, p, a))
        throw ValidationError("handle_invariant: assignment does not satisfy the relations");

    const TensorProduct t = tensor_product(q);
    const int e1 = eval_word(q, a, w1);
    const int e2 = eval_word(q, a, w2);
    const int cls = t.class_of(e1, e2);
    const auto labels = dihedral_class_labels(t);
    const auto label_of = [&](int c) {
        if (labels) return (*labels)[c];
        std::ostringstream os;
        os << "[" << t.reps[c].first << "," << t.reps[c].second << "]";
        return os.str();
    };

    HandleClass out;
    out.kind = kind;
    out.evaluated = {e1, e2};
    if (kind == HandleKind::Strong) {
        out.index = cls;
        out.class_reps.push_back(t.reps[cls]);
        out.label = label_of(cls);
        return out;
    }

    std::vector<ClassInvolution> invs{tau_map(t)};
    if (rho) invs.push_back(rho_map(t, *rho));
    const QuotientSet qs = quotient(t, invs);
    out.index = qs.block_of[cls];
    std::string label = "{";
    for (const int c : qs.blocks[out.index]) {
        if (out.class_reps.size()) label += ", ";
        out.class_reps.push_back(t.reps[c]);
        label += label_of(c);
    }
    out.label = label + "}";
    return out;
}

} // namespace qtensor
