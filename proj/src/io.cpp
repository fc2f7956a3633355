#include "qtensor/io.hpp"

#include <fstream>
#include <sstream>

namespace qtensor {

ParseError::ParseError(std::string file_, int line_, const std::string& message)
    : std::runtime_error(line_ > 0 ? file_ + ":" + std::to_string(line_) + ": " + message
                                   : file_ + ": " + message),
      file(std::move(file_)),
      line(line_) {}

namespace {

struct LineReader {
    std::istream& in;
    std::string file;
    int line_no = 0;

    // Next line with comments stripped and surrounding blanks dropped;
    // nullopt at end of input.
    std::optional<std::string> next() {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
            const auto begin = raw.find_first_not_of(" \t\r");
            if (begin == std::string::npos) continue;
            const auto end = raw.find_last_not_of(" \t\r");
            return raw.substr(begin, end - begin + 1);
        }
        return std::nullopt;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(file, line_no, message);
    }
};

std::vector<int> parse_ints(LineReader& r, const std::string& text,
                            const std::string& what) {
    std::istringstream is(text);
    std::vector<int> values;
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            r.fail(what + ": '" + tok + "' is not an integer");
        }
    }
    return values;
}

std::vector<std::vector<int>> parse_rows(LineReader& r, int n, const std::string& what) {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < n; ++i) {
        auto line = r.next();
        if (!line) r.fail(what + ": expected " + std::to_string(n) + " rows, got " +
                          std::to_string(i));
        auto row = parse_ints(r, *line, what + " row " + std::to_string(i));
        if (static_cast<int>(row.size()) != n)
            r.fail(what + " row " + std::to_string(i) + " has " +
                   std::to_string(row.size()) + " entries, expected " + std::to_string(n));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

QdlData read_qdl(std::istream& in, const std::string& filename) {
    LineReader r{in, filename};

    auto header = r.next();
    if (!header) r.fail("empty file, expected 'quandle' header");
    if (*header != "quandle") r.fail("expected 'quandle' header, got '" + *header + "'");

    auto nline = r.next();
    if (!nline || nline->rfind("n ", 0) != 0 || nline->size() <= 2) {
        if (nline) r.fail("expected 'n <count>', got '" + *nline + "'");
        r.fail("expected 'n <count>'");
    }
    auto nvals = parse_ints(r, nline->substr(2), "carrier size");
    if (nvals.size() != 1) r.fail("expected a single integer after 'n'");
    const int n = nvals[0];
    if (n <= 0) r.fail("carrier size must be positive, got " + std::to_string(n));

    auto tline = r.next();
    if (!tline || *tline != "table") {
        if (tline) r.fail("expected 'table', got '" + *tline + "'");
        r.fail("expected 'table'");
    }

    QdlData data;
    data.n = n;
    data.table = parse_rows(r, n, "table");

    auto extra = r.next();
    if (extra && *extra == "invtable") {
        data.inv_rows = parse_rows(r, n, "invtable");
        extra = r.next();
    }
    if (extra && extra->rfind("involution", 0) == 0) {
        auto vals = parse_ints(r, extra->substr(10), "involution");
        if (static_cast<int>(vals.size()) != n)
            r.fail("involution has " + std::to_string(vals.size()) + " entries, expected " +
                   std::to_string(n));
        data.involution = std::move(vals);
        extra = r.next();
    }
    if (extra) r.fail("unexpected content: '" + *extra + "'");
    return data;
}

QdlData read_qdl_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return read_qdl(in, path);
}

namespace {

QdlFile validate_qdl(const QdlData& data, const std::string& filename) {
    QuandleCheck check = validate_quandle(data.table);
    if (!check.ok()) {
        std::ostringstream os;
        os << filename << ": invalid quandle";
        for (const auto& e : check.shape_errors) os << "\n  " << e;
        for (const auto& v : check.violations) os << "\n  " << v.describe();
        throw ValidationError(os.str());
    }
    QdlFile result{*std::move(check.quandle), std::nullopt};
    if (data.inv_rows) {
        const Quandle& q = result.quandle;
        for (int x = 0; x < q.n; ++x)
            for (int y = 0; y < q.n; ++y)
                if ((*data.inv_rows)[x][y] != q.inv_op(x, y)) {
                    std::ostringstream os;
                    os << filename << ": stated invtable disagrees with the derived one at ("
                       << x << "," << y << "): " << (*data.inv_rows)[x][y] << " vs "
                       << q.inv_op(x, y);
                    throw ValidationError(os.str());
                }
    }
    if (data.involution) {
        InvolutionCheck ic = validate_good_involution(result.quandle, *data.involution);
        if (!ic.ok) {
            std::ostringstream os;
            os << filename << ": involution is not good";
            for (const auto& e : ic.errors) os << "\n  " << e;
            throw ValidationError(os.str());
        }
        result.involution = GoodInvolution{*data.involution};
    }
    return result;
}

} // namespace

QdlFile load_qdl(std::istream& in, const std::string& filename) {
    return validate_qdl(read_qdl(in, filename), filename);
}

QdlFile load_qdl_file(const std::string& path) {
    return validate_qdl(read_qdl_file(path), path);
}

void write_qdl(std::ostream& out, const Quandle& q,
               const std::optional<GoodInvolution>& rho) {
    out << "quandle\n";
    out << "n " << q.n << "\n";
    out << "table\n";
    for (int x = 0; x < q.n; ++x) {
        for (int y = 0; y < q.n; ++y) {
            if (y) out << ' ';
            out << q.op_table[static_cast<std::size_t>(x) * q.n + y];
        }
        out << '\n';
    }
    if (rho) {
        out << "involution";
        for (int v : rho->rho) out << ' ' << v;
        out << '\n';
    }
}

} // namespace qtensor
