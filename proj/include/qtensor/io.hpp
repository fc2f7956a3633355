#ifndef QTENSOR_IO_HPP
#define QTENSOR_IO_HPP

#include "qtensor/core.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qtensor {

// Structural problem in an input file. what() is "file:line: message";
// line 0 means the location is the file as a whole.
struct ParseError : std::runtime_error {
    std::string file;
    int line;

    ParseError(std::string file_, int line_, const std::string& message);
};

// Raw content of a .qdl file, before any semantic validation. The format is
// line based, '#' starts a comment, blank lines are ignored:
//
//   quandle
//   n 3
//   table
//   0 2 1
//   2 1 0
//   1 0 2
//   invtable          (optional; must match the derived inverse table)
//   ...n rows...
//   involution 0 1 2  (optional)
struct QdlData {
    int n = 0;
    std::vector<std::vector<int>> table;
    std::optional<std::vector<std::vector<int>>> inv_rows;
    std::optional<std::vector<int>> involution;
};

QdlData read_qdl(std::istream& in, const std::string& filename = "<stream>");
QdlData read_qdl_file(const std::string& path);

struct QdlFile {
    Quandle quandle;
    std::optional<GoodInvolution> involution;
};

// Parses and validates in one step: axioms must hold, a supplied invtable must
// equal the derived one, and a supplied involution must be good. Throws
// ParseError for structural problems and ValidationError for semantic ones.
QdlFile load_qdl(std::istream& in, const std::string& filename = "<stream>");
QdlFile load_qdl_file(const std::string& path);

void write_qdl(std::ostream& out, const Quandle& q,
               const std::optional<GoodInvolution>& rho = {});

} // namespace qtensor

#endif
