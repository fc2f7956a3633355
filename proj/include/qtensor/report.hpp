#ifndef QTENSOR_REPORT_HPP
#define QTENSOR_REPORT_HPP

#include "qtensor/dihedral.hpp"
#include "qtensor/tensor.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qtensor {

// Closed-form names when the table is a canonical R_n or D(R_n), bracket
// representatives like [0,1] otherwise. One entry per class.
std::vector<std::string> class_display_labels(const TensorProduct& t);

// Quotient selectors accepted by the documents: "tau", "rho", "tau,rho".
// The rho variants throw ValidationError when no involution is available.

// Machine document for a tensor product: fields n, classes, reps, tau,
// rho (only when an involution is supplied), quotients, counts. Key order
// is alphabetical, so equal inputs give byte-equal dumps.
nlohmann::json tensor_document(const TensorProduct& t,
                               const std::optional<GoodInvolution>& rho,
                               const std::vector<std::string>& quotients);
void print_tensor_document(std::ostream& out, const TensorProduct& t,
                           const std::optional<GoodInvolution>& rho,
                           const std::vector<std::string>& quotients);

// The four 1-handle counts plus the class inventories behind them, nested
// as tensor documents under "oriented" (absent with an explicit rho) and
// "all".
nlohmann::json handles_document(const HandleReport& r);
void print_handles_document(std::ostream& out, const HandleReport& r);

nlohmann::json cross_check_document(const std::vector<CrossCheckReport>& reports);
void print_cross_check(std::ostream& out, const CrossCheckReport& rep);

// Table dump shared by the check and double commands.
nlohmann::json quandle_document(const Quandle& q,
                                const std::optional<GoodInvolution>& rho);

std::string format_pair(const std::pair<int, int>& p);

} // namespace qtensor

#endif
