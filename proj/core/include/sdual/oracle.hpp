#pragma once

// Brute-force ground truth for small boards. Nothing here shares code with
// the solver: primal values come from plain enumeration of extended boards
// (n <= 3) or an index-order depth-first enumeration of partial boards
// (n = 4); dual values come from enumeration of certificates.

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sdual/problems.hpp"

namespace sdual {

/// Requested size exceeds what exhaustive enumeration supports.
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Calls fn on every certificate in {-1,+1}^(n*s(n)), in binary-counter order.
/// Throws CapabilityError when n*s(n) > 24.
void for_each_certificate(int n, const std::function<void(const DualCertificate&)>& fn);

/// Calls fn on every board in {1..n, INF}^(n*n) (odometer order, INF last).
/// Throws CapabilityError when n > 3.
void for_each_extended_board(int n, const std::function<void(const Board&)>& fn);

/// Calls fn on every complete board in {1..n}^(n*n). Throws CapabilityError when n > 3.
void for_each_complete_board(int n, const std::function<void(const Board&)>& fn);

/// Minimum number of empty cells over the primal feasible set, or
/// std::nullopt when that set is empty. Supports n <= 4.
std::optional<int> exact_primal_value(const PrimalInstance& inst);

/// Maximum dual objective over the dual feasible set, or std::nullopt when
/// that set is empty. Raw certificate enumeration for n <= 3, per-group
/// enumeration for n = 4, 5.
std::optional<int> exact_dual_value(const PrimalInstance& inst);

/// Dual feasible set by testing every certificate. Sorted. n*s(n) <= 24.
std::vector<DualCertificate> dual_feasible_set_raw(const PrimalInstance& inst);

/// Dual feasible set built group by group: each first-grouping group ranges
/// over the n! sign patterns of a strict ordering of its cells; partial
/// choices that already repeat a value in another grouping are pruned, and
/// every result is re-checked for dual feasibility. Sorted. n <= 5.
std::vector<DualCertificate> dual_feasible_set_by_group(const PrimalInstance& inst);

/// A third grouping (rows and columns fixed as first and second) for which
/// the dual feasible set is empty, found by searching all partitions of the
/// board into n groups of n cells. n <= 3.
std::optional<Permutation> find_empty_dual_grouping(int n);

}  // namespace sdual
