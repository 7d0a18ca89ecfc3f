#pragma once

// Exhaustive (n <= 3) or sampled (n = 4) verification of the duality
// theory against the library, producing a line-oriented ledger:
//
//   THEOREM <id> PASS|FAIL checked=<count>
//
// followed by one COUNTEREXAMPLE ... END block per failing theorem.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdual/problems.hpp"

namespace sdual {

struct Counterexample {
    std::string instance;  ///< replayable instance line, see instance_line()
    std::optional<Board> board;
    std::optional<DualCertificate> certificate;
    std::string detail;
};

struct TheoremTally {
    std::string id;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::optional<Counterexample> counterexample;  ///< first failure

    bool pass() const { return failed == 0; }
};

class VerificationLedger {
public:
    /// Registers an id so it is reported even if nothing gets checked.
    void declare(const std::string& id);
    /// Counts one check; on failure keeps the first counterexample.
    void record(const std::string& id, bool ok, const std::function<Counterexample()>& counterexample);
    /// Counts `count` checks that passed together.
    void record_passed(const std::string& id, std::uint64_t count);
    void note(std::string line) { notes_.push_back(std::move(line)); }

    const TheoremTally* find(const std::string& id) const;
    std::span<const TheoremTally> tallies() const { return tallies_; }
    std::span<const std::string> notes() const { return notes_; }
    bool all_pass() const;

    void merge(const VerificationLedger& other);
    std::string to_text() const;

private:
    TheoremTally& entry(const std::string& id);
    std::vector<TheoremTally> tallies_;
    std::vector<std::string> notes_;
};

/// n, permutations (1-based) and givens (cell:value, 1-based) on one line.
std::string instance_line(const PrimalInstance& inst);

/// Left side of the sign identity for one group: pair_scores(sgn(differences(p))) + (n+1).
using SignIdentityLhs = std::function<std::vector<int>(std::span<const int> p)>;
std::vector<int> sign_identity_lhs(std::span<const int> p);

struct VerifyConfig {
    int n = 2;
    std::vector<Permutation> third_groupings;
    std::vector<std::vector<Given>> given_sets;
    std::uint64_t seed = 0;
    /// n = 4 only: random certificates drawn per grouping.
    int sampled_certificates = 0;
    /// Overridable to self-test the harness with a faulty identity.
    SignIdentityLhs sign_identity = sign_identity_lhs;
    bool check_solver = true;
};

/// Documented sweep for n in {2, 3, 4}:
///  n = 2: third grouping in {rows, columns, diagonal pairs}; every given set
///         of size <= 2.
///  n = 3: third grouping in {cyclic transversals, one seeded random}; the
///         empty given set plus seeded random given sets of size 1..5.
///  n = 4: blocks; a handful of seeded instances, including an uncompletable
///         one; sampled certificates.
VerifyConfig default_verify_config(int n, std::uint64_t seed = 20240611);

/// Throws std::invalid_argument unless 2 <= n <= 4.
VerificationLedger verify_theorems(const VerifyConfig& config);

/// n = 4 instance whose givens are pairwise consistent but admit no
/// completion: cell (1,3) has no candidate.
PrimalInstance uncompletable_instance_4x4();

/// Rows of a valid 4 x 4 board used throughout examples and tests.
Board reference_board_4x4();

}  // namespace sdual
