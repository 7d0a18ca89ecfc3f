#include "sdual/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sdual/duality.hpp"
#include "sdual/oracle.hpp"
#include "sdual/solver.hpp"

namespace sdual {

namespace {

std::string join_ints(const std::vector<int>& v, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string board_tokens(const Board& b)
{
    std::string out;
    for (int i = 0; i < b.size(); ++i) {
        if (i)
            out += ' ';
        out += to_string(b[i]);
    }
    return out;
}

std::string certificate_tokens(const DualCertificate& c)
{
    const int s = triangular_size(c.n());
    std::string out;
    for (int i = 0; i < c.size(); ++i) {
        if (i && s && i % s == 0)
            out += '/';
        out += c.signs()[static_cast<std::size_t>(i)] > 0 ? '+' : '-';
    }
    return out;
}

Counterexample make_cx(const PrimalInstance& inst, std::optional<Board> b, std::optional<DualCertificate> c,
                       std::string detail)
{
    return Counterexample{instance_line(inst), std::move(b), std::move(c), std::move(detail)};
}

std::vector<Board> complete_alldifferent_boards(const PrimalInstance& base,
                                                const std::vector<DualCertificate>& dual_set)
{
    std::vector<Board> out;
    out.reserve(dual_set.size());
    for (const auto& c : dual_set)
        out.push_back(dual_to_primal(base, c).board);
    return out;
}

bool first_grouping_distinct(const PrimalInstance& inst, const Board& b)
{
    return all_nonzero(group_apply(inst.system(0), b.cells()));
}

// Checks that need only the three groupings, not the givens.
void verify_groupings(const VerifyConfig& cfg, const PrimalInstance& base, std::span<const DualCertificate> certs,
                      const std::vector<DualCertificate>& dual_set, std::span<const Board> complete_boards,
                      std::mt19937_64& rng, VerificationLedger& ledger)
{
    const int n = base.n();
    const int cells = n * n;

    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
        const auto lhs = cfg.sign_identity(p);
        std::vector<int> rhs(p.size());
        std::transform(p.begin(), p.end(), rhs.begin(), [](int v) { return 2 * v; });
        ledger.record("sign-identity", lhs == rhs, [&] {
            return make_cx(base, std::nullopt, std::nullopt, "permutation " + join_ints(p, ',') + " lhs " +
                                                                 join_ints(lhs, ',') + " rhs " + join_ints(rhs, ','));
        });
    } while (std::next_permutation(p.begin(), p.end()));

    const std::vector<ExtInt> ones(static_cast<std::size_t>(cells), ExtInt(1));
    for (int r = 0; r < 3; ++r) {
        const auto y = group_apply(base.system(r), ones);
        const bool ok = std::all_of(y.begin(), y.end(), [](ExtInt v) { return v == ExtInt(0); });
        ledger.record("ones-kernel", ok, [&] {
            return make_cx(base, std::nullopt, std::nullopt, "grouping " + std::to_string(r + 1));
        });
    }

    std::uniform_int_distribution<int> small(-5, 5);
    for (const auto& c : certs) {
        for (int r = 0; r < 3; ++r) {
            const auto scores = group_apply_transpose(base.system(r), c.signs());
            const bool bounded = std::all_of(scores.begin(), scores.end(),
                                             [n](int s) { return s >= -(n - 1) && s <= n - 1; });
            ledger.record("score-bound", bounded, [&] {
                return make_cx(base, std::nullopt, c, "grouping " + std::to_string(r + 1));
            });
            const bool even = std::all_of(scores.begin(), scores.end(), [n](int s) { return (s + n + 1) % 2 == 0; });
            ledger.record("score-parity", even, [&] {
                return make_cx(base, std::nullopt, c, "grouping " + std::to_string(r + 1));
            });

            std::vector<ExtInt> x(static_cast<std::size_t>(cells));
            long lhs = 0, rhs = 0;
            for (int i = 0; i < cells; ++i) {
                const int v = small(rng);
                x[static_cast<std::size_t>(i)] = v;
                rhs += static_cast<long>(v) * scores[static_cast<std::size_t>(i)];
            }
            const auto ax = group_apply(base.system(r), x);
            for (std::size_t i = 0; i < ax.size(); ++i)
                lhs += static_cast<long>(ax[i].value()) * c.signs()[i];
            ledger.record("adjointness", lhs == rhs, [&] {
                return make_cx(base, std::nullopt, c, "grouping " + std::to_string(r + 1));
            });
        }

        const auto primal = dual_to_primal(base, c);
        const bool feasible = is_dual_feasible(base, c);
        const bool alldiff = satisfies_alldifferent(base, primal.board);
        ledger.record("dual-feasible-characterization", feasible == alldiff, [&] {
            return make_cx(base, primal.board, c,
                           std::string("dual feasible=") + (feasible ? "true" : "false") +
                               " primal all-different=" + (alldiff ? "true" : "false"));
        });
        if (feasible) {
            const bool in_range = primal.board.complete() && alldiff;
            ledger.record("primalize-range", in_range, [&] { return make_cx(base, primal.board, c, ""); });
            const auto back = primal_to_dual(base, primal.board);
            ledger.record("roundtrip-dual-primal-dual", back == c,
                          [&] { return make_cx(base, primal.board, c, "recovered " + certificate_tokens(back)); });
        }
    }

    for (const auto& b : complete_boards) {
        if (!first_grouping_distinct(base, b))
            continue;
        const auto lam = primal_to_dual(base, b);
        const auto scores = dual_scores(base, lam);
        std::vector<ExtInt> scores_ext(scores.begin(), scores.end());
        for (int r = 0; r < 3; ++r) {
            if (!all_nonzero(group_apply(base.system(r), b.cells())))
                continue;
            const bool ok = all_nonzero(group_apply(base.system(r), scores_ext));
            ledger.record("sign-transfer", ok, [&] {
                return make_cx(base, b, lam, "grouping " + std::to_string(r + 1));
            });
        }
        if (!satisfies_alldifferent(base, b))
            continue;
        ledger.record("dual-feasible-from-primal", is_dual_feasible(base, lam),
                      [&] { return make_cx(base, b, lam, ""); });
        const auto again = dual_to_primal(base, lam).board;
        ledger.record("roundtrip-primal-dual-primal", again == b,
                      [&] { return make_cx(base, b, lam, "recovered " + board_tokens(again)); });
    }

    if (n <= 3) {
        const auto raw = dual_feasible_set_raw(base);
        ledger.record("dual-enumeration-agreement", raw == dual_set, [&] {
            return make_cx(base, std::nullopt, std::nullopt,
                           "raw size " + std::to_string(raw.size()) + " per-group size " +
                               std::to_string(dual_set.size()));
        });
    }
}

struct PrimalPoint {
    Board board;
    int objective;
};

// Checks tied to one given set.
void verify_instance(const VerifyConfig& cfg, const PrimalInstance& inst, std::span<const DualCertificate> certs,
                     const std::vector<DualCertificate>& dual_set, std::span<const Board> complete_alldiff,
                     std::span<const Board> extended_boards, std::mt19937_64& rng, VerificationLedger& ledger)
{
    const int n = inst.n();
    const auto vp = exact_primal_value(inst);
    const auto vd = exact_dual_value(inst);

    // Primal points: every extended board for n <= 3; otherwise the givens
    // board, every complete all-different board and random partial boards.
    std::vector<Board> candidates;
    if (n > 3) {
        candidates.push_back(inst.givens_board());
        candidates.insert(candidates.end(), complete_alldiff.begin(), complete_alldiff.end());
        std::uniform_int_distribution<int> pick(0, n);
        for (int s = 0; s < 2000; ++s) {
            Board b = Board::empty(n);
            for (int c = 0; c < n * n; ++c) {
                const int v = pick(rng);
                b.set(c, v == 0 ? kInf : ExtInt(v));
            }
            for (const auto& g : inst.givens())
                if (pick(rng) != 0)
                    b.set(g.cell, g.value);
            candidates.push_back(std::move(b));
        }
    }

    std::vector<PrimalPoint> feasible;
    bool complete_optimum = false;
    for (const auto& b : n <= 3 ? extended_boards : std::span<const Board>(candidates)) {
        const bool in_set = is_primal_feasible(inst, b);
        const int f = primal_objective(b);
        if (in_set) {
            feasible.push_back({b, f});
            if (b.complete() && vp && *vp == f)
                complete_optimum = true;
        }
        const bool lhs = solves_primal(inst, b);
        const bool rhs = in_set && vp && f == *vp && *vp == 0;
        ledger.record("primal-optimum-characterization", lhs == rhs, [&] {
            return make_cx(inst, b, std::nullopt, "primal value " + (vp ? std::to_string(*vp) : "none"));
        });
        if (lhs) {
            const auto lam = primal_to_dual(inst, b);
            ledger.record("primal-to-dual-solution", solves_dual(inst, lam),
                          [&] { return make_cx(inst, b, lam, ""); });
        }
    }

    bool matching_dual_optimum = false;
    for (const auto& c : certs) {
        const bool in_set = is_dual_feasible(inst, c);
        const int f = dual_objective(inst, c);
        if (in_set && vd && f == *vd && f == 0)
            matching_dual_optimum = true;
        const bool lhs = solves_dual(inst, c);
        const bool rhs = in_set && vd && f == *vd && *vd == 0;
        ledger.record("dual-optimum-characterization", lhs == rhs, [&] {
            return make_cx(inst, std::nullopt, c, "dual value " + (vd ? std::to_string(*vd) : "none"));
        });
        if (lhs) {
            const auto x = dual_to_primal(inst, c).board;
            ledger.record("dual-to-primal-solution", solves_primal(inst, x), [&] { return make_cx(inst, x, c, ""); });
        }
    }

    // Weak duality and the equal-objectives theorem over every primal/dual
    // feasible pair.
    for (const auto& x : feasible) {
        for (const auto& c : dual_set) {
            const int fd = dual_objective(inst, c);
            ledger.record("weak-duality", fd <= 0 && 0 <= x.objective, [&] {
                return make_cx(inst, x.board, c, "primal " + std::to_string(x.objective) + " dual " +
                                                     std::to_string(fd));
            });
            if (fd == x.objective) {
                const bool ok = x.objective == 0 && vp && *vp == 0 && vd && *vd == 0;
                ledger.record("equal-objectives-imply-zero", ok, [&] { return make_cx(inst, x.board, c, ""); });
            }
        }
    }

    if (vp && vd) {
        const bool values_equal = *vp == *vd;
        const bool ok = values_equal == complete_optimum && complete_optimum == matching_dual_optimum;
        ledger.record("strong-duality", ok, [&] {
            return make_cx(inst, std::nullopt, std::nullopt,
                           "primal " + std::to_string(*vp) + " dual " + std::to_string(*vd) +
                               " complete-optimum " + (complete_optimum ? "yes" : "no") + " matching-dual-optimum " +
                               (matching_dual_optimum ? "yes" : "no"));
        });
    }

    if (cfg.check_solver) {
        const auto result = solve(inst);
        const bool agree = (!result && !vp) || (result && vp && result->value == *vp);
        ledger.record("solver-agreement", agree, [&] {
            return make_cx(inst, result ? std::optional<Board>(result->board) : std::nullopt, std::nullopt,
                           "solver " + (result ? std::to_string(result->value) : std::string("infeasible")) +
                               " oracle " + (vp ? std::to_string(*vp) : std::string("infeasible")));
        });
        if (result) {
            bool ok = result->trace.back() == result->board;
            int last = n * n + 1;
            for (const auto& step : result->trace.steps()) {
                ok = ok && is_primal_feasible(inst, step) && primal_objective(step) < last;
                last = primal_objective(step);
            }
            ledger.record("descent-trace", ok, [&] { return make_cx(inst, result->board, std::nullopt, ""); });
        }
    }
}

Permutation cyclic_transversals(int n)
{
    std::vector<int> slots;
    for (int g = 0; g < n; ++g)
        for (int r = 0; r < n; ++r)
            slots.push_back(r * n + (r + g) % n);
    return Permutation::from_slots(std::move(slots));
}

Permutation random_permutation(int size, std::mt19937_64& rng)
{
    std::vector<int> slots(static_cast<std::size_t>(size));
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);
    return Permutation::from_slots(std::move(slots));
}

std::vector<Given> random_givens(int n, int count, const Board* source, std::mt19937_64& rng)
{
    std::vector<int> cells(static_cast<std::size_t>(n * n));
    std::iota(cells.begin(), cells.end(), 0);
    std::shuffle(cells.begin(), cells.end(), rng);
    cells.resize(static_cast<std::size_t>(count));
    std::sort(cells.begin(), cells.end());
    std::uniform_int_distribution<int> value(1, n);
    std::vector<Given> out;
    for (int c : cells)
        out.push_back({c, source ? (*source)[c].value() : value(rng)});
    return out;
}

}  // namespace

void VerificationLedger::declare(const std::string& id)
{
    entry(id);
}

TheoremTally& VerificationLedger::entry(const std::string& id)
{
    for (auto& t : tallies_)
        if (t.id == id)
            return t;
    tallies_.emplace_back().id = id;
    return tallies_.back();
}

void VerificationLedger::record(const std::string& id, bool ok, const std::function<Counterexample()>& counterexample)
{
    auto& t = entry(id);
    ++t.checked;
    if (!ok) {
        ++t.failed;
        if (!t.counterexample)
            t.counterexample = counterexample();
    }
}

void VerificationLedger::record_passed(const std::string& id, std::uint64_t count)
{
    entry(id).checked += count;
}

const TheoremTally* VerificationLedger::find(const std::string& id) const
{
    for (const auto& t : tallies_)
        if (t.id == id)
            return &t;
    return nullptr;
}

bool VerificationLedger::all_pass() const
{
    return std::all_of(tallies_.begin(), tallies_.end(), [](const TheoremTally& t) { return t.pass(); });
}

void VerificationLedger::merge(const VerificationLedger& other)
{
    for (const auto& t : other.tallies_) {
        auto& mine = entry(t.id);
        mine.checked += t.checked;
        mine.failed += t.failed;
        if (!mine.counterexample && t.counterexample)
            mine.counterexample = t.counterexample;
    }
    notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

std::string VerificationLedger::to_text() const
{
    std::ostringstream os;
    for (const auto& line : notes_)
        os << "# " << line << '\n';
    for (const auto& t : tallies_)
        os << "THEOREM " << t.id << ' ' << (t.pass() ? "PASS" : "FAIL") << " checked=" << t.checked << '\n';
    for (const auto& t : tallies_) {
        if (t.pass() || !t.counterexample)
            continue;
        const auto& cx = *t.counterexample;
        os << "COUNTEREXAMPLE " << t.id << " failed=" << t.failed << '\n' << "instance " << cx.instance << '\n';
        if (cx.board && cx.board->size() > 0)
            os << "board " << board_tokens(*cx.board) << '\n';
        if (cx.certificate)
            os << "certificate " << certificate_tokens(*cx.certificate) << '\n';
        if (!cx.detail.empty())
            os << "detail " << cx.detail << '\n';
        os << "END\n";
    }
    return os.str();
}

std::string instance_line(const PrimalInstance& inst)
{
    std::ostringstream os;
    os << "n=" << inst.n();
    for (int r = 0; r < 3; ++r)
        os << " perm" << r + 1 << '=' << join_ints(inst.perm(r).one_based(), ',');
    os << " givens=";
    bool first = true;
    for (const auto& g : inst.givens()) {
        os << (first ? "" : ",") << g.cell + 1 << ':' << g.value;
        first = false;
    }
    return os.str();
}

std::vector<int> sign_identity_lhs(std::span<const int> p)
{
    const int n = static_cast<int>(p.size());
    const std::vector<ExtInt> x(p.begin(), p.end());
    auto out = pair_scores(n, sgn_vec(pair_differences(x)));
    for (auto& v : out)
        v += n + 1;
    return out;
}

Board reference_board_4x4()
{
    const std::vector<int> rows{3, 4, 1, 2, 2, 1, 3, 4, 1, 2, 4, 3, 4, 3, 2, 1};
    return Board(4, std::vector<ExtInt>(rows.begin(), rows.end()));
}

PrimalInstance uncompletable_instance_4x4()
{
    // r1c1=1, r1c2=2, r2c4=4, r3c3=3: cell r1c3 loses 1,2 (row), 3 (column)
    // and 4 (block).
    return make_standard_primal(4, {{0, 1}, {1, 2}, {7, 4}, {10, 3}});
}

VerifyConfig default_verify_config(int n, std::uint64_t seed)
{
    VerifyConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    std::mt19937_64 rng(seed);
    auto perms = standard_perms(n);
    if (n == 2) {
        cfg.third_groupings = {perms.rows, perms.cols, Permutation::from_slots({0, 3, 1, 2})};
        cfg.given_sets.push_back({});
        for (int a = 0; a < 4; ++a) {
            for (int va = 1; va <= 2; ++va) {
                cfg.given_sets.push_back({{a, va}});
                for (int b = a + 1; b < 4; ++b)
                    for (int vb = 1; vb <= 2; ++vb)
                        cfg.given_sets.push_back({{a, va}, {b, vb}});
            }
        }
    } else if (n == 3) {
        cfg.third_groupings = {cyclic_transversals(3), random_permutation(9, rng)};
        // A valid square for the row/column/transversal groupings, used to draw
        // consistent given sets.
        const std::vector<int> square{1, 2, 3, 3, 1, 2, 2, 3, 1};
        const Board source(3, std::vector<ExtInt>(square.begin(), square.end()));
        cfg.given_sets.push_back({});
        std::uniform_int_distribution<int> size(1, 5);
        for (int s = 0; s < 23; ++s)
            cfg.given_sets.push_back(random_givens(3, size(rng), s % 2 == 0 ? &source : nullptr, rng));
    } else if (n == 4) {
        cfg.third_groupings = {*perms.blocks};
        const Board ref = reference_board_4x4();
        cfg.given_sets.push_back({});
        std::vector<Given> fifteen;
        for (int c = 1; c < 16; ++c)
            fifteen.push_back({c, ref[c].value()});
        cfg.given_sets.push_back(fifteen);
        const auto gap_instance = uncompletable_instance_4x4();
        cfg.given_sets.push_back(std::vector<Given>(gap_instance.givens().begin(), gap_instance.givens().end()));
        std::uniform_int_distribution<int> size(3, 8);
        for (int s = 0; s < 4; ++s)
            cfg.given_sets.push_back(random_givens(4, size(rng), s % 2 == 0 ? &ref : nullptr, rng));
        cfg.sampled_certificates = 20000;
    } else {
        throw std::invalid_argument("default_verify_config: n must be 2, 3 or 4");
    }
    return cfg;
}

VerificationLedger verify_theorems(const VerifyConfig& cfg)
{
    const int n = cfg.n;
    if (n < 2 || n > 4)
        throw std::invalid_argument("verify_theorems: n must be 2, 3 or 4");
    std::mt19937_64 rng(cfg.seed);
    VerificationLedger ledger;
    ledger.note("n=" + std::to_string(n) + " seed=" + std::to_string(cfg.seed) + " groupings=" +
                std::to_string(cfg.third_groupings.size()) + " given-sets=" + std::to_string(cfg.given_sets.size()));
    for (const char* id :
         {"sign-identity", "ones-kernel", "score-bound", "score-parity", "adjointness", "sign-transfer",
          "primalize-range", "dual-enumeration-agreement", "dual-feasible-from-primal",
          "dual-feasible-characterization", "roundtrip-primal-dual-primal", "roundtrip-dual-primal-dual",
          "primal-to-dual-solution", "dual-to-primal-solution", "primal-optimum-characterization",
          "dual-optimum-characterization", "weak-duality", "equal-objectives-imply-zero", "strong-duality",
          "solver-agreement", "descent-trace"})
        ledger.declare(id);
    if (n == 4)
        ledger.note("n=4 is sampled: certificates and partial boards are drawn at random; complete boards are exhaustive");

    const auto perms = standard_perms(n);
    for (const auto& third : cfg.third_groupings) {
        const auto base = make_primal(n, {perms.rows, perms.cols, third}, {});
        const auto dual_set = dual_feasible_set_by_group(base);
        if (dual_set.empty())
            ledger.note("empty dual feasible set for perm3=" + join_ints(third.one_based(), ','));

        std::vector<DualCertificate> certs;
        std::vector<Board> complete_boards;
        if (n <= 3) {
            for_each_certificate(n, [&](const DualCertificate& c) { certs.push_back(c); });
            for_each_complete_board(n, [&](const Board& b) { complete_boards.push_back(b); });
        } else {
            certs = dual_set;
            std::uniform_int_distribution<int> coin(0, 1);
            const int len = n * triangular_size(n);
            for (int s = 0; s < cfg.sampled_certificates; ++s) {
                std::vector<int> signs(static_cast<std::size_t>(len));
                for (auto& v : signs)
                    v = coin(rng) ? 1 : -1;
                certs.emplace_back(n, std::move(signs));
            }
            complete_boards = complete_alldifferent_boards(base, dual_set);
            std::uniform_int_distribution<int> value(1, n);
            for (int s = 0; s < 5000; ++s) {
                std::vector<ExtInt> cells(static_cast<std::size_t>(n * n));
                for (auto& v : cells)
                    v = value(rng);
                complete_boards.emplace_back(n, std::move(cells));
            }
        }
        verify_groupings(cfg, base, certs, dual_set, complete_boards, rng, ledger);

        const auto alldiff = complete_alldifferent_boards(base, dual_set);
        std::vector<Board> extended;
        if (n <= 3)
            for_each_extended_board(n, [&](const Board& b) { extended.push_back(b); });
        for (const auto& givens : cfg.given_sets) {
            const auto inst = make_primal(n, {perms.rows, perms.cols, third}, givens);
            verify_instance(cfg, inst, certs, dual_set, alldiff, extended, rng, ledger);
        }
    }
    return ledger;
}

}  // namespace sdual
