#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "formats.hpp"
#include "sdual/duality.hpp"
#include "sdual/oracle.hpp"
#include "sdual/solver.hpp"
#include "sdual/verify.hpp"

namespace sdual::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path)
{
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Puzzle load_puzzle(const std::string& path)
{
    try {
        return parse_puzzle(read_text(path));
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

const char* yes_no(bool b)
{
    return b ? "true" : "false";
}

int cmd_solve(const std::string& path, bool trace, std::ostream& out, std::ostream& err)
{
    const auto puzzle = load_puzzle(path);
    const auto result = solve(puzzle.instance);
    if (!result) {
        err << "infeasible: the givens conflict, no primal feasible board exists\n";
        out << "primal_value=INFEASIBLE\n";
        return kInfeasible;
    }
    out << "primal_value=" << result->value << '\n' << emit_board(result->board) << '\n';
    if (trace) {
        int step = 0;
        for (const auto& b : result->trace.steps())
            out << "trace_step=" << ++step << " empty=" << primal_objective(b) << '\n' << emit_board(b) << '\n';
    }
    if (result->value > 0)
        err << "note: no completion exists; the board shown is the first minimizer in search order, "
               "others may exist\n";
    err << "nodes=" << result->nodes << '\n';
    return kSuccess;
}

int cmd_check_primal(const std::string& puzzle_path, const std::string& board_path, std::ostream& out,
                     std::ostream& err)
{
    const auto puzzle = load_puzzle(puzzle_path);
    Board board;
    try {
        board = parse_board(read_text(board_path), puzzle.instance.n());
    } catch (const ParseError& e) {
        throw UsageError(board_path + ": " + e.what());
    }
    const auto check = check_primal(puzzle.instance, board);
    const bool solution = check.feasible && board.complete();
    out << "feasible=" << yes_no(check.feasible) << '\n'
        << "empty=" << primal_objective(board) << '\n'
        << "solution=" << yes_no(solution) << '\n';
    for (const auto& reason : check.reasons)
        err << reason << '\n';
    return solution ? kSuccess : kCheckFailed;
}

DualCertificate load_certificate(const std::string& path, int n)
{
    try {
        return parse_certificate(read_text(path), n);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

int cmd_check_dual(const std::string& puzzle_path, const std::string& cert_path, std::ostream& out,
                   std::ostream&)
{
    const auto puzzle = load_puzzle(puzzle_path);
    const auto cert = load_certificate(cert_path, puzzle.instance.n());
    const bool feasible = is_dual_feasible(puzzle.instance, cert);
    const int objective = dual_objective(puzzle.instance, cert);
    const bool solution = feasible && objective == 0;
    out << "feasible=" << yes_no(feasible) << '\n'
        << "dual_objective=" << objective << '\n'
        << "solution=" << yes_no(solution) << '\n';
    return solution ? kSuccess : kCheckFailed;
}

int cmd_dualize(const std::string& path, std::ostream& out, std::ostream& err)
{
    const auto puzzle = load_puzzle(path);
    DualCertificate cert;
    try {
        cert = primal_to_dual(puzzle.instance, puzzle.board);
    } catch (const std::domain_error& e) {
        err << "cannot dualize: " << e.what() << '\n';
        return kCheckFailed;
    }
    out << emit_certificate(cert) << '\n';
    if (!solves_dual(puzzle.instance, cert))
        err << "note: the board does not solve the primal problem, so the certificate is not a dual solution\n";
    return kSuccess;
}

int cmd_primalize(const std::string& puzzle_path, const std::string& cert_path, std::ostream& out,
                  std::ostream& err)
{
    const auto puzzle = load_puzzle(puzzle_path);
    const auto cert = load_certificate(cert_path, puzzle.instance.n());
    const auto result = dual_to_primal(puzzle.instance, cert);
    out << emit_board(result.board) << '\n';
    err << "certificate_feasible=" << yes_no(result.certificate_feasible) << '\n'
        << "certificate_solves=" << yes_no(result.certificate_solves) << '\n';
    return solves_primal(puzzle.instance, result.board) ? kSuccess : kCheckFailed;
}

int cmd_gap(const std::string& path, std::ostream& out, std::ostream&)
{
    const auto puzzle = load_puzzle(path);
    std::optional<int> vp, vd;
    try {
        vp = exact_primal_value(puzzle.instance);
        vd = exact_dual_value(puzzle.instance);
    } catch (const CapabilityError& e) {
        throw UsageError(e.what());
    }
    const auto report = gap_report(vp, vd);
    out << report.describe() << '\n';
    return report.gap() ? kSuccess : kInfeasible;
}

int cmd_verify(int n, std::uint64_t seed, std::ostream& out)
{
    const auto ledger = verify_theorems(default_verify_config(n, seed));
    out << ledger.to_text();
    return ledger.all_pass() ? kSuccess : kCheckFailed;
}

int cmd_dump_matrix(int n, int which, std::ostream& out)
{
    auto perms = standard_perms(n);
    std::optional<Permutation> perm;
    switch (which) {
    case 1: perm = perms.rows; break;
    case 2: perm = perms.cols; break;
    default: perm = default_third_perm(n); break;
    }
    if (!perm)
        throw UsageError("n=" + std::to_string(n) + " has no default third grouping");
    out << dump_matrix(GroupSystem(n, *perm)) << '\n';
    return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Primal/dual constraint models for generalized Sudoku", "sdual"};
    app.require_subcommand(1);

    std::string puzzle_path, second_path;
    bool trace = false;
    int n = 0, which = 1;
    std::uint64_t seed = 20240611;

    auto* solve_cmd = app.add_subcommand("solve", "Minimize the number of empty cells");
    solve_cmd->add_option("puzzle", puzzle_path, "Puzzle file ('-' for stdin)")->required();
    solve_cmd->add_flag("--trace", trace, "Print the descent trace");

    auto* check_primal_cmd = app.add_subcommand("check-primal", "Check a board against a puzzle");
    check_primal_cmd->add_option("puzzle", puzzle_path)->required();
    check_primal_cmd->add_option("board", second_path)->required();

    auto* check_dual_cmd = app.add_subcommand("check-dual", "Check a certificate against a puzzle");
    check_dual_cmd->add_option("puzzle", puzzle_path)->required();
    check_dual_cmd->add_option("certificate", second_path)->required();

    auto* dualize_cmd = app.add_subcommand("dualize", "Certificate of a complete board");
    dualize_cmd->add_option("puzzle", puzzle_path, "Puzzle file with every cell filled")->required();

    auto* primalize_cmd = app.add_subcommand("primalize", "Board of a certificate");
    primalize_cmd->add_option("puzzle", puzzle_path)->required();
    primalize_cmd->add_option("certificate", second_path)->required();

    auto* gap_cmd = app.add_subcommand("gap", "Exact primal and dual values and the duality gap (n <= 4)");
    gap_cmd->add_option("puzzle", puzzle_path)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run the theorem ledger");
    verify_cmd->add_option("--n", n, "Board size")->required()->check(CLI::Range(2, 4));
    verify_cmd->add_option("--seed", seed, "Sampling seed");

    auto* dump_cmd = app.add_subcommand("dump-matrix", "Print a pair-difference system densely");
    dump_cmd->add_option("--n", n, "Board size")->required()->check(CLI::Range(2, 64));
    dump_cmd->add_option("--perm", which, "Grouping: 1 rows, 2 columns, 3 blocks")->check(CLI::Range(1, 3));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (solve_cmd->parsed())
            return cmd_solve(puzzle_path, trace, out, err);
        if (check_primal_cmd->parsed())
            return cmd_check_primal(puzzle_path, second_path, out, err);
        if (check_dual_cmd->parsed())
            return cmd_check_dual(puzzle_path, second_path, out, err);
        if (dualize_cmd->parsed())
            return cmd_dualize(puzzle_path, out, err);
        if (primalize_cmd->parsed())
            return cmd_primalize(puzzle_path, second_path, out, err);
        if (gap_cmd->parsed())
            return cmd_gap(puzzle_path, out, err);
        if (verify_cmd->parsed())
            return cmd_verify(n, seed, out);
        if (dump_cmd->parsed())
            return cmd_dump_matrix(n, which, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace sdual::cli
