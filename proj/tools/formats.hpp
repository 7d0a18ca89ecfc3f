#pragma once

// Text formats used by the sdual tool.
//
// Puzzle:
//   n=<N>
//   [perm2=<N*N slot->cell entries, 1-based>]
//   [perm3=<N*N slot->cell entries, 1-based>]
//   N lines of N tokens, each 1..N or "."
// For N = 9 the grid may be one 81-character line, and a bare 81-character
// line without header is also accepted. Missing permutation lines default to
// columns and blocks (rows for N = 2); non-square N > 2 needs perm3.
//
// Board: optional "n=<N>" header, then the same grid body.
// Certificate: N lines of s(N) characters from {+,-}, one line per row group.

#include <stdexcept>
#include <string>
#include <string_view>

#include "sdual/problems.hpp"

namespace sdual::cli {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

struct Puzzle {
    PrimalInstance instance;
    Board board;  ///< givens placed, other cells empty
};

Puzzle parse_puzzle(std::string_view text);
std::string emit_puzzle(const PrimalInstance& inst);

Board parse_board(std::string_view text, int n);
std::string emit_board(const Board& b);

DualCertificate parse_certificate(std::string_view text, int n);
std::string emit_certificate(const DualCertificate& c);

}  // namespace sdual::cli
