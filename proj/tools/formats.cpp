#include "formats.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace sdual::cli {

namespace {

struct Token {
    std::string_view text;
    int column;  // 1-based
};

struct Line {
    int number;  // 1-based
    std::vector<Token> tokens;
};

bool is_space(char c)
{
    return c == ' ' || c == '\t' || c == '\r' || c == ',';
}

// Non-blank lines split on whitespace (and commas).
std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> out;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        const std::string_view raw = text.substr(start, end - start);
        ++number;
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && is_space(raw[i]))
                ++i;
            const std::size_t tok = i;
            while (i < raw.size() && !is_space(raw[i]))
                ++i;
            if (i > tok)
                line.tokens.push_back({raw.substr(tok, i - tok), static_cast<int>(tok) + 1});
        }
        if (!line.tokens.empty())
            out.push_back(std::move(line));
        if (end == text.size())
            break;
        start = end + 1;
    }
    return out;
}

std::optional<int> to_int(std::string_view s)
{
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        return std::nullopt;
    return v;
}

ExtInt cell_token(const Token& t, int line, int n)
{
    if (t.text == ".")
        return kInf;
    const auto v = to_int(t.text);
    if (!v || *v < 1 || *v > n)
        throw ParseError(line, t.column,
                         "cell token '" + std::string(t.text) + "' is not '.' or an integer in 1.." + std::to_string(n));
    return *v;
}

// Header "key=value..." where the value may continue in following tokens.
std::optional<std::string_view> key_value(const Line& line, std::string_view key)
{
    const auto first = line.tokens.front().text;
    if (first.size() < key.size() + 1 || first.substr(0, key.size()) != key || first[key.size()] != '=')
        return std::nullopt;
    return first.substr(key.size() + 1);
}

Permutation parse_perm(const Line& line, std::string_view key, int n)
{
    std::vector<Token> toks;
    const auto head = *key_value(line, key);
    if (!head.empty())
        toks.push_back({head, line.tokens.front().column + static_cast<int>(key.size()) + 1});
    toks.insert(toks.end(), line.tokens.begin() + 1, line.tokens.end());
    if (static_cast<int>(toks.size()) != n * n)
        throw ParseError(line.number, 1,
                         std::string(key) + " needs " + std::to_string(n * n) + " entries, got " +
                             std::to_string(toks.size()));
    std::vector<int> slots;
    for (const auto& t : toks) {
        const auto v = to_int(t.text);
        if (!v)
            throw ParseError(line.number, t.column, std::string(key) + " entry '" + std::string(t.text) + "' is not an integer");
        slots.push_back(*v);
    }
    try {
        return Permutation::from_one_based(slots);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, 1, std::string(key) + ": " + e.what());
    }
}

bool is_char_grid(std::string_view s, int n)
{
    if (n != 9 || s.size() != 81)
        return false;
    for (char c : s)
        if (c != '.' && (c < '1' || c > '9'))
            return false;
    return true;
}

// Grid body starting at lines[from]; either n lines of n tokens or, for
// n = 9, one 81-character line.
std::vector<ExtInt> parse_grid(const std::vector<Line>& lines, std::size_t from, int n, int header_line)
{
    std::vector<ExtInt> cells;
    if (from < lines.size() && lines.size() - from == 1 && lines[from].tokens.size() == 1 &&
        is_char_grid(lines[from].tokens[0].text, n)) {
        const auto& t = lines[from].tokens[0];
        for (char c : t.text)
            cells.push_back(c == '.' ? kInf : ExtInt(c - '0'));
        return cells;
    }
    const std::size_t rows = lines.size() - std::min(from, lines.size());
    if (rows != static_cast<std::size_t>(n)) {
        const int where = rows > static_cast<std::size_t>(n) ? lines[from + static_cast<std::size_t>(n)].number
                                                              : (rows ? lines.back().number : header_line);
        throw ParseError(where, 1,
                         "expected " + std::to_string(n) + " grid rows, got " + std::to_string(rows));
    }
    for (std::size_t r = from; r < lines.size(); ++r) {
        const auto& line = lines[r];
        if (static_cast<int>(line.tokens.size()) != n) {
            const int col = static_cast<int>(line.tokens.size()) > n ? line.tokens[static_cast<std::size_t>(n)].column
                                                                      : line.tokens.back().column;
            throw ParseError(line.number, col,
                             "expected " + std::to_string(n) + " tokens, got " + std::to_string(line.tokens.size()));
        }
        for (const auto& t : line.tokens)
            cells.push_back(cell_token(t, line.number, n));
    }
    return cells;
}

int parse_header(const Line& line)
{
    const auto v = key_value(line, "n");
    if (!v || line.tokens.size() != 1)
        throw ParseError(line.number, 1, "expected header 'n=<N>'");
    const auto n = to_int(*v);
    if (!n || *n < 2 || *n > 64)
        throw ParseError(line.number, 3, "board size must be an integer in 2..64");
    return *n;
}

std::string join(const std::vector<int>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line), column_(column)
{
}

Puzzle parse_puzzle(std::string_view text)
{
    const auto lines = split_lines(text);
    if (lines.empty())
        throw ParseError(1, 1, "empty puzzle");

    int n = 9;
    std::size_t next = 0;
    std::optional<Permutation> perm2, perm3;
    const bool bare = lines.size() == 1 && lines[0].tokens.size() == 1 && is_char_grid(lines[0].tokens[0].text, 9);
    if (!bare) {
        n = parse_header(lines[0]);
        next = 1;
        while (next < lines.size()) {
            if (key_value(lines[next], "perm2")) {
                if (perm2)
                    throw ParseError(lines[next].number, 1, "duplicate perm2 line");
                perm2 = parse_perm(lines[next], "perm2", n);
            } else if (key_value(lines[next], "perm3")) {
                if (perm3)
                    throw ParseError(lines[next].number, 1, "duplicate perm3 line");
                perm3 = parse_perm(lines[next], "perm3", n);
            } else {
                break;
            }
            ++next;
        }
    }

    auto std_perms = standard_perms(n);
    if (!perm3)
        perm3 = default_third_perm(n);
    if (!perm3)
        throw ParseError(1, 1, "n=" + std::to_string(n) + " is not a perfect square; a perm3 line is required");

    auto cells = parse_grid(lines, next, n, lines[0].number);
    std::vector<Given> givens;
    for (int c = 0; c < n * n; ++c)
        if (cells[static_cast<std::size_t>(c)].is_finite())
            givens.push_back({c, cells[static_cast<std::size_t>(c)].value()});

    auto inst = make_primal(n, {std::move(std_perms.rows), perm2 ? std::move(*perm2) : std::move(std_perms.cols),
                                std::move(*perm3)},
                            std::move(givens));
    return Puzzle{std::move(inst), Board(n, std::move(cells))};
}

std::string emit_puzzle(const PrimalInstance& inst)
{
    const int n = inst.n();
    std::ostringstream os;
    os << "n=" << n;
    if (inst.perm(1) != standard_perms(n).cols)
        os << "\nperm2=" << join(inst.perm(1).one_based());
    const auto third = default_third_perm(n);
    if (!third || inst.perm(2) != *third)
        os << "\nperm3=" << join(inst.perm(2).one_based());
    os << '\n' << emit_board(inst.givens_board());
    return os.str();
}

Board parse_board(std::string_view text, int n)
{
    const auto lines = split_lines(text);
    if (lines.empty())
        throw ParseError(1, 1, "empty board");
    std::size_t next = 0;
    if (key_value(lines[0], "n")) {
        const int declared = parse_header(lines[0]);
        if (declared != n)
            throw ParseError(lines[0].number, 3,
                             "board declares n=" + std::to_string(declared) + ", puzzle has n=" + std::to_string(n));
        next = 1;
    }
    return Board(n, parse_grid(lines, next, n, lines[0].number));
}

std::string emit_board(const Board& b)
{
    std::string out;
    const int n = b.n();
    for (int r = 0; r < n; ++r) {
        if (r)
            out += '\n';
        for (int c = 0; c < n; ++c) {
            if (c)
                out += ' ';
            out += to_string(b[r * n + c]);
        }
    }
    return out;
}

DualCertificate parse_certificate(std::string_view text, int n)
{
    std::vector<int> signs;
    int line = 1, column = 0;
    for (char ch : text) {
        ++column;
        if (ch == '\n') {
            ++line;
            column = 0;
        } else if (ch == '+') {
            signs.push_back(1);
        } else if (ch == '-') {
            signs.push_back(-1);
        } else if (ch != ' ' && ch != '\t' && ch != '\r') {
            throw ParseError(line, column, std::string("unexpected character '") + ch + "' in certificate");
        }
    }
    const int expected = n * triangular_size(n);
    if (static_cast<int>(signs.size()) != expected)
        throw ParseError(line, column,
                         "certificate needs " + std::to_string(expected) + " signs, got " + std::to_string(signs.size()));
    return DualCertificate(n, std::move(signs));
}

std::string emit_certificate(const DualCertificate& c)
{
    const int n = c.n();
    const int s = triangular_size(n);
    std::string out;
    for (int g = 0; g < n; ++g) {
        if (g)
            out += '\n';
        for (int k = 0; k < s; ++k)
            out += c.signs()[static_cast<std::size_t>(g * s + k)] > 0 ? '+' : '-';
    }
    return out;
}

}  // namespace sdual::cli
