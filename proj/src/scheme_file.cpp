#include "ringstore/scheme_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "ringstore/errors.hpp"

namespace ringstore {

namespace {

constexpr std::string_view kMagic = "RINGSTORE v1";

[[noreturn]] void parse_error(std::size_t line, std::size_t column,
                              const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) +
                                         ", column " + std::to_string(column) +
                                         ": " + what);
}

struct Lines {
  std::vector<std::string_view> lines;

  explicit Lines(std::string_view text) {
    if (text.empty()) parse_error(1, 1, "empty input");
    if (text.back() != '\n') {
      std::size_t line = 1 + static_cast<std::size_t>(
                                 std::count(text.begin(), text.end(), '\n'));
      parse_error(line, text.size() - text.rfind('\n'), "missing final newline");
    }
    std::size_t start = 0;
    while (start < text.size()) {
      const std::size_t end = text.find('\n', start);
      lines.push_back(text.substr(start, end - start));
      start = end + 1;
    }
  }
};

// Parses a base-10 unsigned integer spanning all of `token`.
std::uint64_t parse_uint(std::string_view token, std::size_t line,
                         std::size_t column, std::string_view what) {
  std::uint64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    parse_error(line, column + static_cast<std::size_t>(ptr - first),
                "expected a non-negative integer for " + std::string(what));
  }
  return value;
}

// Splits on single spaces, rejecting leading, trailing or doubled spaces.
// Returns (token, 1-based column) pairs.
std::vector<std::pair<std::string_view, std::size_t>> split_tokens(
    std::string_view line, std::size_t line_no) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(' ', start);
    const auto token = line.substr(start, end == std::string_view::npos
                                              ? std::string_view::npos
                                              : end - start);
    if (token.empty()) parse_error(line_no, start + 1, "unexpected space");
    out.emplace_back(token, start + 1);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

std::string scheme_serialize(const Scheme& s) {
  std::ostringstream out;
  out << kMagic << '\n'
      << "n=" << s.n() << " alpha=" << s.alpha() << " M=" << s.m()
      << " q=" << s.field().p() << '\n'
      << "G=\n";
  for (std::size_t r = 0; r < s.m(); ++r) {
    const auto row = s.g().row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      out << row[c];
    }
    out << '\n';
  }
  return out.str();
}

Scheme scheme_parse(std::string_view text) {
  const Lines in(text);
  const auto& lines = in.lines;
  if (lines.empty() || lines[0] != kMagic) {
    parse_error(1, 1, "expected header '" + std::string(kMagic) + "'");
  }
  if (lines.size() < 3) parse_error(lines.size() + 1, 1, "truncated file");

  const auto params = split_tokens(lines[1], 2);
  constexpr std::string_view keys[] = {"n=", "alpha=", "M=", "q="};
  if (params.size() != 4) {
    parse_error(2, 1, "expected 'n=<int> alpha=<int> M=<int> q=<prime>'");
  }
  std::uint64_t values[4];
  for (int i = 0; i < 4; ++i) {
    const auto [token, column] = params[i];
    if (!token.starts_with(keys[i])) {
      parse_error(2, column, "expected '" + std::string(keys[i]) + "'");
    }
    values[i] = parse_uint(token.substr(keys[i].size()), 2,
                           column + keys[i].size(), keys[i].substr(0, keys[i].size() - 1));
  }
  const auto [n, alpha, m, q] = values;
  if (n == 0 || alpha == 0 || m == 0) {
    parse_error(2, 1, "n, alpha and M must be positive");
  }
  if (q > UINT32_MAX || !is_prime(q)) {
    parse_error(2, params[3].second, "q=" + std::to_string(q) + " is not prime");
  }
  const FieldSpec field(static_cast<std::uint32_t>(q));

  if (lines[2] != "G=") parse_error(3, 1, "expected 'G='");
  if (lines.size() != 3 + m) {
    parse_error(std::min<std::size_t>(lines.size(), 3 + m) + 1, 1,
                "expected exactly " + std::to_string(m) + " matrix rows, found " +
                    std::to_string(lines.size() - 3));
  }
  const std::size_t cols = n * alpha;
  std::vector<Elem> entries;
  entries.reserve(m * cols);
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t line_no = 4 + r;
    const auto tokens = split_tokens(lines[3 + r], line_no);
    if (tokens.size() != cols) {
      parse_error(line_no, 1,
                  "expected " + std::to_string(cols) + " entries, found " +
                      std::to_string(tokens.size()));
    }
    for (const auto& [token, column] : tokens) {
      const auto v = parse_uint(token, line_no, column, "matrix entry");
      if (v >= q) {
        parse_error(line_no, column,
                    "entry " + std::to_string(v) + " not in [0, " +
                        std::to_string(q) + ")");
      }
      entries.push_back(static_cast<Elem>(v));
    }
  }

  try {
    return make_scheme(Matrix(field, m, cols, std::move(entries)), n, alpha);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvariantViolation,
                std::string(to_string(e.code())) + ": " + e.what());
  }
}

Scheme read_scheme_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return scheme_parse(buf.str());
}

void write_scheme_file(const std::filesystem::path& path, const Scheme& s) {
  std::ofstream out(path, std::ios::binary);
  out << scheme_serialize(s);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot write " + path.string());
  }
}

}  // namespace ringstore
