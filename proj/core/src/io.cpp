#include "segcode/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "segcode/errors.hpp"

namespace segcode::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Splits the input into non-empty, comment-stripped lines of tokens.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<Line> next() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
      Line line{number_, {}};
      std::size_t pos = 0;
      while (pos < raw.size()) {
        const auto start = raw.find_first_not_of(" \t\r", pos);
        if (start == std::string::npos) break;
        const auto end = raw.find_first_of(" \t\r", start);
        line.tokens.push_back(raw.substr(start, end == std::string::npos ? std::string::npos : end - start));
        pos = end == std::string::npos ? raw.size() : end;
      }
      if (!line.tokens.empty()) return line;
    }
    return std::nullopt;
  }

  Line expect(const char* what) {
    auto line = next();
    if (!line) throw ParseError(std::string("unexpected end of input, expected ") + what, number_ + 1);
    return *line;
  }

  void expect_end() {
    if (auto line = next()) throw ParseError("unexpected trailing content", line->number);
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

long parse_int(const std::string& token, std::size_t line) {
  long value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw ParseError("expected an integer, got '" + token + "'", line);
  return value;
}

void expect_tokens(const Line& line, std::size_t count, const char* what) {
  if (line.tokens.size() != count) {
    throw ParseError(std::string("expected ") + what + ", got " + std::to_string(line.tokens.size()) +
                         " fields",
                     line.number);
  }
}

GF2Vector parse_bits(const std::string& token, std::size_t expected_len, std::size_t line) {
  if (token.size() != expected_len) {
    throw ParseError("expected " + std::to_string(expected_len) + " bits, got '" + token + "'", line);
  }
  for (char c : token) {
    if (c != '0' && c != '1') throw ParseError("invalid bit string '" + token + "'", line);
  }
  return GF2Vector::from_string(token);
}

template <class Parse>
auto read_file(const std::filesystem::path& path, Parse parse) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0);
  return parse(in);
}

}  // namespace

Graph parse_graph(std::istream& in) {
  LineReader reader(in);
  const Line header = reader.expect("header 'n m'");
  expect_tokens(header, 2, "header 'n m'");
  const long n = parse_int(header.tokens[0], header.number);
  const long m = parse_int(header.tokens[1], header.number);
  if (n < 1) throw ParseError("vertex count must be at least 1", header.number);
  if (m < 0) throw ParseError("edge count must be nonnegative", header.number);
  Graph g(static_cast<int>(n));
  for (long k = 0; k < m; ++k) {
    const Line line = reader.expect("edge 'i j'");
    expect_tokens(line, 2, "edge 'i j'");
    const long i = parse_int(line.tokens[0], line.number);
    const long j = parse_int(line.tokens[1], line.number);
    if (i < 0 || i >= n || j < 0 || j >= n) {
      throw ParseError("edge endpoint out of range 0.." + std::to_string(n - 1), line.number);
    }
    try {
      g.add_edge(static_cast<int>(i), static_cast<int>(j));
    } catch (const LabelError& e) {
      throw ParseError(e.what(), line.number);
    }
  }
  reader.expect_end();
  return g;
}

CodingSequence parse_coding_sequence(std::istream& in) {
  LineReader reader(in);
  const Line header = reader.expect("header 'n'");
  expect_tokens(header, 1, "header 'n'");
  const long n = parse_int(header.tokens[0], header.number);
  if (n < 1) throw ParseError("vertex count must be at least 1", header.number);
  std::vector<EdgeCode> codes;
  std::optional<SigmaKey> previous;
  while (auto line = reader.next()) {
    expect_tokens(*line, 1, "one code per line");
    GF2Vector bits = parse_bits(line->tokens[0], static_cast<std::size_t>(n - 1), line->number);
    if (!bits.is_segment()) throw ParseError("code '" + line->tokens[0] + "' is not consecutive-ones", line->number);
    EdgeCode code = EdgeCode::from_bits(std::move(bits));
    if (previous && !(*previous < code.key())) {
      throw ParseError("codes must be distinct and in ascending sigma order", line->number);
    }
    previous = code.key();
    codes.push_back(std::move(code));
  }
  return CodingSequence(static_cast<int>(n), std::move(codes));
}

GF2Matrix parse_matrix(std::istream& in) {
  LineReader reader(in);
  const Line header = reader.expect("header 'r m'");
  expect_tokens(header, 2, "header 'r m'");
  const long r = parse_int(header.tokens[0], header.number);
  const long m = parse_int(header.tokens[1], header.number);
  if (r < 0 || m < 0) throw ParseError("matrix dimensions must be nonnegative", header.number);
  std::vector<GF2Vector> rows;
  if (m == 0) {
    rows.assign(static_cast<std::size_t>(r), GF2Vector(0));
  } else {
    for (long i = 0; i < r; ++i) {
      const Line line = reader.expect("matrix row");
      expect_tokens(line, 1, "one matrix row per line");
      rows.push_back(parse_bits(line.tokens[0], static_cast<std::size_t>(m), line.number));
    }
  }
  reader.expect_end();
  return GF2Matrix::from_rows(std::move(rows), static_cast<std::size_t>(m));
}

Graph read_graph(const std::filesystem::path& path) {
  return read_file(path, [](std::istream& in) { return parse_graph(in); });
}

CodingSequence read_coding_sequence(const std::filesystem::path& path) {
  return read_file(path, [](std::istream& in) { return parse_coding_sequence(in); });
}

GF2Matrix read_matrix(const std::filesystem::path& path) {
  return read_file(path, [](std::istream& in) { return parse_matrix(in); });
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.hi << ' ' << e.lo << '\n';
}

void write_coding_sequence(std::ostream& out, const CodingSequence& s, bool with_keys) {
  out << s.n() << '\n';
  for (const auto& c : s.codes()) {
    out << c.bits().to_string();
    if (with_keys) out << "  # (" << c.hi() << ',' << c.lo() << ')';
    out << '\n';
  }
}

void write_matrix(std::ostream& out, const GF2Matrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n' << m.to_string();
}

}  // namespace segcode::io
