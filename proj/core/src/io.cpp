#include "tourney/io.hpp"

#include <fstream>
#include <sstream>

#include "tourney/error.hpp"
#include "tourney/paper36.hpp"

namespace tourney {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column_, what); }

  void expect_newline() {
    if (at_end()) fail("missing newline at end of line");
    if (peek() != '\n') fail(std::string("unexpected character '") + printable(peek()) + "'");
    advance();
  }

  static std::string printable(char c) {
    if (c == '\r') return "\\r";
    if (c == '\t') return "\\t";
    if (c == ' ') return "space";
    return std::string(1, c);
  }

  std::size_t line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

Tournament parse_tournament(std::string_view text) {
  Cursor cur(text);
  if (cur.at_end()) cur.fail("empty input; expected the order on line 1");
  std::size_t n = 0;
  std::size_t digits = 0;
  while (!cur.at_end() && cur.peek() >= '0' && cur.peek() <= '9') {
    if (n > kMaxOrder) cur.fail("order exceeds 64");
    n = n * 10 + static_cast<std::size_t>(cur.peek() - '0');
    ++digits;
    cur.advance();
  }
  if (digits == 0) {
    if (cur.at_end()) cur.fail("expected a decimal order");
    cur.fail(std::string("expected a decimal order, found '") + Cursor::printable(cur.peek()) + "'");
  }
  if (n == 0) throw ParseError(1, 1, "order must be positive");
  if (n > kMaxOrder) throw ParseError(1, 1, "order exceeds 64");
  cur.expect_newline();

  std::vector<Mask> rows(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (cur.at_end()) cur.fail("missing row " + std::to_string(x) + " of " + std::to_string(n));
    for (std::size_t y = 0; y < n; ++y) {
      if (cur.at_end()) cur.fail("row ends after " + std::to_string(y) + " of " + std::to_string(n) + " characters");
      const char c = cur.peek();
      if (c == '\n') cur.fail("row has " + std::to_string(y) + " characters, expected " + std::to_string(n));
      if (c != '0' && c != '1') cur.fail(std::string("expected '0' or '1', found '") + Cursor::printable(c) + "'");
      if (c == '1') rows[x] |= bit(y);
      cur.advance();
    }
    cur.expect_newline();
  }
  if (!cur.at_end()) cur.fail("unexpected content after row " + std::to_string(n));
  return Tournament::from_dominion_masks(std::move(rows));
}

std::string format_tournament(const Tournament& t) {
  const std::size_t n = t.order();
  std::string out = std::to_string(n) + "\n";
  out.reserve(out.size() + n * (n + 1));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) out += t.dominates(x, y) ? '1' : '0';
    out += '\n';
  }
  return out;
}

Tournament read_tournament(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tournament(buf.str());
}

void write_tournament(const Tournament& t, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_tournament(t);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string export_dot(const Tournament& t, const DotOptions& opts) {
  const std::size_t n = t.order();
  if (!opts.labels.empty() && opts.labels.size() != n) {
    throw std::invalid_argument("export_dot: need one label per alternative");
  }
  if (opts.paper_clusters && n != paper36::kOrder) {
    throw std::invalid_argument("export_dot: clusters need an order-36 tournament");
  }
  std::ostringstream dot;
  dot << "digraph tournament {\n";
  auto node = [&](std::size_t x, const std::string& indent) {
    dot << indent << x;
    if (!opts.labels.empty()) dot << " [label=\"" << opts.labels[x] << "\"]";
    dot << ";\n";
  };
  if (opts.paper_clusters) {
    for (int i = 0; i <= 3; ++i) {
      dot << "  subgraph cluster_D" << i << " {\n    label=\"Delta^" << i << "\";\n";
      for (int j = 1; j <= 3; ++j) {
        dot << "    subgraph cluster_D" << i << "_" << j << " {\n      label=\"Delta^" << i << "_" << j << "\";\n";
        for (std::size_t x : paper36::triangle(i, j).members()) node(x, "      ");
        dot << "    }\n";
      }
      dot << "  }\n";
    }
  } else {
    for (std::size_t x = 0; x < n; ++x) node(x, "  ");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for_each_bit(t.dominion_mask(x), [&](std::size_t y) { dot << "  " << x << " -> " << y << ";\n"; });
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace tourney
