#include "cuspcalc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>

#include "cuspcalc/error.hpp"

namespace cuspcalc {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based column of the first character
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

[[noreturn]] void fail(std::size_t line_no, std::size_t column, const std::string& msg) {
  throw calc_error(errc::parse_error, "line " + std::to_string(line_no) + ", column " +
                                          std::to_string(column) + ": " + msg);
}

// Returns the value of a `key=value` token, enforcing the expected key.
std::string expect_kv(const Token& tok, const std::string& key, std::size_t line_no) {
  const std::size_t eq = tok.text.find('=');
  if (eq == std::string::npos) {
    fail(line_no, tok.column, "expected " + key + "=<value>, got '" + tok.text + "'");
  }
  const std::string got_key = tok.text.substr(0, eq);
  if (got_key != key) {
    fail(line_no, tok.column, "expected key '" + key + "', got '" + got_key + "'");
  }
  std::string value = tok.text.substr(eq + 1);
  if (value.empty()) fail(line_no, tok.column, "empty value for key '" + key + "'");
  return value;
}

long long expect_int(const Token& tok, const std::string& key, std::size_t line_no) {
  const std::string value = expect_kv(tok, key, line_no);
  long long out = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end) {
    fail(line_no, tok.column, "expected integer for key '" + key + "', got '" + value + "'");
  }
  return out;
}

Rational expect_rational(const Token& tok, const std::string& key, std::size_t line_no) {
  const std::string value = expect_kv(tok, key, line_no);
  try {
    return Rational::parse(value);
  } catch (const calc_error&) {
    fail(line_no, tok.column, "expected rational for key '" + key + "', got '" + value + "'");
  }
}

void expect_count(const std::vector<Token>& tokens, std::size_t want, std::size_t line_no,
                  const std::string& what) {
  if (tokens.size() != want) {
    const std::size_t column = tokens.size() > want ? tokens[want].column : 1;
    fail(line_no, column,
         what + " takes exactly " + std::to_string(want - 1) + " fields, got " +
             std::to_string(tokens.size() - 1));
  }
}

}  // namespace

std::vector<CuspidalSymbol> parse_symbol_lines(std::istream& in) {
  std::vector<CuspidalSymbol> batch;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0].text != "symbol") {
      fail(line_no, tokens[0].column, "expected 'symbol', got '" + tokens[0].text + "'");
    }
    expect_count(tokens, 5, line_no, "'symbol'");
    CuspidalSymbol sym;
    sym.name = tokens[1].text;
    sym.dim = expect_int(tokens[2], "dim", line_no);
    const std::string type = expect_kv(tokens[3], "type", line_no);
    if (type == "symplectic") {
      sym.sd_type = SelfDualType::Symplectic;
    } else if (type == "orthogonal") {
      sym.sd_type = SelfDualType::Orthogonal;
    } else if (type == "none") {
      sym.sd_type = SelfDualType::NotSelfDual;
    } else {
      fail(line_no, tokens[3].column,
           "type must be symplectic, orthogonal, or none; got '" + type + "'");
    }
    sym.dual = expect_kv(tokens[4], "dual", line_no);
    batch.push_back(std::move(sym));
  }
  return batch;
}

AParam parse_param_lines(std::istream& in, const SymbolTable& table) {
  AParam p;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& kind = tokens[0].text;
    if (kind != "block" && kind != "sblock") {
      fail(line_no, tokens[0].column, "expected 'block' or 'sblock', got '" + kind + "'");
    }
    ABlock blk;
    if (kind == "block") {
      expect_count(tokens, 5, line_no, "'block'");
      blk.sigma = expect_kv(tokens[1], "sigma", line_no);
      blk.bprime = expect_int(tokens[2], "bprime", line_no);
      blk.b = expect_int(tokens[3], "b", line_no);
      blk.x = expect_rational(tokens[4], "x", line_no);
    } else {
      expect_count(tokens, 4, line_no, "'sblock'");
      blk.sigma = expect_kv(tokens[1], "sigma", line_no);
      blk.bprime = 1;
      blk.b = expect_int(tokens[2], "a", line_no);
      blk.x = expect_rational(tokens[3], "x", line_no);
    }
    if (!table.has(blk.sigma)) {
      fail(line_no, tokens[1].column, "unknown symbol '" + blk.sigma + "'");
    }
    ms_add(p.blocks, make_ablock(blk.sigma, blk.bprime, blk.b, blk.x), 1);
  }
  return p;
}

std::string format_block(const ABlock& blk) {
  return "block sigma=" + blk.sigma + " bprime=" + std::to_string(blk.bprime) +
         " b=" + std::to_string(blk.b) + " x=" + blk.x.str();
}

std::string format_sblock(const SpehBlock& blk) {
  return "sblock sigma=" + blk.sigma + " a=" + std::to_string(blk.a) + " x=" + blk.x.str();
}

namespace {

template <class Param, class Formatter>
std::string format_lines(const Param& p, Formatter&& fmt) {
  std::vector<std::string> lines;
  for (const auto& [blk, mult] : p.blocks) {
    for (long long i = 0; i < mult; ++i) lines.push_back(fmt(blk));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

}  // namespace

std::string format_param(const AParam& p) { return format_lines(p, format_block); }

std::string format_param(const SpehParam& e) { return format_lines(e, format_sblock); }

}  // namespace cuspcalc
