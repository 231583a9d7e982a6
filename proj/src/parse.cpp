#include "ncreal/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ncreal {

namespace {

enum class Tok {
  Plus, Minus, Star, LParen, RParen, LBrack, RBrack,
  Comma, Semi, Caret, Slash, Equals,
  Int, Var,     // x<digits>, 1-based
  PlainX,       // bare commutative x
  UpperX,       // X<digits>, point-file matrix name
  NameV,        // v, point-file vector name
  End
};

struct Token {
  Tok kind;
  SourceSpan span;
  BigInt value;     // Int: the number; Var/UpperX: the index
  bool tight = false; // Star: no whitespace after a var or ')'
};

[[noreturn]] void fail(SourceSpan span, const std::string& msg) {
  throw ParseError(ParseDiagnostic{span, msg}, msg);
}

std::vector<Token> tokenize(const std::string& text, std::size_t base) {
  std::vector<Token> toks;
  std::size_t i = 0;
  const std::size_t n = text.size();
  bool gap = true; // whitespace (or start) seen since the previous token
  while (i < n) {
    char c = text[i];
    if (c == '#') break; // comment to end of line/input
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; gap = true; continue; }
    std::size_t start = i;
    auto push = [&](Tok k, BigInt v = 0, bool tight = false) {
      toks.push_back(Token{k, {base + start, base + i}, std::move(v), tight});
      gap = false;
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      BigInt v(text.substr(i, j - i));
      i = j;
      push(Tok::Int, v);
      continue;
    }
    if (c == 'x') {
      std::size_t j = i + 1;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1) { ++i; push(Tok::PlainX); continue; }
      BigInt v(text.substr(i + 1, j - i - 1));
      i = j;
      if (v < 1) fail({base + start, base + i}, "variable indices start at 1");
      push(Tok::Var, v);
      continue;
    }
    if (c == 'X') {
      std::size_t j = i + 1;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1) fail({base + start, base + i + 1}, "expected digits after 'X'");
      BigInt v(text.substr(i + 1, j - i - 1));
      i = j;
      if (v < 1) fail({base + start, base + i}, "matrix indices start at 1");
      push(Tok::UpperX, v);
      continue;
    }
    if (c == 'v') { ++i; push(Tok::NameV); continue; }
    ++i;
    switch (c) {
      case '+': push(Tok::Plus); break;
      case '-': push(Tok::Minus); break;
      case '*': {
        bool tight = !gap && !toks.empty() &&
                     (toks.back().kind == Tok::Var || toks.back().kind == Tok::RParen);
        push(Tok::Star, 0, tight);
        break;
      }
      case '(': push(Tok::LParen); break;
      case ')': push(Tok::RParen); break;
      case '[': push(Tok::LBrack); break;
      case ']': push(Tok::RBrack); break;
      case ',': push(Tok::Comma); break;
      case ';': push(Tok::Semi); break;
      case '^': push(Tok::Caret); break;
      case '/': push(Tok::Slash); break;
      case '=': push(Tok::Equals); break;
      default:
        fail({base + start, base + i}, std::string("unexpected character '") + c + "'");
    }
  }
  toks.push_back(Token{Tok::End, {base + n, base + n}, 0, false});
  return toks;
}

struct Cursor {
  const std::vector<Token>* toks;
  std::size_t pos = 0;
  const Token& peek() const { return (*toks)[pos]; }
  const Token& next() { return (*toks)[pos++]; }
  bool accept(Tok k) {
    if (peek().kind == k) { ++pos; return true; }
    return false;
  }
  void expect(Tok k, const std::string& what) {
    if (!accept(k)) fail(peek().span, "expected " + what);
  }
};

Rational parse_coef(Cursor& cur) {
  const Token& numTok = cur.next(); // Tok::Int, checked by caller
  BigInt num = numTok.value;
  if (cur.peek().kind == Tok::Slash) {
    cur.next();
    if (cur.peek().kind != Tok::Int) fail(cur.peek().span, "expected denominator digits after '/'");
    BigInt den = cur.next().value;
    if (den == 0) fail(numTok.span, "zero denominator");
    return Rational(num, den);
  }
  return Rational(num);
}

// --- noncommutative polynomial grammar ------------------------------------

NcPoly parse_nc_expr(Cursor& cur);

bool starts_nc_factor(Tok k) { return k == Tok::Var || k == Tok::LParen; }

NcPoly parse_nc_factor(Cursor& cur) {
  const Token& t = cur.next();
  if (t.kind == Tok::Var) {
    bool starred = cur.peek().kind == Tok::Star && cur.peek().tight;
    if (starred) cur.next();
    return NcPoly::variable(static_cast<int>(t.value), starred);
  }
  if (t.kind == Tok::LParen) {
    NcPoly inner = parse_nc_expr(cur);
    cur.expect(Tok::RParen, "')'");
    if (cur.peek().kind == Tok::Star && cur.peek().tight) {
      cur.next();
      return inner.adjoint();
    }
    return inner;
  }
  fail(t.span, "expected a variable or '('");
}

NcPoly parse_nc_term(Cursor& cur) {
  Rational coef = 1;
  bool sawCoef = false;
  if (cur.peek().kind == Tok::Int) {
    coef = parse_coef(cur);
    sawCoef = true;
    if (cur.peek().kind == Tok::Star && !cur.peek().tight) cur.next(); // "3 * x1"
  }
  NcPoly prod = NcPoly::one();
  bool sawFactor = false;
  while (true) {
    if (starts_nc_factor(cur.peek().kind)) {
      prod *= parse_nc_factor(cur);
      sawFactor = true;
      continue;
    }
    if (cur.peek().kind == Tok::Star && !cur.peek().tight) {
      const Token& star = cur.next(); // multiplication separator
      if (!starts_nc_factor(cur.peek().kind)) fail(star.span, "expected a factor after '*'");
      continue;
    }
    break;
  }
  if (!sawCoef && !sawFactor) fail(cur.peek().span, "expected a term");
  return coef * prod;
}

NcPoly parse_nc_expr(Cursor& cur) {
  NcPoly acc;
  bool negate = false;
  if (cur.accept(Tok::Minus)) negate = true;
  else cur.accept(Tok::Plus);
  NcPoly t = parse_nc_term(cur);
  acc = negate ? -t : t;
  while (true) {
    if (cur.accept(Tok::Plus)) acc += parse_nc_term(cur);
    else if (cur.accept(Tok::Minus)) acc -= parse_nc_term(cur);
    else break;
  }
  return acc;
}

// --- univariate grammar ---------------------------------------------------

UniPoly parse_uni_expr(Cursor& cur);

bool starts_uni_factor(Tok k) { return k == Tok::PlainX || k == Tok::LParen; }

UniPoly parse_uni_power(Cursor& cur, UniPoly base) {
  if (cur.accept(Tok::Caret)) {
    if (cur.peek().kind != Tok::Int) fail(cur.peek().span, "expected exponent digits after '^'");
    BigInt e = cur.next().value;
    UniPoly out = UniPoly::constant(1);
    for (BigInt i = 0; i < e; ++i) out = out * base;
    return out;
  }
  return base;
}

UniPoly parse_uni_factor(Cursor& cur) {
  const Token& t = cur.next();
  if (t.kind == Tok::PlainX) return parse_uni_power(cur, UniPoly::x());
  if (t.kind == Tok::LParen) {
    UniPoly inner = parse_uni_expr(cur);
    cur.expect(Tok::RParen, "')'");
    return parse_uni_power(cur, inner);
  }
  if (t.kind == Tok::Var)
    fail(t.span, "univariate input uses plain 'x' (no index)");
  fail(t.span, "expected 'x' or '('");
}

UniPoly parse_uni_term(Cursor& cur) {
  Rational coef = 1;
  bool sawCoef = false;
  if (cur.peek().kind == Tok::Int) {
    coef = parse_coef(cur);
    sawCoef = true;
    if (cur.peek().kind == Tok::Star) cur.next();
  }
  UniPoly prod = UniPoly::constant(1);
  bool sawFactor = false;
  while (true) {
    if (starts_uni_factor(cur.peek().kind)) {
      prod = prod * parse_uni_factor(cur);
      sawFactor = true;
      continue;
    }
    if (cur.peek().kind == Tok::Star) {
      const Token& star = cur.next();
      if (!starts_uni_factor(cur.peek().kind)) fail(star.span, "expected a factor after '*'");
      continue;
    }
    break;
  }
  if (!sawCoef && !sawFactor) fail(cur.peek().span, "expected a term");
  return coef * prod;
}

UniPoly parse_uni_expr(Cursor& cur) {
  bool negate = cur.accept(Tok::Minus);
  if (!negate) cur.accept(Tok::Plus);
  UniPoly t = parse_uni_term(cur);
  UniPoly acc = negate ? -t : t;
  while (true) {
    if (cur.accept(Tok::Plus)) acc = acc + parse_uni_term(cur);
    else if (cur.accept(Tok::Minus)) acc = acc - parse_uni_term(cur);
    else break;
  }
  return acc;
}

UniPolyMatrix parse_matrix_tokens(Cursor& cur) {
  cur.expect(Tok::LBrack, "'['");
  std::vector<std::vector<UniPoly>> rows(1);
  while (true) {
    rows.back().push_back(parse_uni_expr(cur));
    if (cur.accept(Tok::Comma)) continue;
    if (cur.accept(Tok::Semi)) { rows.emplace_back(); continue; }
    const Token& t = cur.peek();
    cur.expect(Tok::RBrack, "',' ';' or ']'");
    (void)t;
    break;
  }
  std::size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols)
      fail(cur.peek().span, "ragged matrix: rows have differing lengths");
  UniPolyMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

// Splits into lines, remembering each line's base offset.
std::vector<std::pair<std::string, std::size_t>> split_lines(const std::string& text) {
  std::vector<std::pair<std::string, std::size_t>> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      lines.push_back({text.substr(start, i - start), start});
      start = i + 1;
    }
  }
  return lines;
}

bool blank_tokens(const std::vector<Token>& toks) { return toks.size() == 1; }

} // namespace

NcPoly parse_poly(const std::string& text) {
  auto toks = tokenize(text, 0);
  if (blank_tokens(toks)) fail(toks.back().span, "empty polynomial");
  Cursor cur{&toks};
  NcPoly p = parse_nc_expr(cur);
  if (cur.peek().kind != Tok::End) fail(cur.peek().span, "unexpected trailing input");
  return p;
}

std::vector<NcPoly> parse_poly_file(const std::string& text) {
  std::vector<NcPoly> out;
  for (const auto& [line, base] : split_lines(text)) {
    auto toks = tokenize(line, base);
    if (blank_tokens(toks)) continue;
    Cursor cur{&toks};
    out.push_back(parse_nc_expr(cur));
    if (cur.peek().kind != Tok::End) fail(cur.peek().span, "unexpected trailing input");
  }
  return out;
}

UniPoly parse_unipoly(const std::string& text) {
  auto toks = tokenize(text, 0);
  if (blank_tokens(toks)) fail(toks.back().span, "empty polynomial");
  Cursor cur{&toks};
  UniPoly p = parse_uni_expr(cur);
  if (cur.peek().kind != Tok::End) fail(cur.peek().span, "unexpected trailing input");
  return p;
}

UniPolyMatrix parse_unipoly_matrix(const std::string& text) {
  auto toks = tokenize(text, 0);
  if (blank_tokens(toks)) fail(toks.back().span, "empty matrix");
  Cursor cur{&toks};
  UniPolyMatrix m = parse_matrix_tokens(cur);
  if (cur.peek().kind != Tok::End) fail(cur.peek().span, "unexpected trailing input");
  return m;
}

std::vector<UniPolyMatrix> parse_unipoly_matrix_file(const std::string& text) {
  std::vector<UniPolyMatrix> out;
  for (const auto& [line, base] : split_lines(text)) {
    auto toks = tokenize(line, base);
    if (blank_tokens(toks)) continue;
    Cursor cur{&toks};
    out.push_back(parse_matrix_tokens(cur));
    if (cur.peek().kind != Tok::End) fail(cur.peek().span, "unexpected trailing input");
  }
  return out;
}

MatrixPoint parse_point_file(const std::string& text) {
  std::map<int, QMatrix> mats;
  std::vector<Rational> vec;
  bool sawVec = false;
  auto to_rational_matrix = [](const UniPolyMatrix& m, SourceSpan span) {
    QMatrix q(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j) {
        const UniPoly& e = m.at(i, j);
        if (e.degree() > 0) fail(span, "point entries must be rational constants");
        q.at(i, j) = e.coeff(0);
      }
    return q;
  };
  for (const auto& [line, base] : split_lines(text)) {
    auto toks = tokenize(line, base);
    if (blank_tokens(toks)) continue;
    Cursor cur{&toks};
    const Token& name = cur.next();
    if (name.kind == Tok::UpperX) {
      cur.expect(Tok::Equals, "'='");
      QMatrix m = to_rational_matrix(parse_matrix_tokens(cur), name.span);
      if (m.rows != m.cols) fail(name.span, "point matrices must be square");
      mats[static_cast<int>(name.value)] = m;
    } else if (name.kind == Tok::NameV) {
      cur.expect(Tok::Equals, "'='");
      QMatrix m = to_rational_matrix(parse_matrix_tokens(cur), name.span);
      if (m.rows != 1 && m.cols != 1) fail(name.span, "v must be a vector");
      vec.clear();
      for (const Rational& x : m.a) vec.push_back(x);
      sawVec = true;
    } else {
      fail(name.span, "expected 'X<i> = [..]' or 'v = [..]'");
    }
    if (cur.peek().kind != Tok::End) fail(cur.peek().span, "unexpected trailing input");
  }
  if (!sawVec) fail({0, 0}, "point file is missing 'v = [..]'");
  if (mats.empty()) fail({0, 0}, "point file has no matrices");
  int g = mats.rbegin()->first;
  std::vector<QMatrix> xs;
  for (int i = 1; i <= g; ++i) {
    auto it = mats.find(i);
    if (it == mats.end()) fail({0, 0}, "point file is missing X" + std::to_string(i));
    xs.push_back(it->second);
  }
  return make_point(std::move(xs), std::move(vec));
}

// --- printing -------------------------------------------------------------

namespace {

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (!s.empty()) s += ' ';
    Letter l = w.at(i);
    s += "x" + std::to_string(l.var);
    if (l.starred) s += '*';
  }
  return s;
}

} // namespace

std::string print_poly(const NcPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (std::size_t idx = terms.size(); idx-- > 0;) { // descending canonical order
    const auto& [w, c] = terms[idx];
    bool first = out.empty();
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    std::string ws = word_to_string(w);
    if (ws.empty()) {
      out += rational_to_string(mag);
    } else {
      if (mag != 1) out += rational_to_string(mag) + " ";
      out += ws;
    }
  }
  return out;
}

std::string print_unipoly(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    bool first = out.empty();
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (k == 0) {
      out += rational_to_string(mag);
    } else {
      if (mag != 1) out += rational_to_string(mag) + " ";
      out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
  }
  return out;
}

std::string print_unipoly_matrix(const UniPolyMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) out += ", ";
      out += print_unipoly(m.at(i, j));
    }
  }
  return out + "]";
}

std::string format_diagnostic(const std::string& source, const ParseDiagnostic& d) {
  std::size_t line = 1, col = 1, lineStart = 0;
  for (std::size_t i = 0; i < d.span.begin && i < source.size(); ++i) {
    if (source[i] == '\n') { ++line; col = 1; lineStart = i + 1; }
    else ++col;
  }
  std::size_t lineEnd = source.find('\n', lineStart);
  if (lineEnd == std::string::npos) lineEnd = source.size();
  std::ostringstream os;
  os << "line " << line << ", column " << col << ": " << d.message << "\n";
  os << "  " << source.substr(lineStart, lineEnd - lineStart) << "\n";
  os << "  " << std::string(col - 1, ' ') << "^";
  return os.str();
}

} // namespace ncreal
