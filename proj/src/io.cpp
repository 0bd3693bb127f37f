#include "multireg/io.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace multireg {

namespace {

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }
  [[noreturn]] void fail_at(int line, int col, const std::string& msg) const {
    throw ParseError(line, col, msg);
  }

  void skip_ws() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' but reached end of input");
      fail(std::string("expected '") + c + "' but found '" + s_[pos_] + "'");
    }
  }

  std::string peek_word() {
    skip_ws();
    std::size_t p = pos_;
    while (p < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p])) || s_[p] == '_')) ++p;
    return std::string(s_.substr(pos_, p - pos_));
  }

  std::string word() {
    std::string w = peek_word();
    if (w.empty()) fail("expected a keyword");
    for (std::size_t i = 0; i < w.size(); ++i) advance();
    return w;
  }

  void keyword(const std::string& kw) {
    int l = line_, c = col_;
    skip_ws();
    l = line_;
    c = col_;
    std::string w = word();
    if (w != kw) fail_at(l, c, "expected '" + kw + "' but found '" + w + "'");
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      advance();
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000000000L) fail("integer too large");
      advance();
    }
    return neg ? -v : v;
  }

  std::vector<long> int_list(char open, char close) {
    expect(open);
    std::vector<long> out;
    if (accept(close)) return out;
    do out.push_back(integer());
    while (accept(','));
    expect(close);
    return out;
  }

  MultiDegree degree() {
    std::vector<long> v = int_list('(', ')');
    std::vector<int> d(v.begin(), v.end());
    return MultiDegree(d);
  }

  // Polynomial grammar.
  Poly expr(const RingSpec& ring) {
    const auto& k = ring.field();
    Poly acc;
    bool first = true;
    while (true) {
      bool neg = false;
      if (accept('-')) {
        neg = true;
      } else if (!accept('+') && !first) {
        break;
      }
      Poly t = term(ring);
      acc = neg ? sub(acc, t, k) : add(acc, t, k);
      first = false;
      char c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }

  Poly term(const RingSpec& ring) {
    Poly acc = factor(ring);
    while (accept('*')) acc = mul(acc, factor(ring), ring.field());
    return acc;
  }

  Poly factor(const RingSpec& ring) {
    Poly base = atom(ring);
    if (accept('^')) {
      long e = integer();
      if (e < 0 || e > 255) fail("exponent out of range");
      Poly r = Poly::constant(1);
      for (long i = 0; i < e; ++i) r = mul(r, base, ring.field());
      return r;
    }
    return base;
  }

  Poly atom(const RingSpec& ring) {
    char c = peek();
    if (c == '(') {
      advance();
      Poly p = expr(ring);
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(ring.field().from_int(integer()));
    int l = line_, col = col_;
    std::string w = peek_word();
    if (w.empty()) {
      if (c == '\0') fail("unexpected end of input in polynomial");
      fail(std::string("unexpected character '") + c + "' in polynomial");
    }
    for (std::size_t i = 0; i < w.size(); ++i) advance();
    int v = lookup_var(w, ring);
    if (v < 0) fail_at(l, col, "unknown variable '" + w + "'");
    return Poly::monomial(Monomial::var(v));
  }

  static int lookup_var(const std::string& w, const RingSpec& ring) {
    auto num = [](const std::string& s, long& out) {
      if (s.empty() || s.size() > 4) return false;
      for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
      out = std::stol(s);
      return true;
    };
    long i = -1, j = -1;
    static const std::string alias = "xyzw";
    if (w.size() >= 2 && alias.find(w[0]) != std::string::npos) {
      i = long(alias.find(w[0]));
      if (!num(w.substr(1), j)) return -1;
    } else if (w.size() >= 4 && w[0] == 'v') {
      auto us = w.find('_');
      if (us == std::string::npos || !num(w.substr(1, us - 1), i) || !num(w.substr(us + 1), j)) return -1;
      i -= 1;
    } else {
      return -1;
    }
    if (i < 0 || std::size_t(i) >= ring.r() || j < 0 || j > ring.n()[std::size_t(i)]) return -1;
    return ring.var(std::size_t(i), int(j));
  }

  int line() const { return line_; }
  int col() const { return col_; }
  void sync() { skip_ws(); }

private:
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

RingSpec parse_ring(Parser& P, std::optional<std::uint32_t> prime_override) {
  P.keyword("ring");
  std::optional<long> p;
  std::optional<std::vector<long>> n;
  while (true) {
    std::string w = P.peek_word();
    int l = P.line(), c = P.col();
    if (w == "p") {
      P.word();
      P.expect('=');
      p = P.integer();
      if (*p < 2 || *p > 2147483647L || !PrimeField::is_prime(std::uint32_t(*p)))
        P.fail_at(l, c, "p=" + std::to_string(*p) + " is not a prime");
    } else if (w == "n") {
      P.word();
      P.expect('=');
      n = P.int_list('[', ']');
      if (n->empty()) P.fail_at(l, c, "n must list at least one factor");
      for (long ni : *n)
        if (ni < 1) P.fail_at(l, c, "every n_i must be at least 1");
    } else {
      break;
    }
  }
  if (!n) P.fail("ring needs n=[...]");
  std::vector<int> dims(n->begin(), n->end());
  std::uint32_t prime = prime_override ? *prime_override : p ? std::uint32_t(*p) : 32003u;
  try {
    return RingSpec(dims, prime);
  } catch (const std::exception& e) {
    P.fail(e.what());
  }
}

} // namespace

ModuleInput parse_input(std::string_view text, std::optional<std::uint32_t> prime_override) {
  Parser P(text);
  RingSpec ring = parse_ring(P, prime_override);
  P.sync();
  int kl = P.line(), kc = P.col();
  std::string kind = P.word();
  if (kind == "ideal") {
    std::vector<Poly> gens;
    while (!P.at_end()) {
      P.sync();
      int l = P.line(), c = P.col();
      Poly f = P.expr(ring);
      if (!f.is_homogeneous(ring)) P.fail_at(l, c, "polynomial is not homogeneous");
      gens.push_back(std::move(f));
      if (!P.accept(';')) break;
    }
    if (!P.at_end()) P.fail("unexpected text after ideal generators");
    Presentation M = Presentation::quotient(ring, gens);
    return {ModuleInput::Kind::Ideal, ring, std::move(gens), std::move(M)};
  }
  if (kind != "module") P.fail_at(kl, kc, "expected 'ideal' or 'module' but found '" + kind + "'");

  FreeModuleSpec F0, F1;
  bool have_cols = false;
  int cols_l = 0, cols_c = 0;
  while (true) {
    std::string w = P.peek_word();
    if (w == "rows" || w == "cols") {
      P.sync();
      int l = P.line(), c = P.col();
      P.word();
      P.expect('=');
      P.expect('[');
      FreeModuleSpec& F = w == "rows" ? F0 : F1;
      if (!P.accept(']')) {
        do {
          P.sync();
          int dl = P.line(), dc = P.col();
          MultiDegree d = P.degree();
          if (d.rank() != ring.r()) P.fail_at(dl, dc, "degree has wrong length");
          F.twists.push_back(d);
        } while (P.accept(','));
        P.expect(']');
      }
      if (w == "cols") {
        have_cols = true;
        cols_l = l;
        cols_c = c;
      }
    } else {
      break;
    }
  }
  P.keyword("matrix");
  std::vector<std::vector<Poly>> entries;
  std::vector<std::vector<std::pair<int, int>>> where;
  P.expect('[');
  if (!P.accept(']')) {
    do {
      P.expect('[');
      entries.emplace_back();
      where.emplace_back();
      if (!P.accept(']')) {
        do {
          P.sync();
          where.back().push_back({P.line(), P.col()});
          Poly f = P.expr(ring);
          if (!f.is_homogeneous(ring))
            P.fail_at(where.back().back().first, where.back().back().second, "entry is not homogeneous");
          entries.back().push_back(std::move(f));
        } while (P.accept(','));
        P.expect(']');
      }
    } while (P.accept(','));
    P.expect(']');
  }
  if (!P.at_end()) P.fail("unexpected text after matrix");

  if (entries.size() != F0.rank())
    P.fail_at(kl, kc, "matrix has " + std::to_string(entries.size()) + " rows but rows= lists " +
                          std::to_string(F0.rank()) + " degrees");
  std::size_t ncols = entries.empty() ? (have_cols ? F1.rank() : 0) : entries[0].size();
  for (std::size_t r = 0; r < entries.size(); ++r)
    if (entries[r].size() != ncols) P.fail_at(kl, kc, "matrix row " + std::to_string(r + 1) + " has wrong length");
  if (have_cols && F1.rank() != ncols) P.fail_at(cols_l, cols_c, "cols= does not match the matrix width");

  std::vector<std::optional<MultiDegree>> inferred(ncols);
  for (std::size_t c = 0; c < ncols; ++c)
    for (std::size_t r = 0; r < entries.size(); ++r) {
      if (entries[r][c].is_zero()) continue;
      MultiDegree d = F0.twists[r] + entries[r][c].degree(ring);
      if (!inferred[c]) {
        inferred[c] = d;
      } else if (*inferred[c] != d) {
        P.fail_at(where[r][c].first, where[r][c].second,
                  "entry degree inconsistent with its column: column degree " + inferred[c]->to_string() +
                      " but this entry gives " + d.to_string());
      }
      if (have_cols && F1.twists[c] != d)
        P.fail_at(where[r][c].first, where[r][c].second,
                  "entry degree " + d.to_string() + " does not match cols= degree " + F1.twists[c].to_string());
    }
  if (!have_cols) {
    for (std::size_t c = 0; c < ncols; ++c) {
      if (!inferred[c]) P.fail_at(kl, kc, "zero column " + std::to_string(c + 1) + " needs cols= to fix its degree");
      F1.twists.push_back(*inferred[c]);
    }
  }
  MatrixOverS rel = MatrixOverS::from_entries(F1, F0, entries, ring);
  return {ModuleInput::Kind::Matrix, ring, {}, Presentation(ring, std::move(rel))};
}

std::string print_input(const ModuleInput& in) {
  std::ostringstream os;
  os << "ring p=" << in.ring.characteristic() << " n=[";
  for (std::size_t i = 0; i < in.ring.r(); ++i) os << (i ? "," : "") << in.ring.n()[i];
  os << "]\n";
  if (in.kind == ModuleInput::Kind::Ideal) {
    os << "ideal";
    for (std::size_t g = 0; g < in.ideal.size(); ++g)
      os << (g ? ";\n  " : " ") << to_string(in.ideal[g], in.ring);
    os << "\n";
    return os.str();
  }
  const auto& M = in.module;
  os << "module rows=[";
  for (std::size_t r = 0; r < M.F0.rank(); ++r) os << (r ? "," : "") << M.F0.twists[r].to_string();
  os << "] cols=[";
  for (std::size_t c = 0; c < M.relations.cols(); ++c)
    os << (c ? "," : "") << M.relations.source().twists[c].to_string();
  os << "]\nmatrix [";
  for (std::size_t r = 0; r < M.F0.rank(); ++r) {
    os << (r ? ",\n        [" : "[");
    for (std::size_t c = 0; c < M.relations.cols(); ++c)
      os << (c ? ", " : "") << to_string(M.relations.entry(r, c), in.ring);
    os << "]";
  }
  os << "]\n";
  return os.str();
}

Poly parse_poly(std::string_view text, const RingSpec& ring) {
  Parser P(text);
  Poly f = P.expr(ring);
  if (!P.at_end()) P.fail("unexpected text after polynomial");
  return f;
}

MultiDegree parse_degree(std::string_view text) {
  Parser P(text);
  std::vector<long> v;
  if (P.peek() == '(') {
    v = P.int_list('(', ')');
  } else {
    do v.push_back(P.integer());
    while (P.accept(','));
  }
  if (!P.at_end()) P.fail("unexpected text after degree");
  if (v.empty()) P.fail("empty degree");
  return MultiDegree(std::vector<int>(v.begin(), v.end()));
}

DegreeBox parse_box(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(1, 1, "box must look like a,b:c,d");
  DegreeBox b{parse_degree(text.substr(0, colon)), parse_degree(text.substr(colon + 1))};
  if (b.lo.rank() != b.hi.rank()) throw ParseError(1, int(colon) + 2, "box corners have different lengths");
  if (!b.lo.leq(b.hi)) throw ParseError(1, 1, "box lower corner must be <= upper corner");
  return b;
}

} // namespace multireg
