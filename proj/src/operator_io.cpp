#include "lle/operator_io.hpp"

#include <cctype>
#include <vector>

namespace lle {

// ---------------------------------------------------------------------------
// Rendering

namespace {

bool gaussian_negated(const GaussianRational& c) {
  if (sgn(c.re) != 0) return sgn(c.re) < 0;
  return sgn(c.im) < 0;
}

// Magnitude rendering; the caller has already pulled the sign out.
std::string gaussian_str(const GaussianRational& c) {
  if (c.is_real()) return to_string(c.re);
  if (sgn(c.re) == 0) {
    if (c.im == 1) return "i";
    if (c.im == -1) return "-i";
    return to_string(c.im) + "*i";
  }
  std::string s = "(" + to_string(c.re);
  GaussianRational imag(Rational(0), abs(c.im));
  s += sgn(c.im) < 0 ? " - " : " + ";
  s += gaussian_str(imag) + ")";
  return s;
}

std::string poly_term_str(int exp, const GaussianRational& c) {
  std::string base;
  if (exp == 1) base = "m";
  else if (exp > 1) base = "m^" + std::to_string(exp);
  if (base.empty()) return gaussian_str(c);
  if (c.is_one()) return base;
  return gaussian_str(c) + "*" + base;
}

std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    bool neg = gaussian_negated(it->second);
    std::string piece = poly_term_str(it->first, neg ? -it->second : it->second);
    if (out.empty()) {
      out = neg ? "-" + piece : piece;
    } else {
      out += neg ? " - " : " + ";
      out += piece;
    }
  }
  return out;
}

std::string ratfun_str(const RatFun& f) {
  std::string num = poly_str(f.num());
  if (f.den().is_one()) return num;
  if (f.num().terms().size() > 1) num = "(" + num + ")";
  std::string den = poly_str(f.den());
  if (f.den().terms().size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

// True when the rendering embeds into a '*' chain without parentheses.
bool ratfun_product_atomic(const RatFun& f) {
  return f.num().terms().size() <= 1 || !f.den().is_one();
}

bool ratfun_negated(const RatFun& f) {
  return !f.num().is_zero() && gaussian_negated(f.num().leading_coeff());
}

std::string spart_str(const RatFun& b) {
  if (b.is_one()) return "s";
  std::string c = ratfun_str(b);
  if (!ratfun_product_atomic(b)) c = "(" + c + ")";
  return c + "*s";
}

}  // namespace

std::string to_string(const Scalar& x) {
  if (x.is_zero()) return "0";
  if (!x.has_s_part()) return ratfun_str(x.s_free());
  if (x.s_free().is_zero()) {
    bool neg = ratfun_negated(x.s_part());
    std::string body = spart_str(neg ? -x.s_part() : x.s_part());
    return neg ? "-" + body : body;
  }
  std::string out = ratfun_str(x.s_free());
  bool neg = ratfun_negated(x.s_part());
  out += neg ? " - " : " + ";
  out += spart_str(neg ? -x.s_part() : x.s_part());
  return out;
}

namespace {

// Sign extraction is only safe when negating flips a single rendered head.
bool scalar_sign_extractable(const Scalar& c) {
  return c.s_free().is_zero() != c.s_part().is_zero();
}

bool scalar_negated(const Scalar& c) {
  return scalar_sign_extractable(c) &&
         ratfun_negated(c.s_free().is_zero() ? c.s_part() : c.s_free());
}

bool scalar_product_atomic(const Scalar& c) {
  if (c.s_free().is_zero() == c.s_part().is_zero()) return false;  // a + b*s or 0
  return ratfun_product_atomic(c.s_free().is_zero() ? c.s_part() : c.s_free());
}

std::string scalar_factor_str(const Scalar& c) {
  std::string s = to_string(c);
  return scalar_product_atomic(c) ? s : "(" + s + ")";
}

}  // namespace

std::string render_operator(const DiffOperator& op, const GammaRep& rep) {
  if (op.is_zero()) return "0";
  std::string out;
  for (const auto& [mono, mat] : op.terms()) {
    auto coeffs = rep.decompose(mat);
    for (int k = 0; k < 16; ++k) {
      if (coeffs[k].is_zero()) continue;
      bool neg = scalar_negated(coeffs[k]);
      Scalar c = neg ? -coeffs[k] : coeffs[k];
      std::vector<std::string> factors;
      const std::string& basis = rep.basis_name(k);
      bool bare = basis.empty() && mono.is_unit();
      if (!c.is_one() || bare) factors.push_back(scalar_factor_str(c));
      if (!basis.empty()) factors.push_back(basis);
      if (!mono.is_unit()) factors.push_back(to_string(mono));
      std::string piece;
      for (const auto& f : factors) {
        if (!piece.empty()) piece += "*";
        piece += f;
      }
      if (out.empty()) {
        out = neg ? "-" + piece : piece;
      } else {
        out += neg ? " - " : " + ";
        out += piece;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      out.push_back({Token::Int, std::string(text.substr(start, pos - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
      out.push_back({Token::Ident, std::string(text.substr(start, pos - start)), start});
      continue;
    }
    Token::Kind kind;
    switch (ch) {
      case '+': kind = Token::Plus; break;
      case '-': kind = Token::Minus; break;
      case '*': kind = Token::Star; break;
      case '/': kind = Token::Slash; break;
      case '^': kind = Token::Caret; break;
      case '(': kind = Token::LParen; break;
      case ')': kind = Token::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + ch + "'", pos);
    }
    out.push_back({kind, std::string(1, ch), start});
    ++pos;
  }
  out.push_back({Token::End, "", text.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const GammaRep* rep) : tokens_(tokenize(text)), rep_(rep) {}

  DiffOperator parse() {
    DiffOperator e = expr();
    if (peek().kind != Token::End) throw ParseError("trailing input", peek().offset);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }
  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  DiffOperator expr() {
    DiffOperator acc = term();
    for (;;) {
      if (accept(Token::Plus)) acc += term();
      else if (accept(Token::Minus)) acc -= term();
      else return acc;
    }
  }

  DiffOperator term() {
    DiffOperator acc = factor();
    for (;;) {
      if (accept(Token::Star)) {
        acc = acc * factor();
      } else if (peek().kind == Token::Slash) {
        std::size_t at = take().offset;
        acc = acc * scalar_inverse(factor(), at);
      } else {
        return acc;
      }
    }
  }

  DiffOperator factor() {
    if (accept(Token::Minus)) return Scalar(-1) * factor();
    DiffOperator base = atom();
    if (peek().kind == Token::Caret) {
      std::size_t at = take().offset;
      if (peek().kind != Token::Int) throw ParseError("expected positive integer exponent", at);
      Token t = take();
      long n = 0;
      try {
        n = std::stol(t.text);
      } catch (const std::exception&) {
        throw ParseError("exponent out of range", t.offset);
      }
      if (n <= 0) throw ParseError("exponent must be positive", t.offset);
      if (n > 64) throw ParseError("exponent too large", t.offset);
      DiffOperator acc = DiffOperator::identity();
      for (long k = 0; k < n; ++k) acc = acc * base;
      return acc;
    }
    return base;
  }

  DiffOperator atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Int: {
        Token tok = take();
        return DiffOperator::scalar_op(Scalar(Rational(tok.text)));
      }
      case Token::LParen: {
        take();
        DiffOperator e = expr();
        if (!accept(Token::RParen)) throw ParseError("expected ')'", peek().offset);
        return e;
      }
      case Token::Ident: return symbol(take());
      default: throw ParseError("expected an operand", t.offset);
    }
  }

  DiffOperator symbol(const Token& t) {
    const std::string& n = t.text;
    if (n == "i") return DiffOperator::scalar_op(Scalar::i());
    if (n == "m") return DiffOperator::scalar_op(Scalar::m());
    if (n == "s") return DiffOperator::scalar_op(Scalar::s());
    if (n == "I4") return DiffOperator::identity();
    if (n == "t") return DiffOperator::coordinate(0);
    if (n == "x1" || n == "x2" || n == "x3") return DiffOperator::coordinate(n[1] - '0');
    if (n == "dt") return DiffOperator::derivative(0);
    if (n == "d1" || n == "d2" || n == "d3") return DiffOperator::derivative(n[1] - '0');
    if (rep_) {
      if (n == "g0" || n == "g1" || n == "g2" || n == "g3")
        return DiffOperator::from_matrix(rep_->gamma(n[1] - '0'));
      if (n == "g4") return DiffOperator::from_matrix(rep_->gamma4());
      if (n == "alpha") return DiffOperator::from_matrix(rep_->alpha());
      if (n == "beta") return DiffOperator::from_matrix(rep_->beta());
    } else if (n == "g0" || n == "g1" || n == "g2" || n == "g3" || n == "g4" || n == "alpha" ||
               n == "beta") {
      throw ParseError("matrix symbol '" + n + "' not allowed in a scalar expression", t.offset);
    }
    throw ParseError("unknown symbol '" + n + "'", t.offset);
  }

  DiffOperator scalar_inverse(const DiffOperator& d, std::size_t at) {
    auto c = scalar_value(d);
    if (!c) throw ParseError("division by a non-scalar operator", at);
    if (c->is_zero()) throw ParseError("division by zero", at);
    return DiffOperator::scalar_op(c->inv());
  }

 public:
  static std::optional<Scalar> scalar_value(const DiffOperator& d) {
    if (d.is_zero()) return Scalar(0);
    if (d.term_count() != 1) return std::nullopt;
    const auto& [mono, mat] = *d.terms().begin();
    if (!mono.is_unit()) return std::nullopt;
    const Scalar& c = mat(0, 0);
    for (int r = 0; r < 4; ++r)
      for (int col = 0; col < 4; ++col) {
        if (r == col && !(mat(r, col) == c)) return std::nullopt;
        if (r != col && !mat(r, col).is_zero()) return std::nullopt;
      }
    return c;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const GammaRep* rep_;
};

}  // namespace

DiffOperator parse_operator(std::string_view text, const GammaRep& rep) {
  return Parser(text, &rep).parse();
}

Scalar parse_scalar(std::string_view text) {
  Parser p(text, nullptr);
  DiffOperator d = p.parse();
  auto c = Parser::scalar_value(d);
  if (!c) throw ParseError("expression is not scalar-valued", 0);
  return *c;
}

}  // namespace lle
