#include "qgl/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <vector>

namespace qgl {

namespace {

struct Token {
  enum Kind { Plus, Minus, Caret, LParen, RParen, Rational, Ident, End } kind;
  std::size_t pos;
  std::string text;        // Ident
  BigRational value{0};   // Rational
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i;
    if (c == '+') {
      out.push_back({Token::Plus, pos, "", 0});
      ++i;
    } else if (c == '-') {
      out.push_back({Token::Minus, pos, "", 0});
      ++i;
    } else if (c == '^') {
      out.push_back({Token::Caret, pos, "", 0});
      ++i;
    } else if (c == '(') {
      out.push_back({Token::LParen, pos, "", 0});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::RParen, pos, "", 0});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      BigInt num(s.substr(i, j - i));
      BigInt den(1);
      if (j < s.size() && s[j] == '/') {
        std::size_t k = j + 1;
        std::size_t d0 = k;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == d0) throw SyntaxError("expected denominator digits", j + 1);
        den = BigInt(s.substr(d0, k - d0));
        if (den == 0) throw SyntaxError("zero denominator", d0);
        j = k;
      }
      out.push_back({Token::Rational, pos, "", BigRational(num, den)});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
      std::string word = s.substr(i, j - i);
      if (j < s.size() && s[j] == '*' && word.size() == 1 && word != "q" && word != "i") {
        word += '*';
        ++j;
      }
      out.push_back({Token::Ident, pos, word, 0});
      i = j;
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
    }
  }
  out.push_back({Token::End, s.size(), "", 0});
  return out;
}

struct GenInfo {
  Gen gen;
  bool invertible;  // negative powers allowed (unitaries)
};

const std::map<std::string, GenInfo>& genTable() {
  static const std::map<std::string, GenInfo> table = {
      {"a", {Gen::A, false}},      {"a*", {Gen::AStar, false}}, {"g", {Gen::G, false}},
      {"g*", {Gen::GStar, false}}, {"u", {Gen::U, true}},       {"u*", {Gen::UStar, true}},
      {"v", {Gen::V, true}},       {"v*", {Gen::VStar, true}},  {"w", {Gen::W, true}},
      {"w*", {Gen::WStar, true}},  {"z", {Gen::Z, true}},       {"z*", {Gen::ZStar, true}},
  };
  return table;
}

/// Pure power of one generator as a normal-form monomial.
Element genPower(AlgebraTag tag, Gen gen, int exp, std::size_t pos) {
  Monomial m{tag, 0, 0, 0, 0};
  switch (gen) {
    case Gen::A:
      m.a = exp;
      break;
    case Gen::AStar:
      m.a = -exp;
      break;
    case Gen::G:
      m.g = exp;
      break;
    case Gen::GStar:
      m.gs = exp;
      break;
    case Gen::U:
    case Gen::W:  // torus w and crossed u share the monomial slot
      m.u = exp;
      break;
    case Gen::UStar:
    case Gen::WStar:
      m.u = -exp;
      break;
    case Gen::V:
    case Gen::Z:
      m.a = exp;
      break;
    case Gen::VStar:
    case Gen::ZStar:
      m.a = -exp;
      break;
  }
  if (m.g < 0 || m.gs < 0) throw SyntaxError("gamma is not invertible", pos);
  return monomialElement(m);
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, AlgebraTag tag) : toks_(std::move(tokens)), tag_(tag) {}

  Element parse() {
    Element e = parseElement();
    expect(Token::End, "trailing input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[idx_]; }
  const Token& take() { return toks_[idx_++]; }
  void expect(Token::Kind k, const char* what) {
    if (peek().kind != k) throw SyntaxError(what, peek().pos);
    ++idx_;
  }

  Element parseElement() {
    bool neg = false;
    if (peek().kind == Token::Minus) {
      neg = true;
      take();
    } else if (peek().kind == Token::Plus) {
      take();
    }
    Element acc = parseTerm();
    if (neg) acc = negate(acc);
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      bool minus = take().kind == Token::Minus;
      Element t = parseTerm();
      acc = minus ? subtract(acc, t) : add(acc, t);
    }
    return acc;
  }

  Element parseTerm() {
    Element acc = parseFactor();
    while (peek().kind == Token::Rational || peek().kind == Token::Ident ||
           peek().kind == Token::LParen) {
      acc = multiply(acc, parseFactor());
    }
    return acc;
  }

  int parseExponent() {
    expect(Token::Caret, "expected ^");
    bool neg = false;
    if (peek().kind == Token::Minus) {
      neg = true;
      take();
    }
    if (peek().kind != Token::Rational || boost::multiprecision::denominator(peek().value) != 1)
      throw SyntaxError("expected an integer exponent", peek().pos);
    BigInt n = boost::multiprecision::numerator(take().value);
    if (n > 1000000) throw SyntaxError("exponent too large", peek().pos);
    int e = static_cast<int>(n);
    return neg ? -e : e;
  }

  Element parseFactor() {
    const Token& t = peek();
    if (t.kind == Token::Rational) {
      take();
      return scalarElement(tag_, LaurentCoefficient::scalar(GaussianRational(t.value)));
    }
    if (t.kind == Token::LParen) {
      take();
      Element e = parseElement();
      expect(Token::RParen, "expected )");
      return e;
    }
    if (t.kind != Token::Ident) throw SyntaxError("expected a factor", t.pos);
    take();
    int exp = peek().kind == Token::Caret ? parseExponent() : 1;
    if (t.text == "q") return scalarElement(tag_, LaurentCoefficient::qPower(exp));
    if (t.text == "zeta") {
      if (tag_ == AlgebraTag::SUq2)
        throw SyntaxError("zeta is not available in this algebra", t.pos);
      return scalarElement(tag_, LaurentCoefficient::zetaPower(exp));
    }
    if (t.text == "i") {
      GaussianRational v(1);
      int r = ((exp % 4) + 4) % 4;
      for (int k = 0; k < r; ++k) v = v * GaussianRational::i();
      return scalarElement(tag_, LaurentCoefficient::scalar(v));
    }
    auto it = genTable().find(t.text);
    if (it == genTable().end()) throw SyntaxError("unknown token '" + t.text + "'", t.pos);
    auto gens = algebraGenerators(tag_);
    if (std::find(gens.begin(), gens.end(), it->second.gen) == gens.end())
      throw SyntaxError("generator '" + t.text + "' is not valid for " + tagName(tag_), t.pos);
    if (exp == 0) return unitElement(tag_);
    if (exp < 0 && !it->second.invertible)
      throw SyntaxError("'" + t.text + "' is not invertible", t.pos);
    return genPower(tag_, it->second.gen, exp, t.pos);
  }

  std::vector<Token> toks_;
  AlgebraTag tag_;
  std::size_t idx_ = 0;
};

struct GenNames {
  const char* aPos;
  const char* aNeg;
  const char* uPos;
  const char* uNeg;
};

GenNames namesFor(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::Torus:
      return {"v", "v*", "w", "w*"};
    case AlgebraTag::Circle:
      return {"z", "z*", "u", "u*"};
    default:
      return {"a", "a*", "u", "u*"};
  }
}

void appendPower(std::string& out, const char* name, int exp) {
  if (exp == 0) return;
  if (!out.empty()) out += ' ';
  out += name;
  if (exp != 1) out += "^" + std::to_string(exp);
}

std::string renderMonomial(const Monomial& m) {
  GenNames n = namesFor(m.tag);
  std::string out;
  appendPower(out, m.a >= 0 ? n.aPos : n.aNeg, std::abs(m.a));
  appendPower(out, "g", m.g);
  appendPower(out, "g*", m.gs);
  appendPower(out, m.u >= 0 ? n.uPos : n.uNeg, std::abs(m.u));
  return out;
}

struct RenderedScalar {
  bool negative = false;
  std::string text;  // magnitude form, never empty
};

/// One Laurent term q^k zeta^b * c with the sign pulled out when c is purely
/// real or purely imaginary.
RenderedScalar renderScalarTerm(int qExp, int zetaExp, const GaussianRational& c) {
  RenderedScalar r;
  GaussianRational mag = c;
  std::string ratPart;
  if (c.im == 0) {
    r.negative = c.re < 0;
    BigRational m = r.negative ? BigRational(-c.re) : c.re;
    if (m != 1 || (qExp == 0 && zetaExp == 0)) ratPart = toText(m);
  } else if (c.re == 0) {
    r.negative = c.im < 0;
    BigRational m = r.negative ? BigRational(-c.im) : c.im;
    ratPart = (m == 1 ? std::string("i") : toText(m) + "i");
  } else {
    ratPart = toText(mag);  // "(re+im i)" form
  }
  std::string out = ratPart;
  if (qExp != 0) {
    if (!out.empty()) out += ' ';
    out += qExp == 1 ? "q" : "q^" + std::to_string(qExp);
  }
  if (zetaExp != 0) {
    if (!out.empty()) out += ' ';
    out += zetaExp == 1 ? "zeta" : "zeta^" + std::to_string(zetaExp);
  }
  if (out.empty()) out = "1";
  return r.text = out, r;
}

/// Renders a coefficient as a single multiplicative chunk: either a signed
/// scalar (one Laurent term) or a parenthesized sum.
RenderedScalar renderCoefficient(const LaurentCoefficient& c) {
  if (c.terms().size() == 1) {
    const auto& [k, v] = *c.terms().begin();
    return renderScalarTerm(k.first, k.second, v);
  }
  std::string inner;
  bool first = true;
  for (const auto& [k, v] : c.terms()) {
    RenderedScalar s = renderScalarTerm(k.first, k.second, v);
    if (first) {
      inner += (s.negative ? "-" : "") + s.text;
      first = false;
    } else {
      inner += (s.negative ? " - " : " + ") + s.text;
    }
  }
  return {false, "(" + inner + ")"};
}

}  // namespace

Element parseExpression(const std::string& text, AlgebraTag tag) {
  return Parser(tokenize(text), tag).parse();
}

std::string printElement(const Element& x) {
  if (x.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    RenderedScalar s = renderCoefficient(c);
    std::string factors = renderMonomial(m);
    std::string body;
    if (factors.empty()) {
      body = s.text;
    } else if (s.text == "1") {
      body = factors;
    } else {
      body = s.text + " " + factors;
    }
    if (first) {
      out += (s.negative ? "-" : "") + body;
      first = false;
    } else {
      out += (s.negative ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string printElement(const Element& x, const BigRational& qValue) {
  Element sub(x.tag());
  for (const auto& [m, c] : x.terms()) sub.add(m, c.substituteQ(qValue));
  return printElement(sub);
}

}  // namespace qgl
