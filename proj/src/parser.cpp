#include "k3deg/parser.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "k3deg/error.hpp"

namespace k3deg {
namespace {

// ---- values: fractions of Laurent polynomials in s over Q[t^(+-1/m)] ----

using SPoly = std::map<int, TLaurent>;  // s exponent -> coefficient

void add_into(SPoly& acc, int e, const TLaurent& c) {
  TLaurent& slot = acc[e];
  slot += c;
  if (slot.is_zero()) acc.erase(e);
}

SPoly add(const SPoly& a, const SPoly& b, bool negate_b = false) {
  SPoly out = a;
  for (const auto& [e, c] : b) add_into(out, e, negate_b ? -c : c);
  return out;
}

SPoly mul(const SPoly& a, const SPoly& b) {
  SPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_into(out, ea + eb, ca * cb);
  return out;
}

struct Frac {
  SPoly num;
  SPoly den{{0, TLaurent(1)}};

  // Fold monomial parts of the denominator into the numerator.
  void tidy() {
    if (num.empty()) {
      den = {{0, TLaurent(1)}};
      return;
    }
    if (den.size() == 1 && den.begin()->second.terms().size() == 1) {
      const auto& [e, c] = *den.begin();
      const auto& [te, tc] = *c.terms().begin();
      TLaurent inv = TLaurent::monomial(1 / tc, (-te).rat());
      SPoly moved;
      for (const auto& [ne, nc] : num) moved[ne - e] = nc * inv;
      num = std::move(moved);
      den = {{0, TLaurent(1)}};
      return;
    }
    int lo = den.begin()->first;
    if (lo != 0) {
      SPoly d, n;
      for (const auto& [e, c] : den) d[e - lo] = c;
      for (const auto& [e, c] : num) n[e - lo] = c;
      den = std::move(d);
      num = std::move(n);
    }
  }
};

Frac make(SPoly num) {
  Frac f;
  std::erase_if(num, [](const auto& kv) { return kv.second.is_zero(); });
  f.num = std::move(num);
  return f;
}

Frac operator+(const Frac& a, const Frac& b) {
  Frac out;
  if (a.den == b.den) {
    out.num = add(a.num, b.num);
    out.den = a.den;
  } else {
    out.num = add(mul(a.num, b.den), mul(b.num, a.den));
    out.den = mul(a.den, b.den);
  }
  out.tidy();
  return out;
}

Frac negate(const Frac& a) {
  Frac out = a;
  for (auto& [e, c] : out.num) c = -c;
  return out;
}

Frac operator*(const Frac& a, const Frac& b) {
  Frac out;
  out.num = mul(a.num, b.num);
  out.den = mul(a.den, b.den);
  out.tidy();
  return out;
}

std::optional<Frac> inverse(const Frac& a) {
  if (a.num.empty()) return std::nullopt;
  Frac out;
  out.num = a.den;
  out.den = a.num;
  out.tidy();
  return out;
}

Frac frac_pow(Frac base, long n) {
  Frac acc = make({{0, TLaurent(1)}});
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

// Exact quotient num/den as a Laurent polynomial in s, if it exists.
std::optional<SPoly> to_spoly(const Frac& f) {
  if (f.den.size() == 1 && f.den.begin()->first == 0 &&
      f.den.begin()->second == TLaurent(1))
    return f.num;
  const int dlo = f.den.begin()->first;  // 0 after tidy
  const int dhi = f.den.rbegin()->first;
  const TLaurent& lead = f.den.rbegin()->second;
  SPoly rem = f.num;
  SPoly quot;
  while (!rem.empty()) {
    auto [top, c] = *rem.rbegin();
    if (top - (dhi - dlo) < rem.begin()->first) return std::nullopt;
    auto q = TLaurent::divide_exact(c, lead);
    if (!q) return std::nullopt;
    const int shift = top - dhi;
    add_into(quot, shift, *q);
    for (const auto& [e, dc] : f.den) add_into(rem, e + shift, -(dc * *q));
  }
  return quot;
}

// ---- lexer ----

enum class Tok { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Eq, End, Eof };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1, depth = 0;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string text, int l, int c) { out.push_back({k, std::move(text), l, c}); };
  while (i < src.size()) {
    char ch = src[i];
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') ++i, ++col;
      continue;
    }
    if (ch == '\n' || ch == ';') {
      if (depth == 0 || ch == ';') push(Tok::End, std::string(1, ch), line, col);
      ++i;
      if (ch == '\n') ++line, col = 1;
      else ++col;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i, ++col;
      continue;
    }
    const int l = line, c = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      push(Tok::Num, std::string(src.substr(i, j - i)), l, c);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      push(Tok::Ident, std::string(src.substr(i, j - i)), l, c);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    Tok k;
    switch (ch) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; ++depth; break;
      case ')': k = Tok::RParen; depth = depth > 0 ? depth - 1 : 0; break;
      case '=': k = Tok::Eq; break;
      default:
        throw Error(ErrorCode::Parse, std::string("unexpected character '") + ch + "'", l, c);
    }
    push(k, std::string(1, ch), l, c);
    ++i, ++col;
  }
  push(Tok::Eof, "", line, col);
  return out;
}

// ---- AST ----

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  enum Kind { Num, Var, TPow, Call, Neg, Add, Sub, Mul, Div, Pow } kind;
  Int number;        // Num
  std::string name;  // Var, Call
  Rat exponent;      // TPow
  long int_exp = 0;  // Pow
  NodePtr a, b;
  int line = 0, col = 0;
};

struct Macro {
  std::string param;
  NodePtr body;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FamilyPair run(std::string_view source) {
    std::optional<std::pair<NodePtr, const Token*>> g8, g12;
    while (peek().kind != Tok::Eof) {
      if (peek().kind == Tok::End) {
        ++pos_;
        continue;
      }
      const Token& head = expect(Tok::Ident, "statement");
      if (head.text == "let") {
        const Token& name = expect(Tok::Ident, "macro name");
        if (macros_.count(name.text) || is_reserved(name.text))
          fail("macro '" + name.text + "' already defined", name);
        expect(Tok::LParen, "'('");
        const Token& param = expect(Tok::Ident, "parameter name");
        expect(Tok::RParen, "')'");
        expect(Tok::Eq, "'='");
        param_ = param.text;
        NodePtr body = expr();
        param_.reset();
        macros_[name.text] = Macro{param.text, body};
      } else if (head.text == "g8" || head.text == "g12") {
        auto& slot = head.text == "g8" ? g8 : g12;
        if (slot) fail(head.text + " assigned twice", head);
        expect(Tok::Eq, "'='");
        slot.emplace(expr(), &head);
      } else {
        fail("expected 'let', 'g8' or 'g12', got '" + head.text + "'", head);
      }
      if (peek().kind != Tok::End && peek().kind != Tok::Eof)
        fail("unexpected '" + peek().text + "' after expression", peek());
    }
    if (!g8) fail("missing g8 statement", peek());
    if (!g12) fail("missing g12 statement", peek());
    FamilyPair out;
    out.g8 = to_form(*g8, 8);
    out.g12 = to_form(*g12, 12);
    out.source_text = std::string(source);
    if (out.is_zero()) throw Error(ErrorCode::ZeroForm, "g8 and g12 both vanish");
    return out;
  }

 private:
  static bool is_reserved(const std::string& n) {
    return n == "s" || n == "t" || n == "let" || n == "g8" || n == "g12";
  }

  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] static void fail(const std::string& msg, const Token& at) {
    throw Error(ErrorCode::Parse, msg, at.line, at.col);
  }

  const Token& expect(Tok k, const char* what) {
    const Token& t = peek();
    if (t.kind != k)
      fail(std::string("expected ") + what + ", got '" + (t.kind == Tok::Eof ? "end of input" : t.kind == Tok::End ? "end of statement" : t.text) + "'", t);
    ++pos_;
    return t;
  }

  std::shared_ptr<Node> node(Node::Kind k, const Token& at, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    n->line = at.line;
    n->col = at.col;
    return n;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = toks_[pos_++];
      lhs = node(op.kind == Tok::Plus ? Node::Add : Node::Sub, op, lhs, term());
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = toks_[pos_++];
      lhs = node(op.kind == Tok::Star ? Node::Mul : Node::Div, op, lhs, unary());
    }
    return lhs;
  }

  NodePtr unary() {
    if (peek().kind == Tok::Minus) {
      const Token& op = toks_[pos_++];
      return node(Node::Neg, op, unary());
    }
    return power();
  }

  NodePtr power() {
    const Token& start = peek();
    NodePtr base = atom();
    if (peek().kind != Tok::Caret) return base;
    const Token& caret = toks_[pos_++];
    const bool bare_t = base->kind == Node::Var && base->name == "t" && param_ != "t";
    Rat e;
    if (peek().kind == Tok::LParen) {
      ++pos_;
      e = signed_int();
      if (peek().kind == Tok::Slash) {
        const Token& slash = toks_[pos_++];
        const Token& d = expect(Tok::Num, "denominator");
        Int den(d.text);
        if (den == 0) fail("zero denominator in exponent", d);
        e /= den;
        e.canonicalize();
        if (!bare_t && e.get_den() != 1)
          fail("rational exponents are allowed on t only", slash);
      }
      expect(Tok::RParen, "')'");
    } else {
      e = signed_int();
    }
    if (peek().kind == Tok::Caret) fail("chained '^' needs parentheses", peek());
    std::shared_ptr<Node> n;
    if (bare_t) {
      n = node(Node::TPow, start);
      n->exponent = e;
    } else {
      n = node(Node::Pow, caret, base);
      if (!e.get_num().fits_slong_p() || rat_abs(e) > 10000) fail("exponent too large", caret);
      n->int_exp = e.get_num().get_si();
    }
    return n;
  }

  Rat signed_int() {
    bool neg = false;
    if (peek().kind == Tok::Minus) {
      ++pos_;
      neg = true;
    }
    const Token& t = expect(Tok::Num, "integer exponent");
    Rat r{Int(t.text)};
    return neg ? Rat(-r) : r;
  }

  NodePtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Num: {
        ++pos_;
        auto n = node(Node::Num, t);
        n->number = Int(t.text);
        return n;
      }
      case Tok::LParen: {
        ++pos_;
        NodePtr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident: {
        ++pos_;
        if (peek().kind == Tok::LParen) {
          if (!macros_.count(t.text)) fail("unknown function '" + t.text + "'", t);
          ++pos_;
          auto n = node(Node::Call, t, expr());
          n->name = t.text;
          expect(Tok::RParen, "')'");
          return n;
        }
        if (t.text != "s" && t.text != "t" && t.text != param_)
          fail("unknown variable '" + t.text + "'", t);
        auto n = node(Node::Var, t);
        n->name = t.text;
        return n;
      }
      default:
        fail("expected expression, got '" +
                 (t.kind == Tok::Eof ? std::string("end of input")
                  : t.kind == Tok::End ? std::string("end of statement")
                                        : t.text) +
                 "'",
             t);
    }
  }

  Frac eval(const NodePtr& n, const std::map<std::string, Frac>& env) const {
    auto err = [&](const std::string& m) -> Error {
      return Error(ErrorCode::Parse, m, n->line, n->col);
    };
    switch (n->kind) {
      case Node::Num: return make({{0, TLaurent(Rat(n->number))}});
      case Node::TPow: return make({{0, TLaurent::monomial(1, n->exponent)}});
      case Node::Var: {
        auto it = env.find(n->name);
        if (it != env.end()) return it->second;
        if (n->name == "s") return make({{1, TLaurent(1)}});
        return make({{0, TLaurent::monomial(1, 1)}});
      }
      case Node::Call: {
        const Macro& m = macros_.at(n->name);
        return eval(m.body, {{m.param, eval(n->a, env)}});
      }
      case Node::Neg: return negate(eval(n->a, env));
      case Node::Add: return eval(n->a, env) + eval(n->b, env);
      case Node::Sub: return eval(n->a, env) + negate(eval(n->b, env));
      case Node::Mul: return eval(n->a, env) * eval(n->b, env);
      case Node::Div: {
        auto inv = inverse(eval(n->b, env));
        if (!inv) throw err("division by zero");
        return eval(n->a, env) * *inv;
      }
      case Node::Pow: {
        Frac base = eval(n->a, env);
        if (n->int_exp >= 0) return frac_pow(base, n->int_exp);
        auto inv = inverse(base);
        if (!inv) throw err("zero raised to a negative power");
        return frac_pow(*inv, -n->int_exp);
      }
    }
    throw err("internal: bad node");
  }

  SForm to_form(const std::pair<NodePtr, const Token*>& stmt, int degree) const {
    const Token& at = *stmt.second;
    Frac v = eval(stmt.first, {});
    auto poly = to_spoly(v);
    if (!poly)
      throw Error(ErrorCode::NotPoly, at.text + ": denominator is not a monomial", at.line, at.col);
    std::vector<TLaurent> c(degree + 1);
    for (const auto& [e, coeff] : *poly) {
      if (e < 0)
        throw Error(ErrorCode::NotPoly, at.text + ": negative power of s remains", at.line, at.col);
      if (e > degree)
        throw Error(ErrorCode::Degree,
                    at.text + ": s-degree " + std::to_string(e) + " exceeds " + std::to_string(degree),
                    at.line, at.col);
      c[e] = coeff;
    }
    return SForm(degree, std::move(c));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, Macro> macros_;
  std::optional<std::string> param_;
};

}  // namespace

FamilyPair parse_family(std::string_view text) {
  return Parser(lex(text)).run(text);
}

}  // namespace k3deg
