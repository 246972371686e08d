#include "conjp/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "conjp/error.hpp"

namespace conjp {

namespace {

using Node = Expr::Node;
using Kind = Expr::Kind;

constexpr double kPoleTolerance = 1e-14;

std::shared_ptr<const Node> make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

bool is_binary(Kind k) {
  return k == Kind::Add || k == Kind::Sub || k == Kind::Mul || k == Kind::Div;
}

bool equal_nodes(const Node* a, const Node* b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Literal: return a->value == b->value;
    case Kind::Var: return true;
    case Kind::Pow: return a->exponent == b->exponent && equal_nodes(a->lhs.get(), b->lhs.get());
    default: return equal_nodes(a->lhs.get(), b->lhs.get()) && equal_nodes(a->rhs.get(), b->rhs.get());
  }
}

bool mentions_z(const Node* n) {
  if (!n) return false;
  if (n->kind == Kind::Var) return true;
  return mentions_z(n->lhs.get()) || mentions_z(n->rhs.get());
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void print(const Node* n, std::ostringstream& os) {
  switch (n->kind) {
    case Kind::Literal: {
      const double re = n->value.real(), im = n->value.imag();
      if (im == 0.0 && re >= 0.0 && !std::signbit(re)) {
        os << format_real(re);
      } else if (re == 0.0 && !std::signbit(re) && im > 0.0) {
        os << format_real(im) << "i";
      } else {
        os << "(" << format_real(re) << (im < 0 || std::signbit(im) ? "-" : "+") << format_real(std::abs(im))
           << "i)";
      }
      return;
    }
    case Kind::Var: os << "z"; return;
    case Kind::Neg: os << "(-"; print(n->lhs.get(), os); os << ")"; return;
    case Kind::Conj: os << "conj("; print(n->lhs.get(), os); os << ")"; return;
    case Kind::Re: os << "re("; print(n->lhs.get(), os); os << ")"; return;
    case Kind::Im: os << "im("; print(n->lhs.get(), os); os << ")"; return;
    case Kind::Exp: os << "exp("; print(n->lhs.get(), os); os << ")"; return;
    case Kind::Pow:
      os << "(";
      print(n->lhs.get(), os);
      os << ")^" << n->exponent;
      return;
    default: {
      const char* op = n->kind == Kind::Add ? " + " : n->kind == Kind::Sub ? " - " : n->kind == Kind::Mul ? " * " : " / ";
      os << "(";
      print(n->lhs.get(), os);
      os << op;
      print(n->rhs.get(), os);
      os << ")";
      return;
    }
  }
}

[[noreturn]] void throw_pole(const Node* n, Complex z) {
  std::ostringstream os;
  os << "pole of ";
  print(n, os);
  os << " at z = " << format_real(z.real()) << (z.imag() < 0 ? "-" : "+") << format_real(std::abs(z.imag())) << "i";
  throw Error(ErrorCode::PoleAtEvaluationPoint, os.str());
}

Complex ipow(Complex b, int k) {
  Complex r(1.0, 0.0);
  Complex x = b;
  unsigned e = static_cast<unsigned>(k < 0 ? -static_cast<long>(k) : k);
  while (e) {
    if (e & 1u) r *= x;
    x *= x;
    e >>= 1;
  }
  return k < 0 ? 1.0 / r : r;
}

Complex eval(const Node* n, Complex z) {
  switch (n->kind) {
    case Kind::Literal: return n->value;
    case Kind::Var: return z;
    case Kind::Neg: return -eval(n->lhs.get(), z);
    case Kind::Conj: return std::conj(eval(n->lhs.get(), z));
    case Kind::Re: return eval(n->lhs.get(), z).real();
    case Kind::Im: return eval(n->lhs.get(), z).imag();
    case Kind::Exp: return std::exp(eval(n->lhs.get(), z));
    case Kind::Add: return eval(n->lhs.get(), z) + eval(n->rhs.get(), z);
    case Kind::Sub: return eval(n->lhs.get(), z) - eval(n->rhs.get(), z);
    case Kind::Mul: return eval(n->lhs.get(), z) * eval(n->rhs.get(), z);
    case Kind::Div: {
      const Complex den = eval(n->rhs.get(), z);
      if (std::abs(den) < kPoleTolerance) throw_pole(n, z);
      return eval(n->lhs.get(), z) / den;
    }
    case Kind::Pow: {
      const Complex b = eval(n->lhs.get(), z);
      if (n->exponent < 0 && std::abs(b) < kPoleTolerance) throw_pole(n, z);
      return ipow(b, n->exponent);
    }
  }
  return {};
}

class Parser {
 public:
  Parser(std::string_view text, bool constant_mode) : s_(text), constant_mode_(constant_mode) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  bool constant_mode_;

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('+')) lhs = Expr::binary(Kind::Add, lhs, term(), at);
      else if (accept('-')) lhs = Expr::binary(Kind::Sub, lhs, term(), at);
      else return lhs;
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('*')) lhs = Expr::binary(Kind::Mul, lhs, unary(), at);
      else if (accept('/')) lhs = Expr::binary(Kind::Div, lhs, unary(), at);
      else return lhs;
    }
  }

  Expr unary() {
    skip();
    const std::size_t at = pos_;
    if (accept('-')) return Expr::unary(Kind::Neg, unary(), at);
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (!accept('^')) return base;
      base = Expr::power(base, integer(), at);
    }
  }

  int integer() {
    skip();
    const bool paren = accept('(');
    skip();
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    const long v = std::strtol(std::string(s_.substr(start, pos_ - start)).c_str(), nullptr, 10);
    if (v > 4096) {
      pos_ = start;
      fail("exponent too large");
    }
    if (paren) expect(')');
    return sign * static_cast<int>(v);
  }

  Expr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t d = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return pos_ - d;
    };
    std::size_t n = digits();
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      n += digits();
    }
    if (n == 0) {
      pos_ = start;
      fail("malformed number");
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      const std::size_t save = pos_;
      ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      if (digits() == 0) pos_ = save;
    }
    const double v = std::strtod(std::string(s_.substr(start, pos_ - start)).c_str(), nullptr);
    if (pos_ < s_.size() && s_[pos_] == 'i' &&
        !(pos_ + 1 < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])) || s_[pos_ + 1] == '_'))) {
      ++pos_;
      return Expr::literal(Complex(0.0, v));
    }
    return Expr::literal(Complex(v, 0.0));
  }

  Expr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const std::size_t at = pos_;
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string_view id = s_.substr(at, pos_ - at);
      if (id == "z") {
        if (constant_mode_) throw Error(ErrorCode::UnknownIdentifier, "'z' is not allowed in a constant at offset " + std::to_string(at));
        return Expr::var();
      }
      if (id == "i") return Expr::literal(Complex(0.0, 1.0));
      if (constant_mode_ && id == "pi") return Expr::literal(Complex(kPi, 0.0));
      Kind k;
      if (id == "conj") k = Kind::Conj;
      else if (id == "re") k = Kind::Re;
      else if (id == "im") k = Kind::Im;
      else if (constant_mode_ && id == "exp") k = Kind::Exp;
      else throw Error(ErrorCode::UnknownIdentifier, "unknown identifier '" + std::string(id) + "' at offset " + std::to_string(at));
      expect('(');
      Expr arg = expr();
      expect(')');
      return Expr::unary(k, arg, at);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

Expr Expr::literal(Complex c) { return Expr(make_node({Kind::Literal, c, 0, 0, nullptr, nullptr})); }
Expr Expr::var() { return Expr(make_node({Kind::Var, {}, 0, 0, nullptr, nullptr})); }
Expr Expr::unary(Kind kind, const Expr& arg, std::size_t offset) {
  return Expr(make_node({kind, {}, 0, offset, arg.root_, nullptr}));
}
Expr Expr::binary(Kind kind, const Expr& lhs, const Expr& rhs, std::size_t offset) {
  if (!is_binary(kind)) throw Error(ErrorCode::InvalidArgument, "not a binary operator");
  return Expr(make_node({kind, {}, 0, offset, lhs.root_, rhs.root_}));
}
Expr Expr::power(const Expr& base, int exponent, std::size_t offset) {
  return Expr(make_node({Kind::Pow, {}, exponent, offset, base.root_, nullptr}));
}

bool Expr::depends_on_z() const { return mentions_z(root_.get()); }

Complex Expr::operator()(Complex z) const {
  if (!root_) throw Error(ErrorCode::InvalidArgument, "evaluating an empty expression");
  return eval(root_.get(), z);
}

bool operator==(const Expr& a, const Expr& b) { return equal_nodes(a.root(), b.root()); }

Expr operator+(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::Add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::Sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::Mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::Div, a, b); }
Expr operator-(const Expr& a) { return Expr::unary(Expr::Kind::Neg, a); }
Expr conj(const Expr& a) { return Expr::unary(Expr::Kind::Conj, a); }
Expr pow(const Expr& a, int k) { return Expr::power(a, k); }

Expr parse_expr(std::string_view text) { return Parser(text, false).parse(); }

Complex parse_constant(std::string_view text) { return Parser(text, true).parse()(Complex{}); }

std::string to_string(const Expr& e) {
  if (e.empty()) return "";
  std::ostringstream os;
  print(e.root(), os);
  return os.str();
}

std::vector<Complex> eval_expr(const Expr& e, std::span<const Complex> points) {
  std::vector<Complex> out;
  out.reserve(points.size());
  for (Complex z : points) out.push_back(e(z));
  return out;
}

BoundarySamples sample_boundary(const Expr& e, const BoundaryGrid& grid) {
  return BoundarySamples{eval_expr(e, grid.nodes())};
}

namespace builtin {

Expr conj_z() { return conj(Expr::var()); }

Expr zpow(int n) { return pow(Expr::var(), n); }

Expr runge(const CircleDomain& domain, std::size_t k, int n) {
  if (k < 1 || k >= domain.m()) throw Error(ErrorCode::InvalidArgument, "runge: hole index out of range");
  const Circle& h = domain.hole(k - 1);
  return pow(Expr::literal(h.radius) / (Expr::var() - Expr::literal(h.center)), n);
}

Expr outer_pow(const CircleDomain& domain, int n) {
  const Circle& o = domain.outer();
  if (o.center == Complex(0.0, 0.0) && o.radius == 1.0) return zpow(n);
  return pow((Expr::var() - Expr::literal(o.center)) / Expr::literal(o.radius), n);
}

Expr lookup(std::string_view text, const CircleDomain& domain) {
  std::istringstream in{std::string(text)};
  std::string name;
  in >> name;
  if (name == "conj_z") {
    std::string rest;
    return (in >> rest) ? Expr{} : conj_z();
  }
  if (name == "zpow") {
    int n;
    std::string rest;
    if (in >> n && !(in >> rest)) return zpow(n);
    return Expr{};
  }
  if (name == "runge") {
    long k;
    int n;
    std::string rest;
    if (in >> k >> n && !(in >> rest) && k >= 1) return runge(domain, static_cast<std::size_t>(k), n);
    return Expr{};
  }
  return Expr{};
}

}  // namespace builtin

}  // namespace conjp
