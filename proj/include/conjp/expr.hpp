#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conjp/geometry.hpp"

namespace conjp {

/// Immutable expression tree over one complex variable `z`.
///
/// Grammar (EBNF, whitespace ignored):
///
///     expr    = term , { ("+" | "-") , term } ;
///     term    = unary , { ("*" | "/") , unary } ;
///     unary   = ("-" | "+") , unary | power ;
///     power   = primary , { "^" , integer } ;
///     integer = [ "+" | "-" ] , digits | "(" , [ "+" | "-" ] , digits , ")" ;
///     primary = number , [ "i" ] | "i" | "z"
///             | ("conj" | "re" | "im") , "(" , expr , ")"
///             | "(" , expr , ")" ;
///     number  = digits , [ "." , [ digits ] ] , [ ("e" | "E") , [ "+" | "-" ] , digits ]
///             | "." , digits , [ exponent ] ;
///
/// Only integer exponents are accepted. Constant expressions (see
/// parse_constant) additionally accept `pi` and `exp(...)`.
class Expr {
 public:
  enum class Kind { Literal, Var, Neg, Conj, Re, Im, Exp, Add, Sub, Mul, Div, Pow };

  struct Node {
    Kind kind;
    Complex value{};            // Literal
    int exponent = 0;           // Pow
    std::size_t offset = 0;     // source position, 0 for built trees
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  Expr() = default;
  explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  static Expr literal(Complex c);
  static Expr var();
  static Expr unary(Kind kind, const Expr& arg, std::size_t offset = 0);
  static Expr binary(Kind kind, const Expr& lhs, const Expr& rhs, std::size_t offset = 0);
  static Expr power(const Expr& base, int exponent, std::size_t offset = 0);

  const Node* root() const { return root_.get(); }
  bool empty() const { return !root_; }
  /// True if the tree mentions z.
  bool depends_on_z() const;

  Complex operator()(Complex z) const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  std::shared_ptr<const Node> root_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr conj(const Expr& a);
Expr pow(const Expr& a, int k);

/// Throws SyntaxError (with byte offset) or UnknownIdentifier.
Expr parse_expr(std::string_view text);

/// Parses a z-free expression that may use `pi` and `exp(...)`, e.g.
/// "0.85*exp(i*pi/7)", and evaluates it.
Complex parse_constant(std::string_view text);

/// Fully parenthesised form; parse_expr(to_string(e)) == e for parsed trees.
std::string to_string(const Expr& e);

/// Throws PoleAtEvaluationPoint when a division or negative power meets a
/// denominator of modulus below 1e-14.
std::vector<Complex> eval_expr(const Expr& e, std::span<const Complex> points);

BoundarySamples sample_boundary(const Expr& e, const BoundaryGrid& grid);

/// Named constructors so scripts can avoid string parsing.
namespace builtin {

Expr conj_z();
Expr zpow(int n);
/// (r_k / (z - c_k))^n for hole k (1-based).
Expr runge(const CircleDomain& domain, std::size_t k, int n);
/// ((z - c_m) / r_m)^n for the outer circle.
Expr outer_pow(const CircleDomain& domain, int n);

/// Resolves "conj_z", "zpow N" or "runge K N"; returns an empty Expr when the
/// text is not a registry call.
Expr lookup(std::string_view text, const CircleDomain& domain);

}  // namespace builtin

}  // namespace conjp
