#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "weightlab/rational.hpp"

namespace weightlab {

using Monomial = std::vector<int>;

/// Graded lexicographic order: total degree first, then exponents lexicographically.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial over Q in a fixed number of variables; zero terms are never stored.
class Polynomial {
public:
  explicit Polynomial(std::size_t num_vars = 0) : n_(num_vars) {}
  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const { return n_; }
  const std::map<Monomial, Rational, GradedLex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial pow(unsigned e) const;
  bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  Rational evaluate(const RationalVector& point) const;
  std::string to_string(const std::vector<std::string>& names) const;

private:
  void require_same(const Polynomial& o) const;

  std::size_t n_;
  std::map<Monomial, Rational, GradedLex> terms_;
};

/**
 * Parses +, −, *, ^ (nonnegative integer exponent), parentheses, integers,
 * p/q literals and the given variable names. Throws InvalidArgument on
 * unknown names or malformed input.
 */
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);

/// t, u, v for up to three variables, x1..xn beyond.
std::vector<std::string> default_variable_names(std::size_t n);

/// Every monomial of total degree ≤ d, in graded lex order.
std::vector<Monomial> monomials_up_to(std::size_t num_vars, int d);

}  // namespace weightlab
