#include "weightlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace weightlab {

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw InvalidArgument("variable index out of range");
  Polynomial p(num_vars);
  Monomial m(num_vars, 0);
  m[index] = 1;
  p.add_term(m, 1);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  const auto& m = terms_.rbegin()->first;
  return std::accumulate(m.begin(), m.end(), 0);
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != n_) throw InvalidArgument("monomial has the wrong number of variables");
  Rational& slot = terms_[m];
  slot += c;
  slot.canonicalize();
  if (slot == 0) terms_.erase(m);
}

void Polynomial::require_same(const Polynomial& o) const {
  if (n_ != o.n_) throw InvalidArgument("polynomials in different numbers of variables");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same(o);
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(n_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same(o);
  Polynomial out(n_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(n_);
      for (std::size_t i = 0; i < n_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = constant(n_, 1);
  for (unsigned k = 0; k < e; ++k) out = out * *this;
  return out;
}

Rational Polynomial::evaluate(const RationalVector& point) const {
  if (point.size() != n_) {
    throw InvalidArgument("point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                          std::to_string(n_) + " variables");
  }
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < n_; ++i) {
      for (int k = 0; k < m[i]; ++k) term *= point[i];
    }
    total += term;
  }
  total.canonicalize();
  return total;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (names.size() != n_) throw InvalidArgument("wrong number of variable names");
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool constant_term = std::all_of(m.begin(), m.end(), [](int x) { return x == 0; });
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string factors;
    for (std::size_t i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += names[i];
      if (m[i] > 1) factors += "^" + std::to_string(m[i]);
    }
    if (constant_term) {
      out += weightlab::to_string(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += weightlab::to_string(mag) + "*" + factors;
    }
  }
  return out;
}

namespace {

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>& names) : s_(text), names_(names) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("cannot parse polynomial '" + std::string(s_) + "': " + why);
  }

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

  Polynomial expression() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const Rational d = number();
        if (d == 0) fail("division by zero");
        acc = acc * Polynomial::constant(names_.size(), 1 / d);
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer");
      const unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      if (e > 64) fail("exponent too large");
      return base.pow(e);
    }
    return base;
  }

  Rational number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return parse_rational(s_.substr(start, pos_ - start));
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Polynomial p = expression();
      if (!accept(')')) fail("missing ')'");
      return p;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(names_.size(), number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) fail("unknown variable '" + name + "'");
      return Polynomial::variable(names_.size(), static_cast<std::size_t>(it - names_.begin()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

std::vector<std::string> default_variable_names(std::size_t n) {
  if (n <= 3) {
    const std::vector<std::string> short_names = {"t", "u", "v"};
    return {short_names.begin(), short_names.begin() + static_cast<std::ptrdiff_t>(n)};
  }
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t num_vars, int d) {
  std::vector<Monomial> out;
  Monomial m(num_vars, 0);
  // Enumerate exponent vectors with entries in [0, d] and keep those of degree ≤ d.
  while (true) {
    if (std::accumulate(m.begin(), m.end(), 0) <= d) out.push_back(m);
    std::size_t i = 0;
    while (i < num_vars && m[i] == d) m[i++] = 0;
    if (i == num_vars) break;
    ++m[i];
  }
  std::sort(out.begin(), out.end(), GradedLex{});
  return out;
}

}  // namespace weightlab
