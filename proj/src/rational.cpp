#include "weightlab/rational.hpp"

#include <cctype>
#include <limits>

namespace weightlab {

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) return false;
  for (std::size_t k = pos; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
  }
  out = Integer(std::string(text.substr(pos)), 10);
  if (negative) out = -out;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  } else {
    if (!parse_integer(trim(text.substr(0, slash)), num) || !parse_integer(trim(text.substr(slash + 1)), den)) {
      throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return mpz_divisible_p(q.get_num_mpz_t(), q.get_den_mpz_t()) != 0; }

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw InvalidArgument("expected an integer, got " + to_string(q));
  const Integer n = q.get_num() / q.get_den();
  if (n > Integer(std::to_string(std::numeric_limits<std::int64_t>::max())) ||
      n < Integer(std::to_string(std::numeric_limits<std::int64_t>::min()))) {
    throw ResourceLimit("integer " + n.get_str() + " does not fit in 64 bits");
  }
  return std::stoll(n.get_str());
}

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational mod(const Rational& q, const Rational& m) {
  if (m <= 0) throw InvalidArgument("modulus must be positive");
  Rational ratio = q / m;
  Rational r = q - Rational(floor(ratio)) * m;
  r.canonicalize();
  return r;
}

bool rational_sqrt(const Rational& value, Rational& root) {
  Rational q = value;
  q.canonicalize();
  if (q < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string to_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace weightlab
