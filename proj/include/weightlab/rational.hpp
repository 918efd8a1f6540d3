#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace weightlab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A configured size guard was exceeded.
class ResourceLimit : public Error {
public:
  using Error::Error;
};

/// The request is well formed but outside what the library constructs.
class NotSupported : public Error {
public:
  using Error::Error;
};

/**
 * Parses "p/q", "p" or a decimal-free signed integer pair into a canonical
 * rational. Throws InvalidArgument on malformed text or a zero denominator.
 */
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Requires is_integer(q) and that the value fits.
std::int64_t to_int64(const Rational& q);

/// Largest integer not exceeding q.
Integer floor(const Rational& q);

/// Representative of q modulo m (m > 0) in the half-open interval [0, m).
Rational mod(const Rational& q, const Rational& m);

/// True iff q is the square of a rational; on success writes the root (>= 0).
bool rational_sqrt(const Rational& q, Rational& root);

using RationalVector = std::vector<Rational>;

/// Lexicographic comparison; vectors of different length compare by size first.
bool lex_less(const RationalVector& a, const RationalVector& b);

struct RationalVectorLess {
  bool operator()(const RationalVector& a, const RationalVector& b) const { return lex_less(a, b); }
};

std::string to_string(const RationalVector& v);

}  // namespace weightlab
