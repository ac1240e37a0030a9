#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mckay {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;  // row-major
using RatMatrix = std::vector<RatVector>;

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const RatVector& a, const IntVector& b);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector make_primitive(IntVector v);

/// Smallest positive multiple of v with integer entries, made primitive.
IntVector clear_denominators(const RatVector& v);

RatVector to_rational(const IntVector& v);
IntVector to_integer(const std::vector<std::int64_t>& v);
RatVector to_rational(const std::vector<std::int64_t>& v);

/// Least common multiple of the denominators.
Integer common_denominator(const RatVector& v);

/// Always "num/den", including integers ("3/1").
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", with optional sign. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Lexicographic comparison; used for canonical ordering throughout.
bool lex_less(const RatVector& a, const RatVector& b);
bool lex_less(const IntVector& a, const IntVector& b);

/// Reduced row echelon form over Q. Zero rows are dropped; returns the
/// pivot columns alongside.
struct Echelon {
    RatMatrix rows;
    std::vector<std::size_t> pivots;
};
Echelon row_echelon(RatMatrix rows, std::size_t cols);

std::size_t rank(const RatMatrix& rows, std::size_t cols);

/// Rational basis of {x : A x = 0}, as RREF-derived vectors.
RatMatrix nullspace(const RatMatrix& a, std::size_t cols);

/// Subtracts multiples of the echelon rows so that x vanishes on every
/// pivot column. Gives a canonical representative of x modulo span(rows).
RatVector reduce_modulo(const Echelon& basis, RatVector x);

}  // namespace mckay
