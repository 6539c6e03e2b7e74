#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace gw {

/// Arbitrary-precision signed integer. Every count produced by the library
/// is an Integer.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k). Zero when k < 0 or k > n. Throws DomainError for n < 0.
///
/// Values are served from a process-wide triangular table that grows on
/// demand; the table is guarded by a shared mutex, so concurrent callers
/// see identical results.
Integer binomial(std::int64_t n, std::int64_t k);

/// n!. Throws DomainError for n < 0.
Integer factorial(std::int64_t n);

/// base^exponent for a small base and a non-negative exponent.
Integer ipow(std::int64_t base, unsigned exponent);

/// num / den in lowest terms with a positive denominator. Throws
/// DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Converts a rational known to be integral. Throws InternalError otherwise.
Integer require_integral(const Rational& value);

}  // namespace gw
