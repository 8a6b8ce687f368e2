#pragma once

// Integer number theory used by the multiplier formulas: floor division,
// the Jacobi symbol and Knopp's two sign-extended variants of it.
//
// Everything is templated on the integer type so the same code runs on
// built-in integers (tests, tables) and on boost::multiprecision::cpp_int.

#include "theta/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <type_traits>
#include <utility>

namespace theta {

using big_int = boost::multiprecision::cpp_int;

namespace detail {

template <class Int>
std::string to_string(const Int& x)
{
    if constexpr (std::is_integral_v<Int>)
        return std::to_string(x);
    else
        return x.str();
}

} // namespace detail

/// Least nonnegative residue of x modulo m (m > 0).
template <class Int, class Mod>
Int floor_mod(const Int& x, const Mod& m)
{
    Int r = x % static_cast<Int>(m);
    if (r < 0)
        r += static_cast<Int>(m);
    return r;
}

template <class Int>
bool is_odd(const Int& x)
{
    return x % 2 != 0;
}

template <class Int>
Int abs_value(const Int& x)
{
    return x < 0 ? Int(-x) : x;
}

/// sign(0) is +1, see symbol_lower_star.
template <class Int>
int sign_of(const Int& x)
{
    return x < 0 ? -1 : 1;
}

template <class Int>
Int gcd_of(Int x, Int y)
{
    x = abs_value(x);
    y = abs_value(y);
    while (y != 0) {
        Int r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

/// (-1)^e for any integer e, negative exponents included.
template <class Int>
int neg_one_pow(const Int& e)
{
    return e % 2 == 0 ? 1 : -1;
}

/// Jacobi symbol (c/d) for odd d >= 1, by iterated reciprocity.
/// Returns 0 iff gcd(c, d) > 1.
template <class Int>
int jacobi(const Int& c, const Int& d)
{
    if (d <= 0 || !is_odd(d))
        throw invalid_argument("jacobi: lower argument must be a positive odd integer, got "
                               + detail::to_string(d));
    Int a = floor_mod(c, d);
    Int n = d;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const Int r8 = n % 8;
            if (r8 == 3 || r8 == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

namespace detail {

template <class Int>
void require_odd_coprime(const Int& c, const Int& d, const char* who)
{
    if (!is_odd(d))
        throw invalid_argument(std::string(who) + ": lower argument must be odd, got "
                               + to_string(d));
    if (gcd_of(c, d) != 1)
        throw invalid_argument(std::string(who) + ": arguments must be coprime, got ("
                               + to_string(c) + ", " + to_string(d) + ")");
}

} // namespace detail

/// (c/d)^* = (c/|d|), for odd d and gcd(c, d) = 1.
template <class Int>
int symbol_upper_star(const Int& c, const Int& d)
{
    detail::require_odd_coprime(c, d, "symbol_upper_star");
    return jacobi(c, abs_value(d));
}

/// (c/d)_* = (c/|d|) * (-1)^{((sign c - 1)/2)((sign d - 1)/2)}.
/// The correction is -1 exactly when both c and d are negative; sign(0) = +1.
template <class Int>
int symbol_lower_star(const Int& c, const Int& d)
{
    detail::require_odd_coprime(c, d, "symbol_lower_star");
    const int correction = (sign_of(c) < 0 && sign_of(d) < 0) ? -1 : 1;
    return jacobi(c, abs_value(d)) * correction;
}

/// (c/(d-c))_* (c/(d+c))_* for odd c, even d, gcd(c, d) = 1.
/// Always equals (-1)^{(c-1)/2}; the product is evaluated literally so the
/// identity can be tested rather than assumed.
template <class Int>
int lemma_symbol_product(const Int& c, const Int& d)
{
    if (!is_odd(c) || is_odd(d))
        throw invalid_argument("lemma_symbol_product: needs c odd and d even, got ("
                               + detail::to_string(c) + ", " + detail::to_string(d) + ")");
    if (gcd_of(c, d) != 1)
        throw invalid_argument("lemma_symbol_product: arguments must be coprime");
    return symbol_lower_star(c, Int(d - c)) * symbol_lower_star(c, Int(d + c));
}

} // namespace theta
