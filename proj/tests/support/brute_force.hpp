#pragma once

// Slow reference computations used only by tests. Nothing here calls into the
// library's number theory; each routine goes the long way round.

#include <cstdint>
#include <cstdlib>
#include <set>
#include <vector>

namespace theta::testing {

/// Legendre symbol by enumerating the squares mod p.
inline int legendre_by_squares(std::int64_t a, std::int64_t p)
{
    const std::int64_t r = ((a % p) + p) % p;
    if (r == 0)
        return 0;
    std::set<std::int64_t> squares;
    for (std::int64_t x = 1; x < p; ++x)
        squares.insert(x * x % p);
    return squares.count(r) ? 1 : -1;
}

/// Jacobi symbol as a product of Legendre symbols over a trial-division factorization.
inline int jacobi_by_factoring(std::int64_t a, std::int64_t n)
{
    int result = 1;
    std::int64_t m = n;
    for (std::int64_t p = 3; p * p <= m; p += 2) {
        while (m % p == 0) {
            result *= legendre_by_squares(a, p);
            m /= p;
        }
    }
    if (m > 1)
        result *= legendre_by_squares(a, m);
    return result;
}

inline std::int64_t gcd_slow(std::int64_t a, std::int64_t b)
{
    a = std::llabs(a);
    b = std::llabs(b);
    std::int64_t g = 1;
    for (std::int64_t k = 1; k <= std::max(a, b); ++k)
        if (a % k == 0 && b % k == 0)
            g = k;
    return g;
}

/// |SL(2, Z/N)| by counting all N^4 candidate matrices.
inline std::int64_t count_sl2_brute(std::int64_t n)
{
    std::int64_t count = 0;
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
            for (std::int64_t c = 0; c < n; ++c)
                for (std::int64_t d = 0; d < n; ++d)
                    if (((a * d - b * c) % n + n) % n == 1 % n)
                        ++count;
    return count;
}

/// Plain 2x2 product on int64 entries, for cross-checking small matrices.
struct SmallMat {
    std::int64_t a, b, c, d;
    friend SmallMat operator*(const SmallMat& x, const SmallMat& y)
    {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                x.c * y.b + x.d * y.d};
    }
};

} // namespace theta::testing
