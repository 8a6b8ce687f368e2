#pragma once

// Exact arithmetic in SL(2,Z) and SL(2,Z/N).

#include "theta/arith.hpp"
#include "theta/errors.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace theta {

/// Integer 2x2 matrix (a, b; c, d) with determinant 1.
template <class Int>
class BasicMat2 {
public:
    using int_type = Int;

    BasicMat2() : a_(1), b_(0), c_(0), d_(1) {}

    /// Throws invalid_argument unless a*d - b*c == 1.
    BasicMat2(Int a, Int b, Int c, Int d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
    {
        if (a_ * d_ - b_ * c_ != 1)
            throw invalid_argument("matrix (" + to_string() + ") does not have determinant 1");
    }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    static BasicMat2 identity() { return {}; }
    static BasicMat2 translation(const Int& n) { return unchecked(Int(1), n, Int(0), Int(1)); }

    /// S = (1, 1; 0, 1).
    static BasicMat2 S() { return unchecked(1, 1, 0, 1); }
    /// T = (0, -1; 1, 0).
    static BasicMat2 T() { return unchecked(0, -1, 1, 0); }

    BasicMat2 inverse() const { return unchecked(d_, -b_, -c_, a_); }

    BasicMat2 operator-() const { return unchecked(-a_, -b_, -c_, -d_); }

    friend BasicMat2 operator*(const BasicMat2& x, const BasicMat2& y)
    {
        return unchecked(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                         x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
    }

    BasicMat2& operator*=(const BasicMat2& y) { return *this = *this * y; }

    friend bool operator==(const BasicMat2& x, const BasicMat2& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const BasicMat2& x, const BasicMat2& y) { return !(x == y); }

    /// M^n for any integer n (negative powers use the inverse).
    BasicMat2 pow(long long n) const
    {
        BasicMat2 base = n < 0 ? inverse() : *this;
        unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1
                                     : static_cast<unsigned long long>(n);
        BasicMat2 result;
        while (e != 0) {
            if (e & 1U)
                result *= base;
            base *= base;
            e >>= 1U;
        }
        return result;
    }

    /// Row-major "a,b,c,d".
    std::string to_string() const
    {
        return detail::to_string(a_) + "," + detail::to_string(b_) + ","
               + detail::to_string(c_) + "," + detail::to_string(d_);
    }

    friend std::ostream& operator<<(std::ostream& os, const BasicMat2& m)
    {
        return os << "(" << m.to_string() << ")";
    }

    /// Skips the determinant check; only for products of known unimodular factors.
    static BasicMat2 unchecked(Int a, Int b, Int c, Int d)
    {
        BasicMat2 m;
        m.a_ = std::move(a);
        m.b_ = std::move(b);
        m.c_ = std::move(c);
        m.d_ = std::move(d);
        return m;
    }

private:
    Int a_, b_, c_, d_;
};

using Mat2 = BasicMat2<big_int>;

/// Parses the row-major text form "a,b,c,d" (no whitespace, signs allowed).
inline Mat2 parse_matrix(std::string_view text)
{
    std::vector<big_int> e;
    std::size_t pos = 0;
    while (true) {
        std::size_t end = text.find(',', pos);
        const std::string_view tok = text.substr(pos, end == std::string_view::npos ? end : end - pos);
        const std::size_t sign = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
        if (tok.size() == sign
            || tok.find_first_not_of("0123456789", sign) != std::string_view::npos)
            throw invalid_argument("bad matrix entry '" + std::string(tok) + "' in '"
                                   + std::string(text) + "'");
        e.emplace_back(std::string(tok.substr(tok[0] == '+' ? 1 : 0)));
        if (end == std::string_view::npos)
            break;
        pos = end + 1;
    }
    if (e.size() != 4)
        throw invalid_argument("matrix must have exactly four comma-separated entries: '"
                               + std::string(text) + "'");
    return Mat2(e[0], e[1], e[2], e[3]);
}

/// Moebius action (a tau + b)/(c tau + d) for any complex type C on the upper half plane.
template <class Int, class C>
C moebius(const BasicMat2<Int>& m, const C& tau)
{
    using R = typename C::value_type;
    if (!(tau.imag() > 0))
        throw invalid_argument("moebius: tau must lie in the upper half plane");
    const R a = static_cast<R>(m.a());
    const R b = static_cast<R>(m.b());
    const R c = static_cast<R>(m.c());
    const R d = static_cast<R>(m.d());
    return (tau * a + b) / (tau * c + d);
}

// ---------------------------------------------------------------------------
// SL(2, Z/N)

/// Matrix with entries in Z/N, stored as least nonnegative residues.
struct ResidueMat {
    std::int64_t modulus = 2;
    std::array<std::int64_t, 4> e{1, 0, 0, 1};

    std::int64_t a() const { return e[0]; }
    std::int64_t b() const { return e[1]; }
    std::int64_t c() const { return e[2]; }
    std::int64_t d() const { return e[3]; }

    static ResidueMat make(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c,
                           std::int64_t d)
    {
        return {n, {floor_mod(a, n), floor_mod(b, n), floor_mod(c, n), floor_mod(d, n)}};
    }

    std::int64_t det() const { return floor_mod(e[0] * e[3] - e[1] * e[2], modulus); }

    bool is_identity() const { return e == std::array<std::int64_t, 4>{1, 0, 0, 1}; }

    ResidueMat operator-() const { return make(modulus, -e[0], -e[1], -e[2], -e[3]); }

    friend ResidueMat operator*(const ResidueMat& x, const ResidueMat& y)
    {
        return make(x.modulus, x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3],
                    x.e[2] * y.e[0] + x.e[3] * y.e[2], x.e[2] * y.e[1] + x.e[3] * y.e[3]);
    }

    ResidueMat inverse() const { return make(modulus, e[3], -e[1], -e[2], e[0]); }

    friend auto operator<=>(const ResidueMat&, const ResidueMat&) = default;

    std::string to_string() const
    {
        std::ostringstream os;
        os << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3];
        return os.str();
    }
};

/// lambda_N: entrywise least nonnegative residues mod N.
template <class Int>
ResidueMat reduce_mod(const BasicMat2<Int>& m, std::int64_t n)
{
    if (n < 2)
        throw invalid_argument("reduce_mod: modulus must be at least 2, got " + std::to_string(n));
    auto r = [n](const Int& x) { return static_cast<std::int64_t>(floor_mod(x, Int(n))); };
    return {n, {r(m.a()), r(m.b()), r(m.c()), r(m.d())}};
}

/// True iff M lies in Gamma(N), i.e. M = I mod N.
template <class Int>
bool in_principal_congruence(const BasicMat2<Int>& m, std::int64_t n)
{
    return reduce_mod(m, n).is_identity();
}

inline constexpr std::int64_t max_enumeration_modulus = 64;

/// All of SL(2, Z/N), in lexicographic order of (a, b, c, d).
inline std::vector<ResidueMat> enumerate_sl2(std::int64_t n)
{
    if (n < 2 || n > max_enumeration_modulus)
        throw invalid_argument("enumerate_sl2: modulus must lie in [2, "
                               + std::to_string(max_enumeration_modulus) + "], got "
                               + std::to_string(n));
    std::vector<ResidueMat> out;
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
            for (std::int64_t c = 0; c < n; ++c)
                for (std::int64_t d = 0; d < n; ++d)
                    if ((a * d - b * c - 1) % n == 0)
                        out.push_back({n, {a, b, c, d}});
    return out;
}

/// N^3 prod_{p | N} (1 - p^-2).
inline std::int64_t sl2_order(std::int64_t n)
{
    std::int64_t order = n * n * n;
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            order = order / (p * p) * (p * p - 1);
            while (m % p == 0)
                m /= p;
        }
    }
    if (m > 1)
        order = order / (m * m) * (m * m - 1);
    return order;
}

/// Some M in SL(2,Z) with reduce_mod(M, N) == r (reduction is surjective).
inline Mat2 lift_to_sl2z(const ResidueMat& r)
{
    const std::int64_t n = r.modulus;
    if (r.det() != 1 % n)
        throw invalid_argument("lift_to_sl2z: residue matrix " + r.to_string()
                               + " does not have determinant 1 mod " + std::to_string(n));
    // Bottom row: a coprime integer pair congruent to (c, d).
    big_int c = r.c() == 0 ? big_int(n) : big_int(r.c());
    big_int d = r.d();
    while (gcd_of(c, d) != 1)
        d += n;
    // Top row of some unimodular completion, via extended Euclid on (c, d).
    big_int x0 = 1, y0 = 0, x1 = 0, y1 = 1, u = d, v = c;
    while (v != 0) {
        big_int q = u / v;
        big_int t = u - q * v;
        u = v;
        v = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    // x0*d + y0*c = u = +-1
    big_int a0 = x0 * u;
    big_int b0 = -y0 * u;
    Mat2 base(a0, b0, c, d);
    // Two matrices with equal bottom rows differ by a left translation.
    const ResidueMat diff = r * reduce_mod(base, n).inverse();
    return Mat2::translation(big_int(diff.b())) * base;
}

// ---------------------------------------------------------------------------
// Words in S, T and random sampling

/// Product of a comma-separated word over {S, T, Sinv, Tinv}; "" is the identity.
inline Mat2 word_product(std::string_view word)
{
    Mat2 m;
    std::size_t pos = 0;
    while (pos < word.size()) {
        std::size_t end = word.find(',', pos);
        if (end == std::string_view::npos)
            end = word.size();
        const std::string_view tok = word.substr(pos, end - pos);
        if (tok == "S")
            m *= Mat2::S();
        else if (tok == "T")
            m *= Mat2::T();
        else if (tok == "Sinv")
            m *= Mat2::S().inverse();
        else if (tok == "Tinv")
            m *= Mat2::T().inverse();
        else
            throw invalid_argument("unknown generator '" + std::string(tok) + "' in word");
        pos = end + 1;
    }
    return m;
}

using rng_type = std::mt19937_64;

/// Product of 1..max_word_length generators drawn uniformly from {S, S^-1, T, T^-1}.
inline Mat2 random_element(rng_type& rng, int max_word_length)
{
    if (max_word_length < 1)
        throw invalid_argument("random_element: max_word_length must be at least 1");
    static const std::array<Mat2, 4> gens{Mat2::S(), Mat2::S().inverse(), Mat2::T(),
                                          Mat2::T().inverse()};
    std::uniform_int_distribution<int> length(1, max_word_length);
    std::uniform_int_distribution<int> pick(0, 3);
    Mat2 m;
    for (int i = length(rng); i > 0; --i)
        m *= gens[static_cast<std::size_t>(pick(rng))];
    return m;
}

inline Mat2 random_element(std::uint64_t seed, int max_word_length)
{
    rng_type rng(seed);
    return random_element(rng, max_word_length);
}

/// Rejection sampling: random words until one satisfies pred.
template <class Pred>
Mat2 sample_where(rng_type& rng, int max_word_length, Pred&& pred, long max_attempts = 1000000)
{
    for (long i = 0; i < max_attempts; ++i) {
        Mat2 m = random_element(rng, max_word_length);
        if (pred(m))
            return m;
    }
    throw invalid_argument("sample_where: no acceptable matrix after "
                           + std::to_string(max_attempts) + " draws");
}

} // namespace theta
