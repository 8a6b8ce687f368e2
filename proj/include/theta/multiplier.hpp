#pragma once

// Multiplier systems: nu_eta on all of SL(2,Z) and the characters nu_F, nu_G of
//   F(tau) = eta((tau-1)/3) eta((tau+1)/3)   on Gamma_{theta,3},
//   G(tau) = eta((tau-1)/4) eta((tau+1)/4)   on Gamma_{theta,4},
// where Gamma_{theta,N} = { M in SL(2,Z) : a = d and b = -c mod N }.
//
// All values are exact 24th roots of unity. nu_F(M) = exp(pi i f(M) / 6) and
// nu_G(M) = exp(pi i g(M) / 6) with integer-valued branch functions f and g.

#include "theta/arith.hpp"
#include "theta/errors.hpp"
#include "theta/root24.hpp"
#include "theta/sl2z.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>

namespace theta {

/// M in Gamma_{theta,N}: a = d and b = -c mod N. Every matrix is a member for N = 1.
template <class Int>
bool is_member(const BasicMat2<Int>& m, std::int64_t level)
{
    if (level < 1)
        throw invalid_argument("membership: level must be at least 1, got "
                               + std::to_string(level));
    const Int n(level);
    return (m.a() - m.d()) % n == 0 && (m.b() + m.c()) % n == 0;
}

namespace detail {

template <class Int>
void require_member(const BasicMat2<Int>& m, std::int64_t level, const char* who)
{
    if (!is_member(m, level))
        throw not_a_member(std::string(who) + ": (" + m.to_string()
                           + ") is not in Gamma_theta," + std::to_string(level));
}

inline void require_level(int level, const char* who)
{
    if (level != 3 && level != 4)
        throw invalid_argument(std::string(who) + ": level must be 3 or 4, got "
                               + std::to_string(level));
}

template <class Int>
Int exact_div(const Int& x, int den, const char* where)
{
    if (x % den != 0)
        throw divisibility_violation(std::string(where) + ": " + detail::to_string(x)
                                     + " is not divisible by " + std::to_string(den));
    return x / den;
}

} // namespace detail

/// nu_eta(M) by Knopp's formula, split on the parity of c.
template <class Int>
Root24 nu_eta(const BasicMat2<Int>& m)
{
    const Int& a = m.a();
    const Int& b = m.b();
    const Int& c = m.c();
    const Int& d = m.d();
    const Int common = (a + d) * c - b * d * (c * c - 1);
    int symbol;
    Int bracket;
    if (is_odd(c)) {
        symbol = symbol_upper_star(d, c);
        bracket = common - 3 * c;
    } else {
        symbol = symbol_lower_star(c, d);
        bracket = common + 3 * d - 3 - 3 * c * d;
    }
    // symbol * exp(pi i bracket / 12) = exp(2 pi i (bracket + 12 [symbol = -1]) / 24)
    return Root24::from_exponent(Int(bracket + (symbol == -1 ? 12 : 0)));
}

// ---------------------------------------------------------------------------
// Branches

enum class ResidueClass {
    plus_minus_identity,
    plus_minus_t,
    /// Level 4 only: +-(1,2;2,1) (c even) and +-(2,-1;1,2) (c odd).
    plus_minus_s2_class,
};

enum class Parity { even, odd };

struct MultiplierBranch {
    int level = 3;
    ResidueClass residue_class = ResidueClass::plus_minus_identity;
    Parity c_parity = Parity::even;

    friend bool operator==(const MultiplierBranch&, const MultiplierBranch&) = default;
};

inline std::string to_string(ResidueClass r)
{
    switch (r) {
    case ResidueClass::plus_minus_identity: return "+-I";
    case ResidueClass::plus_minus_t: return "+-T";
    case ResidueClass::plus_minus_s2_class: return "+-S2class";
    }
    return "?";
}

inline std::string to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

inline std::string to_string(const MultiplierBranch& b)
{
    return "level " + std::to_string(b.level) + ", " + to_string(b.residue_class) + ", c "
           + to_string(b.c_parity);
}

template <class Int>
MultiplierBranch branch_of(const BasicMat2<Int>& m, int level)
{
    detail::require_level(level, "branch_of");
    detail::require_member(m, level, "branch_of");
    const Parity parity = is_odd(m.c()) ? Parity::odd : Parity::even;
    const ResidueMat r = reduce_mod(m, level);
    auto matches = [&r, level](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
        const ResidueMat x = ResidueMat::make(level, a, b, c, d);
        return r == x || r == -x;
    };
    ResidueClass cls;
    if (level == 3) {
        cls = matches(1, 0, 0, 1) ? ResidueClass::plus_minus_identity : ResidueClass::plus_minus_t;
    } else {
        Parity implied;
        if (matches(1, 0, 0, 1)) {
            cls = ResidueClass::plus_minus_identity;
            implied = Parity::even;
        } else if (matches(1, 2, 2, 1)) {
            cls = ResidueClass::plus_minus_s2_class;
            implied = Parity::even;
        } else if (matches(0, -1, 1, 0)) {
            cls = ResidueClass::plus_minus_t;
            implied = Parity::odd;
        } else {
            cls = ResidueClass::plus_minus_s2_class;
            implied = Parity::odd;
        }
        if (implied != parity)
            throw std::logic_error("branch_of: residue class mod 4 does not fix the parity of c");
    }
    return {level, cls, parity};
}

// ---------------------------------------------------------------------------
// Branch functions f and g

/// Constant in the level-3 "+-I, c even" branch: 3(d-1), or the candidate 3d + 6.
/// The oracle rules out the candidate; it is kept for arbitration.
enum class FVariant { primary, alternate_constant };

/// Readings of the level-4 "c odd" formula. `cd_product` replaces -cd(1+bc)
/// by -cd(1+cd); `alternate_constant` replaces 3(c+d-2) by 3(d-1). Only the
/// default survives the oracle; the others are kept for arbitration.
struct GVariant {
    bool cd_product = false;
    bool alternate_constant = false;

    friend bool operator==(const GVariant&, const GVariant&) = default;

    std::string name() const
    {
        std::string s = cd_product ? "1+cd" : "1+bc";
        s += alternate_constant ? ", 3(d-1)" : ", 3(c+d-2)";
        return s;
    }

    static constexpr std::array<GVariant, 4> all()
    {
        return {GVariant{false, false}, GVariant{true, false}, GVariant{false, true},
                GVariant{true, true}};
    }
};

inline std::string to_string(FVariant v)
{
    return v == FVariant::primary ? "3(d-1)" : "3d+6";
}

/// f(M) for M in Gamma_{theta,3}; nu_F(M) = exp(pi i f(M) / 6).
template <class Int>
Int f_value(const BasicMat2<Int>& m, FVariant variant = FVariant::primary)
{
    const MultiplierBranch br = branch_of(m, 3);
    const Int& a = m.a();
    const Int& b = m.b();
    const Int& c = m.c();
    const Int& d = m.d();
    using detail::exact_div;
    const bool odd = br.c_parity == Parity::odd;
    if (br.residue_class == ResidueClass::plus_minus_identity) {
        if (odd)
            return 3 * c + exact_div<Int>((a + d) * c, 3, "f_value") + exact_div<Int>(4 * b * d, 3, "f_value");
        const Int constant = variant == FVariant::primary ? Int(3 * (d - 1)) : Int(3 * d + 6);
        return constant + exact_div<Int>((b - c) * d, 3, "f_value");
    }
    if (odd)
        return 3 * (c + 2) + exact_div<Int>((a + d) * c, 3, "f_value");
    return 3 * (d + 1) + exact_div<Int>((b - c) * d, 3, "f_value") + exact_div<Int>(4 * a * c, 3, "f_value");
}

/// g(M) for M in Gamma_{theta,4}; nu_G(M) = exp(pi i g(M) / 6).
template <class Int>
Int g_value(const BasicMat2<Int>& m, GVariant variant = {})
{
    const MultiplierBranch br = branch_of(m, 4);
    const Int& a = m.a();
    const Int& b = m.b();
    const Int& c = m.c();
    const Int& d = m.d();
    using detail::exact_div;
    if (br.c_parity == Parity::odd) {
        const Int constant = variant.alternate_constant ? Int(3 * (d - 1)) : Int(3 * (c + d - 2));
        const Int inner = variant.cd_product ? Int(1 + c * d) : Int(1 + b * c);
        return constant + exact_div<Int>((a + d) * c, 4, "g_value")
               + exact_div<Int>((b + c) * d, 4, "g_value") - c * d * inner;
    }
    return 3 * (d - c - 1) + exact_div<Int>((b - c) * d, 4, "g_value")
           + exact_div<Int>((a - d) * c, 4, "g_value") + c * d * (1 - a * d);
}

namespace detail {

template <class Int>
Root24 root_from_twelfth(const Int& value)
{
    // exp(pi i v / 6) = exp(2 pi i (2 v) / 24)
    return Root24::from_exponent(Int(2 * floor_mod(value, Int(12))));
}

} // namespace detail

template <class Int>
Root24 nu_F(const BasicMat2<Int>& m, FVariant variant = FVariant::primary)
{
    return detail::root_from_twelfth(f_value(m, variant));
}

template <class Int>
Root24 nu_G(const BasicMat2<Int>& m, GVariant variant = {})
{
    return detail::root_from_twelfth(g_value(m, variant));
}

/// f(M) at level 3, g(M) at level 4.
template <class Int>
Int branch_value(const BasicMat2<Int>& m, int level)
{
    detail::require_level(level, "branch_value");
    return level == 3 ? f_value(m) : g_value(m);
}

/// nu_F at level 3, nu_G at level 4.
template <class Int>
Root24 nu(const BasicMat2<Int>& m, int level)
{
    return detail::root_from_twelfth(branch_value(m, level));
}

// ---------------------------------------------------------------------------
// Decomposition path

/// The matrices M1, M2 carrying the two eta arguments (tau -+ 1)/N of the
/// product to those of M tau, so that nu(M) = nu_eta(M1) nu_eta(M2). Both have
/// lower-left entry N c; which shift pairs with which depends on the branch.
template <class Int>
std::pair<BasicMat2<Int>, BasicMat2<Int>> decomposition_factors(const BasicMat2<Int>& m,
                                                                int level)
{
    const MultiplierBranch br = branch_of(m, level);
    const Int& a = m.a();
    const Int& b = m.b();
    const Int& c = m.c();
    const Int& d = m.d();
    const Int nc = level * c;
    // Same-shift construction for +-I (level 3) and for the c-even classes (level 4).
    const bool same_shift = level == 3 ? br.residue_class == ResidueClass::plus_minus_identity
                                       : br.c_parity == Parity::even;
    using detail::exact_div;
    if (same_shift)
        return {BasicMat2<Int>(a - c, exact_div<Int>(b - d + a - c, level, "decomposition"), nc, d + c),
                BasicMat2<Int>(a + c, exact_div<Int>(b + d - a - c, level, "decomposition"), nc, d - c)};
    return {BasicMat2<Int>(a - c, exact_div<Int>(b - d - a + c, level, "decomposition"), nc, d - c),
            BasicMat2<Int>(a + c, exact_div<Int>(b + d + a + c, level, "decomposition"), nc, d + c)};
}

template <class Int>
Root24 nu_via_decomposition(const BasicMat2<Int>& m, int level)
{
    const auto [m1, m2] = decomposition_factors(m, level);
    return nu_eta(m1) * nu_eta(m2);
}

} // namespace theta
