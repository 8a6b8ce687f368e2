#pragma once

// Kernels of nu_{F^k} (level 3) and nu_{G^k} (level 4). The kernel depends only
// on k mod 12. Two independent predicates are provided: direct evaluation of
// nu^k, and the congruence characterizations in terms of the matrix entries.

#include "theta/errors.hpp"
#include "theta/multiplier.hpp"
#include "theta/sl2z.hpp"

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace theta {

/// The exponent k of F^k or G^k, reduced mod 12, together with the level.
struct PowerClass {
    int k_mod_12 = 0;
    int level = 3;

    /// Accepts any integer k; level must be 3 or 4.
    static PowerClass make(long long k, int level)
    {
        detail::require_level(level, "PowerClass");
        return {static_cast<int>(floor_mod(k, 12LL)), level};
    }

    /// Size of the image of nu^k, i.e. the index of the kernel: 12 / gcd(k, 12).
    int image_size() const { return 12 / std::gcd(k_mod_12, 12); }

    /// "0", "6", "+-3", "+-4", "+-2" or "+-1,+-5".
    std::string label() const
    {
        switch (std::gcd(k_mod_12, 12)) {
        case 12: return "0";
        case 6: return "6";
        case 3: return "+-3";
        case 4: return "+-4";
        case 2: return "+-2";
        default: return "+-1,+-5";
        }
    }

    friend bool operator==(const PowerClass&, const PowerClass&) = default;
};

/// nu(M)^k at the class's level.
template <class Int>
Root24 power_value(const BasicMat2<Int>& m, const PowerClass& pc)
{
    return nu(m, pc.level).pow(pc.k_mod_12);
}

/// nu^k(M) = 1, i.e. k * f(M) (or k * g(M)) = 0 mod 12.
template <class Int>
bool in_kernel_by_value(const BasicMat2<Int>& m, const PowerClass& pc)
{
    const Int v = branch_value(m, pc.level);
    return floor_mod(Int(v * pc.k_mod_12), Int(12)) == 0;
}

namespace detail {

template <class Int>
bool mod_eq(const Int& x, const Int& y, int n)
{
    return floor_mod(Int(x - y), Int(n)) == 0;
}

// k = 6, level 3: M mod 2 is one of I, (0,1;1,1), (1,1;1,0).
template <class Int>
bool kernel3_order2(const BasicMat2<Int>& m)
{
    const ResidueMat r = reduce_mod(m, 2);
    return r == ResidueMat::make(2, 1, 0, 0, 1) || r == ResidueMat::make(2, 0, 1, 1, 1)
           || r == ResidueMat::make(2, 1, 1, 1, 0);
}

// k = +-3, level 3: a condition mod 4 chosen by branch.
template <class Int>
bool kernel3_order4(const BasicMat2<Int>& m)
{
    const MultiplierBranch br = branch_of(m, 3);
    const Int& a = m.a();
    const Int& b = m.b();
    const Int& c = m.c();
    const Int& d = m.d();
    const bool odd = br.c_parity == Parity::odd;
    if (br.residue_class == ResidueClass::plus_minus_identity)
        return odd ? mod_eq<Int>(a + d, Int(-1), 4) : mod_eq<Int>(b - c, d - 1, 4);
    return odd ? mod_eq<Int>(a + d, Int(1), 4) : mod_eq<Int>(b - c, -d - 1, 4);
}

// k = +-4, level 3: b/3 = c/3 mod 3 when 3 | b, c; a/3 = -d/3 mod 3 when 3 | a, d.
template <class Int>
bool kernel3_order3(const BasicMat2<Int>& m)
{
    if (m.b() % 3 == 0 && m.c() % 3 == 0)
        return mod_eq<Int>(m.b() / 3, m.c() / 3, 3);
    return mod_eq<Int>(m.a() / 3, -(m.d() / 3), 3);
}

// k = 6, level 4: b - c = 0 mod 8 when b, c are even; a + d = 4 mod 8 otherwise.
template <class Int>
bool kernel4_order2(const BasicMat2<Int>& m)
{
    if (!is_odd(m.b()))
        return mod_eq<Int>(m.b() - m.c(), Int(0), 8);
    return mod_eq<Int>(m.a() + m.d(), Int(4), 8);
}

// k = +-3, level 4: keyed on b mod 4.
template <class Int>
bool kernel4_order4(const BasicMat2<Int>& m)
{
    const Int& a = m.a();
    const Int& b = m.b();
    const Int& c = m.c();
    const Int& d = m.d();
    if (is_odd(b))
        return mod_eq<Int>(exact_div<Int>(a + d, 4, "kernel"), Int(-1), 4);
    const Int q = exact_div<Int>(b - c, 4, "kernel");
    if (floor_mod(b, Int(4)) == 0)
        return mod_eq<Int>(q, -d + 1, 4);
    return mod_eq<Int>(q, d - 1, 4);
}

// k = +-4, level 4: M mod 3 is one of +-I, +-T, +-(1,1;1,-1), +-(1,-1;-1,-1).
template <class Int>
bool kernel4_order3(const BasicMat2<Int>& m)
{
    const ResidueMat r = reduce_mod(m, 3);
    for (const ResidueMat& x :
         {ResidueMat::make(3, 1, 0, 0, 1), ResidueMat::make(3, 0, -1, 1, 0),
          ResidueMat::make(3, 1, 1, 1, -1), ResidueMat::make(3, 1, -1, -1, -1)})
        if (r == x || r == -x)
            return true;
    return false;
}

} // namespace detail

/// The congruence characterization of Ker nu^k. For k = +-2 and k = +-1, +-5
/// the kernel is the intersection of the k = 6 (resp. +-3) and k = +-4 kernels.
template <class Int>
bool in_kernel_by_congruence(const BasicMat2<Int>& m, const PowerClass& pc)
{
    detail::require_level(pc.level, "in_kernel_by_congruence");
    detail::require_member(m, pc.level, "in_kernel_by_congruence");
    const bool l3 = pc.level == 3;
    auto order2 = [&] { return l3 ? detail::kernel3_order2(m) : detail::kernel4_order2(m); };
    auto order3 = [&] { return l3 ? detail::kernel3_order3(m) : detail::kernel4_order3(m); };
    auto order4 = [&] { return l3 ? detail::kernel3_order4(m) : detail::kernel4_order4(m); };
    switch (pc.image_size()) {
    case 1: return true;
    case 2: return order2();
    case 4: return order4();
    case 3: return order3();
    case 6: return order2() && order3();
    default: return order4() && order3();
    }
}

/// S^(level n) for n = 0 .. image_size - 1.
inline std::vector<Mat2> kernel_coset_reps(const PowerClass& pc)
{
    detail::require_level(pc.level, "kernel_coset_reps");
    std::vector<Mat2> reps;
    for (int n = 0; n < pc.image_size(); ++n)
        reps.push_back(Mat2::S().pow(static_cast<long long>(n) * pc.level));
    return reps;
}

} // namespace theta
