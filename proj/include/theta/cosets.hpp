#pragma once

// Right coset decompositions of SL(2,Z) modulo Gamma_{theta,3} and Gamma_{theta,4},
// and the equivalence of cusps under these groups.

#include "theta/arith.hpp"
#include "theta/errors.hpp"
#include "theta/multiplier.hpp"
#include "theta/sl2z.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace theta {

/// The six representatives R_i with SL(2,Z) = union of Gamma_{theta,N} R_i.
inline const std::vector<Mat2>& coset_reps(int level)
{
    detail::require_level(level, "coset_reps");
    static const std::vector<Mat2> level3{
        Mat2(1, 0, 0, 1),  Mat2(1, 1, 0, 1),  Mat2(1, 2, 0, 1),
        Mat2(1, 0, -1, 1), Mat2(1, 1, -1, 0), Mat2(-1, 1, 1, -2),
    };
    static const std::vector<Mat2> level4{
        Mat2(1, 0, 0, 1),  Mat2(1, 1, 0, 1),   Mat2(1, 2, 0, 1),
        Mat2(1, -1, 0, 1), Mat2(-1, 0, 1, -1), Mat2(-1, -1, 1, 0),
    };
    return level == 3 ? level3 : level4;
}

/// Index i with M R_i^-1 in Gamma_{theta,level}. Throws partition_violation
/// unless exactly one representative matches.
template <class Int>
std::size_t coset_rep_of(const BasicMat2<Int>& m, int level)
{
    const auto& reps = coset_reps(level);
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (!is_member(Mat2(m.a(), m.b(), m.c(), m.d()) * reps[i].inverse(), level))
            continue;
        if (found)
            throw partition_violation("coset_rep_of: (" + m.to_string()
                                      + ") lies in two listed cosets");
        found = i;
    }
    if (!found)
        throw partition_violation("coset_rep_of: (" + m.to_string()
                                  + ") lies in none of the listed cosets");
    return *found;
}

/// Residue-level image of Gamma_{theta,N} under reduction mod N.
inline bool residue_in_theta_group(const ResidueMat& r)
{
    const std::int64_t n = r.modulus;
    return floor_mod(r.a() - r.d(), n) == 0 && floor_mod(r.b() + r.c(), n) == 0;
}

struct IndexReport {
    std::int64_t group_order = 0;
    std::int64_t image_order = 0;
    std::int64_t index = 0;
};

/// [SL(2,Z) : Gamma_{theta,N}] = |SL(2,Z/N)| / |image of Gamma_{theta,N}|, by enumeration.
/// Gamma_{theta,N} contains Gamma(N), so the index is read off mod N.
inline IndexReport index_report(int level)
{
    if (level < 2)
        throw invalid_argument("index: level must be at least 2, got " + std::to_string(level));
    const auto all = enumerate_sl2(level);
    IndexReport r;
    r.group_order = static_cast<std::int64_t>(all.size());
    r.image_order = std::count_if(all.begin(), all.end(), residue_in_theta_group);
    r.index = r.group_order / r.image_order;
    return r;
}

inline std::int64_t index(int level) { return index_report(level).index; }

// ---------------------------------------------------------------------------
// Cusps

/// A point of P^1(Q): infinity, or p/q in lowest terms with q > 0.
class CuspPoint {
public:
    /// The point at infinity.
    CuspPoint() = default;

    /// p/q, reduced; q = 0 gives infinity (p must then be nonzero).
    CuspPoint(big_int p, big_int q)
    {
        if (p == 0 && q == 0)
            throw invalid_argument("cusp 0/0 is undefined");
        if (q == 0)
            return;
        const big_int g = gcd_of(p, q);
        p /= g;
        q /= g;
        if (q < 0) {
            p = -p;
            q = -q;
        }
        p_ = std::move(p);
        q_ = std::move(q);
    }

    static CuspPoint infinity() { return {}; }

    /// "inf", "p/q" or "p".
    static CuspPoint parse(std::string_view text)
    {
        if (text == "inf" || text == "oo" || text == "infinity")
            return {};
        auto integer = [text](std::string_view s) {
            const std::size_t sign = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            if (s.size() == sign || s.find_first_not_of("0123456789", sign) != std::string_view::npos)
                throw invalid_argument("bad cusp '" + std::string(text) + "'");
            return big_int(std::string(s.substr(s[0] == '+' ? 1 : 0)));
        };
        const std::size_t slash = text.find('/');
        if (slash == std::string_view::npos)
            return {integer(text), big_int(1)};
        const big_int q = integer(text.substr(slash + 1));
        if (q == 0)
            throw invalid_argument("bad cusp '" + std::string(text) + "': zero denominator");
        return {integer(text.substr(0, slash)), q};
    }

    bool is_infinity() const { return q_ == 0; }
    const big_int& numerator() const { return p_; }
    const big_int& denominator() const { return q_; }

    /// Some A in SL(2,Z) with A(infinity) = this point.
    Mat2 carrier() const
    {
        if (is_infinity())
            return Mat2();
        // Extended Euclid: x p + y q = 1, then (p, -y; q, x).
        big_int x0 = 1, y0 = 0, x1 = 0, y1 = 1, u = p_, v = q_;
        while (v != 0) {
            big_int t = u / v;
            big_int r = u - t * v;
            u = v;
            v = r;
            r = x0 - t * x1;
            x0 = x1;
            x1 = r;
            r = y0 - t * y1;
            y0 = y1;
            y1 = r;
        }
        // u = +-1
        return Mat2(p_, -y0 * u, q_, x0 * u);
    }

    std::string to_string() const
    {
        if (is_infinity())
            return "inf";
        if (q_ == 1)
            return p_.str();
        return p_.str() + "/" + q_.str();
    }

    friend bool operator==(const CuspPoint& x, const CuspPoint& y)
    {
        return x.p_ == y.p_ && x.q_ == y.q_;
    }

    friend std::ostream& operator<<(std::ostream& os, const CuspPoint& x)
    {
        return os << x.to_string();
    }

private:
    big_int p_ = 1;
    big_int q_ = 0;
};

/// Moebius action on P^1(Q).
template <class Int>
CuspPoint act(const BasicMat2<Int>& m, const CuspPoint& x)
{
    const big_int a(m.a()), b(m.b()), c(m.c()), d(m.d());
    if (x.is_infinity())
        return {a, c};
    return {a * x.numerator() + b * x.denominator(), c * x.numerator() + d * x.denominator()};
}

/// True iff gamma x = y for some gamma in Gamma_{theta,level}. With A(inf) = x
/// and B(inf) = y such gamma has the form +-B S^n A^-1; n runs over [-index, index].
inline bool cusp_equivalent(const CuspPoint& x, const CuspPoint& y, int level)
{
    detail::require_level(level, "cusp_equivalent");
    const Mat2 a_inv = x.carrier().inverse();
    const Mat2 b = y.carrier();
    const long long h = index(level);
    for (long long n = -h; n <= h; ++n) {
        const Mat2 g = b * Mat2::S().pow(n) * a_inv;
        if (is_member(g, level) || is_member(-g, level))
            return true;
    }
    return false;
}

/// The points whose classes are counted: infinity, -1, then R(inf), R(0),
/// R(-1), R(1) for each coset representative R, without repeats.
inline std::vector<CuspPoint> cusp_candidates(int level)
{
    std::vector<CuspPoint> out{CuspPoint::infinity(), CuspPoint(-1, 1)};
    auto add = [&out](const CuspPoint& p) {
        if (std::find(out.begin(), out.end(), p) == out.end())
            out.push_back(p);
    };
    for (const Mat2& r : coset_reps(level))
        for (const CuspPoint& p :
             {CuspPoint::infinity(), CuspPoint(0, 1), CuspPoint(-1, 1), CuspPoint(1, 1)})
            add(act(r, p));
    return out;
}

/// Equivalence classes of the given points, each led by its earliest member.
inline std::vector<std::vector<CuspPoint>> cusp_classes(const std::vector<CuspPoint>& points,
                                                        int level)
{
    std::vector<std::size_t> parent(points.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t i) {
        while (parent[i] != i)
            i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (find(i) != find(j) && cusp_equivalent(points[i], points[j], level))
                parent[std::max(find(i), find(j))] = std::min(find(i), find(j));
    std::vector<std::vector<CuspPoint>> classes;
    std::vector<std::size_t> leader_slot(points.size(), points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::size_t root = find(i);
        if (leader_slot[root] == points.size()) {
            leader_slot[root] = classes.size();
            classes.emplace_back();
        }
        classes[leader_slot[root]].push_back(points[i]);
    }
    return classes;
}

inline std::vector<std::vector<CuspPoint>> cusp_classes(int level)
{
    return cusp_classes(cusp_candidates(level), level);
}

inline std::size_t cusp_class_count(int level) { return cusp_classes(level).size(); }

} // namespace theta
