#pragma once

// Floating-point oracle: eta, F and G from q-series, and numerical checks of the
// transformation laws against the exact multipliers.
//
// Near the real line |eta| is tiny while the series terms are of size one, so
// the sums are formed with 50 significant digits and only the final results
// are rounded to double.

#include "theta/errors.hpp"
#include "theta/multiplier.hpp"
#include "theta/root24.hpp"
#include "theta/sl2z.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace theta {

using oracle_real = boost::multiprecision::cpp_bin_float_50;
using oracle_complex = boost::multiprecision::cpp_complex_50;

struct OracleConfig {
    /// Series terms are dropped once smaller than this times the partial sum.
    double truncation_eps = 1e-16;
    /// A check passes when |ratio - nu| is below this.
    double compare_tol = 1e-9;
    /// Smallest Im tau at which eta is evaluated.
    double im_floor = 0.01;
    std::complex<double> base_point{0.0, 2.0};
    std::uint64_t seed = 0;

    void validate() const
    {
        if (!(truncation_eps > 0 && truncation_eps < compare_tol))
            throw invalid_argument("oracle: need 0 < truncation_eps < compare_tol");
        if (!(im_floor > 0))
            throw invalid_argument("oracle: im_floor must be positive");
        if (!(base_point.imag() > 0))
            throw invalid_argument("oracle: base point must lie in the upper half plane");
    }
};

namespace detail {

inline oracle_complex to_oracle(std::complex<double> z)
{
    return {oracle_real(z.real()), oracle_real(z.imag())};
}

inline std::complex<double> to_double(const oracle_complex& z)
{
    return {z.real().convert_to<double>(), z.imag().convert_to<double>()};
}

template <class Int>
oracle_real to_real(const Int& x)
{
    return static_cast<oracle_real>(x);
}

inline const oracle_complex& i_pi()
{
    static const oracle_complex v(oracle_real(0), boost::math::constants::pi<oracle_real>());
    return v;
}

// Points at the floor up to rounding (0.03 / 3 versus 0.01, say) are accepted.
inline bool below_floor(const oracle_real& im, double floor)
{
    return im < floor * (1 - 1e-12);
}

inline void require_floor(const oracle_complex& tau, double floor, const char* who)
{
    if (below_floor(tau.imag(), floor))
        throw invalid_argument(std::string(who) + ": Im tau = "
                               + std::to_string(tau.imag().convert_to<double>())
                               + " is below the floor " + std::to_string(floor));
}

} // namespace detail

/// eta(tau) = e^{pi i tau / 12} sum_n (-1)^n e^{pi i tau n(3n-1)}, in extended precision.
inline oracle_complex eta_extended(const oracle_complex& tau, const OracleConfig& cfg = {})
{
    detail::require_floor(tau, cfg.im_floor, "eta");
    const oracle_real eps(cfg.truncation_eps);
    const oracle_complex w = exp(detail::i_pi() * tau);
    const oracle_complex w2 = w * w;
    const oracle_complex w6 = w2 * w2 * w2;
    // Terms w^{n(3n-1)} and w^{n(3n+1)}; consecutive ratios are w^{6n+2} and w^{6n+4}.
    oracle_complex plus = w2;
    oracle_complex minus = w2 * w2;
    oracle_complex step_plus = w6 * w2;
    oracle_complex step_minus = w6 * w2 * w2;
    oracle_complex sum(1);
    for (int n = 1;; ++n) {
        const oracle_complex pair = plus + minus;
        sum += (n % 2 == 0) ? pair : oracle_complex(-pair);
        if (abs(plus) <= eps * abs(sum))
            break;
        plus *= step_plus;
        minus *= step_minus;
        step_plus *= w6;
        step_minus *= w6;
    }
    return exp(detail::i_pi() * tau / 12) * sum;
}

inline std::complex<double> eta(std::complex<double> tau, const OracleConfig& cfg = {})
{
    return detail::to_double(eta_extended(detail::to_oracle(tau), cfg));
}

/// eta((tau - 1)/N) eta((tau + 1)/N); N = 3 gives F, N = 4 gives G.
inline oracle_complex shifted_eta_product(const oracle_complex& tau, int level,
                                          const OracleConfig& cfg = {})
{
    detail::require_level(level, "shifted_eta_product");
    detail::require_floor(tau, level * cfg.im_floor, level == 3 ? "F_eval" : "G_eval");
    const oracle_complex one(1);
    return eta_extended((tau - one) / level, cfg) * eta_extended((tau + one) / level, cfg);
}

inline std::complex<double> F_eval(std::complex<double> tau, const OracleConfig& cfg = {})
{
    return detail::to_double(shifted_eta_product(detail::to_oracle(tau), 3, cfg));
}

inline std::complex<double> G_eval(std::complex<double> tau, const OracleConfig& cfg = {})
{
    return detail::to_double(shifted_eta_product(detail::to_oracle(tau), 4, cfg));
}

enum class OracleStatus { pass, fail, unevaluable };

inline std::string to_string(OracleStatus s)
{
    switch (s) {
    case OracleStatus::pass: return "PASS";
    case OracleStatus::fail: return "FAIL";
    case OracleStatus::unevaluable: return "UNEVALUABLE";
    }
    return "?";
}

struct OracleCheck {
    std::string matrix;
    /// 3 or 4 for F or G, 0 for eta.
    int level = 0;
    Root24 expected;
    OracleStatus status = OracleStatus::unevaluable;
    /// The measured automorphy ratio; NaN when unevaluable.
    std::complex<double> ratio{std::numeric_limits<double>::quiet_NaN(),
                               std::numeric_limits<double>::quiet_NaN()};
    /// |ratio - expected|; NaN when unevaluable.
    double residual = std::numeric_limits<double>::quiet_NaN();
    double image_im = 0;

    bool passed() const { return status == OracleStatus::pass; }
};

namespace detail {

template <class Int>
oracle_complex moebius_extended(const BasicMat2<Int>& m, const oracle_complex& tau,
                                oracle_complex* automorphy = nullptr)
{
    const oracle_complex j = tau * to_real(m.c()) + to_real(m.d());
    if (automorphy)
        *automorphy = j;
    return (tau * to_real(m.a()) + to_real(m.b())) / j;
}

inline void finish(OracleCheck& out, const oracle_complex& ratio, const OracleConfig& cfg)
{
    const oracle_complex expected =
        exp(oracle_complex(oracle_real(0), 2 * boost::math::constants::pi<oracle_real>()
                                               * out.expected.exponent() / 24));
    out.ratio = to_double(ratio);
    out.residual = abs(ratio - expected).convert_to<double>();
    out.status = out.residual < cfg.compare_tol ? OracleStatus::pass : OracleStatus::fail;
}

} // namespace detail

/// F(M tau) / ((c tau + d) F(tau)) at the base point; empty if M tau sits
/// too close to the real line for the configured floor.
template <class Int>
std::optional<oracle_complex> automorphy_ratio(const BasicMat2<Int>& m, int level,
                                               const OracleConfig& cfg)
{
    detail::require_level(level, "automorphy_ratio");
    const oracle_complex tau = detail::to_oracle(cfg.base_point);
    oracle_complex j;
    const oracle_complex image = detail::moebius_extended(m, tau, &j);
    const double floor = level * cfg.im_floor;
    if (detail::below_floor(tau.imag(), floor) || detail::below_floor(image.imag(), floor))
        return std::nullopt;
    return shifted_eta_product(image, level, cfg) / (j * shifted_eta_product(tau, level, cfg));
}

/// Compares the measured ratio with an arbitrary candidate multiplier value.
template <class Int>
OracleCheck check_transformation_against(const BasicMat2<Int>& m, int level, Root24 expected,
                                         const OracleConfig& cfg = {})
{
    cfg.validate();
    detail::require_member(m, level, "check_transformation");
    OracleCheck out;
    out.matrix = m.to_string();
    out.level = level;
    out.expected = expected;
    out.image_im = moebius(m, cfg.base_point).imag();
    if (const auto ratio = automorphy_ratio(m, level, cfg))
        detail::finish(out, *ratio, cfg);
    return out;
}

/// |F(M tau) / ((c tau + d) F(tau)) - nu_F(M)| at the base point (G and nu_G at level 4).
template <class Int>
OracleCheck check_transformation(const BasicMat2<Int>& m, int level, const OracleConfig& cfg = {})
{
    detail::require_level(level, "check_transformation");
    return check_transformation_against(m, level, nu(m, level), cfg);
}

/// |eta(M tau) / ((c tau + d)^{1/2} eta(tau)) - nu_eta(M)| with the principal root; needs c > 0.
template <class Int>
OracleCheck check_eta_transformation(const BasicMat2<Int>& m, const OracleConfig& cfg = {})
{
    cfg.validate();
    if (!(m.c() > 0))
        throw invalid_argument("check_eta_transformation: requires c > 0, got ("
                               + m.to_string() + ")");
    OracleCheck out;
    out.matrix = m.to_string();
    out.level = 0;
    out.expected = nu_eta(m);
    const oracle_complex tau = detail::to_oracle(cfg.base_point);
    oracle_complex j;
    const oracle_complex image = detail::moebius_extended(m, tau, &j);
    out.image_im = image.imag().convert_to<double>();
    if (detail::below_floor(tau.imag(), cfg.im_floor)
        || detail::below_floor(image.imag(), cfg.im_floor))
        return out;
    detail::finish(out, eta_extended(image, cfg) / (sqrt(j) * eta_extended(tau, cfg)), cfg);
    return out;
}

} // namespace theta
