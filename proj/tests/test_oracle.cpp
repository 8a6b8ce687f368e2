#include "theta/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace theta;
using cplx = std::complex<double>;

namespace {

const double pi = std::numbers::pi;

cplx root(int k) { return std::polar(1.0, 2 * pi * k / 24); }

double rel(cplx x, cplx y) { return std::abs(x - y) / std::abs(y); }

Mat2 sample_checkable(rng_type& rng, int level, const OracleConfig& cfg)
{
    return sample_where(rng, 20, [&](const Mat2& m) {
        if (!is_member(m, level) || abs_value(m.c()) > 20)
            return false;
        return moebius(m, cfg.base_point).imag() >= level * cfg.im_floor;
    });
}

} // namespace

TEST(Eta, ValueAtI)
{
    // eta(i) = Gamma(1/4) / (2 pi^{3/4})
    const double expected = std::tgamma(0.25) / (2 * std::pow(pi, 0.75));
    const cplx v = eta({0, 1});
    EXPECT_NEAR(v.real(), expected, 1e-15);
    EXPECT_NEAR(v.imag(), 0, 1e-16);
    EXPECT_NEAR(v.real(), 0.7682254223260566, 1e-15);
}

TEST(Eta, TranslationAtI)
{
    EXPECT_LT(rel(eta({1, 1}), root(1) * eta({0, 1})), 1e-14);
}

TEST(Eta, LeadingTermDominatesHighUp)
{
    EXPECT_LT(rel(eta({0, 10}), cplx(std::exp(-10 * pi / 12), 0)), 1e-15);
}

TEST(Eta, TranslationLawAtRandomPoints)
{
    rng_type rng(51);
    std::uniform_real_distribution<double> re(-3, 3), im(0.05, 3);
    for (int i = 0; i < 50; ++i) {
        const cplx tau(re(rng), im(rng));
        ASSERT_LT(rel(eta(tau + 1.0), root(1) * eta(tau)), 1e-12) << tau;
    }
}

TEST(Eta, InversionNearTheFloor)
{
    // eta(-1/tau) = sqrt(-i tau) eta(tau), tau = 100 i: eta(0.01 i) = 10 eta(100 i).
    // The left side is about 4e-12 while its series terms are of order one.
    const cplx low = eta({0, 0.01});
    const cplx high = eta({0, 100});
    EXPECT_LT(rel(low, 10.0 * high), 1e-13);
    const cplx tau(0.3, 0.012);
    EXPECT_LT(rel(eta(-1.0 / tau), std::sqrt(cplx(0, -1) * tau) * eta(tau)), 1e-12);
}

TEST(Eta, TruncationHonesty)
{
    OracleConfig fine;
    fine.truncation_eps /= 2;
    const OracleConfig coarse;
    rng_type rng(52);
    std::uniform_real_distribution<double> re(-1, 1), im(0.01, 3);
    for (int i = 0; i < 50; ++i) {
        const cplx tau(re(rng), im(rng));
        const cplx a = eta(tau, coarse);
        const cplx b = eta(tau, fine);
        ASSERT_LT(rel(a, b), coarse.compare_tol / 100) << tau;
    }
}

TEST(Eta, RejectsPointsBelowTheFloor)
{
    EXPECT_THROW(eta({0, 0.005}), theta::invalid_argument);
    EXPECT_THROW(eta({0, -1}), theta::invalid_argument);
    EXPECT_THROW(F_eval({0, 0.02}), theta::invalid_argument);
    EXPECT_THROW(G_eval({0, 0.035}), theta::invalid_argument);
    EXPECT_NO_THROW(F_eval({0, 0.03}));
    EXPECT_NO_THROW(G_eval({0, 0.04}));
}

TEST(ShiftedProducts, Definitions)
{
    const cplx tau(1, 3);
    EXPECT_LT(rel(F_eval(tau), eta({0, 1}) * eta(cplx(2, 3) / 3.0)), 1e-14);
    const cplx t(0.2, 1.7);
    EXPECT_LT(rel(G_eval(t), eta((t - 1.0) / 4.0) * eta((t + 1.0) / 4.0)), 1e-14);
}

TEST(ShiftedProducts, TranslationBySubgroupGenerators)
{
    // S^3 and S^4 lie in the groups, with f(S^3) = g(S^4) = 1.
    const cplx tau(0.37, 1.4);
    EXPECT_LT(rel(F_eval(tau + 3.0), std::polar(1.0, pi / 6) * F_eval(tau)), 1e-13);
    EXPECT_LT(rel(G_eval(tau + 4.0), std::polar(1.0, pi / 6) * G_eval(tau)), 1e-13);
}

TEST(OracleConfig, Validation)
{
    OracleConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.truncation_eps = 1e-8;
    EXPECT_THROW(cfg.validate(), theta::invalid_argument);
    cfg = {};
    cfg.im_floor = 0;
    EXPECT_THROW(cfg.validate(), theta::invalid_argument);
    cfg = {};
    cfg.base_point = {0, -1};
    EXPECT_THROW(cfg.validate(), theta::invalid_argument);
}

TEST(CheckTransformation, SpotValues)
{
    const OracleCheck id = check_transformation(Mat2(), 3);
    EXPECT_TRUE(id.passed());
    EXPECT_LT(id.residual, 1e-30);
    for (int level : {3, 4}) {
        const OracleCheck t = check_transformation(Mat2::T(), level);
        EXPECT_TRUE(t.passed()) << level;
        EXPECT_EQ(t.expected.pretty(), "-i");
        EXPECT_LT(t.residual, 1e-20);
        EXPECT_NEAR(t.ratio.imag(), -1, 1e-15);
    }
    EXPECT_THROW(check_transformation(Mat2::S(), 3), theta::not_a_member);
}

TEST(CheckTransformation, SelectsOneVariantForTwoThreeOneTwo)
{
    const Mat2 m(2, 3, 1, 2);
    const bool bc = check_transformation_against(m, 4, nu_G(m, GVariant{false, false})).passed();
    const bool cd = check_transformation_against(m, 4, nu_G(m, GVariant{true, false})).passed();
    EXPECT_TRUE(bc);
    EXPECT_FALSE(cd);
}

TEST(CheckTransformation, WrongValueFails)
{
    const OracleCheck c = check_transformation_against(Mat2::T(), 3, Root24::from_exponent(6));
    EXPECT_EQ(c.status, OracleStatus::fail);
    EXPECT_NEAR(c.residual, 2, 1e-12);
}

TEST(CheckTransformation, LowImageIsUnevaluable)
{
    // For (1,0;90,1), M(2i) = 2i / (180i + 1) has imaginary part about 1/16200.
    const OracleCheck c = check_transformation(Mat2(1, 0, 90, 1), 3);
    EXPECT_EQ(c.status, OracleStatus::unevaluable);
    EXPECT_TRUE(std::isnan(c.residual));
    EXPECT_LT(c.image_im, 1e-4);
    EXPECT_EQ(check_transformation(Mat2(1, 0, -96, 1), 4).status, OracleStatus::unevaluable);
}

TEST(CheckTransformation, RandomMembersPass)
{
    const OracleConfig cfg;
    rng_type rng(53);
    for (int level : {3, 4}) {
        for (int i = 0; i < 100; ++i) {
            const Mat2 m = sample_checkable(rng, level, cfg);
            const OracleCheck c = check_transformation(m, level, cfg);
            ASSERT_TRUE(c.passed()) << "level " << level << ": " << m << " residual " << c.residual;
        }
    }
}

TEST(CheckTransformation, OtherBasePoints)
{
    OracleConfig cfg;
    cfg.base_point = {0.31, 1.1};
    rng_type rng(54);
    for (int level : {3, 4}) {
        for (int i = 0; i < 40; ++i) {
            const Mat2 m = sample_checkable(rng, level, cfg);
            ASSERT_TRUE(check_transformation(m, level, cfg).passed()) << m;
        }
    }
}

TEST(CheckEta, SpotValues)
{
    for (const Mat2& m : {Mat2::T(), Mat2(1, 0, 1, 1), Mat2(2, 1, 1, 1)}) {
        const OracleCheck c = check_eta_transformation(m);
        EXPECT_TRUE(c.passed()) << m << " residual " << c.residual;
        EXPECT_EQ(c.level, 0);
    }
    EXPECT_EQ(check_eta_transformation(Mat2::T()).expected.exponent(), 21);
    EXPECT_THROW(check_eta_transformation(Mat2::S()), theta::invalid_argument);
    EXPECT_THROW(check_eta_transformation(-Mat2::T()), theta::invalid_argument);
}

TEST(CheckEta, RandomMatricesWithPositiveC)
{
    const OracleConfig cfg;
    rng_type rng(55);
    int checked = 0;
    while (checked < 100) {
        const Mat2 m = random_element(rng, 20);
        if (!(m.c() > 0 && m.c() <= 20))
            continue;
        const OracleCheck c = check_eta_transformation(m, cfg);
        if (c.status == OracleStatus::unevaluable)
            continue;
        ASSERT_TRUE(c.passed()) << m << " residual " << c.residual;
        ++checked;
    }
}
