#pragma once

// Property suites over sampled group elements. Each suite draws from its own
// generator, seeded from the run seed and the suite name, so a suite's report
// does not depend on which other suites ran.

#include "theta/cosets.hpp"
#include "theta/kernels.hpp"
#include "theta/multiplier.hpp"
#include "theta/oracle.hpp"
#include "theta/residue_lemmas.hpp"
#include "theta/sl2z.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace theta {

struct SuiteConfig {
    std::uint64_t seed = 7;
    /// Samples for the exact suites (pairs for the character law).
    int samples = 10000;
    /// Evaluable samples per level for the oracle and arbitration suites.
    int oracle_samples = 100;
    /// Random SL(2,Z) elements for the coset partition check.
    int coset_samples = 500;
    /// Entry bound for the residue-lemma scan.
    int box = 40;
    /// Words are drawn with length 1 .. max_word_length.
    int max_word_length = 20;
    /// Only members with |c| up to this bound are fed to the oracle.
    int oracle_max_c = 20;
    unsigned threads = 0;
    OracleConfig oracle;
};

/// One line of a suite report.
struct CheckRow {
    std::string suite;
    std::string name;
    bool passed = false;
    /// Largest numerical residual behind the row; NaN for exact checks.
    double residual = std::numeric_limits<double>::quiet_NaN();
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckRow> rows;

    bool passed() const
    {
        return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.passed; });
    }
};

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"character", "closed-form", "kernels",
                                                "lemmas",    "cosets",      "cusps",
                                                "oracle",    "formula-arbitration"};
    return names;
}

namespace detail {

inline rng_type suite_rng(const SuiteConfig& cfg, const std::string& suite)
{
    std::vector<std::uint32_t> words{static_cast<std::uint32_t>(cfg.seed),
                                     static_cast<std::uint32_t>(cfg.seed >> 32)};
    for (char ch : suite)
        words.push_back(static_cast<unsigned char>(ch));
    std::seed_seq seq(words.begin(), words.end());
    return rng_type(seq);
}

inline Mat2 draw_member(rng_type& rng, const SuiteConfig& cfg, int level)
{
    return sample_where(rng, cfg.max_word_length,
                        [level](const Mat2& m) { return is_member(m, level); });
}

/// Oracle settings for one matrix. With `adaptive` and c != 0 the base point
/// moves to -d/c + i/|c|, where |c tau + d| = 1 and M tau keeps the height of tau.
inline OracleConfig oracle_for(const Mat2& m, const SuiteConfig& cfg, bool adaptive)
{
    OracleConfig out = cfg.oracle;
    if (adaptive && m.c() != 0) {
        const double c = m.c().convert_to<double>();
        out.base_point = {-m.d().convert_to<double>() / c, 1 / std::abs(c)};
    }
    return out;
}

/// A member with |c| <= oracle_max_c at which the oracle can be evaluated.
inline Mat2 draw_oracle_member(rng_type& rng, const SuiteConfig& cfg, int level, bool adaptive,
                               const std::function<bool(const Mat2&)>& extra = {})
{
    return sample_where(rng, cfg.max_word_length, [&](const Mat2& m) {
        if (!is_member(m, level) || abs_value(m.c()) > cfg.oracle_max_c)
            return false;
        if (extra && !extra(m))
            return false;
        const OracleConfig oc = oracle_for(m, cfg, adaptive);
        const double floor = level * oc.im_floor;
        return oc.base_point.imag() >= floor && moebius(m, oc.base_point).imag() >= floor;
    });
}

template <class... Ts>
std::string concat(const Ts&... parts)
{
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

inline std::string level_name(int level) { return "level " + std::to_string(level); }

} // namespace detail

/// nu(M1 M2) = nu(M1) nu(M2) on sampled pairs.
inline SuiteReport verify_character(const SuiteConfig& cfg)
{
    SuiteReport rep{"character", {}};
    rng_type rng = detail::suite_rng(cfg, rep.suite);
    for (int level : {3, 4}) {
        int failures = 0;
        std::string first;
        for (int i = 0; i < cfg.samples; ++i) {
            const Mat2 x = detail::draw_member(rng, cfg, level);
            const Mat2 y = detail::draw_member(rng, cfg, level);
            if (nu(x * y, level) != nu(x, level) * nu(y, level) && failures++ == 0)
                first = x.to_string() + " * " + y.to_string();
        }
        rep.rows.push_back({rep.suite, detail::level_name(level), failures == 0, NAN,
                            detail::concat("pairs=", cfg.samples, " failures=", failures,
                                           first.empty() ? "" : " first=" + first)});
    }
    return rep;
}

/// Closed form against the product of the two eta multipliers.
inline SuiteReport verify_closed_form(const SuiteConfig& cfg)
{
    SuiteReport rep{"closed-form", {}};
    rng_type rng = detail::suite_rng(cfg, rep.suite);
    for (int level : {3, 4}) {
        int failures = 0;
        std::string first;
        for (int i = 0; i < cfg.samples; ++i) {
            const Mat2 m = detail::draw_member(rng, cfg, level);
            if (nu(m, level) != nu_via_decomposition(m, level) && failures++ == 0)
                first = m.to_string();
        }
        rep.rows.push_back({rep.suite, detail::level_name(level), failures == 0, NAN,
                            detail::concat("samples=", cfg.samples, " failures=", failures,
                                           first.empty() ? "" : " first=" + first)});
    }
    return rep;
}

/// Value and congruence predicates agree; images have the predicted size and
/// are exhausted by the listed coset representatives.
inline SuiteReport verify_kernels(const SuiteConfig& cfg)
{
    SuiteReport rep{"kernels", {}};
    rng_type rng = detail::suite_rng(cfg, rep.suite);
    for (int level : {3, 4}) {
        std::vector<Mat2> samples;
        samples.reserve(static_cast<std::size_t>(cfg.samples));
        for (int i = 0; i < cfg.samples; ++i)
            samples.push_back(detail::draw_member(rng, cfg, level));
        for (int k = 0; k < 12; ++k) {
            const PowerClass pc = PowerClass::make(k, level);
            int disagreements = 0;
            std::set<Root24> image;
            for (const Mat2& m : samples) {
                if (in_kernel_by_value(m, pc) != in_kernel_by_congruence(m, pc))
                    ++disagreements;
                image.insert(power_value(m, pc));
            }
            std::set<Root24> rep_values;
            const auto reps = kernel_coset_reps(pc);
            for (const Mat2& r : reps)
                rep_values.insert(power_value(r, pc));
            const int expected = pc.image_size();
            const bool ok = disagreements == 0 && static_cast<int>(image.size()) == expected
                            && static_cast<int>(reps.size()) == expected
                            && static_cast<int>(rep_values.size()) == expected
                            && image == rep_values;
            rep.rows.push_back(
                {rep.suite, detail::concat(detail::level_name(level), " k=", k), ok, NAN,
                 detail::concat("class=", pc.label(), " samples=", samples.size(),
                                " disagreements=", disagreements, " image=", image.size(),
                                " expected=", expected, " reps=", reps.size())});
        }
    }
    return rep;
}

/// Every residue lemma on the entry box, completed by lifts of all residue classes.
inline SuiteReport verify_lemmas(const SuiteConfig& cfg)
{
    SuiteReport rep{"lemmas", {}};
    for (const ResidueLemma& lemma : residue_lemmas()) {
        const LemmaReport r = verify_residue_lemma(lemma, cfg.box, cfg.threads);
        std::ostringstream detail;
        detail << "box=" << r.box << " members=" << r.members_scanned
               << " counterexamples=" << r.counterexample_count;
        for (const LemmaCaseReport& c : r.cases) {
            detail << " case" << c.number << "=" << c.attained.size() << "/" << c.listed.size();
            if (!c.box_covers_list())
                detail << "(box " << c.attained_in_box.size() << ", lifts completed)";
        }
        rep.rows.push_back({rep.suite, lemma.id, r.passed(), NAN, detail.str()});
    }
    return rep;
}

/// The listed coset representatives partition SL(2,Z); the index is six.
inline SuiteReport verify_cosets(const SuiteConfig& cfg)
{
    SuiteReport rep{"cosets", {}};
    rng_type rng = detail::suite_rng(cfg, rep.suite);
    for (int level : {3, 4}) {
        const auto& reps = coset_reps(level);
        int equivalent_pairs = 0;
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = 0; j < reps.size(); ++j)
                if (i != j && is_member(reps[i] * reps[j].inverse(), level))
                    ++equivalent_pairs;
        int unmatched = 0;
        std::set<std::size_t> hit;
        for (int i = 0; i < cfg.coset_samples; ++i) {
            try {
                hit.insert(coset_rep_of(random_element(rng, cfg.max_word_length), level));
            } catch (const partition_violation&) {
                ++unmatched;
            }
        }
        const IndexReport ix = index_report(level);
        const bool ok = equivalent_pairs == 0 && unmatched == 0 && ix.index == 6
                        && ix.index == static_cast<std::int64_t>(reps.size());
        rep.rows.push_back(
            {rep.suite, detail::level_name(level), ok, NAN,
             detail::concat("reps=", reps.size(), " equivalent_pairs=", equivalent_pairs,
                            " samples=", cfg.coset_samples, " not_unique=", unmatched,
                            " cosets_hit=", hit.size(), " |SL2(Z/N)|=", ix.group_order,
                            " image=", ix.image_order, " index=", ix.index)});
    }
    return rep;
}

/// Two cusp classes, led by infinity and -1, with 0 equivalent to infinity.
inline SuiteReport verify_cusps(const SuiteConfig&)
{
    SuiteReport rep{"cusps", {}};
    const CuspPoint inf = CuspPoint::infinity();
    const CuspPoint minus_one(-1, 1);
    for (int level : {3, 4}) {
        const auto classes = cusp_classes(level);
        const bool ok = classes.size() == 2 && classes[0].front() == inf
                        && classes[1].front() == minus_one
                        && !cusp_equivalent(inf, minus_one, level)
                        && cusp_equivalent(inf, CuspPoint(0, 1), level);
        std::ostringstream detail;
        detail << "classes=" << classes.size();
        for (const auto& cls : classes) {
            detail << " {";
            for (std::size_t i = 0; i < cls.size(); ++i)
                detail << (i ? "," : "") << cls[i];
            detail << "}";
        }
        rep.rows.push_back({rep.suite, detail::level_name(level), ok, NAN, detail.str()});
    }
    return rep;
}

namespace detail {

inline const char* point_name(bool adaptive) { return adaptive ? "adaptive tau" : "base tau"; }

inline void add_oracle_row(SuiteReport& rep, const std::string& name, int samples, int failures,
                           double worst, const std::string& first)
{
    rep.rows.push_back({rep.suite, name, failures == 0, worst,
                        concat("samples=", samples, " failures=", failures,
                               first.empty() ? "" : " first=" + first)});
}

} // namespace detail

/// Transformation laws of F, G and eta checked numerically on sampled matrices,
/// first at the configured base point, then at the per-matrix adaptive point.
inline SuiteReport verify_oracle(const SuiteConfig& cfg)
{
    cfg.oracle.validate();
    SuiteReport rep{"oracle", {}};
    rng_type rng = detail::suite_rng(cfg, rep.suite);
    for (bool adaptive : {false, true}) {
        for (int level : {3, 4}) {
            int failures = 0;
            double worst = 0;
            std::string first;
            for (int i = 0; i < cfg.oracle_samples; ++i) {
                const Mat2 m = detail::draw_oracle_member(rng, cfg, level, adaptive);
                const OracleCheck c =
                    check_transformation(m, level, detail::oracle_for(m, cfg, adaptive));
                worst = std::max(worst, std::isnan(c.residual) ? INFINITY : c.residual);
                if (!c.passed() && failures++ == 0)
                    first = m.to_string();
            }
            detail::add_oracle_row(rep,
                                   detail::concat(level == 3 ? "F, " : "G, ",
                                                  detail::point_name(adaptive)),
                                   cfg.oracle_samples, failures, worst, first);
        }
        int failures = 0;
        double worst = 0;
        std::string first;
        for (int i = 0; i < cfg.oracle_samples;) {
            const Mat2 m = random_element(rng, cfg.max_word_length);
            if (!(m.c() > 0 && m.c() <= cfg.oracle_max_c))
                continue;
            const OracleCheck c =
                check_eta_transformation(m, detail::oracle_for(m, cfg, adaptive));
            if (c.status == OracleStatus::unevaluable)
                continue;
            ++i;
            worst = std::max(worst, c.residual);
            if (!c.passed() && failures++ == 0)
                first = m.to_string();
        }
        detail::add_oracle_row(rep, detail::concat("eta, ", detail::point_name(adaptive)),
                               cfg.oracle_samples, failures, worst, first);
    }
    return rep;
}

struct ArbitrationResult {
    /// Variant name and the number of samples on which it matched the oracle.
    std::vector<std::pair<std::string, int>> g_counts;
    std::vector<std::pair<std::string, int>> f_counts;
    int g_samples = 0;
    int f_samples = 0;
    std::vector<std::string> g_survivors;
    std::vector<std::string> f_survivors;
    double worst_residual = 0;
};

namespace detail {

// Counts, per candidate value, the samples on which the oracle agrees with it.
template <class Draw, class Candidates>
void tally(rng_type& rng, const SuiteConfig& cfg, int level, Draw draw, Candidates candidates,
           std::vector<int>& pass, int& samples, double& worst)
{
    for (bool adaptive : {false, true}) {
        for (int i = 0; i < cfg.oracle_samples; ++i) {
            const Mat2 m = draw(rng, adaptive);
            const OracleConfig oc = oracle_for(m, cfg, adaptive);
            const auto ratio = automorphy_ratio(m, level, oc);
            ++samples;
            const std::vector<Root24> values = candidates(m);
            for (std::size_t v = 0; v < values.size(); ++v) {
                OracleCheck c;
                c.expected = values[v];
                finish(c, *ratio, oc);
                if (c.passed()) {
                    ++pass[v];
                    worst = std::max(worst, c.residual);
                }
            }
        }
    }
}

} // namespace detail

/// Candidate readings of the c-odd level-4 formula (on c-odd members) and of
/// the level-3 +-I, c-even constant (on those members) against the oracle,
/// sampled at the base point and at the adaptive point.
inline ArbitrationResult arbitrate_formulas(const SuiteConfig& cfg)
{
    cfg.oracle.validate();
    rng_type rng = detail::suite_rng(cfg, "formula-arbitration");
    ArbitrationResult out;

    const auto& gv = GVariant::all();
    std::vector<int> g_pass(gv.size(), 0);
    detail::tally(
        rng, cfg, 4,
        [&cfg](rng_type& r, bool adaptive) {
            return detail::draw_oracle_member(r, cfg, 4, adaptive,
                                              [](const Mat2& x) { return is_odd(x.c()); });
        },
        [&gv](const Mat2& m) {
            std::vector<Root24> v;
            for (const GVariant& g : gv)
                v.push_back(nu_G(m, g));
            return v;
        },
        g_pass, out.g_samples, out.worst_residual);

    const std::vector<FVariant> fv{FVariant::primary, FVariant::alternate_constant};
    std::vector<int> f_pass(fv.size(), 0);
    detail::tally(
        rng, cfg, 3,
        [&cfg](rng_type& r, bool adaptive) {
            return detail::draw_oracle_member(r, cfg, 3, adaptive, [](const Mat2& x) {
                const MultiplierBranch br = branch_of(x, 3);
                return br.residue_class == ResidueClass::plus_minus_identity
                       && br.c_parity == Parity::even;
            });
        },
        [&fv](const Mat2& m) {
            std::vector<Root24> v;
            for (FVariant f : fv)
                v.push_back(nu_F(m, f));
            return v;
        },
        f_pass, out.f_samples, out.worst_residual);

    for (std::size_t v = 0; v < gv.size(); ++v) {
        out.g_counts.emplace_back(gv[v].name(), g_pass[v]);
        if (g_pass[v] == out.g_samples)
            out.g_survivors.push_back(gv[v].name());
    }
    for (std::size_t v = 0; v < fv.size(); ++v) {
        out.f_counts.emplace_back(to_string(fv[v]), f_pass[v]);
        if (f_pass[v] == out.f_samples)
            out.f_survivors.push_back(to_string(fv[v]));
    }
    return out;
}

/// Exactly one reading of each disputed formula must survive every sample.
inline SuiteReport verify_formula_arbitration(const SuiteConfig& cfg)
{
    SuiteReport rep{"formula-arbitration", {}};
    const ArbitrationResult a = arbitrate_formulas(cfg);
    auto describe = [](const std::vector<std::pair<std::string, int>>& counts, int samples,
                       const std::vector<std::string>& survivors) {
        std::ostringstream os;
        os << "samples=" << samples;
        for (const auto& [name, count] : counts)
            os << " [" << name << "]=" << count;
        os << " winner=" << (survivors.size() == 1 ? survivors.front() : "none");
        return os.str();
    };
    rep.rows.push_back({rep.suite, "g, c odd", a.g_survivors.size() == 1, a.worst_residual,
                        describe(a.g_counts, a.g_samples, a.g_survivors)});
    rep.rows.push_back({rep.suite, "f, +-I, c even", a.f_survivors.size() == 1,
                        a.worst_residual, describe(a.f_counts, a.f_samples, a.f_survivors)});
    return rep;
}

inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg)
{
    if (name == "character")
        return verify_character(cfg);
    if (name == "closed-form")
        return verify_closed_form(cfg);
    if (name == "kernels")
        return verify_kernels(cfg);
    if (name == "lemmas")
        return verify_lemmas(cfg);
    if (name == "cosets")
        return verify_cosets(cfg);
    if (name == "cusps")
        return verify_cusps(cfg);
    if (name == "oracle")
        return verify_oracle(cfg);
    if (name == "formula-arbitration")
        return verify_formula_arbitration(cfg);
    throw invalid_argument("unknown suite '" + name + "'");
}

/// The named suite, or every suite in the fixed order of suite_names() for "all".
inline std::vector<SuiteReport> run_suites(const std::string& name, const SuiteConfig& cfg)
{
    if (name != "all")
        return {run_suite(name, cfg)};
    std::vector<SuiteReport> out;
    for (const std::string& s : suite_names())
        out.push_back(run_suite(s, cfg));
    return out;
}

} // namespace theta
