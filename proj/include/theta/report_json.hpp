#pragma once

// JSON forms of the lemma, oracle and suite reports.

#include "theta/oracle.hpp"
#include "theta/residue_lemmas.hpp"
#include "theta/verify.hpp"

#include "json.hpp"

#include <cmath>
#include <string>

namespace theta {

namespace detail {

inline nlohmann::json number_or_null(double x)
{
    return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

inline std::string residue_string(const ResidueMat& r)
{
    return std::to_string(r.a()) + "," + std::to_string(r.b()) + "," + std::to_string(r.c())
           + "," + std::to_string(r.d());
}

} // namespace detail

inline nlohmann::json to_json(const LemmaCounterexample& c)
{
    return {{"matrix", c.matrix},
            {"case", c.case_number},
            {"arithmetic_side", c.arithmetic_side},
            {"listed_side", c.listed_side},
            {"source", c.source}};
}

/// {lemma_id, box, members_scanned, counterexamples, attained_classes, passed}.
/// attained_classes holds one entry per case with residue matrices "a,b,c,d".
inline nlohmann::json to_json(const LemmaReport& r)
{
    nlohmann::json counterexamples = nlohmann::json::array();
    for (const auto& c : r.counterexamples)
        counterexamples.push_back(to_json(c));
    nlohmann::json attained = nlohmann::json::array();
    for (const LemmaCaseReport& c : r.cases) {
        nlohmann::json classes = nlohmann::json::array();
        for (const ResidueMat& m : c.attained)
            classes.push_back(detail::residue_string(m));
        attained.push_back({{"case", c.number},
                            {"classes", classes},
                            {"listed", c.listed.size()},
                            {"attained_in_box", c.attained_in_box.size()},
                            {"matches_list", c.classes_match()}});
    }
    return {{"lemma_id", r.lemma_id},
            {"box", r.box},
            {"members_scanned", r.members_scanned},
            {"counterexample_count", r.counterexample_count},
            {"counterexamples", counterexamples},
            {"attained_classes", attained},
            {"passed", r.passed()}};
}

/// {matrix, level, nu_exact, ratio, residual, verdict}; level 0 is eta.
inline nlohmann::json to_json(const OracleCheck& c)
{
    return {{"matrix", c.matrix},
            {"level", c.level},
            {"nu_exact", c.expected.fraction()},
            {"ratio", {detail::number_or_null(c.ratio.real()), detail::number_or_null(c.ratio.imag())}},
            {"residual", detail::number_or_null(c.residual)},
            {"verdict", to_string(c.status)}};
}

inline nlohmann::json to_json(const CheckRow& r)
{
    return {{"case", r.name},
            {"verdict", r.passed ? "PASS" : "FAIL"},
            {"residual", detail::number_or_null(r.residual)},
            {"detail", r.detail}};
}

inline nlohmann::json to_json(const SuiteReport& s)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckRow& r : s.rows)
        checks.push_back(to_json(r));
    return {{"suite", s.suite}, {"verdict", s.passed() ? "PASS" : "FAIL"}, {"checks", checks}};
}

} // namespace theta
