#pragma once

// Finite verification of the residue-class lemmas behind the kernel theorems.
//
// Each lemma is split into cases by multiplier branch. Within a case it states
//     (f or g)(M) = 0 mod m   <=>   M mod L lies in an explicit list,
// and the list is exactly the set of classes where the left side holds. Both
// claims are checked on every member in an entry box, and again on one lift of
// every class of SL(2, Z/Q), Q = lcm(L, level, 2), since a small box need not
// reach every class mod L.

#include "theta/errors.hpp"
#include "theta/multiplier.hpp"
#include "theta/sl2z.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace theta {

/// One entry of a lemma's list; plus_minus marks an entry written as +-M.
struct ListedClass {
    bool plus_minus;
    int a, b, c, d;
};

namespace lemma_tables {

inline constexpr ListedClass level3_mod4_case1[] = {
    {false, 0, -1, 1, -1}, {false, 0, 1, -1, -1}, {false, 1, 1, 1, 2}, {false, 1, -1, -1, 2},
    {false, 2, 1, 1, 1}, {false, 2, -1, -1, 1}, {false, -1, -1, 1, 0}, {false, -1, 1, -1, 0},
};
inline constexpr ListedClass level3_mod4_case2[] = {
    {false, 1, 0, 0, 1}, {false, 1, 2, 2, 1}, {false, -1, 0, 2, -1}, {false, -1, 2, 0, -1},
};
inline constexpr ListedClass level3_mod4_case3[] = {
    {false, 0, -1, 1, 1}, {false, 0, 1, -1, 1}, {false, 1, -1, 1, 0}, {false, 1, 1, -1, 0},
    {false, 2, 1, 1, -1}, {false, 2, -1, -1, -1}, {false, -1, 1, 1, 2}, {false, -1, -1, -1, 2},
};
inline constexpr ListedClass level3_mod4_case4[] = {
    {false, -1, 0, 0, -1}, {false, -1, 2, 2, -1}, {false, 1, 0, 2, 1}, {false, 1, 2, 0, 1},
};
inline constexpr ListedClass level3_mod3_case1[] = {
    {true, 1, 0, 0, 1}, {true, 1, 3, 3, 1}, {true, 1, -3, -3, 1}, {true, 4, 0, 0, -2},
    {true, 4, 3, 3, -2}, {true, 4, -3, -3, -2}, {true, -2, 0, 0, 4}, {true, -2, 3, 3, 4},
    {true, -2, -3, -3, 4},
};
inline constexpr ListedClass level3_mod3_case2[] = {
    {true, 1, 0, 0, 1}, {true, 1, 3, 3, 1}, {true, 1, -3, -3, 1}, {true, 4, 0, 0, -2},
    {true, 4, 3, 3, -2}, {true, 4, -3, -3, -2}, {true, -2, 0, 0, 4}, {true, -2, 3, 3, 4},
    {true, -2, -3, -3, 4},
};
inline constexpr ListedClass level3_mod3_case3[] = {
    {true, 0, -1, 1, 0}, {true, 0, 2, 4, 0}, {true, 0, -4, -2, 0}, {true, 3, -1, 1, -3},
    {true, 3, 2, 4, -3}, {true, 3, -4, -2, -3}, {true, -3, -1, 1, 3}, {true, -3, 2, 4, 3},
    {true, -3, -4, -2, 3},
};
inline constexpr ListedClass level3_mod3_case4[] = {
    {true, 0, -1, 1, 0}, {true, 0, 2, 4, 0}, {true, 0, -4, -2, 0}, {true, 3, -1, 1, -3},
    {true, 3, 2, 4, -3}, {true, 3, -4, -2, -3}, {true, -3, -1, 1, 3}, {true, -3, 2, 4, 3},
    {true, -3, -4, -2, 3},
};
inline constexpr ListedClass level4_mod2_case1[] = {
    {true, 1, 0, 0, 1}, {true, 1, 4, 4, 1}, {true, -3, 0, 0, -3}, {true, -3, 4, 4, -3},
};
inline constexpr ListedClass level4_mod2_case2[] = {
    {true, 1, 2, 2, -3}, {true, 1, -2, -2, -3}, {true, -3, 2, 2, 1}, {true, -3, -2, -2, 1},
};
inline constexpr ListedClass level4_mod2_case3[] = {
    {true, 0, -1, 1, 4}, {true, 0, 3, -3, 4}, {true, 4, -1, 1, 0}, {true, 4, 3, -3, 0},
};
inline constexpr ListedClass level4_mod2_case4[] = {
    {true, 2, -1, -3, 2}, {true, 2, 3, 1, 2}, {true, -2, -1, -3, -2}, {true, -2, 3, 1, -2},
};
inline constexpr ListedClass level4_mod4_case1[] = {
    {false, 1, 0, 0, 1}, {false, 1, 4, 4, 1}, {false, 1, -4, -4, 1}, {false, 1, 8, 8, 1},
    {false, 5, 0, 0, -3}, {false, 5, 4, 4, -3}, {false, 5, -4, -4, -3}, {false, 5, 8, 8, -3},
    {false, -7, 0, 0, -7}, {false, -7, 4, 4, -7}, {false, -7, -4, -4, -7}, {false, -7, 8, 8, -7},
    {false, -3, 0, 0, 5}, {false, -3, 4, 4, 5}, {false, -3, -4, -4, 5}, {false, -3, 8, 8, 5},
    {false, -1, 0, 8, -1}, {false, -1, 4, -4, -1}, {false, -1, 8, 0, -1}, {false, -1, -4, 4, -1},
    {false, 3, 0, 8, -5}, {false, 3, 4, -4, -5}, {false, 3, 8, 0, -5}, {false, 3, -4, 4, -5},
    {false, 7, 0, 8, 7}, {false, 7, 4, -4, 7}, {false, 7, 8, 0, 7}, {false, 7, -4, 4, 7},
    {false, -5, 0, 8, 3}, {false, -5, 4, -4, 3}, {false, -5, 8, 0, 3}, {false, -5, -4, 4, 3},
};
inline constexpr ListedClass level4_mod4_case2[] = {
    {false, 1, 2, 2, 5}, {false, 5, 2, 2, 1}, {false, -7, 2, 2, -3}, {false, -3, 2, 2, -7},
    {false, 1, 6, 6, 5}, {false, 5, 6, 6, 1}, {false, -7, 6, 6, -3}, {false, -3, 6, 6, -7},
    {false, 1, -6, -6, 5}, {false, 5, -6, -6, 1}, {false, -7, -6, -6, -3}, {false, -3, -6, -6, -7},
    {false, 1, -2, -2, 5}, {false, 5, -2, -2, 1}, {false, -7, -2, -2, -3}, {false, -3, -2, -2, -7},
    {false, 3, 2, -6, 7}, {false, 7, 2, -6, 3}, {false, -5, 2, -6, -1}, {false, -1, 2, -6, -5},
    {false, 3, 6, -2, 7}, {false, 7, 6, -2, 3}, {false, -5, 6, -2, -1}, {false, -1, 6, -2, -5},
    {false, 3, -6, 2, 7}, {false, 7, -6, 2, 3}, {false, -5, -6, 2, -1}, {false, -1, -6, 2, -5},
    {false, 3, -2, 6, 7}, {false, 7, -2, 6, 3}, {false, -5, -2, 6, -1}, {false, -1, -2, 6, -5},
};
inline constexpr ListedClass level4_mod4_case3[] = {
    {false, 0, 3, 5, -4}, {false, 0, 7, -7, -4}, {false, 0, -5, -3, -4}, {false, 0, -1, 1, -4},
    {false, 4, 3, 5, 8}, {false, 4, 7, -7, 8}, {false, 4, -5, -3, 8}, {false, 4, -1, 1, 8},
    {false, 8, 3, 5, 4}, {false, 8, 7, -7, 4}, {false, 8, -5, -3, 4}, {false, 8, -1, 1, 4},
    {false, -4, 3, 5, 0}, {false, -4, 7, -7, 0}, {false, -4, -5, -3, 0}, {false, -4, -1, 1, 0},
    {false, 0, 1, -1, -4}, {false, 0, 5, 3, -4}, {false, 0, -7, 7, -4}, {false, 0, -3, -5, -4},
    {false, 4, 1, -1, 8}, {false, 4, 5, 3, 8}, {false, 4, -7, 7, 8}, {false, 4, -3, -5, 8},
    {false, 8, 1, -1, 4}, {false, 8, 5, 3, 4}, {false, 8, -7, 7, 4}, {false, 8, -3, -5, 4},
    {false, -4, 1, -1, 0}, {false, -4, 5, 3, 0}, {false, -4, -7, 7, 0}, {false, -4, -3, -5, 0},
};
inline constexpr ListedClass level4_mod4_case4[] = {
    {false, 2, 3, 1, -6}, {false, 6, 3, 1, 6}, {false, -6, 3, 1, 2}, {false, -2, 3, 1, -2},
    {false, 2, 7, 5, -6}, {false, 6, 7, 5, 6}, {false, -6, 7, 5, 2}, {false, -2, 7, 5, -2},
    {false, 2, -5, -7, -6}, {false, 6, -5, -7, 6}, {false, -6, -5, -7, 2}, {false, -2, -5, -7, -2},
    {false, 2, -1, -3, -6}, {false, 6, -1, -3, 6}, {false, -6, -1, -3, 2}, {false, -2, -1, -3, -2},
    {false, 2, -7, -5, -6}, {false, 6, -7, -5, 6}, {false, -6, -7, -5, 2}, {false, -2, -7, -5, -2},
    {false, 2, -3, -1, -6}, {false, 6, -3, -1, 6}, {false, -6, -3, -1, 2}, {false, -2, -3, -1, -2},
    {false, 2, 1, 3, -6}, {false, 6, 1, 3, 6}, {false, -6, 1, 3, 2}, {false, -2, 1, 3, -2},
    {false, 2, 5, 7, -6}, {false, 6, 5, 7, 6}, {false, -6, 5, 7, 2}, {false, -2, 5, 7, -2},
};
inline constexpr ListedClass level4_mod3_case1[] = {
    {true, 1, 0, 0, 1}, {true, 0, -1, 1, 0}, {true, 1, 1, 1, -1}, {true, 1, -1, -1, -1},
};
inline constexpr ListedClass level4_mod3_case2[] = {
    {true, 1, 0, 0, 1}, {true, 0, -1, 1, 0}, {true, 1, 1, 1, -1}, {true, 1, -1, -1, -1},
};

} // namespace lemma_tables

/// Which members a lemma case speaks about. An empty residue class means any.
struct LemmaCase {
    int number;
    std::optional<ResidueClass> residue_class;
    Parity c_parity;
    std::span<const ListedClass> listed;

    bool applies_to(const MultiplierBranch& br) const
    {
        return br.c_parity == c_parity && (!residue_class || *residue_class == br.residue_class);
    }
};

struct ResidueLemma {
    std::string id;
    int level;
    /// The arithmetic side is (f or g)(M) = 0 mod arithmetic_modulus.
    int arithmetic_modulus;
    /// The residue side reduces M mod residue_modulus.
    int residue_modulus;
    std::vector<LemmaCase> cases;

    /// The listed classes of one case, with +- entries expanded, reduced mod residue_modulus.
    std::set<ResidueMat> listed_classes(const LemmaCase& lc) const
    {
        std::set<ResidueMat> out;
        for (const ListedClass& x : lc.listed) {
            const ResidueMat r = ResidueMat::make(residue_modulus, x.a, x.b, x.c, x.d);
            out.insert(r);
            if (x.plus_minus)
                out.insert(-r);
        }
        return out;
    }
};

inline const std::vector<ResidueLemma>& residue_lemmas()
{
    using namespace lemma_tables;
    using RC = ResidueClass;
    constexpr auto id = RC::plus_minus_identity;
    constexpr auto t = RC::plus_minus_t;
    constexpr auto s2 = RC::plus_minus_s2_class;
    constexpr auto odd = Parity::odd;
    constexpr auto even = Parity::even;
    static const std::vector<ResidueLemma> lemmas{
        {"level3-mod4", 3, 4, 4,
         {{1, id, odd, level3_mod4_case1},
          {2, id, even, level3_mod4_case2},
          {3, t, odd, level3_mod4_case3},
          {4, t, even, level3_mod4_case4}}},
        {"level3-mod3", 3, 3, 9,
         {{1, id, odd, level3_mod3_case1},
          {2, id, even, level3_mod3_case2},
          {3, t, odd, level3_mod3_case3},
          {4, t, even, level3_mod3_case4}}},
        {"level4-mod2", 4, 2, 8,
         {{1, id, even, level4_mod2_case1},
          {2, s2, even, level4_mod2_case2},
          {3, t, odd, level4_mod2_case3},
          {4, s2, odd, level4_mod2_case4}}},
        {"level4-mod4", 4, 4, 16,
         {{1, id, even, level4_mod4_case1},
          {2, s2, even, level4_mod4_case2},
          {3, t, odd, level4_mod4_case3},
          {4, s2, odd, level4_mod4_case4}}},
        {"level4-mod3", 4, 3, 3,
         {{1, std::nullopt, even, level4_mod3_case1},
          {2, std::nullopt, odd, level4_mod3_case2}}},
    };
    return lemmas;
}

inline const ResidueLemma& find_residue_lemma(const std::string& id)
{
    for (const ResidueLemma& l : residue_lemmas())
        if (l.id == id)
            return l;
    throw invalid_argument("unknown lemma '" + id + "'");
}

/// A member on which the two sides of a lemma case disagree.
struct LemmaCounterexample {
    std::string matrix;
    int case_number;
    bool arithmetic_side;
    bool listed_side;
    /// "box" or "lift".
    std::string source;
};

struct LemmaCaseReport {
    int number = 0;
    std::int64_t members_scanned = 0;
    std::int64_t counterexamples = 0;
    std::set<ResidueMat> listed;
    std::set<ResidueMat> attained_in_box;
    /// Box classes plus classes reached by the lifts.
    std::set<ResidueMat> attained;
    std::int64_t lifts_checked = 0;

    bool box_covers_list() const { return attained_in_box == listed; }
    bool classes_match() const { return attained == listed; }
};

struct LemmaReport {
    std::string lemma_id;
    int box = 0;
    std::int64_t members_scanned = 0;
    std::vector<LemmaCounterexample> counterexamples;
    std::int64_t counterexample_count = 0;
    std::vector<LemmaCaseReport> cases;

    bool passed() const
    {
        return counterexample_count == 0
               && std::all_of(cases.begin(), cases.end(),
                              [](const LemmaCaseReport& c) { return c.classes_match(); });
    }
};

namespace detail {

inline constexpr std::size_t max_recorded_counterexamples = 20;

struct LemmaScan {
    std::int64_t members = 0;
    std::vector<LemmaCaseReport> cases;
    std::vector<LemmaCounterexample> examples;
    std::int64_t failures = 0;

    explicit LemmaScan(const ResidueLemma& lemma)
    {
        for (const LemmaCase& lc : lemma.cases) {
            LemmaCaseReport r;
            r.number = lc.number;
            r.listed = lemma.listed_classes(lc);
            cases.push_back(std::move(r));
        }
    }

    // Merging is associative and order-insensitive up to the recorded examples,
    // which are sorted afterwards.
    void merge(LemmaScan&& o)
    {
        members += o.members;
        failures += o.failures;
        for (std::size_t i = 0; i < cases.size(); ++i) {
            cases[i].members_scanned += o.cases[i].members_scanned;
            cases[i].counterexamples += o.cases[i].counterexamples;
            cases[i].lifts_checked += o.cases[i].lifts_checked;
            cases[i].attained_in_box.merge(o.cases[i].attained_in_box);
            cases[i].attained.merge(o.cases[i].attained);
        }
        for (auto& e : o.examples)
            examples.push_back(std::move(e));
    }
};

template <class Int>
void check_member(const ResidueLemma& lemma, const BasicMat2<Int>& m, bool from_box,
                  LemmaScan& scan)
{
    if (!is_member(m, lemma.level))
        return;
    const MultiplierBranch br = branch_of(m, lemma.level);
    for (std::size_t i = 0; i < lemma.cases.size(); ++i) {
        const LemmaCase& lc = lemma.cases[i];
        if (!lc.applies_to(br))
            continue;
        LemmaCaseReport& cr = scan.cases[i];
        const Int v = branch_value(m, lemma.level);
        const bool arithmetic = floor_mod(v, Int(lemma.arithmetic_modulus)) == 0;
        const ResidueMat r = reduce_mod(m, lemma.residue_modulus);
        const bool listed = cr.listed.count(r) != 0;
        if (from_box) {
            ++scan.members;
            ++cr.members_scanned;
        } else {
            ++cr.lifts_checked;
        }
        if (arithmetic) {
            cr.attained.insert(r);
            if (from_box)
                cr.attained_in_box.insert(r);
        }
        if (arithmetic != listed) {
            ++cr.counterexamples;
            ++scan.failures;
            if (scan.examples.size() < max_recorded_counterexamples)
                scan.examples.push_back(
                    {m.to_string(), lc.number, arithmetic, listed, from_box ? "box" : "lift"});
        }
    }
}

// All det-1 matrices with |entries| <= box and a in [a_lo, a_hi].
inline void scan_box_slice(const ResidueLemma& lemma, std::int64_t box, std::int64_t a_lo,
                           std::int64_t a_hi, LemmaScan& scan)
{
    using M64 = BasicMat2<std::int64_t>;
    for (std::int64_t a = a_lo; a <= a_hi; ++a)
        for (std::int64_t b = -box; b <= box; ++b)
            for (std::int64_t c = -box; c <= box; ++c) {
                if (a == 0) {
                    if (b * c != -1)
                        continue;
                    for (std::int64_t d = -box; d <= box; ++d)
                        check_member(lemma, M64::unchecked(a, b, c, d), true, scan);
                } else if ((1 + b * c) % a == 0) {
                    const std::int64_t d = (1 + b * c) / a;
                    if (d >= -box && d <= box)
                        check_member(lemma, M64::unchecked(a, b, c, d), true, scan);
                }
            }
}

} // namespace detail

/// Largest accepted box; keeps every intermediate of f and g inside 64 bits.
inline constexpr int max_lemma_box = 2000;

/// Scans all members with |entries| <= box (in parallel over the first entry),
/// then one lift of each class mod lcm(L, level, 2).
inline LemmaReport verify_residue_lemma(const ResidueLemma& lemma, int box = 40,
                                        unsigned threads = 0)
{
    if (box < 0 || box > max_lemma_box)
        throw invalid_argument("verify_residue_lemma: box must lie in [0, "
                               + std::to_string(max_lemma_box) + "], got "
                               + std::to_string(box));
    if (threads == 0)
        threads = std::max(1U, std::thread::hardware_concurrency());
    const std::int64_t width = 2 * static_cast<std::int64_t>(box) + 1;
    const std::int64_t parts = std::min<std::int64_t>(threads, width);

    std::vector<std::future<detail::LemmaScan>> jobs;
    for (std::int64_t p = 0; p < parts; ++p) {
        const std::int64_t lo = -box + width * p / parts;
        const std::int64_t hi = -box + width * (p + 1) / parts - 1;
        jobs.push_back(std::async(std::launch::async, [&lemma, box, lo, hi] {
            detail::LemmaScan s(lemma);
            detail::scan_box_slice(lemma, box, lo, hi, s);
            return s;
        }));
    }
    detail::LemmaScan total(lemma);
    for (auto& j : jobs)
        total.merge(j.get());

    const std::int64_t q =
        std::lcm(std::lcm<std::int64_t>(lemma.residue_modulus, lemma.level), std::int64_t{2});
    for (const ResidueMat& r : enumerate_sl2(q))
        detail::check_member(lemma, lift_to_sl2z(r), false, total);

    std::sort(total.examples.begin(), total.examples.end(),
              [](const LemmaCounterexample& x, const LemmaCounterexample& y) {
                  return std::tie(x.source, x.case_number, x.matrix)
                         < std::tie(y.source, y.case_number, y.matrix);
              });
    if (total.examples.size() > detail::max_recorded_counterexamples)
        total.examples.resize(detail::max_recorded_counterexamples);
    LemmaReport rep;
    rep.lemma_id = lemma.id;
    rep.box = box;
    rep.members_scanned = total.members;
    rep.counterexample_count = total.failures;
    rep.counterexamples = std::move(total.examples);
    rep.cases = std::move(total.cases);
    return rep;
}

inline LemmaReport verify_residue_lemma(const std::string& id, int box = 40, unsigned threads = 0)
{
    return verify_residue_lemma(find_residue_lemma(id), box, threads);
}

} // namespace theta
