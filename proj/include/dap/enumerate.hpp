#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "dap/core.hpp"
#include "dap/errors.hpp"
#include "dap/numeric.hpp"

namespace dap {

// Families named in the text format used by the CLI. MEANDER takes the
// half-length (words have 2n letters); every other family takes the number of
// steps, including DYCK (odd n gives the empty family).
enum class FamilyId {
    air,
    air_inc,
    prime,
    valleys_at_zero,
    peakless_motzkin,
    valleyless_motzkin,
    grand_peakless,
    grand_peakless_startd,
    s_family,
    meander,
    dyck,
};

inline constexpr struct {
    FamilyId id;
    const char* name;
} family_table[] = {
    {FamilyId::air, "AIR"},
    {FamilyId::air_inc, "AIR_INC"},
    {FamilyId::prime, "PRIME"},
    {FamilyId::valleys_at_zero, "VALLEYS_AT_ZERO"},
    {FamilyId::peakless_motzkin, "PEAKLESS_MOTZKIN"},
    {FamilyId::valleyless_motzkin, "VALLEYLESS_MOTZKIN"},
    {FamilyId::grand_peakless, "GRAND_PEAKLESS"},
    {FamilyId::grand_peakless_startd, "GRAND_PEAKLESS_STARTD"},
    {FamilyId::s_family, "S_FAMILY"},
    {FamilyId::meander, "MEANDER"},
    {FamilyId::dyck, "DYCK"},
};

inline std::string_view family_name(FamilyId f) {
    for (auto& e : family_table)
        if (e.id == f) return e.name;
    throw internal_error("unknown family id");
}

inline FamilyId parse_family(std::string_view s) {
    for (auto& e : family_table)
        if (s == e.name) return e.id;
    throw domain_error("unknown family '" + std::string(s) + "'");
}

enum class ObjectKind { path, word, meander };

inline ObjectKind family_kind(FamilyId f) {
    switch (f) {
        case FamilyId::air:
        case FamilyId::air_inc:
        case FamilyId::prime:
        case FamilyId::valleys_at_zero: return ObjectKind::path;
        case FamilyId::meander: return ObjectKind::meander;
        default: return ObjectKind::word;
    }
}

namespace detail {

using RawPath = std::vector<Step>;

inline RawPath elevate_raw(const RawPath& p) {
    RawPath out;
    out.reserve(p.size() + 1);
    out.push_back(Step::up());
    out.insert(out.end(), p.begin(), p.end() - 1);
    out.push_back(Step::down(p.back().fall() + 1));
    return out;
}

// All paths of each length 2..n via the second-to-last-return decomposition:
// a path is UD, or beta.UD, or prime (an elevation), or beta.(prime). The four
// cases are disjoint, so no dedup is needed.
inline std::vector<std::vector<RawPath>> air_levels(int n) {
    std::vector<std::vector<RawPath>> L(std::max(n + 1, 3));
    if (n >= 2) L[2].push_back({Step::up(), Step::down(1)});
    for (int m = 3; m <= n; ++m) {
        auto& out = L[m];
        for (const auto& b : L[m - 2]) {
            RawPath s = b;
            s.push_back(Step::up());
            s.push_back(Step::down(1));
            out.push_back(std::move(s));
        }
        for (const auto& g : L[m - 1]) out.push_back(elevate_raw(g));
        for (int j = 2; j <= m - 3; ++j)
            for (const auto& b : L[j])
                for (const auto& d : L[m - 1 - j]) {
                    RawPath s = b;
                    RawPath e = elevate_raw(d);
                    s.insert(s.end(), e.begin(), e.end());
                    out.push_back(std::move(s));
                }
    }
    return L;
}

// Non-decreasing paths: UD, or Delta_k followed by a non-decreasing path
// (k >= 1), or an elevation of one (elevations preserve the property).
inline std::vector<std::vector<RawPath>> air_inc_levels(int n) {
    std::vector<std::vector<RawPath>> L(std::max(n + 1, 3));
    if (n >= 2) L[2].push_back({Step::up(), Step::down(1)});
    for (int m = 3; m <= n; ++m) {
        auto& out = L[m];
        for (const auto& g : L[m - 1]) out.push_back(elevate_raw(g));
        for (int k = 1; m - k - 1 >= 2; ++k)
            for (const auto& b : L[m - k - 1]) {
                RawPath s;
                s.reserve(m);
                for (int i = 0; i < k; ++i) s.push_back(Step::up());
                s.push_back(Step::down(k));
                s.insert(s.end(), b.begin(), b.end());
                out.push_back(std::move(s));
            }
    }
    return L;
}

// Valleys all on the axis: Delta_k alone, or Delta_k followed by such a path.
inline std::vector<std::vector<RawPath>> valleys_at_zero_levels(int n) {
    std::vector<std::vector<RawPath>> L(std::max(n + 1, 3));
    for (int m = 2; m <= n; ++m) {
        auto& out = L[m];
        RawPath pyr;
        for (int i = 0; i < m - 1; ++i) pyr.push_back(Step::up());
        pyr.push_back(Step::down(m - 1));
        out.push_back(std::move(pyr));
        for (int k = 1; m - k - 1 >= 2; ++k)
            for (const auto& b : L[m - k - 1]) {
                RawPath s;
                s.reserve(m);
                for (int i = 0; i < k; ++i) s.push_back(Step::up());
                s.push_back(Step::down(k));
                s.insert(s.end(), b.begin(), b.end());
                out.push_back(std::move(s));
            }
    }
    return L;
}

struct WordRules {
    bool grand = false;       // heights may go negative
    bool flats = true;        // flat steps allowed (off for Dyck words)
    bool no_peak = false;     // forbid factor UD
    bool no_valley = false;   // forbid factor DU
    bool start_down = false;  // first step must be D
};

inline void words_dfs(int n, const WordRules& r, std::vector<MStep>& cur, int h,
                      std::vector<std::vector<MStep>>& out) {
    int rem = n - static_cast<int>(cur.size());
    if (std::abs(h) > rem) return;  // each step moves height by at most 1
    if (rem == 0) {
        if (h == 0) out.push_back(cur);
        return;
    }
    for (MStep s : {MStep::up, MStep::down, MStep::flat}) {
        if (s == MStep::flat && !r.flats) continue;
        if (s == MStep::down && !r.grand && h == 0) continue;
        if (r.no_peak && s == MStep::down && !cur.empty() && cur.back() == MStep::up) continue;
        if (r.no_valley && s == MStep::up && !cur.empty() && cur.back() == MStep::down) continue;
        if (r.start_down && cur.empty() && s != MStep::down) continue;
        cur.push_back(s);
        words_dfs(n, r, cur, h + rise(s), out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<MStep>> words_of(int n, const WordRules& r) {
    std::vector<std::vector<MStep>> out;
    std::vector<MStep> cur;
    if (r.start_down && n == 0) return out;  // the empty word does not start with D
    words_dfs(n, r, cur, 0, out);
    return out;
}

// Meander letters, letter-by-letter with incremental checks on the pair image
// (the image's start condition holds automatically: the first pair of a word
// starting with L is LL or LR, i.e. a wavy flat or a down step).
inline void meander_dfs(int pairs, std::string& cur, int h, bool wavy_done, MStep last_pair,
                        bool in_initial_run, std::vector<MeanderWord>& out) {
    int done = static_cast<int>(cur.size()) / 2;
    if (static_cast<int>(cur.size()) % 2 == 0 && std::abs(h) > pairs - done) return;
    if (done == pairs) {
        if (h == 0) out.push_back(MeanderWord::from_letters(cur));
        return;
    }
    for (char c : {'L', 'R'}) {
        if (cur.empty() && c != 'L') continue;
        bool run = in_initial_run && c == 'L';
        if (!cur.empty() && !in_initial_run && cur.back() == 'L' && c == 'L') continue;
        if (cur.size() % 2 == 0) {
            cur.push_back(c);
            meander_dfs(pairs, cur, h, wavy_done, last_pair, run, out);
            cur.pop_back();
        } else {
            char a = cur.back();
            MStep t = (a == 'L' && c == 'L')   ? MStep::wavy
                      : (a == 'L' && c == 'R') ? MStep::down
                      : (a == 'R' && c == 'L') ? MStep::up
                                               : MStep::flat;
            if (t == MStep::wavy && wavy_done) continue;
            if (t == MStep::down && last_pair == MStep::up) continue;  // image must stay peakless
            cur.push_back(c);
            meander_dfs(pairs, cur, h + rise(t), wavy_done || t != MStep::wavy, t, run, out);
            cur.pop_back();
        }
    }
}

inline void check_bounds(FamilyId f, int n, int max_n) {
    if (n < 0) throw domain_error("family size must be nonnegative");
    if (n > max_n)
        throw resource_limit_error("size " + std::to_string(n) + " for " +
                                   std::string(family_name(f)) + " exceeds the configured maximum " +
                                   std::to_string(max_n));
}

}  // namespace detail

inline std::vector<AirPocketPath> enum_paths(FamilyId f, int n, int max_n = 18) {
    detail::check_bounds(f, n, max_n);
    std::vector<detail::RawPath> raw;
    switch (f) {
        case FamilyId::air:
            if (n >= 2) raw = std::move(detail::air_levels(n)[n]);
            break;
        case FamilyId::air_inc:
            if (n >= 2) raw = std::move(detail::air_inc_levels(n)[n]);
            break;
        case FamilyId::prime:
            if (n >= 3) {
                // materialize before iterating: the levels are a temporary, and
                // a range-for over temp[i] dangles under C++20 lifetime rules
                auto levels = detail::air_levels(n - 1);
                for (const auto& p : levels[n - 1]) raw.push_back(detail::elevate_raw(p));
            }
            break;
        case FamilyId::valleys_at_zero:
            if (n >= 2) raw = std::move(detail::valleys_at_zero_levels(n)[n]);
            break;
        default:
            throw type_mismatch_error(std::string(family_name(f)) +
                                      " does not enumerate as air-pocket paths");
    }
    std::sort(raw.begin(), raw.end());
    std::vector<AirPocketPath> out;
    out.reserve(raw.size());
    for (auto& r : raw) out.push_back(AirPocketPath::from_steps(std::move(r)));
    return out;
}

inline std::vector<MotzkinWord> enum_words(FamilyId f, int n, int max_n = 18) {
    detail::check_bounds(f, n, max_n);
    detail::WordRules r;
    WordKind kind = WordKind::motzkin;
    std::vector<std::vector<MStep>> raw;
    switch (f) {
        case FamilyId::peakless_motzkin:
            r.no_peak = true;
            raw = detail::words_of(n, r);
            break;
        case FamilyId::valleyless_motzkin:
            r.no_valley = true;
            raw = detail::words_of(n, r);
            break;
        case FamilyId::grand_peakless:
            r.grand = true;
            r.no_peak = true;
            kind = WordKind::grand;
            raw = detail::words_of(n, r);
            break;
        case FamilyId::grand_peakless_startd:
            r.grand = true;
            r.no_peak = true;
            r.start_down = true;
            kind = WordKind::grand;
            raw = detail::words_of(n, r);
            break;
        case FamilyId::s_family: {
            // wavy-run prefix of length >= 1 plus any grand peakless word, or a
            // grand peakless word that starts with a down step
            kind = WordKind::grand;
            detail::WordRules g;
            g.grand = true;
            g.no_peak = true;
            g.start_down = true;
            raw = detail::words_of(n, g);
            g.start_down = false;
            for (int k = 1; k <= n; ++k)
                for (auto w : detail::words_of(n - k, g)) {
                    std::vector<MStep> s(static_cast<std::size_t>(k), MStep::wavy);
                    s.insert(s.end(), w.begin(), w.end());
                    raw.push_back(std::move(s));
                }
            break;
        }
        case FamilyId::dyck:
            r.flats = false;
            raw = detail::words_of(n, r);
            break;
        default:
            throw type_mismatch_error(std::string(family_name(f)) +
                                      " does not enumerate as words");
    }
    std::sort(raw.begin(), raw.end());
    std::vector<MotzkinWord> out;
    out.reserve(raw.size());
    for (auto& w : raw) out.push_back(MotzkinWord::from_steps(std::move(w), kind));
    return out;
}

inline std::vector<MeanderWord> enum_meanders(int n, int max_n = 18) {
    detail::check_bounds(FamilyId::meander, n, max_n);
    std::vector<MeanderWord> out;
    if (n == 0) return out;
    std::string cur;
    detail::meander_dfs(n, cur, 0, false, MStep::flat, true, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Canonical text of every member, in the family's published order.
inline std::vector<std::string> enum_family_text(FamilyId f, int n, int max_n = 18) {
    std::vector<std::string> out;
    switch (family_kind(f)) {
        case ObjectKind::path:
            for (const auto& p : enum_paths(f, n, max_n)) out.push_back(p.to_string());
            break;
        case ObjectKind::word:
            for (const auto& w : enum_words(f, n, max_n)) out.push_back(w.to_string());
            break;
        case ObjectKind::meander:
            for (const auto& m : enum_meanders(n, max_n)) out.push_back(m.to_string());
            break;
    }
    return out;
}

namespace detail {

// Counting recurrence matching the generation grammar, used as an arithmetic
// cross-check that the streams have the right cardinalities.
inline std::vector<BigInt> air_counts(int n) {
    std::vector<BigInt> a(std::max(n + 1, 3), 0);
    if (n >= 2) a[2] = 1;
    for (int m = 3; m <= n; ++m) {
        BigInt v = a[m - 1] + a[m - 2];
        for (int j = 2; j <= m - 3; ++j) v += a[j] * a[m - 1 - j];
        a[m] = v;
    }
    return a;
}

inline BigInt catalan_number(long n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace detail

inline BigInt count_family(FamilyId f, int n, int max_n = 18) {
    BigInt counted;
    switch (family_kind(f)) {
        case ObjectKind::path: counted = enum_paths(f, n, max_n).size(); break;
        case ObjectKind::word: counted = enum_words(f, n, max_n).size(); break;
        case ObjectKind::meander: counted = enum_meanders(n, max_n).size(); break;
    }
    BigInt expect = -1;  // -1 = no independent formula for this family/size
    switch (f) {
        case FamilyId::air:
            if (n >= 2) expect = detail::air_counts(n)[n];
            break;
        case FamilyId::prime:
            if (n >= 3) expect = detail::air_counts(n - 1)[n - 1];
            break;
        case FamilyId::air_inc:
            if (n == 2) expect = 1;
            if (n >= 3) expect = pow2(n - 3);
            break;
        case FamilyId::valleys_at_zero:
            if (n >= 1) expect = fibonacci(n - 1);
            break;
        case FamilyId::peakless_motzkin:
            expect = n == 0 ? BigInt(1) : detail::air_counts(n + 1)[n + 1];
            break;
        case FamilyId::dyck:
            expect = n % 2 == 0 ? detail::catalan_number(n / 2) : BigInt(0);
            break;
        default: break;
    }
    if (expect >= 0 && expect != counted)
        throw internal_mismatch_error("count of " + std::string(family_name(f)) + " at n=" +
                                      std::to_string(n) + " is " + counted.str() +
                                      " but the closed form gives " + expect.str());
    return counted;
}

// Paths with a prescribed number of up-steps (any length), optionally without
// unit down-steps, optionally restricted to the non-decreasing subclass. Used
// for the up-step gradings, where length is the wrong size function.
namespace detail {

inline void upsteps_dfs(int ups_left, int h, bool last_down, bool forbid_d1, bool nondecreasing,
                        int last_valley, BigInt& count) {
    if (h == 0 && ups_left == 0) {
        ++count;  // nothing can legally extend a completed path
        return;
    }
    // a valley only materializes when an up-step follows a down-step
    if (ups_left > 0 && !(nondecreasing && last_down && h < last_valley))
        upsteps_dfs(ups_left - 1, h + 1, false, forbid_d1, nondecreasing,
                    last_down ? h : last_valley, count);
    if (!last_down)
        for (int k = forbid_d1 ? 2 : 1; k <= h; ++k)
            upsteps_dfs(ups_left, h - k, true, forbid_d1, nondecreasing, last_valley, count);
}

}  // namespace detail

inline BigInt count_by_upsteps(FamilyId f, int ups, bool forbid_d1 = false) {
    if (f != FamilyId::air && f != FamilyId::air_inc)
        throw type_mismatch_error("up-step census applies to air-pocket families only");
    if (ups < 0) throw domain_error("up-step count must be nonnegative");
    if (ups == 0) return 0;  // every path has at least one up-step
    BigInt count = 0;
    detail::upsteps_dfs(ups, 0, false, forbid_d1, f == FamilyId::air_inc, 0, count);
    return count;
}

}  // namespace dap
