#pragma once

#include <charconv>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dap/core.hpp"
#include "dap/enumerate.hpp"
#include "dap/errors.hpp"
#include "dap/numeric.hpp"

namespace dap {

// Statistics on air-pocket paths (first block) and on Motzkin-like words
// (M_ prefix). Parameterized tags carry k, written STAT(k) in text form.
enum class StatTag {
    u_count,
    d1_count,
    du_count,
    uu_count,
    delta,
    delta_ge,
    delta_le,
    peak,
    ret,
    cat,
    slast,
    m_f,
    m_u,
    m_ufd,
    m_u2md2,
    m_ind_f,
    m_ind_umd,
    m_ind_fk,
    m_ufkd,
    m_ind_fk1umd,
    m_ufk1umd2,
    m_lastf,
    m_ret,
};

struct StatId {
    StatTag tag;
    int k = 0;

    friend auto operator<=>(const StatId&, const StatId&) = default;
};

inline constexpr struct {
    StatTag tag;
    const char* name;
    bool takes_k;
    bool word_side;
} stat_table[] = {
    {StatTag::u_count, "U_COUNT", false, false},
    {StatTag::d1_count, "D1_COUNT", false, false},
    {StatTag::du_count, "DU_COUNT", false, false},
    {StatTag::uu_count, "UU_COUNT", false, false},
    {StatTag::delta, "DELTA", true, false},
    {StatTag::delta_ge, "DELTA_GE", true, false},
    {StatTag::delta_le, "DELTA_LE", true, false},
    {StatTag::peak, "PEAK", false, false},
    {StatTag::ret, "RET", false, false},
    {StatTag::cat, "CAT", false, false},
    {StatTag::slast, "SLAST", false, false},
    {StatTag::m_f, "M_F", false, true},
    {StatTag::m_u, "M_U", false, true},
    {StatTag::m_ufd, "M_UFD", false, true},
    {StatTag::m_u2md2, "M_U2MD2", false, true},
    {StatTag::m_ind_f, "M_IND_F", false, true},
    {StatTag::m_ind_umd, "M_IND_UMD", false, true},
    {StatTag::m_ind_fk, "M_IND_FK", true, true},
    {StatTag::m_ufkd, "M_UFKD", true, true},
    {StatTag::m_ind_fk1umd, "M_IND_FK1UMD", true, true},
    {StatTag::m_ufk1umd2, "M_UFK1UMD2", true, true},
    {StatTag::m_lastf, "M_LASTF", false, true},
    {StatTag::m_ret, "M_RET", false, true},
};

inline bool stat_takes_k(StatTag t) {
    for (auto& e : stat_table)
        if (e.tag == t) return e.takes_k;
    throw internal_error("unknown stat tag");
}

inline bool stat_on_words(StatTag t) {
    for (auto& e : stat_table)
        if (e.tag == t) return e.word_side;
    throw internal_error("unknown stat tag");
}

inline std::string stat_name(StatId s) {
    for (auto& e : stat_table)
        if (e.tag == s.tag)
            return e.takes_k ? std::string(e.name) + "(" + std::to_string(s.k) + ")"
                             : std::string(e.name);
    throw internal_error("unknown stat tag");
}

inline StatId parse_stat(std::string_view text) {
    std::string_view base = text;
    int k = 0;
    bool has_k = false;
    if (auto open = text.find('('); open != std::string_view::npos) {
        if (text.back() != ')') throw parse_error("malformed statistic '" + std::string(text) + "'");
        base = text.substr(0, open);
        std::string_view arg = text.substr(open + 1, text.size() - open - 2);
        auto res = std::from_chars(arg.data(), arg.data() + arg.size(), k);
        if (res.ec != std::errc{} || res.ptr != arg.data() + arg.size())
            throw parse_error("malformed statistic parameter in '" + std::string(text) + "'");
        has_k = true;
    }
    for (auto& e : stat_table)
        if (base == e.name) {
            if (e.takes_k != has_k)
                throw parse_error(std::string(e.name) +
                                  (e.takes_k ? " requires a parameter" : " takes no parameter"));
            if (e.takes_k && k < 1) throw domain_error("statistic parameter must be at least 1");
            return {e.tag, k};
        }
    throw domain_error("unknown statistic '" + std::string(text) + "'");
}

namespace detail {

// beta must be a nonempty factor that reads as a peakless Motzkin word when
// rebased at its own starting height
inline bool peakless_motzkin_factor(std::span<const MStep> w, std::size_t lo, std::size_t hi) {
    if (lo >= hi) return false;
    int h = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        if (w[i] == MStep::wavy) return false;
        if (i > lo && w[i - 1] == MStep::up && w[i] == MStep::down) return false;
        h += rise(w[i]);
        if (h < 0) return false;
    }
    return h == 0;
}

}  // namespace detail

inline long stat(const AirPocketPath& p, StatId s) {
    if (stat_on_words(s.tag))
        throw type_mismatch_error(stat_name(s) + " is a statistic on Motzkin-like words");
    const auto& st = p.steps();
    const long n = static_cast<long>(st.size());
    auto pyramid_at = [&](long i, int k) {
        // true when st[i] is D_k preceded by exactly the k up-steps of U^k D_k
        if (!st[i].is_down() || st[i].fall() != k) return false;
        if (i < k) return false;
        for (long j = i - k; j < i; ++j)
            if (!st[j].is_up()) return false;
        return true;
    };
    long v = 0;
    switch (s.tag) {
        case StatTag::u_count:
            for (auto x : st) v += x.is_up();
            return v;
        case StatTag::d1_count:
            for (auto x : st) v += x.is_down() && x.fall() == 1;
            return v;
        case StatTag::du_count:
            for (long i = 0; i + 1 < n; ++i)
                v += st[i].is_down() && st[i].fall() == 1 && st[i + 1].is_up();
            return v;
        case StatTag::uu_count:
            for (long i = 0; i + 1 < n; ++i) v += st[i].is_up() && st[i + 1].is_up();
            return v;
        case StatTag::delta:
            for (long i = 0; i < n; ++i) v += pyramid_at(i, s.k);
            return v;
        case StatTag::delta_ge:
            for (long i = 0; i < n; ++i)
                if (st[i].is_down() && st[i].fall() >= s.k) v += pyramid_at(i, st[i].fall());
            return v;
        case StatTag::delta_le:
            for (long i = 0; i < n; ++i)
                if (st[i].is_down() && st[i].fall() <= s.k) v += pyramid_at(i, st[i].fall());
            return v;
        case StatTag::peak:
            for (long i = 0; i + 1 < n; ++i) v += st[i].is_up() && st[i + 1].is_down();
            return v;
        case StatTag::ret: {
            int h = 0;
            for (auto x : st) {
                h += x.rise();
                v += h == 0;
            }
            return v;
        }
        case StatTag::cat: {
            int h = 0;
            for (auto x : st) {
                h += x.rise();
                v += h == 0 && x.is_down() && x.fall() >= 2;
            }
            return v;
        }
        case StatTag::slast: return st.back().fall();
        default: throw internal_error("unhandled path statistic");
    }
}

inline long stat(const MotzkinWord& w, StatId s) {
    if (!stat_on_words(s.tag))
        throw type_mismatch_error(stat_name(s) + " is a statistic on air-pocket paths");
    const auto& st = w.steps();
    const long n = static_cast<long>(st.size());
    auto run_of_flats = [&](long from, int len) {
        if (from < 0 || from + len > n) return false;
        for (long i = from; i < from + len; ++i)
            if (st[i] != MStep::flat) return false;
        return true;
    };
    long v = 0;
    switch (s.tag) {
        case StatTag::m_f:
            for (auto x : st) v += x == MStep::flat;
            return v;
        case StatTag::m_u:
            for (auto x : st) v += x == MStep::up;
            return v;
        case StatTag::m_ufd:
            for (long i = 0; i + 2 < n; ++i)
                v += st[i] == MStep::up && st[i + 1] == MStep::flat && st[i + 2] == MStep::down;
            return v;
        case StatTag::m_u2md2:
            for (long i = 0; i + 1 < n; ++i) {
                if (!(st[i] == MStep::up && st[i + 1] == MStep::up)) continue;
                for (long j = i + 3; j < n; ++j)
                    if (st[j - 1] == MStep::down && st[j] == MStep::down &&
                        detail::peakless_motzkin_factor(st, i + 2, j - 1))
                        ++v;
            }
            return v;
        case StatTag::m_ind_f: return n == 1 && st[0] == MStep::flat;
        case StatTag::m_ind_umd:
            return n >= 3 && st[0] == MStep::up && st[n - 1] == MStep::down &&
                   detail::peakless_motzkin_factor(st, 1, n - 1);
        case StatTag::m_ind_fk: return n == s.k && run_of_flats(0, s.k);
        case StatTag::m_ufkd:
            for (long i = 0; i + s.k + 1 < n; ++i)
                v += st[i] == MStep::up && run_of_flats(i + 1, s.k) && st[i + s.k + 1] == MStep::down;
            return v;
        case StatTag::m_ind_fk1umd:
            return n >= s.k + 2 && run_of_flats(0, s.k - 1) && st[s.k - 1] == MStep::up &&
                   st[n - 1] == MStep::down && detail::peakless_motzkin_factor(st, s.k, n - 1);
        case StatTag::m_ufk1umd2:
            // factor U F^{k-1} U beta D D with beta a nonempty peakless word
            for (long i = 0; i + s.k + 4 <= n; ++i) {
                if (st[i] != MStep::up || !run_of_flats(i + 1, s.k - 1) ||
                    st[i + s.k] != MStep::up)
                    continue;
                for (long j = i + s.k + 3; j < n; ++j)
                    if (st[j - 1] == MStep::down && st[j] == MStep::down &&
                        detail::peakless_motzkin_factor(st, i + s.k + 1, j - 1))
                        ++v;
            }
            return v;
        case StatTag::m_lastf:
            for (long i = n - 1; i >= 0; --i)
                if (st[i] == MStep::flat) return i + 1;  // positions are 1-based
            return 0;
        case StatTag::m_ret: {
            int h = 0;
            for (auto x : st) {
                h += rise(x);
                v += h == 0;
            }
            return v;
        }
        default: throw internal_error("unhandled word statistic");
    }
}

struct Histogram {
    FamilyId family;
    int n = 0;
    StatId stat_id;
    std::map<long, BigInt> entries;  // value -> multiplicity, zero rows omitted

    BigInt total() const {
        BigInt t = 0;
        for (auto& [v, c] : entries) t += c;
        return t;
    }
    BigInt weighted_sum() const {
        BigInt t = 0;
        for (auto& [v, c] : entries) t += BigInt(v) * c;
        return t;
    }
};

inline Histogram distribution(FamilyId f, int n, StatId s, int max_n = 18) {
    Histogram h{f, n, s, {}};
    if (stat_on_words(s.tag)) {
        if (family_kind(f) != ObjectKind::word)
            throw type_mismatch_error(stat_name(s) + " needs a word family, got " +
                                      std::string(family_name(f)));
        for (const auto& w : enum_words(f, n, max_n)) ++h.entries[stat(w, s)];
    } else {
        if (family_kind(f) != ObjectKind::path)
            throw type_mismatch_error(stat_name(s) + " needs an air-pocket family, got " +
                                      std::string(family_name(f)));
        for (const auto& p : enum_paths(f, n, max_n)) ++h.entries[stat(p, s)];
    }
    for (auto it = h.entries.begin(); it != h.entries.end();)
        it = it->second == 0 ? h.entries.erase(it) : std::next(it);
    return h;
}

inline BigInt popularity(FamilyId f, int n, StatId s, int max_n = 18) {
    return distribution(f, n, s, max_n).weighted_sum();
}

}  // namespace dap
