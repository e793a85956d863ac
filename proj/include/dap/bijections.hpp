#pragma once

#include <string>
#include <vector>

#include "dap/core.hpp"
#include "dap/errors.hpp"

namespace dap {

namespace detail {

// Split position for a path with >= 2 returns: index of the step that ends the
// second-to-last return. The suffix after it is the final block, which has
// exactly one return.
inline int second_to_last_return(const std::vector<Step>& st) {
    int h = 0;
    int last = -1, prev = -1;
    for (std::size_t i = 0; i < st.size(); ++i) {
        h += st[i].rise();
        if (h == 0) {
            prev = last;
            last = static_cast<int>(i);
        }
    }
    if (prev < 0) throw internal_error("split requested on a single-return path");
    return prev;
}

inline std::vector<MStep> psi_rec(const std::vector<Step>& st) {
    if (st.size() == 2 && st[0].is_up() && st[1].fall() == 1) return {MStep::flat};
    AirPocketPath p = AirPocketPath::from_steps(st);
    if (p.returns() == 1) {
        // a single-return path longer than UD must close with a fall of >= 2
        if (st.back().fall() < 2) throw internal_error("single-return path ends with a unit fall");
        auto inner = psi_rec(p.lower().steps());
        inner.push_back(MStep::flat);
        return inner;
    }
    int cut = second_to_last_return(st);
    std::vector<Step> beta(st.begin(), st.begin() + cut + 1);
    std::vector<Step> gamma(st.begin() + cut + 1, st.end());
    if (gamma.size() == 2 && gamma[0].is_up() && gamma[1].fall() == 1) {
        std::vector<MStep> out{MStep::up};
        auto mid = psi_rec(beta);
        out.insert(out.end(), mid.begin(), mid.end());
        out.push_back(MStep::down);
        return out;
    }
    auto out = psi_rec(AirPocketPath::from_steps(gamma).lower().steps());
    out.push_back(MStep::up);
    auto mid = psi_rec(beta);
    out.insert(out.end(), mid.begin(), mid.end());
    out.push_back(MStep::down);
    return out;
}

inline std::vector<Step> psi_inv_rec(const std::vector<MStep>& w) {
    if (w.size() == 1 && w[0] == MStep::flat) return {Step::up(), Step::down(1)};
    if (w.empty()) throw internal_error("transport inverse applied to the empty word");
    if (w.back() == MStep::flat) {
        std::vector<MStep> head(w.begin(), w.end() - 1);
        auto p = AirPocketPath::from_steps(psi_inv_rec(head));
        return p.elevate().steps();
    }
    if (w.back() != MStep::down) throw internal_error("word ends with neither F nor D");
    // locate the U that opens the final block: the last position where the
    // height before the step is zero
    int h = 0, start = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (h == 0) start = static_cast<int>(i);
        h += rise(w[i]);
    }
    if (w[start] != MStep::up) throw internal_error("final block does not open with U");
    std::vector<MStep> m1(w.begin(), w.begin() + start);
    std::vector<MStep> m2(w.begin() + start + 1, w.end() - 1);
    if (m2.empty()) throw internal_error("transport inverse applied to a word with a peak");
    auto beta = psi_inv_rec(m2);
    if (m1.empty()) {
        beta.push_back(Step::up());
        beta.push_back(Step::down(1));
        return beta;
    }
    auto gamma = AirPocketPath::from_steps(psi_inv_rec(m1)).elevate();
    beta.insert(beta.end(), gamma.steps().begin(), gamma.steps().end());
    return beta;
}

}  // namespace detail

// Recursive transport onto peakless Motzkin words, one letter shorter than the
// path: UD -> F; beta.UD -> U psi(beta) D; a prime path alpha -> psi(lowered
// alpha) F; beta.gamma with gamma prime -> psi(lowered gamma) U psi(beta) D.
inline MotzkinWord psi(const AirPocketPath& p) {
    return MotzkinWord::from_steps(detail::psi_rec(p.steps()));
}

inline AirPocketPath psi_inv(const MotzkinWord& w) {
    if (w.size() == 0) throw domain_error("transport inverse needs a nonempty word");
    for (MStep s : w.steps())
        if (s == MStep::wavy) throw domain_error("transport inverse needs a plain Motzkin word");
    if (!w.is_peakless()) throw domain_error("transport inverse needs a peakless word");
    int h = 0;
    for (MStep s : w.steps()) {
        h += rise(s);
        if (h < 0) throw domain_error("transport inverse needs a nonnegative word");
    }
    return AirPocketPath::from_steps(detail::psi_inv_rec(w.steps()));
}

// Expansion of each D_k into k unit down-steps: a Dyck word of length 2(n-k)
// for a path with n steps and k peaks, preserving the number of peaks.
inline MotzkinWord unfurl(const AirPocketPath& p) {
    std::vector<MStep> out;
    for (Step s : p.steps()) {
        if (s.is_up()) {
            out.push_back(MStep::up);
        } else {
            for (int i = 0; i < s.fall(); ++i) out.push_back(MStep::down);
        }
    }
    return MotzkinWord::from_steps(std::move(out));
}

// Inverse of unfurl: contract every maximal run of down-steps into one fall.
inline AirPocketPath refurl(const MotzkinWord& w) {
    std::vector<Step> out;
    const auto& st = w.steps();
    for (std::size_t i = 0; i < st.size();) {
        switch (st[i]) {
            case MStep::up:
                out.push_back(Step::up());
                ++i;
                break;
            case MStep::down: {
                std::size_t j = i;
                while (j < st.size() && st[j] == MStep::down) ++j;
                out.push_back(Step::down(static_cast<int>(j - i)));
                i = j;
                break;
            }
            default: throw domain_error("only Dyck words (letters U and D) can be contracted");
        }
    }
    return AirPocketPath::from_steps(std::move(out));
}

// Pairing map between meander words and their step images, two letters per
// step: RL -> U, LR -> D, RR -> F, LL -> W.
inline MotzkinWord mu(const MeanderWord& w) {
    return MotzkinWord::from_steps(w.mu(), WordKind::grand);
}

inline MeanderWord mu_inv(const MotzkinWord& w) {
    if (!is_in_S(w.steps()))
        throw domain_error("word is outside the meander image language");
    std::string letters;
    letters.reserve(2 * w.steps().size());
    for (MStep s : w.steps()) {
        switch (s) {
            case MStep::up: letters += "RL"; break;
            case MStep::down: letters += "LR"; break;
            case MStep::flat: letters += "RR"; break;
            case MStep::wavy: letters += "LL"; break;
        }
    }
    return MeanderWord::from_letters(std::move(letters));
}

}  // namespace dap
