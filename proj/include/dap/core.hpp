#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dap/errors.hpp"

namespace dap {

// ---------------------------------------------------------------------------
// Steps of a path with air pockets: U rises by 1, D_k falls by k (k >= 1).
// Encoded in a single int16 (0 = U, k = D_k) so that the canonical step order
// U < D1 < D2 < ... coincides with integer order and paths compare
// lexicographically via std::vector's <=>.
// ---------------------------------------------------------------------------

struct Step {
    std::int16_t code = 0;

    static constexpr Step up() { return Step{0}; }
    static Step down(int k) {
        if (k < 1) throw validation_error("down step must have positive size");
        if (k > 10000) throw validation_error("down step size too large");
        return Step{static_cast<std::int16_t>(k)};
    }

    bool is_up() const { return code == 0; }
    bool is_down() const { return code > 0; }
    int fall() const { return code; }  // 0 for U
    int rise() const { return code == 0 ? 1 : -code; }

    auto operator<=>(const Step&) const = default;
};

inline std::string to_string(Step s) {
    if (s.is_up()) return "U";
    if (s.fall() == 1) return "D";  // canonical output writes D, not D1
    return "D" + std::to_string(s.fall());
}

// ---------------------------------------------------------------------------
// Lattice path over {U, D_k}: nonnegative heights, ends at height 0, and no
// two consecutive down steps. The class invariant is exactly membership in the
// path family, so holding an object is proof of validity.
// ---------------------------------------------------------------------------

class AirPocketPath {
public:
    AirPocketPath() = delete;

    static AirPocketPath from_steps(std::vector<Step> steps) {
        validate(steps);
        return AirPocketPath(std::move(steps));
    }

    // Text form: "UUD2UD". Bare D means D1; "D1" is accepted on input.
    static AirPocketPath parse(std::string_view text) {
        return from_steps(parse_steps(text));
    }

    const std::vector<Step>& steps() const { return steps_; }
    int size() const { return static_cast<int>(steps_.size()); }

    // Height after each step; h[size()-1] == 0 by construction.
    std::vector<int> heights() const {
        std::vector<int> h;
        h.reserve(steps_.size());
        int cur = 0;
        for (Step s : steps_) {
            cur += s.rise();
            h.push_back(cur);
        }
        return h;
    }

    // Number of steps that touch the x-axis (the final step always does).
    int returns() const {
        int cur = 0, r = 0;
        for (Step s : steps_) {
            cur += s.rise();
            if (cur == 0) ++r;
        }
        return r;
    }

    // Prime: a single return, and the closing fall has size >= 2.
    bool is_prime() const {
        return steps_.back().fall() >= 2 && returns() == 1;
    }

    // beta U D_k  ->  U beta U D_{k+1}. Bijection onto prime paths one step longer.
    AirPocketPath elevate() const {
        std::vector<Step> out;
        out.reserve(steps_.size() + 1);
        out.push_back(Step::up());
        out.insert(out.end(), steps_.begin(), steps_.end() - 1);
        out.push_back(Step::down(steps_.back().fall() + 1));
        return from_steps(std::move(out));
    }

    // Inverse of elevate; only prime paths can be lowered.
    AirPocketPath lower() const {
        if (!is_prime()) throw type_mismatch_error("only prime paths can be lowered");
        std::vector<Step> out(steps_.begin() + 1, steps_.end() - 1);
        out.push_back(Step::down(steps_.back().fall() - 1));
        return from_steps(std::move(out));
    }

    // Heights of the local minima strictly inside the path (end of a down step
    // that is immediately followed by an up step).
    std::vector<int> valley_heights() const {
        std::vector<int> v;
        int cur = 0;
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            cur += steps_[i].rise();
            if (steps_[i].is_down() && i + 1 < steps_.size() && steps_[i + 1].is_up())
                v.push_back(cur);
        }
        return v;
    }

    bool is_nondecreasing() const {
        auto v = valley_heights();
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] < v[i - 1]) return false;
        return true;
    }

    std::string to_string() const {
        std::string out;
        for (Step s : steps_) out += dap::to_string(s);
        return out;
    }

    auto operator<=>(const AirPocketPath&) const = default;

private:
    explicit AirPocketPath(std::vector<Step> steps) : steps_(std::move(steps)) {}

    // Check order matters for deterministic messages: at each step the
    // consecutive-down test fires before the height test, so "UDD2..." reports
    // the pocket violation, not the (also true) dip below zero.
    static void validate(const std::vector<Step>& steps) {
        if (steps.empty()) throw validation_error("path has no steps");
        int cur = 0;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            if (steps[i].is_down() && i > 0 && steps[i - 1].is_down())
                throw validation_error("consecutive down steps at step " +
                                       std::to_string(i + 1));
            cur += steps[i].rise();
            if (cur < 0)
                throw validation_error("height drops below zero at step " +
                                       std::to_string(i + 1));
        }
        if (cur != 0)
            throw validation_error("path ends at height " + std::to_string(cur) +
                                   ", expected 0");
    }

    static std::vector<Step> parse_steps(std::string_view text) {
        std::vector<Step> steps;
        std::size_t i = 0;
        if (text.empty()) throw parse_error("empty path");
        while (i < text.size()) {
            char c = text[i];
            if (c == 'U') {
                steps.push_back(Step::up());
                ++i;
            } else if (c == 'D') {
                std::size_t j = i + 1;
                while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
                int k = 1;
                if (j > i + 1) {
                    auto [ptr, ec] = std::from_chars(text.data() + i + 1, text.data() + j, k);
                    if (ec != std::errc() || k > 10000)
                        throw parse_error("down step size out of range at position " +
                                          std::to_string(i + 1));
                    (void)ptr;
                    if (k == 0)
                        throw parse_error("down step must have positive size at position " +
                                          std::to_string(i + 1));
                }
                steps.push_back(Step::down(k));
                i = j;
            } else {
                throw parse_error(std::string("unexpected character '") + c +
                                  "' at position " + std::to_string(i + 1));
            }
        }
        return steps;
    }

    std::vector<Step> steps_;
};

// ---------------------------------------------------------------------------
// Motzkin-style words. One letter type covers all the auxiliary families:
// up/down/flat, plus a "wavy" flat that only ever appears as a leading run.
// Canonical letters: U D F W.
// ---------------------------------------------------------------------------

enum class MStep : std::uint8_t { up = 0, down = 1, flat = 2, wavy = 3 };

inline int rise(MStep s) {
    switch (s) {
        case MStep::up: return 1;
        case MStep::down: return -1;
        default: return 0;
    }
}

inline char letter(MStep s) {
    switch (s) {
        case MStep::up: return 'U';
        case MStep::down: return 'D';
        case MStep::flat: return 'F';
        default: return 'W';
    }
}

// motzkin: heights stay nonnegative, no wavy letters.
// grand: heights may go negative; wavy letters allowed, but only as a
// (possibly empty) maximal prefix. Both kinds must end at height 0.
enum class WordKind : std::uint8_t { motzkin, grand };

class MotzkinWord {
public:
    MotzkinWord() : kind_(WordKind::motzkin) {}  // the empty word

    static MotzkinWord from_steps(std::vector<MStep> steps, WordKind kind = WordKind::motzkin) {
        validate(steps, kind);
        return MotzkinWord(std::move(steps), kind);
    }

    static MotzkinWord parse(std::string_view text, WordKind kind = WordKind::motzkin) {
        std::vector<MStep> steps;
        steps.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            switch (text[i]) {
                case 'U': steps.push_back(MStep::up); break;
                case 'D': steps.push_back(MStep::down); break;
                case 'F': steps.push_back(MStep::flat); break;
                case 'W': steps.push_back(MStep::wavy); break;
                default:
                    throw parse_error(std::string("unexpected character '") + text[i] +
                                      "' at position " + std::to_string(i + 1));
            }
        }
        return from_steps(std::move(steps), kind);
    }

    const std::vector<MStep>& steps() const { return steps_; }
    int size() const { return static_cast<int>(steps_.size()); }
    WordKind kind() const { return kind_; }

    std::vector<int> heights() const {
        std::vector<int> h;
        h.reserve(steps_.size());
        int cur = 0;
        for (MStep s : steps_) {
            cur += rise(s);
            h.push_back(cur);
        }
        return h;
    }

    bool is_peakless() const {
        for (std::size_t i = 1; i < steps_.size(); ++i)
            if (steps_[i - 1] == MStep::up && steps_[i] == MStep::down) return false;
        return true;
    }

    bool is_valleyless() const {
        for (std::size_t i = 1; i < steps_.size(); ++i)
            if (steps_[i - 1] == MStep::down && steps_[i] == MStep::up) return false;
        return true;
    }

    bool starts_with_down() const {
        return !steps_.empty() && steps_.front() == MStep::down;
    }

    int wavy_prefix_length() const {
        int k = 0;
        while (k < size() && steps_[k] == MStep::wavy) ++k;
        return k;
    }

    std::string to_string() const {
        std::string out;
        out.reserve(steps_.size());
        for (MStep s : steps_) out += letter(s);
        return out;
    }

    auto operator<=>(const MotzkinWord&) const = default;

private:
    MotzkinWord(std::vector<MStep> steps, WordKind kind)
        : steps_(std::move(steps)), kind_(kind) {}

    static void validate(const std::vector<MStep>& steps, WordKind kind) {
        int cur = 0;
        bool past_prefix = false;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            if (steps[i] == MStep::wavy) {
                if (kind == WordKind::motzkin)
                    throw validation_error("wavy step not allowed at step " +
                                           std::to_string(i + 1));
                if (past_prefix)
                    throw validation_error("wavy step outside leading run at step " +
                                           std::to_string(i + 1));
            } else {
                past_prefix = true;
            }
            cur += rise(steps[i]);
            if (kind == WordKind::motzkin && cur < 0)
                throw validation_error("height drops below zero at step " +
                                       std::to_string(i + 1));
        }
        if (cur != 0)
            throw validation_error("word ends at height " + std::to_string(cur) +
                                   ", expected 0");
    }

    std::vector<MStep> steps_;
    WordKind kind_;
};

// ---------------------------------------------------------------------------
// The target language of the meander encoding: either a nonempty wavy run
// followed by any peakless word over U/D/F ending at height 0 (sign-free), or
// a wavy-free such word that starts with a down step. Classifier only; callers
// that need an error use MeanderWord validation.
// ---------------------------------------------------------------------------

inline bool is_in_S(std::span<const MStep> w) {
    std::size_t k = 0;
    while (k < w.size() && w[k] == MStep::wavy) ++k;
    int cur = 0;
    for (std::size_t i = k; i < w.size(); ++i) {
        if (w[i] == MStep::wavy) return false;  // wavy after the leading run
        if (i > k && w[i - 1] == MStep::up && w[i] == MStep::down) return false;
        cur += rise(w[i]);
    }
    if (cur != 0) return false;
    if (k >= 1) return true;
    return !w.empty() && w.front() == MStep::down;
}

// ---------------------------------------------------------------------------
// Meander words over {L, R}: even length, start with L, the factor LL never
// occurs after the initial L-run, and the image under the pairing map lies in
// the language above. Pairing: RL -> U, LR -> D, RR -> F, LL -> W.
// ---------------------------------------------------------------------------

class MeanderWord {
public:
    MeanderWord() = delete;

    static MeanderWord from_letters(std::string letters) {
        validate(letters);
        return MeanderWord(std::move(letters));
    }

    static MeanderWord parse(std::string_view text) {
        for (std::size_t i = 0; i < text.size(); ++i)
            if (text[i] != 'L' && text[i] != 'R')
                throw parse_error(std::string("unexpected character '") + text[i] +
                                  "' at position " + std::to_string(i + 1));
        return from_letters(std::string(text));
    }

    const std::string& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }

    // Image under the pairing map; always a member of the target language.
    std::vector<MStep> mu() const { return pair_image(letters_); }

    const std::string& to_string() const { return letters_; }

    auto operator<=>(const MeanderWord&) const = default;

private:
    explicit MeanderWord(std::string letters) : letters_(std::move(letters)) {}

    static std::vector<MStep> pair_image(const std::string& w) {
        std::vector<MStep> out;
        out.reserve(w.size() / 2);
        for (std::size_t i = 0; i + 1 < w.size(); i += 2) {
            bool a = w[i] == 'L', b = w[i + 1] == 'L';
            if (a && b) out.push_back(MStep::wavy);
            else if (a) out.push_back(MStep::down);   // LR
            else if (b) out.push_back(MStep::up);     // RL
            else out.push_back(MStep::flat);          // RR
        }
        return out;
    }

    static void validate(const std::string& w) {
        if (w.empty()) throw validation_error("meander word is empty");
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != 'L' && w[i] != 'R')
                throw validation_error(std::string("letter '") + w[i] + "' at position " +
                                       std::to_string(i + 1) + " is not L or R");
        if (w.size() % 2 != 0) throw validation_error("meander word has odd length");
        if (w.front() != 'L') throw validation_error("meander word must start with L");
        std::size_t run = 0;
        while (run < w.size() && w[run] == 'L') ++run;
        for (std::size_t i = run; i + 1 < w.size(); ++i)
            if (w[i] == 'L' && w[i + 1] == 'L')
                throw validation_error("LL after the initial run at position " +
                                       std::to_string(i + 1));
        auto img = pair_image(w);
        if (!is_in_S(img))
            throw validation_error("pair image is outside the target language");
    }

    std::string letters_;
};

}  // namespace dap
