#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "baranski/carpet.hpp"

namespace baranski {

using Word = std::vector<Letter>;

/// Non-owning view of an eventually periodic word prefix·period^∞.
struct WordView {
    std::span<const Letter> prefix;
    std::span<const Letter> period;

    /// 0-based position.
    Letter at(std::size_t k) const {
        return k < prefix.size() ? prefix[k] : period[(k - prefix.size()) % period.size()];
    }
};

/// Eventually periodic infinite word, kept in canonical form: the period is
/// primitive and the preperiod cannot be shortened by rotating the period.
class PeriodicWord {
public:
    PeriodicWord(Word preperiod, Word period);

    static PeriodicWord constant(Letter a) { return PeriodicWord({}, {a}); }
    /// "1.3.2(4)" = 132·4^∞ ; "(2)" = 2^∞ ; "(1.2)" = (12)^∞.
    static PeriodicWord parse(std::string_view text);

    const Word& preperiod() const { return preperiod_; }
    const Word& period() const { return period_; }
    WordView view() const { return {preperiod_, period_}; }
    Letter at(std::size_t k) const { return view().at(k); }
    Letter max_letter() const;

    /// Letter-wise image; table[a - 1] is the image of a.
    PeriodicWord map_letters(std::span<const Letter> table) const;

    std::string str() const;

    auto operator<=>(const PeriodicWord&) const = default;

private:
    Word preperiod_;
    Word period_;
};

/// Value of the surviving time: a finite step count or infinity.
class SurvivingTime {
public:
    static constexpr SurvivingTime finite(std::int64_t k) { return SurvivingTime(k); }
    static constexpr SurvivingTime infinite() { return SurvivingTime(kInfinite); }

    constexpr bool is_infinite() const { return value_ == kInfinite; }
    constexpr bool is_finite() const { return value_ != kInfinite; }
    /// Only meaningful when finite.
    constexpr std::int64_t value() const { return value_; }

    constexpr SurvivingTime plus(std::int64_t slack) const {
        return is_infinite() ? *this : SurvivingTime(value_ + slack);
    }

    constexpr auto operator<=>(const SurvivingTime&) const = default;

    std::string str() const { return is_infinite() ? "inf" : std::to_string(value_); }

private:
    static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max();
    constexpr explicit SurvivingTime(std::int64_t v) : value_(v) {}
    std::int64_t value_;
};

}  // namespace baranski
