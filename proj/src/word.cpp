#include "baranski/word.hpp"

#include <algorithm>
#include <cctype>

#include "baranski/error.hpp"

namespace baranski {

namespace {

std::size_t primitive_root_length(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
        if (periodic) return d;
    }
    return n;
}

Word parse_letters(std::string_view text, std::string_view whole) {
    Word out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto dot = text.find('.', pos);
        const auto token = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
        if (token.empty() || !std::all_of(token.begin(), token.end(),
                                          [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw Error(Errc::Parse, "malformed word '" + std::string(whole) + "'");
        const int letter = std::stoi(std::string(token));
        if (letter < 1) throw Error(Errc::Parse, "letters are numbered from 1 in '" + std::string(whole) + "'");
        out.push_back(letter);
        if (dot == std::string_view::npos) break;
        pos = dot + 1;
    }
    return out;
}

std::string join(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(w[i]);
    }
    return s;
}

}  // namespace

PeriodicWord::PeriodicWord(Word preperiod, Word period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty()) throw Error(Errc::InvalidArgument, "period of an infinite word must be nonempty");
    period_.resize(primitive_root_length(period_));
    while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
        preperiod_.pop_back();
        std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    }
}

PeriodicWord PeriodicWord::parse(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    const auto open = compact.find('(');
    if (open == std::string::npos || compact.back() != ')')
        throw Error(Errc::Parse, "word '" + std::string(text) + "' needs a parenthesized period");
    std::string_view s(compact);
    auto pre = s.substr(0, open);
    if (!pre.empty() && pre.back() == '.') pre.remove_suffix(1);
    const auto per = s.substr(open + 1, s.size() - open - 2);
    auto period = parse_letters(per, text);
    if (period.empty()) throw Error(Errc::Parse, "empty period in '" + std::string(text) + "'");
    return PeriodicWord(parse_letters(pre, text), std::move(period));
}

Letter PeriodicWord::max_letter() const {
    Letter best = *std::max_element(period_.begin(), period_.end());
    for (Letter a : preperiod_) best = std::max(best, a);
    return best;
}

PeriodicWord PeriodicWord::map_letters(std::span<const Letter> table) const {
    auto image = [&](Letter a) {
        if (a < 1 || static_cast<std::size_t>(a) > table.size())
            throw Error(Errc::OutOfRange, "letter " + std::to_string(a) + " outside the alphabet");
        return table[static_cast<std::size_t>(a - 1)];
    };
    Word pre, per;
    for (Letter a : preperiod_) pre.push_back(image(a));
    for (Letter a : period_) per.push_back(image(a));
    return PeriodicWord(std::move(pre), std::move(per));
}

std::string PeriodicWord::str() const { return join(preperiod_) + "(" + join(period_) + ")"; }

}  // namespace baranski
