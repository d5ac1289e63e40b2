#include "baranski/carpet.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "baranski/error.hpp"
#include "baranski/geometry.hpp"

namespace baranski {

namespace {

std::string cell_str(const Digit& d) {
    return "(" + std::to_string(d.x) + "," + std::to_string(d.y) + ")";
}

void check_ratios(const std::optional<std::vector<Rational>>& ratios, int expected, const char* which) {
    if (!ratios) return;
    if (static_cast<int>(ratios->size()) != expected)
        throw Error(Errc::RatioCountMismatch, std::string(which) + " has " +
                                                  std::to_string(ratios->size()) + " entries, expected " +
                                                  std::to_string(expected));
    Rational sum = 0;
    for (const auto& r : *ratios) {
        if (r <= 0) throw Error(Errc::InvalidArgument, std::string(which) + " entries must be positive");
        sum += r;
    }
    if (sum != 1) throw Error(Errc::RatioSum, std::string(which) + " sum to " + to_string(sum) + ", not 1");
}

std::vector<Rational> parse_ratio_array(const nlohmann::json& arr, const char* which) {
    if (!arr.is_array()) throw Error(Errc::Parse, std::string(which) + " must be an array");
    std::vector<Rational> out;
    for (const auto& item : arr) {
        if (item.is_string())
            out.push_back(parse_rational(item.get<std::string>()));
        else if (item.is_number_integer())
            out.emplace_back(item.get<long long>());
        else
            throw Error(Errc::Parse, std::string(which) + " entries must be \"p/q\" strings");
    }
    return out;
}

}  // namespace

CarpetSpec CarpetSpec::make(int n, int m, std::vector<Digit> digits,
                            std::optional<std::vector<Rational>> hratios,
                            std::optional<std::vector<Rational>> vratios) {
    if (n < 2 || m < 2)
        throw Error(Errc::InvalidArgument, "division counts must be >= 2 (got n=" + std::to_string(n) +
                                               ", m=" + std::to_string(m) + ")");
    if (digits.empty()) throw Error(Errc::InvalidArgument, "digit set is empty");
    for (const auto& d : digits)
        if (d.x < 0 || d.x >= n || d.y < 0 || d.y >= m)
            throw Error(Errc::OutOfRange, "digit " + cell_str(d) + " outside the " + std::to_string(n) + "x" +
                                              std::to_string(m) + " grid");
    std::sort(digits.begin(), digits.end(),
              [](const Digit& a, const Digit& b) { return std::tie(a.y, a.x) < std::tie(b.y, b.x); });
    const auto dup = std::adjacent_find(digits.begin(), digits.end());
    if (dup != digits.end()) throw Error(Errc::DuplicateDigit, "duplicate digit " + cell_str(*dup));
    check_ratios(hratios, n, "hratios");
    check_ratios(vratios, m, "vratios");

    CarpetSpec spec;
    spec.n_ = n;
    spec.m_ = m;
    spec.digits_ = std::move(digits);
    spec.hratios_ = std::move(hratios);
    spec.vratios_ = std::move(vratios);
    return spec;
}

std::optional<Letter> CarpetSpec::letter_at(int x, int y) const {
    const Digit key{x, y};
    const auto it = std::lower_bound(digits_.begin(), digits_.end(), key, [](const Digit& a, const Digit& b) {
        return std::tie(a.y, a.x) < std::tie(b.y, b.x);
    });
    if (it == digits_.end() || *it != key) return std::nullopt;
    return static_cast<Letter>(it - digits_.begin()) + 1;
}

Rational CarpetSpec::column_ratio(int x) const {
    return hratios_ ? (*hratios_)[static_cast<std::size_t>(x)] : Rational(1, n_);
}

Rational CarpetSpec::row_ratio(int y) const {
    return vratios_ ? (*vratios_)[static_cast<std::size_t>(y)] : Rational(1, m_);
}

Rational CarpetSpec::column_offset(int x) const {
    if (!hratios_) return Rational(x, n_);
    Rational sum = 0;
    for (int k = 0; k < x; ++k) sum += (*hratios_)[static_cast<std::size_t>(k)];
    return sum;
}

Rational CarpetSpec::row_offset(int y) const {
    if (!vratios_) return Rational(y, m_);
    Rational sum = 0;
    for (int k = 0; k < y; ++k) sum += (*vratios_)[static_cast<std::size_t>(k)];
    return sum;
}

CarpetSpec parse_carpet(std::string_view text) {
    const auto first = std::find_if(text.begin(), text.end(),
                                    [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
    if (first == text.end()) throw Error(Errc::Parse, "empty carpet definition");
    if (*first == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(Errc::Parse, std::string("invalid JSON: ") + e.what());
        }
        return parse_carpet_json(doc);
    }
    return parse_carpet_grid(text);
}

CarpetSpec parse_carpet_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw Error(Errc::Parse, "carpet JSON must be an object");
    for (const char* key : {"n", "m", "digits"})
        if (!doc.contains(key)) throw Error(Errc::Parse, std::string("carpet JSON lacks \"") + key + "\"");
    if (!doc["n"].is_number_integer() || !doc["m"].is_number_integer())
        throw Error(Errc::Parse, "\"n\" and \"m\" must be integers");
    const int n = doc["n"].get<int>();
    const int m = doc["m"].get<int>();

    std::vector<Digit> digits;
    if (!doc["digits"].is_array()) throw Error(Errc::Parse, "\"digits\" must be an array");
    for (const auto& d : doc["digits"]) {
        if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer())
            throw Error(Errc::Parse, "each digit must be a pair [d1, d2] of integers");
        digits.push_back({d[0].get<int>(), d[1].get<int>()});
    }
    std::optional<std::vector<Rational>> h, v;
    if (doc.contains("hratios") && !doc["hratios"].is_null()) h = parse_ratio_array(doc["hratios"], "hratios");
    if (doc.contains("vratios") && !doc["vratios"].is_null()) v = parse_ratio_array(doc["vratios"], "vratios");
    return CarpetSpec::make(n, m, std::move(digits), std::move(h), std::move(v));
}

CarpetSpec parse_carpet_grid(std::string_view text) {
    std::vector<std::string> lines;
    std::string current;
    std::istringstream in{std::string(text)};
    while (std::getline(in, current)) {
        if (!current.empty() && current.back() == '\r') current.pop_back();
        lines.push_back(current);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    while (!lines.empty() && lines.front().empty()) lines.erase(lines.begin());
    if (lines.empty()) throw Error(Errc::Parse, "empty grid");

    const int m = static_cast<int>(lines.size());
    const int n = static_cast<int>(lines.front().size());
    std::vector<Digit> digits;
    for (int row = 0; row < m; ++row) {
        const auto& line = lines[static_cast<std::size_t>(row)];
        if (static_cast<int>(line.size()) != n)
            throw Error(Errc::Parse, "grid line " + std::to_string(row + 1) + " has length " +
                                         std::to_string(line.size()) + ", expected " + std::to_string(n));
        for (int col = 0; col < n; ++col) {
            const char c = line[static_cast<std::size_t>(col)];
            if (c == '#')
                digits.push_back({col, m - 1 - row});
            else if (c != '.')
                throw Error(Errc::Parse, std::string("unexpected grid character '") + c + "'");
        }
    }
    return CarpetSpec::make(n, m, std::move(digits));
}

nlohmann::json carpet_to_json(const CarpetSpec& spec) {
    nlohmann::json doc;
    doc["n"] = spec.n();
    doc["m"] = spec.m();
    auto digits = nlohmann::json::array();
    for (const auto& d : spec.digits()) digits.push_back({d.x, d.y});
    doc["digits"] = std::move(digits);
    auto ratios = [](const std::vector<Rational>& rs) {
        auto arr = nlohmann::json::array();
        for (const auto& r : rs) arr.push_back(to_string(r));
        return arr;
    };
    if (spec.hratios()) doc["hratios"] = ratios(*spec.hratios());
    if (spec.vratios()) doc["vratios"] = ratios(*spec.vratios());
    return doc;
}

std::string serialize_carpet(const CarpetSpec& spec) { return carpet_to_json(spec).dump(); }

std::string carpet_to_grid(const CarpetSpec& spec) {
    std::string out;
    for (int y = spec.m() - 1; y >= 0; --y) {
        for (int x = 0; x < spec.n(); ++x) out += spec.letter_at(x, y) ? '#' : '.';
        out += '\n';
    }
    return out;
}

std::set<LetterPair> cylinder_adjacency(const CarpetSpec& spec, const IntersectionOracle& oracle) {
    std::set<LetterPair> out;
    const auto& ds = spec.digits();
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i + 1; j < ds.size(); ++j) {
            const OffsetVector b{ds[j].x - ds[i].x, ds[j].y - ds[i].y};
            if (b.in_box() && oracle.survives(b))
                out.emplace(static_cast<Letter>(i + 1), static_cast<Letter>(j + 1));
        }
    return out;
}

ConditionReport check_conditions(const CarpetSpec& spec) {
    const auto adjacency = cylinder_adjacency(spec, build_oracle(spec));
    ConditionReport report;
    for (const auto& [a, b] : adjacency) {
        const auto& da = spec.digit(a);
        const auto& db = spec.digit(b);
        if (da.x != db.x && da.y != db.y) report.crossIntersection = false;
        if (da.y != db.y) report.verticalSeparation = false;
    }
    std::vector<Letter> top;
    for (Letter a = 1; a <= spec.size(); ++a)
        if (spec.digit(a).y == spec.m() - 1) top.push_back(a);
    if (top.size() == 1) {
        const Letter t = top.front();
        const bool touches = std::any_of(adjacency.begin(), adjacency.end(),
                                         [t](const LetterPair& p) { return p.first == t || p.second == t; });
        if (!touches) {
            report.topIsolated = true;
            report.topLetter = t;
        }
    }
    return report;
}

const char* block_kind_name(BlockKind kind) {
    switch (kind) {
    case BlockKind::Full: return "full";
    case BlockKind::Left: return "left";
    case BlockKind::Right: return "right";
    case BlockKind::Interior: return "interior";
    }
    return "?";
}

std::vector<HBlock> h_blocks(const CarpetSpec& spec) {
    std::vector<HBlock> blocks;
    // Canonical digit order is row-major, so each run of consecutive columns
    // within a row is a contiguous range of letters.
    const auto& ds = spec.digits();
    std::size_t i = 0;
    while (i < ds.size()) {
        HBlock block;
        block.row = ds[i].y;
        block.firstColumn = ds[i].x;
        block.lastColumn = ds[i].x;
        block.letters.push_back(static_cast<Letter>(i + 1));
        std::size_t j = i + 1;
        while (j < ds.size() && ds[j].y == block.row && ds[j].x == block.lastColumn + 1) {
            block.lastColumn = ds[j].x;
            block.letters.push_back(static_cast<Letter>(j + 1));
            ++j;
        }
        if (block.size() == spec.n())
            block.kind = BlockKind::Full;
        else if (block.firstColumn == 0)
            block.kind = BlockKind::Left;
        else if (block.lastColumn == spec.n() - 1)
            block.kind = BlockKind::Right;
        else
            block.kind = BlockKind::Interior;
        blocks.push_back(std::move(block));
        i = j;
    }
    return blocks;
}

std::vector<std::pair<std::size_t, std::size_t>> h_block_pairs(const std::vector<HBlock>& blocks) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].kind != BlockKind::Left) continue;
        for (std::size_t j = 0; j < blocks.size(); ++j)
            if (blocks[j].kind == BlockKind::Right && blocks[j].row == blocks[i].row) pairs.emplace_back(i, j);
    }
    return pairs;
}

HBlockProfile profile(const CarpetSpec& spec) {
    const auto blocks = h_blocks(spec);
    HBlockProfile p;
    p.fiber.assign(static_cast<std::size_t>(spec.m()), 0);
    for (const auto& b : blocks) {
        p.blockSizes.push_back(b.size());
        p.fiber[static_cast<std::size_t>(b.row)] += b.size();
    }
    for (const auto& [l, r] : h_block_pairs(blocks)) p.pairSizes.emplace_back(blocks[l].size(), blocks[r].size());
    std::sort(p.blockSizes.begin(), p.blockSizes.end());
    std::sort(p.pairSizes.begin(), p.pairSizes.end());
    return p;
}

nlohmann::json to_json(const ConditionReport& report) {
    nlohmann::json doc;
    doc["crossIntersection"] = report.crossIntersection;
    doc["verticalSeparation"] = report.verticalSeparation;
    doc["topIsolated"] = report.topIsolated;
    doc["topLetter"] = report.topLetter ? nlohmann::json(*report.topLetter) : nlohmann::json(nullptr);
    return doc;
}

nlohmann::json to_json(const HBlockProfile& profile) {
    nlohmann::json doc;
    doc["blockSizes"] = profile.blockSizes;
    auto pairs = nlohmann::json::array();
    for (const auto& [l, r] : profile.pairSizes) pairs.push_back({l, r});
    doc["pairSizes"] = std::move(pairs);
    doc["fiber"] = profile.fiber;
    return doc;
}

}  // namespace baranski
