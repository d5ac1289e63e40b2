#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "baranski/offset.hpp"
#include "baranski/rational.hpp"

namespace baranski {

/// Letters of the alphabet Σ are numbered 1..N.
using Letter = int;
using LetterPair = std::pair<Letter, Letter>;

/// Cell of the n×m grid: x is the column (0..n-1), y the row (0..m-1, 0 at
/// the bottom).
struct Digit {
    int x = 0;
    int y = 0;

    constexpr auto operator<=>(const Digit&) const = default;
};

/// Combinatorial description of a Barański carpet. Digits are stored in
/// canonical order (row ascending, then column ascending); letter k is the
/// k-th digit in that order.
class CarpetSpec {
public:
    /// Validates and canonicalizes. Missing ratio vectors mean the uniform
    /// companion carpet.
    static CarpetSpec make(int n, int m, std::vector<Digit> digits,
                           std::optional<std::vector<Rational>> hratios = std::nullopt,
                           std::optional<std::vector<Rational>> vratios = std::nullopt);

    int n() const { return n_; }
    int m() const { return m_; }
    int size() const { return static_cast<int>(digits_.size()); }
    const std::vector<Digit>& digits() const { return digits_; }
    const Digit& digit(Letter a) const { return digits_.at(static_cast<std::size_t>(a - 1)); }
    std::optional<Letter> letter_at(int x, int y) const;

    const std::optional<std::vector<Rational>>& hratios() const { return hratios_; }
    const std::optional<std::vector<Rational>>& vratios() const { return vratios_; }

    /// Contraction ratio of column x (defaults to 1/n) and row y (1/m).
    Rational column_ratio(int x) const;
    Rational row_ratio(int y) const;
    /// Left edge of column x / bottom edge of row y in [0,1].
    Rational column_offset(int x) const;
    Rational row_offset(int y) const;

    bool uniform() const { return !hratios_ && !vratios_; }
    bool fractal_square() const { return uniform() && n_ == m_; }

    bool operator==(const CarpetSpec&) const = default;

private:
    int n_ = 2;
    int m_ = 2;
    std::vector<Digit> digits_;
    std::optional<std::vector<Rational>> hratios_;
    std::optional<std::vector<Rational>> vratios_;
};

/// Accepts the JSON schema or the ASCII grid; dispatches on the first
/// non-blank character.
CarpetSpec parse_carpet(std::string_view text);
CarpetSpec parse_carpet_json(const nlohmann::json& doc);
CarpetSpec parse_carpet_grid(std::string_view text);

nlohmann::json carpet_to_json(const CarpetSpec& spec);
std::string serialize_carpet(const CarpetSpec& spec);
/// Only meaningful for uniform carpets; ratio data is dropped.
std::string carpet_to_grid(const CarpetSpec& spec);

/// Unordered pairs {i, j} (stored with i < j) of letters whose first-order
/// cylinders intersect.
std::set<LetterPair> cylinder_adjacency(const CarpetSpec& spec, const IntersectionOracle& oracle);

struct ConditionReport {
    bool crossIntersection = true;
    bool verticalSeparation = true;
    bool topIsolated = false;
    std::optional<Letter> topLetter;
};

ConditionReport check_conditions(const CarpetSpec& spec);

enum class BlockKind { Full, Left, Right, Interior };

const char* block_kind_name(BlockKind kind);

struct HBlock {
    int row = 0;
    int firstColumn = 0;
    int lastColumn = 0;
    std::vector<Letter> letters;  // left to right
    BlockKind kind = BlockKind::Interior;

    int size() const { return lastColumn - firstColumn + 1; }
};

struct HBlockProfile {
    std::vector<int> blockSizes;                  // sorted ascending
    std::vector<std::pair<int, int>> pairSizes;   // (left size, right size), sorted
    std::vector<int> fiber;                       // per-row counts, row 0 first

    bool operator==(const HBlockProfile&) const = default;
};

/// Blocks ordered by row, then by leftmost column.
std::vector<HBlock> h_blocks(const CarpetSpec& spec);
HBlockProfile profile(const CarpetSpec& spec);

/// (left block, right block) indices into h_blocks(spec) for every row that
/// holds both a left and a right H-block.
std::vector<std::pair<std::size_t, std::size_t>> h_block_pairs(const std::vector<HBlock>& blocks);

nlohmann::json to_json(const ConditionReport& report);
nlohmann::json to_json(const HBlockProfile& profile);

}  // namespace baranski
