#pragma once

#include <array>
#include <bitset>
#include <compare>
#include <string>

namespace baranski {

/// Relative position of two equal-level cylinders, in units of the cylinder
/// size. Both coordinates lie in {-1, 0, 1}.
struct OffsetVector {
    int bx = 0;
    int by = 0;

    static constexpr int kCount = 9;

    constexpr int index() const { return (bx + 1) * 3 + (by + 1); }
    static constexpr OffsetVector from_index(int i) { return {i / 3 - 1, i % 3 - 1}; }

    constexpr bool is_zero() const { return bx == 0 && by == 0; }
    constexpr bool is_diagonal() const { return bx != 0 && by != 0; }
    constexpr bool in_box() const { return bx >= -1 && bx <= 1 && by >= -1 && by <= 1; }

    constexpr OffsetVector operator-() const { return {-bx, -by}; }
    constexpr auto operator<=>(const OffsetVector&) const = default;

    /// "e1", "-e2", "e1+e2", "-e1+e2", ... ; "0" for the zero vector.
    std::string name() const;
};

/// The set of offsets b with K ∩ (K + b) ≠ ∅ for the companion attractor K of
/// a fixed digit set.
class IntersectionOracle {
public:
    IntersectionOracle() = default;
    explicit IntersectionOracle(std::bitset<OffsetVector::kCount> survivors)
        : survivors_(survivors) {}

    bool survives(OffsetVector b) const { return b.in_box() && survivors_.test(b.index()); }
    const std::bitset<OffsetVector::kCount>& survivors() const { return survivors_; }

    bool operator==(const IntersectionOracle&) const = default;

private:
    std::bitset<OffsetVector::kCount> survivors_;
};

}  // namespace baranski
