#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "baranski/word.hpp"

namespace baranski {

/// The four letters the map g depends on: top γ, bottom λ, the head κ of
/// the deleted vertical edge and its tail τ.
struct GContext {
    Letter gamma = 0;
    Letter lambda = 0;
    Letter kappa = 0;
    Letter tau = 0;

    /// Requires γ, λ, κ pairwise distinct and τ ∉ {γ, κ}; throws InvalidContext.
    static GContext make(Letter gamma, Letter lambda, Letter kappa, Letter tau);
};

/// ω·κ^∞, stored with the stem stripped of trailing κ.
class OmegaWord {
public:
    OmegaWord(Word stem, Letter kappa);
    /// Accepts only words whose period is the single letter κ.
    static OmegaWord from_periodic(const PeriodicWord& w, Letter kappa);

    const Word& stem() const { return stem_; }
    Letter kappa() const { return kappa_; }
    Letter at(std::size_t i) const { return i < stem_.size() ? stem_[i] : kappa_; }
    PeriodicWord to_periodic() const { return PeriodicWord(stem_, {kappa_}); }
    std::string str() const { return to_periodic().str(); }

    auto operator<=>(const OmegaWord&) const = default;

private:
    Word stem_;
    Letter kappa_;
};

enum class SegmentClass { MSegment, MPrimeSegment, Singleton };

const char* segment_class_name(SegmentClass c);

struct Segment {
    Word letters;
    SegmentClass kind = SegmentClass::Singleton;

    bool operator==(const Segment&) const = default;
};

/// Greedy longest-prefix decompositions of the stem; the κ^∞ tail is all
/// singletons and is not listed. No segment reaches into the tail, since
/// every multi-letter segment ends in γ.
std::vector<Segment> m_decompose(const GContext& ctx, const OmegaWord& x);
std::vector<Segment> m_prime_decompose(const GContext& ctx, const OmegaWord& u);

/// Segment bijection between C_M ∪ Σ and C_M′ ∪ Σ; throws NotInDomain.
Segment g0(const GContext& ctx, const Segment& seg);
Segment g0_inverse(const GContext& ctx, const Segment& seg);

OmegaWord g_apply(const GContext& ctx, const OmegaWord& x);
OmegaWord h_apply(const GContext& ctx, const OmegaWord& u);

/// Length-preserving forms on a finite word read as w·κ^∞; the result has
/// the same length. These skip canonicalization and allocation-heavy
/// segment lists, for exhaustive sweeps.
void g_apply_padded(const GContext& ctx, std::span<const Letter> in, std::span<Letter> out);
void h_apply_padded(const GContext& ctx, std::span<const Letter> in, std::span<Letter> out);

/// |x ∧ y|; nullopt when x = y.
std::optional<std::size_t> common_prefix_length(const OmegaWord& x, const OmegaWord& y);

nlohmann::json to_json(const std::vector<Segment>& segments);

}  // namespace baranski
