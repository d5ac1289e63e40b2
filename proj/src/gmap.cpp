#include "baranski/gmap.hpp"

#include <algorithm>

#include "baranski/error.hpp"

namespace baranski {

namespace {

/// Reads w beyond its end as κ.
struct Reader {
    std::span<const Letter> w;
    Letter kappa;
    Letter operator[](std::size_t i) const { return i < w.size() ? w[i] : kappa; }
};

/// Length of the M-initial segment starting at p.
std::size_t m_segment_length(const GContext& c, const Reader& r, std::size_t p) {
    if (r[p] == c.tau && r[p + 1] == c.gamma && r[p + 2] == c.gamma) {
        std::size_t q = p + 1;
        while (r[q] == c.gamma) ++q;
        return q - p;  // τγ^k, k ≥ 2
    }
    if (r[p] == c.kappa) {
        std::size_t q = p + 1;
        while (r[q] == c.lambda) ++q;
        if (r[q] == c.kappa && r[q + 1] == c.gamma) return q + 2 - p;  // κλ^kκγ
    }
    return 1;
}

/// Length of the M′-initial segment starting at p.
std::size_t m_prime_segment_length(const GContext& c, const Reader& r, std::size_t p) {
    if (r[p] == c.kappa) {
        std::size_t q = p + 1;
        while (r[q] == c.lambda) ++q;
        if (r[q] == c.kappa && r[q + 1] == c.gamma) return r[q + 2] == c.gamma ? q + 3 - p : q + 2 - p;
    }
    if (r[p] == c.tau && r[p + 1] == c.gamma && r[p + 2] == c.gamma) return 3;  // τγγ
    return 1;
}

/// k if s = κλ^kκγ followed by `extra` further γ's.
std::optional<std::size_t> match_klkg(const GContext& c, std::span<const Letter> s, std::size_t extra) {
    if (s.size() < 3 + extra || s.front() != c.kappa) return std::nullopt;
    const std::size_t k = s.size() - 3 - extra;
    for (std::size_t i = 1; i <= k; ++i)
        if (s[i] != c.lambda) return std::nullopt;
    if (s[k + 1] != c.kappa) return std::nullopt;
    for (std::size_t i = k + 2; i < s.size(); ++i)
        if (s[i] != c.gamma) return std::nullopt;
    return k;
}

/// k if s = τγ^k with k ≥ 2.
std::optional<std::size_t> match_tau_gamma(const GContext& c, std::span<const Letter> s) {
    if (s.size() < 3 || s.front() != c.tau) return std::nullopt;
    if (!std::all_of(s.begin() + 1, s.end(), [&](Letter a) { return a == c.gamma; })) return std::nullopt;
    return s.size() - 1;
}

/// Writes κλ^kκγ, then `extra` γ's; returns the number of letters written.
std::size_t write_klkg(const GContext& c, std::size_t k, std::size_t extra, std::span<Letter> out) {
    std::size_t i = 0;
    out[i++] = c.kappa;
    for (std::size_t j = 0; j < k; ++j) out[i++] = c.lambda;
    out[i++] = c.kappa;
    out[i++] = c.gamma;
    for (std::size_t j = 0; j < extra; ++j) out[i++] = c.gamma;
    return i;
}

std::size_t write_tau_gamma(const GContext& c, std::size_t k, std::span<Letter> out) {
    out[0] = c.tau;
    for (std::size_t j = 1; j <= k; ++j) out[j] = c.gamma;
    return k + 1;
}

/// g0 on a segment already known to be an M-segment or a letter; writes the
/// image (same length) into out.
void g0_into(const GContext& c, std::span<const Letter> s, std::span<Letter> out) {
    if (s.size() == 1) {
        out[0] = s[0];
    } else if (const auto k = match_tau_gamma(c, s)) {
        write_klkg(c, *k - 2, 0, out);
    } else if (const auto k2 = match_klkg(c, s, 0)) {
        if (*k2 >= 1)
            write_klkg(c, *k2 - 1, 1, out);
        else
            write_tau_gamma(c, 2, out);
    } else {
        throw Error(Errc::NotInDomain, "word is neither a letter nor an M-segment");
    }
}

void g0_inverse_into(const GContext& c, std::span<const Letter> s, std::span<Letter> out) {
    if (s.size() == 1) {
        out[0] = s[0];
    } else if (const auto k = match_klkg(c, s, 0)) {
        write_tau_gamma(c, *k + 2, out);
    } else if (const auto k2 = match_klkg(c, s, 1)) {
        write_klkg(c, *k2 + 1, 0, out);
    } else if (s.size() == 3 && s[0] == c.tau && s[1] == c.gamma && s[2] == c.gamma) {
        write_klkg(c, 0, 0, out);
    } else {
        throw Error(Errc::NotInDomain, "word is neither a letter nor an M'-segment");
    }
}

std::vector<Segment> decompose(const GContext& c, const OmegaWord& x, bool prime) {
    const Reader r{x.stem(), c.kappa};
    std::vector<Segment> out;
    for (std::size_t p = 0; p < x.stem().size();) {
        const std::size_t len = prime ? m_prime_segment_length(c, r, p) : m_segment_length(c, r, p);
        Segment seg;
        for (std::size_t i = 0; i < len; ++i) seg.letters.push_back(r[p + i]);
        seg.kind = len == 1 ? SegmentClass::Singleton : prime ? SegmentClass::MPrimeSegment : SegmentClass::MSegment;
        out.push_back(std::move(seg));
        p += len;
    }
    return out;
}

void check_word(const GContext& c, const OmegaWord& x) {
    if (x.kappa() != c.kappa)
        throw Error(Errc::NotInDomain, "word tail " + std::to_string(x.kappa()) + " differs from context kappa " +
                                           std::to_string(c.kappa));
}

}  // namespace

GContext GContext::make(Letter gamma, Letter lambda, Letter kappa, Letter tau) {
    if (gamma < 1 || lambda < 1 || kappa < 1 || tau < 1)
        throw Error(Errc::InvalidContext, "context letters are numbered from 1");
    if (gamma == lambda || gamma == kappa || lambda == kappa)
        throw Error(Errc::InvalidContext, "gamma, lambda and kappa must be distinct");
    if (tau == gamma || tau == kappa) throw Error(Errc::InvalidContext, "tau must differ from gamma and kappa");
    return {gamma, lambda, kappa, tau};
}

OmegaWord::OmegaWord(Word stem, Letter kappa) : stem_(std::move(stem)), kappa_(kappa) {
    while (!stem_.empty() && stem_.back() == kappa_) stem_.pop_back();
}

OmegaWord OmegaWord::from_periodic(const PeriodicWord& w, Letter kappa) {
    if (w.period() != Word{kappa})
        throw Error(Errc::NotInDomain, "word " + w.str() + " does not end in " + std::to_string(kappa) + "^inf");
    return OmegaWord(w.preperiod(), kappa);
}

const char* segment_class_name(SegmentClass c) {
    switch (c) {
        case SegmentClass::MSegment: return "M";
        case SegmentClass::MPrimeSegment: return "M'";
        case SegmentClass::Singleton: return "letter";
    }
    return "?";
}

std::vector<Segment> m_decompose(const GContext& ctx, const OmegaWord& x) {
    check_word(ctx, x);
    return decompose(ctx, x, false);
}

std::vector<Segment> m_prime_decompose(const GContext& ctx, const OmegaWord& u) {
    check_word(ctx, u);
    return decompose(ctx, u, true);
}

Segment g0(const GContext& ctx, const Segment& seg) {
    Segment out{Word(seg.letters.size()), SegmentClass::Singleton};
    g0_into(ctx, seg.letters, out.letters);
    if (out.letters.size() > 1) out.kind = SegmentClass::MPrimeSegment;
    return out;
}

Segment g0_inverse(const GContext& ctx, const Segment& seg) {
    Segment out{Word(seg.letters.size()), SegmentClass::Singleton};
    g0_inverse_into(ctx, seg.letters, out.letters);
    if (out.letters.size() > 1) out.kind = SegmentClass::MSegment;
    return out;
}

void g_apply_padded(const GContext& ctx, std::span<const Letter> in, std::span<Letter> out) {
    const Reader r{in, ctx.kappa};
    for (std::size_t p = 0; p < in.size();) {
        const std::size_t len = m_segment_length(ctx, r, p);
        g0_into(ctx, in.subspan(p, len), out.subspan(p, len));
        p += len;
    }
}

void h_apply_padded(const GContext& ctx, std::span<const Letter> in, std::span<Letter> out) {
    const Reader r{in, ctx.kappa};
    for (std::size_t p = 0; p < in.size();) {
        const std::size_t len = m_prime_segment_length(ctx, r, p);
        g0_inverse_into(ctx, in.subspan(p, len), out.subspan(p, len));
        p += len;
    }
}

OmegaWord g_apply(const GContext& ctx, const OmegaWord& x) {
    check_word(ctx, x);
    Word out(x.stem().size());
    g_apply_padded(ctx, x.stem(), out);
    return OmegaWord(std::move(out), ctx.kappa);
}

OmegaWord h_apply(const GContext& ctx, const OmegaWord& u) {
    check_word(ctx, u);
    Word out(u.stem().size());
    h_apply_padded(ctx, u.stem(), out);
    return OmegaWord(std::move(out), ctx.kappa);
}

std::optional<std::size_t> common_prefix_length(const OmegaWord& x, const OmegaWord& y) {
    if (x == y) return std::nullopt;
    const std::size_t limit = std::max(x.stem().size(), y.stem().size()) + 1;
    std::size_t k = 0;
    while (k < limit && x.at(k) == y.at(k)) ++k;
    return k;
}

nlohmann::json to_json(const std::vector<Segment>& segments) {
    auto arr = nlohmann::json::array();
    for (const auto& s : segments) {
        std::string text;
        for (std::size_t i = 0; i < s.letters.size(); ++i) text += (i ? "." : "") + std::to_string(s.letters[i]);
        arr.push_back({{"word", text}, {"class", segment_class_name(s.kind)}});
    }
    return arr;
}

}  // namespace baranski
