#pragma once

/**
 * @file segment.hpp
 * @brief Segments [a,b] on a cuspidal line and the precedence relation.
 *
 * A segment is stored as (line, canonical start, length). On a finite line the
 * end index start + length - 1 is kept unreduced so that [2,3] on a line of
 * period 3 prints back as written; point queries reduce it.
 */

#include <banal/error.hpp>
#include <banal/lines.hpp>

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace banal {

using CuspidalWord = std::vector<CuspidalPoint>;

/// Multiset of cuspidal points. Stored multiplicities are always >= 1.
using CuspidalSupport = std::map<CuspidalPoint, std::int64_t>;

class Segment {
public:
    Segment() = default;
    Segment(Line line, std::int64_t start, std::int64_t length)
        : line_(std::move(line)), start_(line_.canonical(start)), length_(length) {
        if (length < 1) fail(Errc::Bounds, "segment length must be >= 1");
    }

    const Line& line() const { return line_; }
    std::int64_t start() const { return start_; }
    std::int64_t length() const { return length_; }
    /// Unreduced end index: start + length - 1.
    std::int64_t end() const { return start_ + length_ - 1; }

    CuspidalPoint first_point() const { return {line_, start_}; }
    CuspidalPoint last_point() const { return {line_, end()}; }

    friend bool operator==(const Segment& x, const Segment& y) {
        return x.start_ == y.start_ && x.length_ == y.length_ && x.line_ == y.line_;
    }
    friend std::strong_ordering operator<=>(const Segment& x, const Segment& y) {
        if (auto c = x.line_ <=> y.line_; c != 0) return c;
        if (auto c = x.start_ <=> y.start_; c != 0) return c;
        return x.length_ <=> y.length_;
    }

private:
    Line line_;
    std::int64_t start_ = 0;
    std::int64_t length_ = 1;
};

/// [a,b] on `line`; requires a <= b as integers.
inline Segment make_segment(const Line& line, std::int64_t a, std::int64_t b) {
    if (a > b)
        fail(Errc::Bounds, "segment [" + std::to_string(a) + "," + std::to_string(b) + "] has a > b");
    return Segment(line, a, b - a + 1);
}

inline Segment make_segment(const LineRegistry& registry, std::string_view line_id,
                            std::int64_t a, std::int64_t b) {
    return make_segment(registry.at(line_id), a, b);
}

inline CuspidalWord points_of(const Segment& s) {
    CuspidalWord word;
    word.reserve(static_cast<std::size_t>(s.length()));
    for (std::int64_t k = 0; k < s.length(); ++k) word.emplace_back(s.line(), s.start() + k);
    return word;
}

struct SegmentStats {
    std::int64_t n;
    std::int64_t deg;
    CuspidalPoint a_point;
    CuspidalPoint b_point;
};

inline SegmentStats stats(const Segment& s) {
    return {s.length(), s.length() * s.line().base_degree(), s.first_point(), s.last_point()};
}

inline Segment truncate_left(const Segment& s) {
    if (s.length() < 2) fail(Errc::SegmentTooShort, "cannot truncate a segment of length 1");
    return Segment(s.line(), s.start() + 1, s.length() - 1);
}

inline Segment truncate_right(const Segment& s) {
    if (s.length() < 2) fail(Errc::SegmentTooShort, "cannot truncate a segment of length 1");
    return Segment(s.line(), s.start(), s.length() - 1);
}

inline void add_to(CuspidalSupport& support, const CuspidalSupport& other) {
    for (const auto& [p, k] : other) support[p] += k;
}

inline CuspidalSupport segment_support(const Segment& s) {
    CuspidalSupport support;
    for (const auto& p : points_of(s)) ++support[p];
    return support;
}

/// [a,b] on a line maps to [-b,-a] on the dual line.
inline Segment dual_segment(const LineRegistry& registry, const Segment& s) {
    return Segment(registry.dual(s.line()), -s.end(), s.length());
}

inline bool is_banal_segment(const Segment& s) {
    const auto e = s.line().period();
    return !e.is_finite() || s.length() < e.value();
}

/**
 * Length of the longest subsequence of `word` in which every entry is the
 * unit twist of the previous one. Runs in O(|word| * distinct points).
 */
inline std::int64_t longest_chain(const CuspidalWord& word) {
    // best[i] = longest chain seen so far that ends at point values[i]
    std::vector<CuspidalPoint> values;
    std::vector<std::int64_t> best;
    auto slot = [&](const CuspidalPoint& p) -> std::int64_t* {
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i] == p) return &best[i];
        return nullptr;
    };
    std::int64_t longest = 0;
    for (const auto& p : word) {
        const auto* prev = slot(twist(p, -1));
        const std::int64_t len = (prev ? *prev : 0) + 1;
        auto* cur = slot(p);
        if (!cur) {
            values.push_back(p);
            best.push_back(0);
            cur = &best.back();
        }
        *cur = std::max(*cur, len);
        longest = std::max(longest, len);
    }
    return longest;
}

/// Longest segment-shaped subsequence of points(x) followed by points(y).
/// Same recurrence as longest_chain, on the residues of the shared line.
inline std::int64_t precedence_chain(const Segment& x, const Segment& y) {
    if (x.line() != y.line()) {
        auto word = points_of(x);
        auto tail = points_of(y);
        word.insert(word.end(), tail.begin(), tail.end());
        return longest_chain(word);
    }
    const auto e = x.line().period();
    // (residue, longest chain ending there); on the stack for short pairs
    const auto total = static_cast<std::size_t>(x.length() + y.length());
    std::array<std::pair<std::int64_t, std::int64_t>, 32> local;
    std::vector<std::pair<std::int64_t, std::int64_t>> heap;
    if (total > local.size()) heap.resize(total);
    auto* best = total > local.size() ? heap.data() : local.data();
    std::size_t used = 0;
    auto slot = [&](std::int64_t r) -> std::int64_t* {
        for (std::size_t i = 0; i < used; ++i)
            if (best[i].first == r) return &best[i].second;
        return nullptr;
    };
    std::int64_t longest = 0;
    for (const Segment* s : {&x, &y})
        for (std::int64_t k = 0; k < s->length(); ++k) {
            const auto r = e.canonical(s->start() + k);
            const auto* prev = slot(e.canonical(r - 1));
            const std::int64_t len = (prev ? *prev : 0) + 1;
            auto* cur = slot(r);
            if (!cur) {
                best[used] = {r, 0};
                cur = &best[used++].second;
            }
            *cur = std::max(*cur, len);
            longest = std::max(longest, len);
        }
    return longest;
}

/// True when the concatenated points admit a chain longer than both segments.
inline bool precedes(const Segment& x, const Segment& y) {
    if (x.line() != y.line()) return false;
    return precedence_chain(x, y) > std::max(x.length(), y.length());
}

/// Chains that revisit a point (longer than the period) are permitted.
inline bool chain_wraps(const Segment& x, const Segment& y) {
    const auto e = x.line().period();
    return x.line() == y.line() && e.is_finite() && precedence_chain(x, y) > e.value();
}

inline bool linked(const Segment& x, const Segment& y) {
    return precedes(x, y) || precedes(y, x);
}

/// Integer coordinates [a,b] on an arc, a <= b. Ordered lexicographically.
struct ArcSegment {
    std::int64_t a;
    std::int64_t b;

    std::int64_t length() const { return b - a + 1; }
    friend auto operator<=>(const ArcSegment&, const ArcSegment&) = default;
};

struct UnionIntersection {
    ArcSegment union_part;
    std::optional<ArcSegment> intersection;
};

/**
 * For x = [a,b] preceding y = [a',b'] in integer coordinates
 * (a < a' <= b+1 <= b'), returns ([a,b'], [a',b]); the intersection is absent
 * when a' = b+1.
 */
inline UnionIntersection union_intersection(const ArcSegment& x, const ArcSegment& y) {
    const bool x_before_y = x.a < y.a && y.a <= x.b + 1 && x.b < y.b;
    const bool y_before_x = y.a < x.a && x.a <= y.b + 1 && y.b < x.b;
    if (!x_before_y && !y_before_x) fail(Errc::NotLinked, "segments are not linked");
    if (!x_before_y) fail(Errc::NotPreceding, "first segment does not precede the second");
    UnionIntersection out{{x.a, y.b}, std::nullopt};
    if (y.a <= x.b) out.intersection = ArcSegment{y.a, x.b};
    return out;
}

} // namespace banal
