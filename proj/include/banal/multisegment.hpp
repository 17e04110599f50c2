#pragma once

/**
 * @file multisegment.hpp
 * @brief Multisets of segments: supports, banality, ranged and ordered forms,
 * the total order on multisegments of a fixed connected support, and
 * enumeration of all multisegments with a given support.
 */

#include <banal/error.hpp>
#include <banal/lines.hpp>
#include <banal/segment.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace banal {

using SegmentSequence = std::vector<Segment>;

/// Finite multiset of segments, kept sorted so equality is multiset equality.
class Multisegment {
public:
    Multisegment() = default;
    explicit Multisegment(SegmentSequence segments) : segments_(std::move(segments)) {
        std::sort(segments_.begin(), segments_.end());
    }

    const SegmentSequence& segments() const { return segments_; }
    std::size_t size() const { return segments_.size(); }
    bool empty() const { return segments_.empty(); }

    Multisegment operator+(const Multisegment& other) const {
        auto all = segments_;
        all.insert(all.end(), other.segments_.begin(), other.segments_.end());
        return Multisegment(std::move(all));
    }

    friend bool operator==(const Multisegment&, const Multisegment&) = default;
    friend auto operator<=>(const Multisegment&, const Multisegment&) = default;

private:
    SegmentSequence segments_;
};

inline CuspidalSupport msupport(const SegmentSequence& segments) {
    CuspidalSupport support;
    for (const auto& s : segments) add_to(support, segment_support(s));
    return support;
}

inline CuspidalSupport msupport(const Multisegment& m) { return msupport(m.segments()); }

struct MultisegmentStats {
    std::int64_t n = 0;
    std::int64_t deg = 0;
};

inline MultisegmentStats mstats(const Multisegment& m) {
    MultisegmentStats out;
    for (const auto& s : m.segments()) {
        auto st = stats(s);
        out.n += st.n;
        out.deg += st.deg;
    }
    return out;
}

namespace detail {

/// Distinct indices of `support` on each line.
inline std::map<Line, std::set<std::int64_t>> support_sets(const CuspidalSupport& support) {
    std::map<Line, std::set<std::int64_t>> out;
    for (const auto& [p, k] : support) out[p.line()].insert(p.index());
    return out;
}

/// For a connected finite-line point set that is not the whole line: the
/// unique residue whose predecessor is absent.
inline std::optional<std::int64_t> arc_start(const Line& line, const std::set<std::int64_t>& points) {
    const auto e = line.period();
    if (!e.is_finite()) return points.empty() ? std::nullopt : std::optional(*points.begin());
    std::optional<std::int64_t> start;
    int starts = 0;
    for (auto r : points) {
        if (!points.contains(e.canonical(r - 1))) {
            start = r;
            ++starts;
        }
    }
    return starts == 1 ? start : std::nullopt;
}

inline bool is_interval(const Line& line, const std::set<std::int64_t>& points) {
    if (points.empty()) return false;
    const auto e = line.period();
    if (!e.is_finite()) return *points.rbegin() - *points.begin() + 1 == std::ssize(points);
    if (std::ssize(points) == e.value()) return true;
    return arc_start(line, points).has_value();
}

} // namespace detail

inline bool is_banal(const CuspidalSupport& support) {
    for (const auto& [line, points] : detail::support_sets(support)) {
        const auto e = line.period();
        if (e.is_finite() && std::ssize(points) >= e.value()) return false;
    }
    return true;
}

inline bool is_banal(const Multisegment& m) { return is_banal(msupport(m)); }
inline bool is_banal(const SegmentSequence& seq) { return is_banal(msupport(seq)); }

/// The underlying point set equals that of a single segment.
inline bool is_connected(const CuspidalSupport& support) {
    auto sets = detail::support_sets(support);
    if (sets.size() != 1) return false;
    const auto& [line, points] = *sets.begin();
    return detail::is_interval(line, points);
}

inline bool is_connected(const Multisegment& m) { return is_connected(msupport(m)); }

/**
 * Order the segments so that no segment precedes a later one. Kahn's
 * algorithm on the precedence digraph; among available segments the one with
 * the largest (start, end, length) goes first. Throws CYCLE when no such order
 * exists.
 */
inline SegmentSequence ranged_form(const Multisegment& m) {
    const auto& segs = m.segments();
    const std::size_t r = segs.size();
    // blockers[j] counts segments that must be placed before j
    std::vector<std::vector<std::size_t>> after(r);
    std::vector<std::size_t> blockers(r, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (i != j && precedes(segs[i], segs[j])) {
                after[j].push_back(i);
                ++blockers[i];
            }
    auto priority = [&](std::size_t i) {
        const auto& s = segs[i];
        return std::tuple(s.start(), s.end(), s.length());
    };
    SegmentSequence out;
    std::vector<bool> placed(r, false);
    for (std::size_t step = 0; step < r; ++step) {
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < r; ++i) {
            if (placed[i] || blockers[i] != 0) continue;
            if (!pick || priority(i) > priority(*pick) ||
                (priority(i) == priority(*pick) && segs[i].line() < segs[*pick].line()))
                pick = i;
        }
        if (!pick) fail(Errc::Cycle, "precedence digraph has a cycle: no ranged form");
        placed[*pick] = true;
        out.push_back(segs[*pick]);
        for (auto i : after[*pick]) --blockers[i];
    }
    return out;
}

/// A connected banal multisegment rewritten in arc coordinates [0, t].
struct ArcCoordinates {
    Line line;
    std::int64_t base = 0;  ///< canonical index of arc coordinate 0
    std::int64_t t = 0;
    std::vector<ArcSegment> segments;  ///< same order as the input

    Segment to_segment(const ArcSegment& s) const { return make_segment(line, base + s.a, base + s.b); }
    CuspidalPoint base_point() const { return {line, base}; }
};

namespace detail {

inline ArcCoordinates normalize(const SegmentSequence& segs) {
    auto support = msupport(segs);
    auto sets = support_sets(support);
    if (sets.size() > 1) fail(Errc::MixedLines, "segments lie on more than one line");
    if (sets.empty() || !is_interval(sets.begin()->first, sets.begin()->second))
        fail(Errc::NotConnected, "support is not connected");
    if (!is_banal(support)) fail(Errc::NotBanal, "support covers the whole line");
    const auto& [line, points] = *sets.begin();
    ArcCoordinates out;
    out.line = line;
    out.base = *arc_start(line, points);
    out.t = std::ssize(points) - 1;
    for (const auto& s : segs) {
        const auto a = line.period().canonical(s.start() - out.base);
        out.segments.push_back({a, a + s.length() - 1});
    }
    return out;
}

} // namespace detail

/// Base point after the gap, t = |supp0| - 1, and segments with 0 <= a <= b <= t.
inline ArcCoordinates normalize_coordinates(const Multisegment& m) {
    return detail::normalize(m.segments());
}

/**
 * Ordered form: arc coordinates sorted so that s_1 >= s_2 >= ... with
 * [a,b] > [a',b'] iff a > a', or a = a' and b > b'.
 */
inline ArcCoordinates ordered_form(const Multisegment& m) {
    auto arc = normalize_coordinates(m);
    std::sort(arc.segments.begin(), arc.segments.end(), std::greater<>());
    return arc;
}

inline SegmentSequence ordered_segments(const Multisegment& m) {
    auto form = ordered_form(m);
    SegmentSequence out;
    for (const auto& s : form.segments) out.push_back(form.to_segment(s));
    return out;
}

/// Lexicographic comparison of ordered forms; a proper prefix is smaller.
inline std::strong_ordering compare(const Multisegment& x, const Multisegment& y) {
    auto fx = ordered_form(x);
    auto fy = ordered_form(y);
    if (msupport(x) != msupport(y)) fail(Errc::SupportMismatch, "multisegments have different supports");
    return std::lexicographical_compare_three_way(fx.segments.begin(), fx.segments.end(),
                                                  fy.segments.begin(), fy.segments.end());
}

inline Multisegment dual_multisegment(const LineRegistry& registry, const Multisegment& m) {
    SegmentSequence out;
    for (const auto& s : m.segments()) out.push_back(dual_segment(registry, s));
    return Multisegment(std::move(out));
}

/**
 * Segment-level union/intersection. With d the offset from the start of x to
 * the start of y (taken mod e on a finite line), a banal preceding pair has
 * 1 <= d <= |x|, the union starts with x and has d + |y| points, and the
 * intersection starts with y and has |x| - d points.
 */
inline std::pair<Segment, std::optional<Segment>> union_intersection(const Segment& x, const Segment& y) {
    if (x.line() != y.line()) fail(Errc::NotLinked, "segments are not linked");
    if (!precedes(x, y)) {
        if (precedes(y, x)) fail(Errc::NotPreceding, "first segment does not precede the second");
        fail(Errc::NotLinked, "segments are not linked");
    }
    const auto e = x.line().period();
    const std::int64_t d = e.is_finite() ? e.canonical(y.start() - x.start()) : y.start() - x.start();
    const std::int64_t joined = d + y.length();
    if (e.is_finite() && joined >= e.value()) fail(Errc::NotBanal, "the pair covers every residue of the line");
    if (d < 1 || d > x.length()) fail(Errc::Internal, "preceding pair with offset " + std::to_string(d));
    std::pair<Segment, std::optional<Segment>> out{Segment(x.line(), x.start(), joined), std::nullopt};
    if (d < x.length()) out.second = Segment(x.line(), y.start(), x.length() - d);
    return out;
}

namespace detail {

inline bool fits(const CuspidalSupport& remaining, const Segment& s) {
    for (const auto& [p, k] : segment_support(s)) {
        auto it = remaining.find(p);
        if (it == remaining.end() || it->second < k) return false;
    }
    return true;
}

inline void take(CuspidalSupport& remaining, const Segment& s, int sign) {
    for (const auto& [p, k] : segment_support(s)) {
        auto& slot = remaining[p];
        slot -= sign * k;
        if (slot == 0) remaining.erase(p);
    }
}

// The smallest remaining point p must be covered; segments covering p are
// chosen in nondecreasing order while p stays the smallest point, which
// visits every multiset exactly once.
inline void enumerate(CuspidalSupport& remaining, SegmentSequence& chosen,
                      std::optional<CuspidalPoint> phase, std::optional<Segment> floor,
                      std::vector<Multisegment>& out) {
    if (remaining.empty()) {
        out.emplace_back(chosen);
        return;
    }
    const CuspidalPoint p = remaining.begin()->first;
    if (phase != p) floor.reset();
    std::int64_t total = 0;
    for (const auto& [q, k] : remaining)
        if (q.line() == p.line()) total += k;
    std::vector<Segment> candidates;
    for (std::int64_t offset = 0; offset < total; ++offset)
        for (std::int64_t length = offset + 1; length <= total; ++length) {
            Segment s(p.line(), p.index() - offset, length);
            if (!fits(remaining, s)) break;
            candidates.push_back(s);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& s : candidates) {
        if (floor && s < *floor) continue;
        take(remaining, s, +1);
        chosen.push_back(s);
        enumerate(remaining, chosen, p, s, out);
        chosen.pop_back();
        take(remaining, s, -1);
    }
}

} // namespace detail

/**
 * Every multisegment whose support is `s`, without duplicates. Sorted by
 * `compare` when `s` is connected and banal, else by multiset order.
 */
inline std::vector<Multisegment> enumerate_multisegments(const CuspidalSupport& s) {
    CuspidalSupport remaining;
    for (const auto& [p, k] : s)
        if (k > 0) remaining[p] = k;
    const bool ordered = is_connected(remaining) && is_banal(remaining);
    std::vector<Multisegment> out;
    SegmentSequence chosen;
    detail::enumerate(remaining, chosen, std::nullopt, std::nullopt, out);
    if (ordered) {
        std::sort(out.begin(), out.end(),
                  [](const Multisegment& x, const Multisegment& y) { return compare(x, y) < 0; });
    } else {
        std::sort(out.begin(), out.end());
    }
    return out;
}

} // namespace banal
