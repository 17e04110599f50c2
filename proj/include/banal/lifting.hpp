#pragma once

/**
 * @file lifting.hpp
 * @brief Reduction of multisegments from an infinite line to a finite one,
 * and lifts of banal multisegments that keep the precedence pattern.
 *
 * Lifts are not unique; this one places each connected component of the
 * support in its own window of width 2e on the infinite line.
 */

#include <banal/error.hpp>
#include <banal/multisegment.hpp>
#include <banal/segment.hpp>

#include <set>
#include <utility>
#include <vector>

namespace banal {

using PrecedencePattern = std::set<std::pair<std::size_t, std::size_t>>;

/// {(i, j) : seq[i] precedes seq[j]}, 0-based.
inline PrecedencePattern precedence_pattern(const SegmentSequence& seq) {
    PrecedencePattern out;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = 0; j < seq.size(); ++j)
            if (i != j && precedes(seq[i], seq[j])) out.emplace(i, j);
    return out;
}

inline PrecedencePattern precedence_pattern(const Multisegment& m) { return precedence_pattern(m.segments()); }

namespace detail {

inline void check_pair(const Line& infinite, const Line& finite) {
    if (infinite.period().is_finite())
        fail(Errc::LineMismatch, "line " + infinite.id() + " is not infinite");
    if (!finite.period().is_finite())
        fail(Errc::LineMismatch, "line " + finite.id() + " is not finite");
    if (infinite.base_degree() != finite.base_degree())
        fail(Errc::LineMismatch, "lines " + infinite.id() + " and " + finite.id() + " differ in degree");
}

} // namespace detail

/// [a,b] on the infinite line maps to [a,b] on `target`, start reduced mod e.
inline SegmentSequence reduce_mod(const SegmentSequence& seq, const Line& target) {
    SegmentSequence out;
    for (const auto& s : seq) {
        detail::check_pair(s.line(), target);
        out.emplace_back(target, s.start(), s.length());
    }
    return out;
}

inline Multisegment reduce_mod(const Multisegment& m, const Line& target) {
    return Multisegment(reduce_mod(m.segments(), target));
}

/**
 * Lift a banal sequence on one finite line of period e to `target`,
 * member by member. A component of the support with base residue c (the
 * first point after its gap) and arc coordinates [0, t] lands on
 * [c + 2ek, c + 2ek + t] for the k-th component, so reduction returns the
 * input and components stay unlinked.
 */
inline SegmentSequence lift(const SegmentSequence& seq, const Line& target) {
    if (seq.empty()) return {};
    const Line source = seq.front().line();
    detail::check_pair(target, source);
    for (const auto& s : seq)
        if (s.line() != source) fail(Errc::MixedLines, "lift needs segments on a single line");
    if (!is_banal(seq)) fail(Errc::NotBanal, "only banal multisegments lift");

    const auto e = source.period();
    std::set<std::int64_t> points;
    for (const auto& [p, k] : msupport(seq)) points.insert(p.index());
    // components in increasing order of their base residue
    std::vector<std::int64_t> bases;
    for (auto r : points)
        if (!points.contains(e.canonical(r - 1))) bases.push_back(r);

    SegmentSequence out;
    for (const auto& s : seq) {
        // the component containing s starts at the last base at or before s.start() cyclically
        std::size_t k = bases.size();
        std::int64_t offset = e.value();
        for (std::size_t c = 0; c < bases.size(); ++c) {
            auto d = e.canonical(s.start() - bases[c]);
            if (d < offset) {
                offset = d;
                k = c;
            }
        }
        const std::int64_t a = bases[k] + 2 * e.value() * static_cast<std::int64_t>(k) + offset;
        out.emplace_back(target, a, s.length());
    }

    if (precedence_pattern(out) != precedence_pattern(seq) || reduce_mod(out, source) != seq)
        fail(Errc::PatternMismatch, "lift did not preserve the precedence pattern");
    return out;
}

inline Multisegment lift(const Multisegment& m, const Line& target) {
    return Multisegment(lift(m.segments(), target));
}

} // namespace banal
