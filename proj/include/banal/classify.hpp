#pragma once

/**
 * @file classify.hpp
 * @brief Rewriting of segment sequences toward an inversion-free family.
 *
 * An inversion of (D_1, ..., D_r) is a pair i < j with D_i preceding D_j. An
 * adjacent inversion (i, i+1) is removed either by swapping the pair or by
 * replacing it with ([a_{i+1}, b_i], [a_i, b_{i+1}]). For banal sequences both
 * branches strictly lower the inversion count.
 */

#include <banal/error.hpp>
#include <banal/multisegment.hpp>
#include <banal/segment.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace banal {

/// Pairs (i, j), 0-based, i < j, with seq[i] preceding seq[j]; lexicographic.
inline std::vector<std::pair<std::size_t, std::size_t>> inversions(const SegmentSequence& seq) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (precedes(seq[i], seq[j])) out.emplace_back(i, j);
    return out;
}

inline std::size_t inversion_count(const SegmentSequence& seq) { return inversions(seq).size(); }

struct ElementaryMoves {
    SegmentSequence swap_branch;
    SegmentSequence union_branch;
};

/// Both rewrites of the adjacent inversion at (i, i+1).
inline ElementaryMoves elementary_moves(const SegmentSequence& seq, std::size_t i) {
    if (i + 1 >= seq.size() || !precedes(seq[i], seq[i + 1]))
        fail(Errc::NotAdjacentInversion, "(" + std::to_string(i) + ", " + std::to_string(i + 1) +
                                             ") is not an adjacent inversion");
    ElementaryMoves out{seq, {}};
    std::swap(out.swap_branch[i], out.swap_branch[i + 1]);

    auto [joined, met] = union_intersection(seq[i], seq[i + 1]);
    out.union_branch.assign(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i));
    if (met) out.union_branch.push_back(*met);
    out.union_branch.push_back(joined);
    out.union_branch.insert(out.union_branch.end(), seq.begin() + static_cast<std::ptrdiff_t>(i) + 2, seq.end());
    return out;
}

enum class Branch { Swap, Union, Commute };

constexpr std::string_view name(Branch b) {
    switch (b) {
    case Branch::Swap: return "swap";
    case Branch::Union: return "union";
    case Branch::Commute: return "commute";
    }
    return "?";
}

/// One rewrite step. Commute steps transpose an adjacent unlinked pair.
struct Move {
    std::size_t position;
    Branch branch;
    SegmentSequence before;
    SegmentSequence after;
};

struct Normalization {
    SegmentSequence result;
    std::vector<Move> trace;
};

/// Picks a branch for the adjacent inversion at the given position.
using BranchChooser = std::function<Branch(const SegmentSequence&, std::size_t)>;

namespace detail {

/**
 * Bring some inversion to adjacent positions using only transpositions of
 * adjacent unlinked pairs, which leave the inversion count unchanged. Picks
 * the leftmost adjacent inversion when there is one. Otherwise picks the
 * leftmost inversion (i, j) that is a cover in the order generated by linked
 * pairs, and rearranges positions i..j as
 * [not above i] D_i D_j [above i]. Returns the adjacent position, or nothing
 * when the sequence is inversion-free.
 */
inline std::optional<std::size_t> expose_inversion(SegmentSequence& seq, std::vector<Move>& trace) {
    const std::size_t r = seq.size();
    for (std::size_t i = 0; i + 1 < r; ++i)
        if (precedes(seq[i], seq[i + 1])) return i;

    const auto all = inversions(seq);
    if (all.empty()) return std::nullopt;
    for (auto [i, j] : all) {
        // above[k]: k reachable from i through linked pairs within (i, j]
        std::vector<bool> above(r, false);
        above[i] = true;
        for (std::size_t k = i + 1; k <= j; ++k)
            for (std::size_t h = i; h < k && !above[k]; ++h)
                if (above[h] && linked(seq[h], seq[k])) above[k] = true;
        bool cover = true;
        for (std::size_t k = i + 1; k < j && cover; ++k)
            if (above[k] && linked(seq[k], seq[j])) cover = false;
        if (!cover) continue;

        std::vector<std::size_t> order;
        for (std::size_t k = i + 1; k < j; ++k)
            if (!above[k]) order.push_back(k);
        order.push_back(i);
        order.push_back(j);
        for (std::size_t k = i + 1; k < j; ++k)
            if (above[k]) order.push_back(k);

        // bubble positions i..j into `order`; every swap crosses an unlinked pair
        std::vector<std::size_t> rank(r);
        for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
        std::vector<std::size_t> label(r);
        for (std::size_t k = 0; k < r; ++k) label[k] = k;
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t k = i; k < j; ++k) {
                if (rank[label[k]] > rank[label[k + 1]]) {
                    if (linked(seq[k], seq[k + 1])) fail(Errc::Internal, "commuting a linked pair");
                    Move m{k, Branch::Commute, seq, {}};
                    std::swap(seq[k], seq[k + 1]);
                    std::swap(label[k], label[k + 1]);
                    m.after = seq;
                    trace.push_back(std::move(m));
                    changed = true;
                }
            }
        }
        const auto below = static_cast<std::size_t>(
            std::count(above.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                       above.begin() + static_cast<std::ptrdiff_t>(j), false));
        const std::size_t at = i + below;
        if (!precedes(seq[at], seq[at + 1])) fail(Errc::Internal, "cover inversion did not become adjacent");
        return at;
    }
    fail(Errc::Internal, "inversions exist but none is a cover");
}

} // namespace detail

/**
 * Rewrite `seq` until it has no inversion. `choose` picks the branch at each
 * adjacent inversion; commute steps are recorded in the trace but do not
 * count as moves. Requires a banal sequence.
 */
inline Normalization normalize_to_ranged(const SegmentSequence& seq, const BranchChooser& choose) {
    if (!is_banal(seq)) fail(Errc::NotBanal, "normalization needs a banal sequence");
    Normalization out{seq, {}};
    const std::size_t limit = inversion_count(seq);
    std::size_t moves = 0;
    while (auto at = detail::expose_inversion(out.result, out.trace)) {
        if (moves++ == limit) fail(Errc::MoveLimit, "inversion count failed to decrease");
        const Branch b = choose(out.result, *at);
        auto branches = elementary_moves(out.result, *at);
        Move m{*at, b, out.result, {}};
        out.result = b == Branch::Union ? std::move(branches.union_branch) : std::move(branches.swap_branch);
        m.after = out.result;
        out.trace.push_back(std::move(m));
    }
    return out;
}

inline Normalization normalize_to_ranged(const SegmentSequence& seq, Branch policy) {
    return normalize_to_ranged(seq, [policy](const SegmentSequence&, std::size_t) { return policy; });
}

/// Every inversion-free sequence reachable by exploring both branches at each
/// step, sorted and without duplicates.
inline std::vector<SegmentSequence> reachable_normal_forms(const SegmentSequence& seq) {
    if (!is_banal(seq)) fail(Errc::NotBanal, "normalization needs a banal sequence");
    std::set<SegmentSequence> done;
    std::set<SegmentSequence> seen;
    std::vector<SegmentSequence> stack{seq};
    while (!stack.empty()) {
        auto cur = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        std::vector<Move> ignored;
        auto at = detail::expose_inversion(cur, ignored);
        if (!at) {
            done.insert(cur);
            continue;
        }
        auto branches = elementary_moves(cur, *at);
        stack.push_back(std::move(branches.swap_branch));
        stack.push_back(std::move(branches.union_branch));
    }
    return {done.begin(), done.end()};
}

/// No two members (counted with multiplicity) are linked. Banal inputs only.
inline bool is_irreducible_product(const Multisegment& m) {
    if (!is_banal(m)) fail(Errc::NotBanal, "irreducibility criterion needs a banal multisegment");
    const auto& segs = m.segments();
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j)
            if (linked(segs[i], segs[j])) return false;
    return true;
}

inline bool are_isomorphic(const Multisegment& x, const Multisegment& y) {
    if (!is_banal(x) || !is_banal(y)) fail(Errc::NotBanal, "isomorphism criterion needs banal multisegments");
    return x == y;
}

} // namespace banal
