#pragma once

/**
 * @file shuffle.hpp
 * @brief Full-flag Jacquet words of products of segment representations.
 *
 * At the cuspidal level the geometric lemma reduces to shuffles: each term of
 * the expansion of <D_1> x ... x <D_r> is indexed by a contingency matrix with
 * row sums the segment lengths and unit column sums, i.e. by an interleaving
 * of the segment words that keeps each word's internal order.
 */

#include <banal/error.hpp>
#include <banal/multisegment.hpp>
#include <banal/segment.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace banal {

/// Z: segment words ascend (mu = nu). L: they descend (mu = nu^{-1}).
enum class Convention { Z, L };

using FormalWordSum = std::map<CuspidalWord, std::uint64_t>;
using ContingencyMatrix = std::vector<std::vector<std::int64_t>>;

/// Queries whose total multiplicity exceeds this are refused.
inline constexpr std::uint64_t max_word_sum_total = 10'000'000;

/**
 * All non-negative integer matrices with row sums `rows` and column sums
 * `cols`, in lexicographic row-major order.
 */
inline std::vector<ContingencyMatrix> contingency_matrices(const std::vector<std::int64_t>& rows,
                                                           const std::vector<std::int64_t>& cols) {
    auto sum = [](const auto& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
    if (std::any_of(rows.begin(), rows.end(), [](auto x) { return x < 0; }) ||
        std::any_of(cols.begin(), cols.end(), [](auto x) { return x < 0; }) || sum(rows) != sum(cols))
        fail(Errc::MarginMismatch, "row and column sums must be non-negative with equal totals");

    const std::size_t r = rows.size(), s = cols.size();
    std::vector<ContingencyMatrix> out;
    ContingencyMatrix m(r, std::vector<std::int64_t>(s, 0));
    auto row_left = rows;
    auto col_left = cols;

    auto fill = [&](auto&& self, std::size_t cell) -> void {
        if (cell == r * s) {
            out.push_back(m);
            return;
        }
        const std::size_t i = cell / s, j = cell % s;
        // whatever this cell leaves must fit in the cells still to come
        std::int64_t right = 0, below = 0;
        for (std::size_t jj = j + 1; jj < s; ++jj) right += col_left[jj];
        for (std::size_t ii = i + 1; ii < r; ++ii) below += row_left[ii];
        const std::int64_t hi = std::min(row_left[i], col_left[j]);
        const std::int64_t lo = std::max({std::int64_t{0}, row_left[i] - right, col_left[j] - below});
        for (std::int64_t v = lo; v <= hi; ++v) {
            m[i][j] = v;
            row_left[i] -= v;
            col_left[j] -= v;
            self(self, cell + 1);
            row_left[i] += v;
            col_left[j] += v;
        }
        m[i][j] = 0;
    };
    if (r * s == 0) {
        if (sum(rows) == 0) out.push_back(m);
        return out;
    }
    fill(fill, 0);
    return out;
}

inline CuspidalWord segment_word(const Segment& s, Convention conv) {
    auto word = points_of(s);
    if (conv == Convention::L) std::reverse(word.begin(), word.end());
    return word;
}

/// (sum l_i)! / prod l_i!, or nothing when it exceeds `cap`.
inline std::optional<std::uint64_t> multinomial(const std::vector<std::size_t>& lengths,
                                                std::uint64_t cap = max_word_sum_total) {
    std::uint64_t value = 1;
    std::size_t total = 0;
    for (auto len : lengths) {
        // value *= C(total + len, len), built one factor at a time
        for (std::size_t k = 1; k <= len; ++k) {
            ++total;
            unsigned __int128 next = static_cast<unsigned __int128>(value) * total / k;
            if (next > cap) return std::nullopt;
            value = static_cast<std::uint64_t>(next);
        }
    }
    return value;
}

/**
 * All interleavings of `words`, counted with multiplicity. The words are
 * merged one at a time: merging a word of length q into a word of length p
 * follows the 0/1 contingency matrices with rows (p, q) and unit columns,
 * row 0 marking the positions kept by the earlier letters. Equal partial
 * words are collected before the next merge.
 */
inline FormalWordSum shuffle_product(const std::vector<CuspidalWord>& words) {
    std::vector<std::size_t> lengths;
    for (const auto& w : words) lengths.push_back(w.size());
    if (!multinomial(lengths))
        fail(Errc::SizeLimit, "shuffle product has more than " + std::to_string(max_word_sum_total) + " terms");

    FormalWordSum out{{CuspidalWord{}, 1}};
    std::size_t done = 0;
    for (const auto& w : words) {
        const auto p = static_cast<std::int64_t>(done), q = static_cast<std::int64_t>(w.size());
        const auto matrices = contingency_matrices({p, q}, std::vector<std::int64_t>(static_cast<std::size_t>(p + q), 1));
        FormalWordSum next;
        for (const auto& [u, k] : out)
            for (const auto& b : matrices) {
                CuspidalWord merged;
                merged.reserve(static_cast<std::size_t>(p + q));
                std::size_t iu = 0, iw = 0;
                for (std::size_t j = 0; j < b[0].size(); ++j) merged.push_back(b[0][j] ? u[iu++] : w[iw++]);
                next[std::move(merged)] += k;
            }
        out = std::move(next);
        done += w.size();
    }
    return out;
}

inline FormalWordSum jacquet_words(const SegmentSequence& segments, Convention conv) {
    std::vector<CuspidalWord> words;
    for (const auto& s : segments) words.push_back(segment_word(s, conv));
    return shuffle_product(words);
}

inline std::uint64_t multiplicity(const CuspidalWord& w, const FormalWordSum& sum) {
    auto it = sum.find(w);
    return it == sum.end() ? 0 : it->second;
}

inline std::uint64_t total_multiplicity(const FormalWordSum& sum) {
    std::uint64_t total = 0;
    for (const auto& [w, k] : sum) total += k;
    return total;
}

/**
 * Number of ways `target` arises as an interleaving of `words`, by dynamic
 * programming over the tuple of prefix lengths consumed from each word.
 */
inline std::uint64_t shuffle_multiplicity(const CuspidalWord& target, const std::vector<CuspidalWord>& words) {
    std::size_t total = 0;
    for (const auto& w : words) total += w.size();
    if (total != target.size()) return 0;

    std::map<std::vector<std::size_t>, std::uint64_t> layer{{std::vector<std::size_t>(words.size(), 0), 1}};
    for (std::size_t pos = 0; pos < target.size(); ++pos) {
        std::map<std::vector<std::size_t>, std::uint64_t> next;
        for (const auto& [state, ways] : layer) {
            for (std::size_t i = 0; i < words.size(); ++i) {
                if (state[i] < words[i].size() && words[i][state[i]] == target[pos]) {
                    auto advanced = state;
                    ++advanced[i];
                    next[advanced] += ways;
                }
            }
        }
        layer = std::move(next);
        if (layer.empty()) return 0;
    }
    std::uint64_t ways = 0;
    for (const auto& [state, k] : layer) ways += k;
    return ways;
}

inline std::uint64_t jacquet_multiplicity(const CuspidalWord& target, const SegmentSequence& segments,
                                          Convention conv) {
    std::vector<CuspidalWord> words;
    for (const auto& s : segments) words.push_back(segment_word(s, conv));
    return shuffle_multiplicity(target, words);
}

/// Concatenation of segment words along the ordered form of m.
inline CuspidalWord socle_word(const Multisegment& m, Convention conv) {
    CuspidalWord out;
    for (const auto& s : ordered_segments(m)) {
        auto w = segment_word(s, conv);
        out.insert(out.end(), w.begin(), w.end());
    }
    return out;
}

} // namespace banal
