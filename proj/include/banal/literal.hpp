#pragma once

/**
 * @file literal.hpp
 * @brief Text grammar for segments, multisegments, words and supports.
 *
 *   segment       [a,b]@id                 a <= b, integers
 *   multisegment  seg + seg + ...          `0` or blank is the empty sum
 *   sequence      seg + seg + ...  or  (seg, seg, ...)
 *   word          (i1,i2,...)@id  or  (i1@id, i2@id', ...)
 *   support       i:k,i:k@id + i:k@id' ...
 *
 * Whitespace is ignored everywhere. Errors report the 0-based offset.
 */

#include <banal/error.hpp>
#include <banal/lines.hpp>
#include <banal/multisegment.hpp>
#include <banal/segment.hpp>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace banal {

namespace detail {

class Cursor {
public:
    Cursor(const LineRegistry& registry, std::string_view text) : registry_(registry), text_(text) {}

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip();
        return pos_ == text_.size();
    }
    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) error(std::string("expected '") + c + "'");
    }

    std::int64_t integer() {
        skip();
        const auto begin = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        const auto digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = begin;
            error("expected an integer");
        }
        try {
            return std::stoll(std::string(text_.substr(begin, pos_ - begin)));
        } catch (const std::out_of_range&) {
            pos_ = begin;
            error("integer out of range");
        }
    }

    const Line& line() {
        expect('@');
        skip();
        const auto begin = pos_;
        while (pos_ < text_.size() && is_id_char(text_[pos_])) ++pos_;
        if (pos_ == begin) error("expected a line id");
        const auto id = text_.substr(begin, pos_ - begin);
        if (!registry_.contains(id)) {
            pos_ = begin;
            fail(Errc::UnknownLine, "unknown line '" + std::string(id) + "' at position " + std::to_string(pos_));
        }
        return registry_.at(id);
    }

    Segment segment() {
        expect('[');
        const auto at = pos_;
        const auto a = integer();
        expect(',');
        const auto b = integer();
        expect(']');
        const auto& l = line();
        if (a > b)
            fail(Errc::Bounds, "segment [" + std::to_string(a) + "," + std::to_string(b) +
                                   "] at position " + std::to_string(at) + " has a > b");
        return make_segment(l, a, b);
    }

    [[noreturn]] void error(const std::string& what) {
        fail(Errc::Syntax, what + " at position " + std::to_string(pos_));
    }

    void finish() {
        if (!done()) error("unexpected trailing input");
    }

private:
    static bool is_id_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
    }

    const LineRegistry& registry_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Segment parse_segment(const LineRegistry& registry, std::string_view text) {
    detail::Cursor in(registry, text);
    auto s = in.segment();
    in.finish();
    return s;
}

/// Order-preserving parse of a `+`-separated or parenthesized list.
inline SegmentSequence parse_sequence(const LineRegistry& registry, std::string_view text) {
    detail::Cursor in(registry, text);
    SegmentSequence out;
    if (in.done()) return out;
    if (in.peek() == '0') {
        in.expect('0');
        in.finish();
        return out;
    }
    if (in.accept('(')) {
        if (!in.accept(')')) {
            do out.push_back(in.segment());
            while (in.accept(','));
            in.expect(')');
        }
    } else {
        do out.push_back(in.segment());
        while (in.accept('+'));
    }
    in.finish();
    return out;
}

inline Multisegment parse_multisegment(const LineRegistry& registry, std::string_view text) {
    return Multisegment(parse_sequence(registry, text));
}

inline CuspidalWord parse_word(const LineRegistry& registry, std::string_view text) {
    detail::Cursor in(registry, text);
    in.expect('(');
    std::vector<std::int64_t> indices;
    std::vector<std::optional<Line>> lines;
    if (!in.accept(')')) {
        do {
            indices.push_back(in.integer());
            lines.push_back(in.peek() == '@' ? std::optional(in.line()) : std::nullopt);
        } while (in.accept(','));
        in.expect(')');
    }
    std::optional<Line> shared;
    if (in.peek() == '@') shared = in.line();
    in.finish();
    CuspidalWord word;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        auto l = lines[k] ? lines[k] : shared;
        if (!l) fail(Errc::Syntax, "word entry " + std::to_string(k) + " has no line");
        word.emplace_back(*l, indices[k]);
    }
    return word;
}

inline CuspidalSupport parse_support(const LineRegistry& registry, std::string_view text) {
    detail::Cursor in(registry, text);
    CuspidalSupport out;
    if (in.done()) return out;
    do {
        std::vector<std::pair<std::int64_t, std::int64_t>> entries;
        do {
            const auto index = in.integer();
            in.expect(':');
            const auto count = in.integer();
            if (count < 0) in.error("negative multiplicity");
            entries.emplace_back(index, count);
        } while (in.accept(','));
        const auto& l = in.line();
        for (auto [index, count] : entries)
            if (count > 0) out[CuspidalPoint(l, index)] += count;
    } while (in.accept('+'));
    in.finish();
    return out;
}

inline std::string to_string(const Segment& s) {
    return "[" + std::to_string(s.start()) + "," + std::to_string(s.end()) + "]@" + s.line().id();
}

inline std::string to_string(const Multisegment& m) {
    if (m.empty()) return "0";
    std::string out;
    for (const auto& s : m.segments()) out += (out.empty() ? "" : " + ") + to_string(s);
    return out;
}

inline std::string to_string(const SegmentSequence& seq) {
    std::string out = "(";
    for (std::size_t k = 0; k < seq.size(); ++k) out += (k ? ", " : "") + to_string(seq[k]);
    return out + ")";
}

inline std::string to_string(const CuspidalWord& word) {
    bool one_line = true;
    for (const auto& p : word) one_line = one_line && p.line() == word.front().line();
    std::string out = "(";
    for (std::size_t k = 0; k < word.size(); ++k) {
        out += (k ? "," : "") + std::to_string(word[k].index());
        if (!one_line) out += "@" + word[k].line().id();
    }
    out += ")";
    if (one_line && !word.empty()) out += "@" + word.front().line().id();
    return out;
}

inline std::string to_string(const CuspidalSupport& support) {
    std::string out;
    const Line* current = nullptr;
    for (const auto& [p, k] : support) {
        if (current && !(*current == p.line())) out += "@" + current->id() + " + ";
        else if (current) out += ",";
        out += std::to_string(p.index()) + ":" + std::to_string(k);
        current = &p.line();
    }
    if (current) out += "@" + current->id();
    return out;
}

} // namespace banal
