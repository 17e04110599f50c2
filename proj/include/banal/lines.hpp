#pragma once

/**
 * @file lines.hpp
 * @brief Cuspidal lines, their points, and the registry that declares them.
 *
 * A line is the orbit of a cuspidal point under the unit twist. It is either
 * infinite or cyclic of some period e >= 1. Points are stored as canonical
 * residues, so structural equality coincides with isomorphism of classes.
 */

#include <banal/error.hpp>

#include <cstdint>
#include <compare>
#include <istream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace banal {

/// Cardinality of a line: a positive integer or infinity.
class Period {
public:
    static constexpr Period infinite() { return Period(0); }
    static Period finite(std::int64_t e) {
        if (e < 1) fail(Errc::Registry, "period must be >= 1, got " + std::to_string(e));
        return Period(e);
    }

    constexpr bool is_finite() const { return e_ != 0; }
    constexpr std::int64_t value() const { return e_; }

    /// Reduce an index to [0, e) on finite lines; identity otherwise.
    constexpr std::int64_t canonical(std::int64_t index) const {
        if (e_ == 0) return index;
        std::int64_t r = index % e_;
        return r < 0 ? r + e_ : r;
    }

    std::string str() const { return is_finite() ? std::to_string(e_) : "inf"; }

    friend constexpr bool operator==(Period, Period) = default;

private:
    constexpr explicit Period(std::int64_t e) : e_(e) {}
    std::int64_t e_;  // 0 encodes infinity
};

struct CuspidalLine {
    std::string id;
    Period period = Period::infinite();
    std::int64_t base_degree = 1;
    std::string dual_id;
};

/// Shared, immutable handle to a registered line. Compared by id.
class Line {
public:
    Line() = default;
    explicit Line(std::shared_ptr<const CuspidalLine> line) : p_(std::move(line)) {}

    const std::string& id() const { return p_->id; }
    Period period() const { return p_->period; }
    std::int64_t base_degree() const { return p_->base_degree; }
    const std::string& dual_id() const { return p_->dual_id; }
    bool valid() const { return static_cast<bool>(p_); }

    std::int64_t canonical(std::int64_t index) const { return p_->period.canonical(index); }

    friend bool operator==(const Line& x, const Line& y) {
        return x.p_ == y.p_ || (x.p_ && y.p_ && x.p_->id == y.p_->id);
    }
    friend std::strong_ordering operator<=>(const Line& x, const Line& y) {
        if (x.p_ == y.p_) return std::strong_ordering::equal;
        return x.id() <=> y.id();
    }

private:
    std::shared_ptr<const CuspidalLine> p_;
};

/// Cardinality e of the line.
inline Period line_cardinality(const Line& line) { return line.period(); }

class CuspidalPoint {
public:
    CuspidalPoint() = default;
    CuspidalPoint(Line line, std::int64_t index)
        : line_(std::move(line)), index_(line_.canonical(index)) {}

    const Line& line() const { return line_; }
    std::int64_t index() const { return index_; }

    friend bool operator==(const CuspidalPoint& x, const CuspidalPoint& y) {
        return x.index_ == y.index_ && x.line_ == y.line_;
    }
    friend std::strong_ordering operator<=>(const CuspidalPoint& x, const CuspidalPoint& y) {
        if (auto c = x.line_ <=> y.line_; c != 0) return c;
        return x.index_ <=> y.index_;
    }

private:
    Line line_;
    std::int64_t index_ = 0;
};

inline CuspidalPoint twist(const CuspidalPoint& p, std::int64_t k) {
    return CuspidalPoint(p.line(), p.index() + k);
}

/**
 * Lines declared up front, keyed by id. Construction checks that dual ids
 * resolve and that duality is an involution preserving period and degree.
 */
class LineRegistry {
public:
    LineRegistry() = default;
    explicit LineRegistry(std::vector<CuspidalLine> lines) {
        for (auto& line : lines) {
            if (line.id.empty()) fail(Errc::Registry, "line with empty id");
            if (line.base_degree < 1)
                fail(Errc::Registry, "line " + line.id + ": deg must be >= 1");
            auto id = line.id;
            auto ptr = std::make_shared<const CuspidalLine>(std::move(line));
            if (!lines_.emplace(id, Line(std::move(ptr))).second)
                fail(Errc::Registry, "duplicate line id " + id);
        }
        for (const auto& [id, line] : lines_) {
            auto it = lines_.find(line.dual_id());
            if (it == lines_.end())
                fail(Errc::Registry, "line " + id + ": dual " + line.dual_id() + " is not declared");
            const Line& dual = it->second;
            if (dual.dual_id() != id)
                fail(Errc::Registry, "duality is not an involution at " + id);
            if (dual.period() != line.period() || dual.base_degree() != line.base_degree())
                fail(Errc::Registry, "line " + id + " and its dual differ in period or degree");
        }
    }

    /// `line einf e=inf deg=1 dual=einf` and `line e2 e=2 deg=1 dual=e2`.
    static LineRegistry defaults() {
        return LineRegistry({{"einf", Period::infinite(), 1, "einf"},
                             {"e2", Period::finite(2), 1, "e2"}});
    }

    /**
     * Parse the text format, one declaration per line:
     * `line <id> e=<int|inf> deg=<int> dual=<id>`. Blank lines and `#`
     * comments are ignored.
     */
    static LineRegistry parse(std::istream& in) {
        std::vector<CuspidalLine> lines;
        std::string text;
        int lineno = 0;
        while (std::getline(in, text)) {
            ++lineno;
            if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
            std::istringstream fields(text);
            std::string keyword;
            if (!(fields >> keyword)) continue;
            auto where = "registry line " + std::to_string(lineno) + ": ";
            if (keyword != "line") fail(Errc::Registry, where + "expected 'line'");
            CuspidalLine line;
            if (!(fields >> line.id)) fail(Errc::Registry, where + "missing id");
            bool has_e = false, has_deg = false, has_dual = false;
            std::string field;
            while (fields >> field) {
                auto eq = field.find('=');
                if (eq == std::string::npos) fail(Errc::Registry, where + "bad field '" + field + "'");
                auto key = field.substr(0, eq);
                auto value = field.substr(eq + 1);
                if (key == "e") {
                    line.period = value == "inf" ? Period::infinite()
                                                 : Period::finite(parse_int(value, where));
                    has_e = true;
                } else if (key == "deg") {
                    line.base_degree = parse_int(value, where);
                    has_deg = true;
                } else if (key == "dual") {
                    line.dual_id = value;
                    has_dual = true;
                } else {
                    fail(Errc::Registry, where + "unknown key '" + key + "'");
                }
            }
            if (!has_e || !has_deg || !has_dual)
                fail(Errc::Registry, where + "need e=, deg= and dual=");
            lines.push_back(std::move(line));
        }
        return LineRegistry(std::move(lines));
    }

    static LineRegistry parse(std::string_view text) {
        std::istringstream in{std::string(text)};
        return parse(in);
    }

    const Line& at(std::string_view id) const {
        auto it = lines_.find(id);
        if (it == lines_.end()) fail(Errc::UnknownLine, "unknown line '" + std::string(id) + "'");
        return it->second;
    }

    bool contains(std::string_view id) const { return lines_.find(id) != lines_.end(); }

    const Line& dual(const Line& line) const { return at(line.dual_id()); }

    std::vector<Line> lines() const {
        std::vector<Line> out;
        for (const auto& [id, line] : lines_) out.push_back(line);
        return out;
    }

private:
    static std::int64_t parse_int(const std::string& s, const std::string& where) {
        try {
            std::size_t used = 0;
            auto v = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            fail(Errc::Registry, where + "not an integer: '" + s + "'");
        }
    }

    std::map<std::string, Line, std::less<>> lines_;
};

/// The point at index -i on the dual line.
inline CuspidalPoint dual_point(const LineRegistry& registry, const CuspidalPoint& p) {
    return CuspidalPoint(registry.dual(p.line()), -p.index());
}

} // namespace banal
