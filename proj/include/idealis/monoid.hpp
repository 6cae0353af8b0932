#pragma once
// Concrete finitely generated cancellative monoids inside Z^d.

#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "group_vector.hpp"

namespace idealis {

/// Parse failure carrying a 1-based line and column.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

/// Raised when a bounded search could not certify an answer.
struct UncertifiedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CoordKind { Numerical, Free, Group };

inline const char* to_string(CoordKind k) {
    switch (k) {
        case CoordKind::Numerical: return "numerical";
        case CoordKind::Free: return "free";
        case CoordKind::Group: return "group";
    }
    return "?";
}

/**
 * One factor of a product model: a numerical semigroup, N, or Z.
 *
 * For the numerical kind the generators are reduced to the minimal system
 * and membership below the conductor is tabulated at construction.
 */
class Coordinate {
public:
    static Coordinate free() { return Coordinate(CoordKind::Free, {1}); }
    static Coordinate group() { return Coordinate(CoordKind::Group, {}); }

    /// Throws std::invalid_argument on an empty list, non-positive entries or gcd != 1.
    static Coordinate numerical(std::vector<i64> gens) {
        if (gens.empty()) throw std::invalid_argument("empty generator list");
        i64 g = 0;
        for (i64 x : gens) {
            if (x <= 0) throw std::invalid_argument("numerical generators must be positive");
            g = std::gcd(g, x);
        }
        if (g != 1) throw std::invalid_argument("generators have gcd " + std::to_string(g) + ", expected 1");
        Coordinate c(CoordKind::Numerical, std::move(gens));
        if (c.gens_.size() == 1) return free();  // <1> is N itself
        return c;
    }

    CoordKind kind() const { return kind_; }
    bool is_group() const { return kind_ == CoordKind::Group; }
    /// N or a numerical semigroup other than N.
    bool is_semigroup() const { return kind_ != CoordKind::Group; }

    /// Minimal generators; {1} for N and empty for Z.
    const std::vector<i64>& generators() const { return gens_; }
    /// Largest integer outside the semigroup (-1 for N).
    i64 frobenius() const { return conductor_ - 1; }
    /// Least c such that every integer >= c is a member.
    i64 conductor() const { return conductor_; }
    /// Smallest nonzero member (1 for N, 0 for Z).
    i64 multiplicity() const { return gens_.empty() ? 0 : gens_.front(); }
    const std::vector<i64>& gaps() const { return gaps_; }

    bool contains(i64 v) const {
        if (kind_ == CoordKind::Group) return true;
        if (v < 0) return false;
        if (v >= conductor_) return true;
        return table_[static_cast<std::size_t>(v)] != 0;
    }

    friend bool operator==(const Coordinate& a, const Coordinate& b) {
        return a.kind_ == b.kind_ && a.gens_ == b.gens_;
    }

    std::string describe() const {
        if (kind_ == CoordKind::Group) return "Z";
        if (kind_ == CoordKind::Free) return "N";
        std::string s = "<";
        for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "," : "") + std::to_string(gens_[i]);
        return s + ">";
    }

private:
    Coordinate(CoordKind k, std::vector<i64> gens) : kind_(k) {
        if (k == CoordKind::Group) return;
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        sieve(gens);
    }

    void sieve(const std::vector<i64>& gens) {
        // Grow the membership table until a run of `m` consecutive members
        // appears; everything past such a run is a member.
        const i64 m = gens.front();
        std::vector<std::uint8_t> t{1};
        i64 run = 1;
        constexpr i64 kLimit = 50'000'000;
        for (i64 v = 1; run < m; ++v) {
            if (v > kLimit) throw std::invalid_argument("numerical semigroup too large to tabulate");
            bool in = false;
            for (i64 g : gens) {
                if (g > v) break;
                if (t[static_cast<std::size_t>(v - g)]) { in = true; break; }
            }
            t.push_back(in ? 1 : 0);
            run = in ? run + 1 : 0;
        }
        conductor_ = static_cast<i64>(t.size()) - m;
        table_.assign(t.begin(), t.begin() + conductor_);
        for (i64 v = 0; v < conductor_; ++v)
            if (!table_[static_cast<std::size_t>(v)]) gaps_.push_back(v);
        for (i64 g : gens) {
            bool minimal = true;
            for (i64 s = 1; s < g && minimal; ++s)
                if (contains(s) && contains(g - s)) minimal = false;
            if (minimal) gens_.push_back(g);
        }
    }

    CoordKind kind_;
    std::vector<i64> gens_;
    std::vector<std::uint8_t> table_;
    std::vector<i64> gaps_;
    i64 conductor_ = 0;
};

/// Three-valued membership answer used by the affine kind.
enum class Membership { No, Yes, Undecided };

/// Unit lattice: H^x is Z on these coordinates and 0 elsewhere.
struct UnitDescription {
    std::vector<std::size_t> unit_coords;
};

/// Bit set over coordinate indices (rank is at most kMaxRank).
using CoordMask = std::uint32_t;

/**
 * A monoid H inside Z^d, immutable after construction.
 *
 * The exact class is a product of Numerical/Free/Group coordinates. An
 * experimental affine kind stores a generator list instead; its answers come
 * from a bounded search and are certified only when the search is complete.
 */
class MonoidModel {
public:
    MonoidModel() = default;
    MonoidModel(std::string name, std::vector<Coordinate> coords) : name_(std::move(name)), coords_(std::move(coords)) {
        if (coords_.empty()) throw std::invalid_argument("a monoid needs at least one coordinate");
        if (coords_.size() > kMaxRank) throw DimensionError("too many coordinates");
    }

    static MonoidModel affine(std::string name, std::vector<GroupVector> gens) {
        if (gens.empty()) throw std::invalid_argument("empty generator list");
        MonoidModel m;
        m.name_ = std::move(name);
        const std::size_t d = gens.front().rank();
        for (const auto& g : gens)
            if (g.rank() != d) throw DimensionError("affine generators of different rank");
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        m.affine_ = std::move(gens);
        return m;
    }

    const std::string& name() const { return name_; }
    void rename(std::string n) { name_ = std::move(n); }
    std::size_t rank() const { return affine_ ? affine_->front().rank() : coords_.size(); }
    bool is_affine() const { return affine_.has_value(); }
    bool is_product() const { return !affine_; }
    const std::vector<Coordinate>& coords() const { return coords_; }
    const Coordinate& coord(std::size_t i) const { return coords_[i]; }
    const std::vector<GroupVector>& affine_generators() const { return *affine_; }

    CoordMask group_mask() const {
        CoordMask m = 0;
        for (std::size_t i = 0; i < coords_.size(); ++i)
            if (coords_[i].is_group()) m |= CoordMask{1} << i;
        return m;
    }
    CoordMask semigroup_mask() const {
        return (coords_.empty() ? 0 : ((CoordMask{1} << coords_.size()) - 1)) & ~group_mask();
    }
    /// H = G exactly when every coordinate is Z.
    bool is_group() const { return is_product() && semigroup_mask() == 0; }

    UnitDescription units() const {
        UnitDescription u;
        for (std::size_t i = 0; i < coords_.size(); ++i)
            if (coords_[i].is_group()) u.unit_coords.push_back(i);
        return u;
    }

    Membership membership(const GroupVector& g, i64 search_bound = 64) const {
        if (g.rank() != rank()) throw DimensionError("element rank " + std::to_string(g.rank()) + " vs model rank " + std::to_string(rank()));
        if (affine_) return affine_membership(g, search_bound);
        for (std::size_t i = 0; i < coords_.size(); ++i)
            if (!coords_[i].contains(g[i])) return Membership::No;
        return Membership::Yes;
    }

    /// True iff g lies in H. Throws UncertifiedError for an undecided affine query.
    bool contains(const GroupVector& g) const {
        Membership m = membership(g);
        if (m == Membership::Undecided) throw UncertifiedError("membership of " + g.str() + " undecided within search bound");
        return m == Membership::Yes;
    }

    /// b lies in a + H.
    bool divides(const GroupVector& a, const GroupVector& b) const { return contains(b - a); }

    bool is_unit(const GroupVector& g) const { return contains(g) && contains(-g); }

    /// Members of H in the box: [-R, R] on Z coordinates, [0, R] elsewhere, lexicographic.
    std::vector<GroupVector> enumerate(i64 radius) const {
        std::vector<GroupVector> out;
        if (radius < 0) return out;
        const std::size_t d = rank();
        std::vector<i64> lo(d), hi(d);
        for (std::size_t i = 0; i < d; ++i) {
            bool grp = affine_ ? true : coords_[i].is_group();
            lo[i] = grp ? -radius : 0;
            hi[i] = radius;
        }
        GroupVector g(d);
        for (std::size_t i = 0; i < d; ++i) g[i] = lo[i];
        while (true) {
            if (contains(g)) out.push_back(g);
            std::size_t i = d;
            while (i > 0) {
                --i;
                if (g[i] < hi[i]) { ++g[i]; break; }
                g[i] = lo[i];
                if (i == 0) return out;
            }
            if (d == 0) return out;
        }
    }

    /// Coordinates in `face` become Z; the others are untouched.
    MonoidModel localize_face(CoordMask face) const {
        if (affine_) throw std::logic_error("use localize_affine for the affine kind");
        MonoidModel m = *this;
        for (std::size_t i = 0; i < coords_.size(); ++i)
            if (face & (CoordMask{1} << i)) m.coords_[i] = Coordinate::group();
        return m;
    }

    /// Affine localization: adjoin the negatives of the chosen generators.
    MonoidModel localize_affine(const std::vector<GroupVector>& face_gens) const {
        std::vector<GroupVector> gens = *affine_;
        for (const auto& f : face_gens) gens.push_back(-f);
        return affine(name_, gens);
    }

    /// Structural equality of the underlying monoids (names ignored).
    bool same_monoid(const MonoidModel& o) const {
        if (affine_ || o.affine_) return affine_ == o.affine_;
        return coords_ == o.coords_;
    }

    std::string describe() const {
        if (affine_) {
            std::string s = "affine";
            for (const auto& g : *affine_) s += " " + g.str();
            return s;
        }
        std::string s;
        for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? " x " : "") + coords_[i].describe();
        return s;
    }

    /// Canonical spec text that parses back to this model.
    std::string to_spec() const {
        std::string s = "name = " + name_ + "\n";
        if (affine_) {
            s += "affine =";
            for (const auto& g : *affine_) {
                std::string t = g.str();
                s += " " + t;
            }
            return s + "\n";
        }
        for (const auto& c : coords_) {
            switch (c.kind()) {
                case CoordKind::Group: s += "coord = group 1\n"; break;
                case CoordKind::Free: s += "coord = free 1\n"; break;
                case CoordKind::Numerical: {
                    s += "coord = numerical";
                    for (i64 g : c.generators()) s += " " + std::to_string(g);
                    s += "\n";
                }
            }
        }
        return s;
    }

private:
    /// Exhaustive search over non-negative combinations with total weight <= bound.
    /// When every generator has positive coordinate sum the search is complete.
    Membership affine_membership(const GroupVector& g, i64 bound) const {
        const auto& gens = *affine_;
        bool graded = std::all_of(gens.begin(), gens.end(), [](const GroupVector& x) {
            i64 s = 0;
            for (i64 c : x) {
                if (c < 0) return false;
                s += c;
            }
            return s > 0;
        });
        i64 budget = bound;
        if (graded) {
            i64 s = 0;
            for (i64 c : g) {
                if (c < 0) return Membership::No;
                s += c;
            }
            budget = s;
        }
        std::vector<GroupVector> frontier{GroupVector::zero(g.rank())};
        std::vector<GroupVector> seen = frontier;
        for (i64 step = 0; step <= budget; ++step) {
            for (const auto& x : frontier)
                if (x == g) return Membership::Yes;
            if (step == budget) break;
            std::vector<GroupVector> next;
            for (const auto& x : frontier)
                for (const auto& y : gens) {
                    GroupVector z = x + y;
                    if (graded) {
                        bool over = false;
                        for (std::size_t i = 0; i < z.rank(); ++i)
                            if (z[i] > g[i]) over = true;
                        if (over) continue;
                    }
                    next.push_back(z);
                }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            frontier = std::move(next);
            if (frontier.empty()) break;
        }
        return graded ? Membership::No : Membership::Undecided;
    }

    std::string name_;
    std::vector<Coordinate> coords_;
    std::optional<std::vector<GroupVector>> affine_;
};

using MonoidPtr = std::shared_ptr<const MonoidModel>;

namespace detail {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t line_start = 0;

    std::size_t column() const { return pos - line_start + 1; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, column()); }

    void skip_blanks() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
    }
    bool at_eol() {
        skip_blanks();
        return pos >= text.size() || text[pos] == '\n' || text[pos] == '#';
    }
    void next_line() {
        while (pos < text.size() && text[pos] != '\n') ++pos;
        if (pos < text.size()) {
            ++pos;
            ++line;
            line_start = pos;
        }
    }
    std::string word() {
        skip_blanks();
        std::size_t s = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' || text[pos] == '-' || text[pos] == '.'))
            ++pos;
        if (s == pos) fail("expected an identifier");
        return std::string(text.substr(s, pos - s));
    }
    void expect(char c) {
        skip_blanks();
        if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    i64 integer() {
        skip_blanks();
        std::size_t s = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (digits == pos) {
            pos = s;
            fail("expected an integer");
        }
        try {
            return std::stoll(std::string(text.substr(s, pos - s)));
        } catch (const std::out_of_range&) {
            pos = s;
            fail("integer out of range");
        }
    }
};

inline void parse_coord_body(Cursor& c, std::vector<Coordinate>& coords) {
    c.skip_blanks();
    std::size_t col = c.column();
    std::string kind = c.word();
    if (kind == "numerical") {
        std::vector<i64> gens;
        while (!c.at_eol() && c.text[c.pos] != '|') gens.push_back(c.integer());
        try {
            coords.push_back(Coordinate::numerical(gens));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), c.line, col);
        }
    } else if (kind == "free" || kind == "group") {
        i64 n = 1;
        if (!c.at_eol() && c.text[c.pos] != '|') n = c.integer();
        if (n < 1) c.fail("coordinate count must be positive");
        if (coords.size() + static_cast<std::size_t>(n) > kMaxRank) c.fail("too many coordinates");
        for (i64 i = 0; i < n; ++i) coords.push_back(kind == "free" ? Coordinate::free() : Coordinate::group());
    } else {
        throw ParseError("unknown coordinate kind '" + kind + "'", c.line, col);
    }
}

inline std::vector<GroupVector> parse_affine_body(Cursor& c) {
    std::vector<GroupVector> gens;
    while (!c.at_eol()) {
        c.expect('(');
        std::vector<i64> v{c.integer()};
        c.skip_blanks();
        while (c.pos < c.text.size() && c.text[c.pos] == ',') {
            ++c.pos;
            v.push_back(c.integer());
            c.skip_blanks();
        }
        c.expect(')');
        if (!gens.empty() && gens.front().rank() != v.size()) c.fail("affine generators must share one rank");
        gens.emplace_back(v);
    }
    if (gens.empty()) c.fail("empty generator list");
    return gens;
}

}  // namespace detail

/**
 * Parse a monoid spec.
 *
 * Full form: a `name = <id>` line followed by `coord = ...` lines or a
 * single `affine = (..) (..)` line. Compact form: coordinate bodies joined
 * by `|`, e.g. "numerical 2 3 | free 1". `#` starts a comment.
 */
inline MonoidModel parse_monoid(std::string_view text) {
    detail::Cursor c{text};
    while (c.pos < text.size() && c.at_eol()) c.next_line();
    if (c.pos >= text.size()) c.fail("empty monoid spec");

    std::size_t save = c.pos;
    std::string first = c.word();
    c.skip_blanks();
    bool full = (first == "name" && c.pos < text.size() && text[c.pos] == '=');
    if (!full) {
        c.pos = save;
        std::vector<Coordinate> coords;
        while (true) {
            detail::parse_coord_body(c, coords);
            c.skip_blanks();
            if (c.pos < text.size() && text[c.pos] == '|') {
                ++c.pos;
                continue;
            }
            if (!c.at_eol()) c.fail("unexpected trailing text");
            break;
        }
        c.next_line();
        while (c.pos < text.size()) {
            if (!c.at_eol()) c.fail("compact specs occupy a single line");
            c.next_line();
        }
        return MonoidModel("anonymous", std::move(coords));
    }

    c.expect('=');
    std::string name = c.word();
    if (!c.at_eol()) c.fail("unexpected text after name");
    c.next_line();

    std::vector<Coordinate> coords;
    std::optional<std::vector<GroupVector>> affine;
    while (c.pos < text.size()) {
        if (c.at_eol()) {
            c.next_line();
            continue;
        }
        c.skip_blanks();
        std::size_t col = c.column();
        std::string key = c.word();
        c.expect('=');
        if (key == "coord") {
            if (affine) c.fail("cannot mix affine and coord lines");
            detail::parse_coord_body(c, coords);
        } else if (key == "affine") {
            if (affine || !coords.empty()) c.fail("at most one affine line and no coord lines");
            affine = detail::parse_affine_body(c);
        } else {
            throw ParseError("unknown key '" + key + "'", c.line, col);
        }
        if (!c.at_eol()) c.fail("unexpected trailing text");
        c.next_line();
    }
    if (affine) return MonoidModel::affine(name, std::move(*affine));
    if (coords.empty()) throw ParseError("no coordinates given", c.line, 1);
    return MonoidModel(name, std::move(coords));
}

inline MonoidPtr make_monoid(MonoidModel m) { return std::make_shared<const MonoidModel>(std::move(m)); }

}  // namespace idealis
