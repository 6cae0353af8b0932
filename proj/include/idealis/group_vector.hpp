#pragma once
// Exact lattice vectors in Z^d with overflow-checked arithmetic.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace idealis {

using i64 = std::int64_t;

/// Thrown whenever an integer operation would leave the int64 range.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// Thrown when two objects of different rank are combined.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace checked {

inline i64 add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline i64 sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline i64 mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

}  // namespace checked

/// Largest supported rank of the ambient lattice.
inline constexpr std::size_t kMaxRank = 8;

/**
 * An element of the quotient group G, stored inline.
 *
 * The monoid is written additively: the product of two elements is their
 * sum and the n-th power of x is n*x.
 */
class GroupVector {
public:
    GroupVector() = default;

    explicit GroupVector(std::size_t rank) : n_(check_rank(rank)) { v_.fill(0); }

    GroupVector(std::initializer_list<i64> xs) : n_(check_rank(xs.size())) {
        v_.fill(0);
        std::copy(xs.begin(), xs.end(), v_.begin());
    }

    explicit GroupVector(const std::vector<i64>& xs) : n_(check_rank(xs.size())) {
        v_.fill(0);
        std::copy(xs.begin(), xs.end(), v_.begin());
    }

    static GroupVector zero(std::size_t rank) { return GroupVector(rank); }

    static GroupVector unit(std::size_t rank, std::size_t i, i64 value = 1) {
        GroupVector g(rank);
        g[i] = value;
        return g;
    }

    std::size_t rank() const { return n_; }
    i64& operator[](std::size_t i) { return v_[i]; }
    i64 operator[](std::size_t i) const { return v_[i]; }
    const i64* begin() const { return v_.data(); }
    const i64* end() const { return v_.data() + n_; }

    std::vector<i64> to_vector() const { return {begin(), end()}; }

    bool is_zero() const {
        return std::all_of(begin(), end(), [](i64 x) { return x == 0; });
    }

    GroupVector& operator+=(const GroupVector& o) {
        same_rank(o);
        for (std::size_t i = 0; i < n_; ++i) v_[i] = checked::add(v_[i], o.v_[i]);
        return *this;
    }

    GroupVector& operator-=(const GroupVector& o) {
        same_rank(o);
        for (std::size_t i = 0; i < n_; ++i) v_[i] = checked::sub(v_[i], o.v_[i]);
        return *this;
    }

    friend GroupVector operator+(GroupVector a, const GroupVector& b) { return a += b; }
    friend GroupVector operator-(GroupVector a, const GroupVector& b) { return a -= b; }

    GroupVector operator-() const {
        GroupVector r(n_);
        for (std::size_t i = 0; i < n_; ++i) r.v_[i] = checked::sub(0, v_[i]);
        return r;
    }

    /// k*x, the k-th power of x in multiplicative language.
    friend GroupVector operator*(i64 k, const GroupVector& x) {
        GroupVector r(x.n_);
        for (std::size_t i = 0; i < x.n_; ++i) r.v_[i] = checked::mul(k, x.v_[i]);
        return r;
    }

    friend bool operator==(const GroupVector& a, const GroupVector& b) {
        return a.n_ == b.n_ && std::equal(a.begin(), a.end(), b.begin());
    }

    /// Lexicographic order; vectors of smaller rank sort first.
    friend std::strong_ordering operator<=>(const GroupVector& a, const GroupVector& b) {
        if (a.n_ != b.n_) return a.n_ <=> b.n_;
        for (std::size_t i = 0; i < a.n_; ++i)
            if (a.v_[i] != b.v_[i]) return a.v_[i] <=> b.v_[i];
        return std::strong_ordering::equal;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < n_; ++i) {
            if (i) s += ",";
            s += std::to_string(v_[i]);
        }
        return s + ")";
    }

    std::size_t hash() const {
        std::size_t h = n_;
        for (i64 x : *this) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x9e3779b9);
        return h;
    }

private:
    static std::size_t check_rank(std::size_t r) {
        if (r > kMaxRank) throw DimensionError("rank " + std::to_string(r) + " exceeds supported maximum");
        return r;
    }

    void same_rank(const GroupVector& o) const {
        if (o.n_ != n_) throw DimensionError("rank mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    }

    std::array<i64, kMaxRank> v_{};
    std::size_t n_ = 0;
};

struct GroupVectorHash {
    std::size_t operator()(const GroupVector& g) const { return g.hash(); }
};

}  // namespace idealis
