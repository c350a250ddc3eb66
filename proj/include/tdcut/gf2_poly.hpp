#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tdcut/errors.hpp"

namespace tdcut {

// Exponent tuple of one tracking monomial: weight, solution-size, edge and
// marker counters in that fixed order. Problems that do not track a counter
// leave it at zero.
struct ExponentVec {
    std::uint32_t w = 0;
    std::uint32_t x = 0;
    std::uint32_t e = 0;
    std::uint32_t m = 0;
    bool operator==(const ExponentVec&) const = default;
};

// Per-counter maxima plus the derived layout that packs an ExponentVec into a
// single 64-bit key, weight field most significant so numeric key order equals
// lexicographic exponent order. Every field carries one guard bit: adding two
// in-bounds keys can never borrow into the next field, so overflow shows up as
// a per-field maximum violation instead of silent corruption.
class PolyBounds {
public:
    static PolyBounds two_tracker(std::uint32_t w_max, std::uint32_t x_max);
    static PolyBounds four_tracker(std::uint32_t w_max, std::uint32_t x_max,
                                   std::uint32_t e_max, std::uint32_t m_max);

    std::uint32_t w_max() const { return max_[0]; }
    std::uint32_t x_max() const { return max_[1]; }
    std::uint32_t e_max() const { return max_[2]; }
    std::uint32_t m_max() const { return max_[3]; }

    std::uint64_t pack(const ExponentVec& ev) const;  // ContractViolation when out of bounds
    ExponentVec unpack(std::uint64_t key) const;
    bool key_in_bounds(std::uint64_t key) const;

    bool operator==(const PolyBounds& other) const { return max_ == other.max_; }

private:
    explicit PolyBounds(std::array<std::uint32_t, 4> maxima);

    std::array<std::uint32_t, 4> max_{};
    std::array<int, 4> shift_{};
    std::array<std::uint64_t, 4> low_mask_{};  // field mask before shifting
};

// Multivariate polynomial over GF(2): the sorted set of monomial keys present
// with coefficient 1. Construction and destruction feed the live/peak object
// counters below, which the solver uses to certify its space behaviour.
class TrackedPoly {
public:
    explicit TrackedPoly(const PolyBounds& bounds);  // the zero polynomial
    static TrackedPoly one(const PolyBounds& bounds);
    TrackedPoly(const TrackedPoly& other);
    TrackedPoly(TrackedPoly&& other) noexcept;
    TrackedPoly& operator=(const TrackedPoly& other);
    TrackedPoly& operator=(TrackedPoly&& other) noexcept;
    ~TrackedPoly();

    const PolyBounds& bounds() const { return bounds_; }
    const std::vector<std::uint64_t>& keys() const { return keys_; }
    std::size_t monomial_count() const { return keys_.size(); }
    bool is_zero() const { return keys_.empty(); }
    bool is_one() const { return keys_.size() == 1 && keys_[0] == 0; }

    void add_assign(const TrackedPoly& other);
    void mul_assign(const TrackedPoly& other);
    void mul_monomial_assign(const ExponentVec& shift);
    // Fused this ^= other * shift; the branching recursion's hot path.
    void add_shifted(const TrackedPoly& other, const ExponentVec& shift);
    int coeff_at(const ExponentVec& at) const;

    // One monomial per line as "w x e m", lexicographically ascending.
    std::string dump() const;

    bool operator==(const TrackedPoly& other) const {
        return bounds_ == other.bounds_ && keys_ == other.keys_;
    }

private:
    void check_same_bounds(const TrackedPoly& other) const;

    PolyBounds bounds_;
    std::vector<std::uint64_t> keys_;
};

TrackedPoly poly_zero(const PolyBounds& bounds);
TrackedPoly poly_one(const PolyBounds& bounds);
TrackedPoly add(const TrackedPoly& p, const TrackedPoly& q);
TrackedPoly mul(const TrackedPoly& p, const TrackedPoly& q);
TrackedPoly mul_monomial(const TrackedPoly& p, const ExponentVec& shift);
int coeff(const TrackedPoly& p, const ExponentVec& at);

// Thread-local instrumentation over all TrackedPoly instances.
struct PolyCounters {
    std::int64_t live = 0;
    std::int64_t peak = 0;
};
PolyCounters poly_counters();
// Restarts the peak at the current live count.
void reset_poly_peak();

}  // namespace tdcut
