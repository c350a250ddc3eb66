#include "tdcut/gf2_poly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace tdcut {

namespace {

thread_local std::int64_t g_live = 0;
thread_local std::int64_t g_peak = 0;

inline void count_up() {
    if (++g_live > g_peak) g_peak = g_live;
}
inline void count_down() { --g_live; }

int field_width(std::uint32_t maximum) {
    return maximum == 0 ? 0 : std::bit_width(maximum) + 1;  // +1 guard bit
}

// Keeps keys whose run length is odd; both inputs to callers are sorted.
void cancel_pairs(std::vector<std::uint64_t>& keys) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        if ((j - i) & 1) keys[out++] = keys[i];
        i = j;
    }
    keys.resize(out);
}

}  // namespace

PolyBounds::PolyBounds(std::array<std::uint32_t, 4> maxima) : max_(maxima) {
    int bit = 0;
    for (int f = 3; f >= 0; --f) {  // marker field lowest, weight field highest
        int width = field_width(max_[f]);
        shift_[f] = bit;
        low_mask_[f] = width == 0 ? 0 : (std::uint64_t{1} << width) - 1;
        bit += width;
    }
    if (bit > 64) throw InvalidInput("tracker bounds need more than 64 packed bits");
}

PolyBounds PolyBounds::two_tracker(std::uint32_t w_max, std::uint32_t x_max) {
    return PolyBounds({w_max, x_max, 0, 0});
}

PolyBounds PolyBounds::four_tracker(std::uint32_t w_max, std::uint32_t x_max,
                                    std::uint32_t e_max, std::uint32_t m_max) {
    return PolyBounds({w_max, x_max, e_max, m_max});
}

std::uint64_t PolyBounds::pack(const ExponentVec& ev) const {
    const std::array<std::uint32_t, 4> vals{ev.w, ev.x, ev.e, ev.m};
    std::uint64_t key = 0;
    for (int f = 0; f < 4; ++f) {
        if (vals[f] > max_[f])
            throw ContractViolation("exponent " + std::to_string(vals[f]) +
                                    " exceeds tracker bound " + std::to_string(max_[f]));
        key |= std::uint64_t{vals[f]} << shift_[f];
    }
    return key;
}

ExponentVec PolyBounds::unpack(std::uint64_t key) const {
    ExponentVec ev;
    ev.w = static_cast<std::uint32_t>((key >> shift_[0]) & low_mask_[0]);
    ev.x = static_cast<std::uint32_t>((key >> shift_[1]) & low_mask_[1]);
    ev.e = static_cast<std::uint32_t>((key >> shift_[2]) & low_mask_[2]);
    ev.m = static_cast<std::uint32_t>((key >> shift_[3]) & low_mask_[3]);
    return ev;
}

bool PolyBounds::key_in_bounds(std::uint64_t key) const {
    for (int f = 0; f < 4; ++f)
        if (((key >> shift_[f]) & low_mask_[f]) > max_[f]) return false;
    return true;
}

TrackedPoly::TrackedPoly(const PolyBounds& bounds) : bounds_(bounds) { count_up(); }

TrackedPoly::TrackedPoly(const TrackedPoly& other)
    : bounds_(other.bounds_), keys_(other.keys_) {
    count_up();
}

TrackedPoly::TrackedPoly(TrackedPoly&& other) noexcept
    : bounds_(other.bounds_), keys_(std::move(other.keys_)) {
    count_up();  // the moved-from shell stays alive until its destructor runs
}

TrackedPoly& TrackedPoly::operator=(const TrackedPoly& other) {
    bounds_ = other.bounds_;
    keys_ = other.keys_;
    return *this;
}

TrackedPoly& TrackedPoly::operator=(TrackedPoly&& other) noexcept {
    bounds_ = other.bounds_;
    keys_ = std::move(other.keys_);
    return *this;
}

TrackedPoly::~TrackedPoly() { count_down(); }

void TrackedPoly::check_same_bounds(const TrackedPoly& other) const {
    if (!(bounds_ == other.bounds_))
        throw ContractViolation("polynomials with different tracker bounds");
}

void TrackedPoly::add_assign(const TrackedPoly& other) {
    check_same_bounds(other);
    std::vector<std::uint64_t> merged;
    merged.reserve(keys_.size() + other.keys_.size());
    std::size_t i = 0, j = 0;
    while (i < keys_.size() && j < other.keys_.size()) {
        if (keys_[i] < other.keys_[j])
            merged.push_back(keys_[i++]);
        else if (keys_[i] > other.keys_[j])
            merged.push_back(other.keys_[j++]);
        else {
            ++i;  // equal monomials cancel over GF(2)
            ++j;
        }
    }
    merged.insert(merged.end(), keys_.begin() + i, keys_.end());
    merged.insert(merged.end(), other.keys_.begin() + j, other.keys_.end());
    keys_.swap(merged);
}

void TrackedPoly::add_shifted(const TrackedPoly& other, const ExponentVec& shift) {
    check_same_bounds(other);
    const std::uint64_t delta = bounds_.pack(shift);
    std::vector<std::uint64_t> merged;
    merged.reserve(keys_.size() + other.keys_.size());
    std::size_t i = 0, j = 0;
    auto shifted = [&](std::size_t idx) {
        std::uint64_t key = other.keys_[idx] + delta;  // guard bits keep fields separate
        if (!bounds_.key_in_bounds(key))
            throw ContractViolation("monomial shift overflows a tracker bound");
        return key;
    };
    while (i < keys_.size() && j < other.keys_.size()) {
        std::uint64_t rhs = shifted(j);
        if (keys_[i] < rhs)
            merged.push_back(keys_[i++]);
        else if (keys_[i] > rhs)
            merged.push_back(rhs), ++j;
        else {
            ++i;
            ++j;
        }
    }
    merged.insert(merged.end(), keys_.begin() + i, keys_.end());
    while (j < other.keys_.size()) merged.push_back(shifted(j++));
    keys_.swap(merged);
}

void TrackedPoly::mul_assign(const TrackedPoly& other) {
    check_same_bounds(other);
    if (is_zero() || other.is_one()) return;
    if (other.is_zero()) {
        keys_.clear();
        return;
    }
    if (is_one()) {
        keys_ = other.keys_;
        return;
    }
    std::vector<std::uint64_t> out;
    out.reserve(keys_.size() * other.keys_.size());
    for (std::uint64_t a : keys_)
        for (std::uint64_t b : other.keys_) {
            std::uint64_t key = a + b;
            if (!bounds_.key_in_bounds(key))
                throw ContractViolation("product monomial overflows a tracker bound");
            out.push_back(key);
        }
    std::sort(out.begin(), out.end());
    cancel_pairs(out);
    keys_.swap(out);
}

void TrackedPoly::mul_monomial_assign(const ExponentVec& shift) {
    const std::uint64_t delta = bounds_.pack(shift);
    for (std::uint64_t& key : keys_) {
        key += delta;
        if (!bounds_.key_in_bounds(key))
            throw ContractViolation("monomial shift overflows a tracker bound");
    }
}

int TrackedPoly::coeff_at(const ExponentVec& at) const {
    if (at.w > bounds_.w_max() || at.x > bounds_.x_max() || at.e > bounds_.e_max() ||
        at.m > bounds_.m_max())
        return 0;
    return std::binary_search(keys_.begin(), keys_.end(), bounds_.pack(at)) ? 1 : 0;
}

std::string TrackedPoly::dump() const {
    std::ostringstream out;
    for (std::uint64_t key : keys_) {
        ExponentVec ev = bounds_.unpack(key);
        out << ev.w << ' ' << ev.x << ' ' << ev.e << ' ' << ev.m << '\n';
    }
    return out.str();
}

TrackedPoly TrackedPoly::one(const PolyBounds& bounds) {
    TrackedPoly p(bounds);
    p.keys_.push_back(0);  // the all-zero exponent tuple
    return p;
}

TrackedPoly poly_zero(const PolyBounds& bounds) { return TrackedPoly(bounds); }

TrackedPoly poly_one(const PolyBounds& bounds) { return TrackedPoly::one(bounds); }

TrackedPoly add(const TrackedPoly& p, const TrackedPoly& q) {
    TrackedPoly out = p;
    out.add_assign(q);
    return out;
}

TrackedPoly mul(const TrackedPoly& p, const TrackedPoly& q) {
    TrackedPoly out = p;
    out.mul_assign(q);
    return out;
}

TrackedPoly mul_monomial(const TrackedPoly& p, const ExponentVec& shift) {
    TrackedPoly out = p;
    out.mul_monomial_assign(shift);
    return out;
}

int coeff(const TrackedPoly& p, const ExponentVec& at) { return p.coeff_at(at); }

PolyCounters poly_counters() { return {g_live, g_peak}; }

void reset_poly_peak() { g_peak = g_live; }

}  // namespace tdcut
