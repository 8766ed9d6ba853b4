#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

namespace msmx {

// Widest supported field is 381 bits; 6 x 64-bit limbs also leave headroom
// for lazy-range values in [0, 2p).
inline constexpr std::size_t kMaxLimbs = 6;
inline constexpr unsigned kWordBits = 64;

/// Fixed-capacity little-endian unsigned integer. The active width is decided
/// by the code operating on it (field params carry the limb count); helpers
/// here work on the full 6-limb value.
struct BigUint {
    std::array<std::uint64_t, kMaxLimbs> w{};

    static BigUint from_u64(std::uint64_t v) {
        BigUint r;
        r.w[0] = v;
        return r;
    }

    bool is_zero() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }

    bool bit(unsigned i) const {
        return (w[i / kWordBits] >> (i % kWordBits)) & 1;
    }

    void set_bit(unsigned i) { w[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits); }

    unsigned bit_length() const;
    unsigned popcount() const;

    std::uint64_t byte(unsigned i) const {
        return (w[i / 8] >> (8 * (i % 8))) & 0xff;
    }

    friend bool operator==(const BigUint&, const BigUint&) = default;
};

int cmp(const BigUint& a, const BigUint& b);

// Full-width arithmetic used by field code and tests. add/sub return the
// carry/borrow out of the top limb.
std::uint64_t add_full(BigUint& a, const BigUint& b);
std::uint64_t sub_full(BigUint& a, const BigUint& b);
std::uint64_t shl1_full(BigUint& a);

/// a * b -> 12-limb product (schoolbook).
std::array<std::uint64_t, 2 * kMaxLimbs> mul_wide(const BigUint& a, const BigUint& b,
                                                  std::size_t limbs);

/// Big-endian lowercase hex, zero-padded to `digits` characters.
std::string to_hex(const BigUint& v, unsigned digits);

/// Parses big-endian hex (no prefix). Throws std::invalid_argument on junk or
/// values wider than kMaxLimbs words.
BigUint from_hex(const std::string& s);

}  // namespace msmx
