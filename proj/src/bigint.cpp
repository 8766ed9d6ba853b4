#include "msmx/bigint.hpp"

#include <bit>
#include <stdexcept>

namespace msmx {

unsigned BigUint::bit_length() const {
    for (int i = kMaxLimbs - 1; i >= 0; --i) {
        if (w[i]) return unsigned(i) * kWordBits + (kWordBits - std::countl_zero(w[i]));
    }
    return 0;
}

unsigned BigUint::popcount() const {
    unsigned n = 0;
    for (auto x : w) n += unsigned(std::popcount(x));
    return n;
}

int cmp(const BigUint& a, const BigUint& b) {
    for (int i = kMaxLimbs - 1; i >= 0; --i) {
        if (a.w[i] != b.w[i]) return a.w[i] < b.w[i] ? -1 : 1;
    }
    return 0;
}

std::uint64_t add_full(BigUint& a, const BigUint& b) {
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < kMaxLimbs; ++i) {
        carry += a.w[i];
        carry += b.w[i];
        a.w[i] = std::uint64_t(carry);
        carry >>= 64;
    }
    return std::uint64_t(carry);
}

std::uint64_t sub_full(BigUint& a, const BigUint& b) {
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < kMaxLimbs; ++i) {
        std::uint64_t bi = b.w[i];
        std::uint64_t t = a.w[i] - bi;
        std::uint64_t b2 = t > a.w[i];
        std::uint64_t t2 = t - borrow;
        b2 |= t2 > t;
        a.w[i] = t2;
        borrow = b2;
    }
    return borrow;
}

std::uint64_t shl1_full(BigUint& a) {
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < kMaxLimbs; ++i) {
        std::uint64_t next = a.w[i] >> 63;
        a.w[i] = (a.w[i] << 1) | carry;
        carry = next;
    }
    return carry;
}

std::array<std::uint64_t, 2 * kMaxLimbs> mul_wide(const BigUint& a, const BigUint& b,
                                                  std::size_t limbs) {
    std::array<std::uint64_t, 2 * kMaxLimbs> out{};
    for (std::size_t i = 0; i < limbs; ++i) {
        unsigned __int128 carry = 0;
        std::uint64_t ai = a.w[i];
        for (std::size_t j = 0; j < limbs; ++j) {
            carry += out[i + j];
            carry += (unsigned __int128)ai * b.w[j];
            out[i + j] = std::uint64_t(carry);
            carry >>= 64;
        }
        out[i + limbs] = std::uint64_t(carry);
    }
    return out;
}

std::string to_hex(const BigUint& v, unsigned digits) {
    static const char* kDigits = "0123456789abcdef";
    std::string s(digits, '0');
    for (unsigned i = 0; i < digits; ++i) {
        unsigned nibble_index = i;  // from least significant
        std::uint64_t word = v.w[nibble_index / 16];
        unsigned nib = unsigned(word >> (4 * (nibble_index % 16))) & 0xf;
        s[digits - 1 - i] = kDigits[nib];
    }
    return s;
}

BigUint from_hex(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty hex string");
    if (s.size() > 2 * kMaxLimbs * 8)
        throw std::invalid_argument("hex value too wide: " + s);
    BigUint v;
    for (char c : s) {
        unsigned nib;
        if (c >= '0' && c <= '9')
            nib = unsigned(c - '0');
        else if (c >= 'a' && c <= 'f')
            nib = unsigned(c - 'a') + 10;
        else if (c >= 'A' && c <= 'F')
            nib = unsigned(c - 'A') + 10;
        else
            throw std::invalid_argument(std::string("bad hex character '") + c + "'");
        // v = v*16 + nib
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < kMaxLimbs; ++i) {
            std::uint64_t next = v.w[i] >> 60;
            v.w[i] = (v.w[i] << 4) | carry;
            carry = next;
        }
        if (carry) throw std::invalid_argument("hex value overflows capacity: " + s);
        v.w[0] |= nib;
    }
    return v;
}

}  // namespace msmx
