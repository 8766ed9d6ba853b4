#include "msmx/field.hpp"

#include <cassert>
#include <stdexcept>

namespace msmx {

namespace {

// p odd -> -p^-1 mod 2^64 by Newton iteration.
std::uint64_t neg_inv64(std::uint64_t p0) {
    std::uint64_t x = p0;  // correct mod 2^3
    for (int i = 0; i < 5; ++i) x *= 2 - p0 * x;
    return ~x + 1;
}

void cond_sub(BigUint& a, const BigUint& m) {
    if (cmp(a, m) >= 0) sub_full(a, m);
}

}  // namespace

BigUint FieldParams::mont_mul(const BigUint& a, const BigUint& b) const {
    const std::size_t s = limbs_;
    std::uint64_t t[kMaxLimbs + 2] = {0};
    for (std::size_t i = 0; i < s; ++i) {
        unsigned __int128 c = 0;
        std::uint64_t bi = b.w[i];
        for (std::size_t j = 0; j < s; ++j) {
            c += t[j];
            c += (unsigned __int128)a.w[j] * bi;
            t[j] = std::uint64_t(c);
            c >>= 64;
        }
        c += t[s];
        t[s] = std::uint64_t(c);
        t[s + 1] = std::uint64_t(c >> 64);

        std::uint64_t m = t[0] * pinv_;
        c = t[0];
        c += (unsigned __int128)m * p_.w[0];
        c >>= 64;
        for (std::size_t j = 1; j < s; ++j) {
            c += t[j];
            c += (unsigned __int128)m * p_.w[j];
            t[j - 1] = std::uint64_t(c);
            c >>= 64;
        }
        c += t[s];
        t[s - 1] = std::uint64_t(c);
        t[s] = t[s + 1] + std::uint64_t(c >> 64);
    }
    // Inputs may be lazy (< 2p); with 4p < 2^(64*limbs) the accumulator ends
    // below 2p, so a single conditional subtraction suffices.
    assert(t[s] == 0);
    BigUint r;
    for (std::size_t j = 0; j < s; ++j) r.w[j] = t[j];
    cond_sub(r, p_);
    return r;
}

BigUint FieldParams::table_reduce(const std::uint64_t* prod, unsigned n_words) const {
    // Value = (low 8*base_byte_ bits) + sum over higher bytes of their table
    // residues. Running conditional subtraction keeps the accumulator < 2p.
    BigUint acc;
    unsigned full_words = base_byte_ / 8;
    for (unsigned i = 0; i < full_words && i < n_words; ++i) acc.w[i] = prod[i];
    unsigned rem_bytes = base_byte_ % 8;
    if (rem_bytes && full_words < n_words) {
        std::uint64_t mask = (std::uint64_t{1} << (8 * rem_bytes)) - 1;
        acc.w[full_words] = prod[full_words] & mask;
    }
    const unsigned total_bytes = n_words * 8;
    for (unsigned byte_pos = base_byte_; byte_pos < total_bytes; ++byte_pos) {
        unsigned b = unsigned((prod[byte_pos / 8] >> (8 * (byte_pos % 8))) & 0xff);
        if (!b) continue;
        add_full(acc, reduction_tables_[byte_pos - base_byte_][b]);
        cond_sub(acc, two_p_);
    }
    cond_sub(acc, p_);
    return acc;
}

BigUint FieldParams::std_mul(const BigUint& a, const BigUint& b) const {
    auto prod = mul_wide(a, b, limbs_);
    return table_reduce(prod.data(), unsigned(2 * limbs_));
}

namespace {

// Montgomery-domain exponentiation; base_m is in montgomery form, exponent a
// plain integer. Used for inversions and the primality check.
BigUint pow_mont(const FieldParams& f, const BigUint& base_m, const BigUint& exp) {
    Fp acc = f.one(Domain::montgomery);
    BigUint r = acc.v;
    unsigned top = exp.bit_length();
    BigUint x = base_m;
    for (int i = int(top) - 1; i >= 0; --i) {
        Fp rr{r, Domain::montgomery, Range::reduced};
        Fp rx{x, Domain::montgomery, Range::reduced};
        r = fp_mul(rr, rr, f, MulBackend::montgomery).v;
        if (exp.bit(unsigned(i))) {
            Fp r2{r, Domain::montgomery, Range::reduced};
            r = fp_mul(r2, rx, f, MulBackend::montgomery).v;
        }
    }
    return r;
}

bool miller_rabin(const FieldParams& f) {
    const BigUint& p = f.modulus();
    BigUint one = BigUint::from_u64(1);
    BigUint p_minus_1 = p;
    sub_full(p_minus_1, one);

    // p-1 = d * 2^s
    BigUint d = p_minus_1;
    unsigned s = 0;
    while (!d.bit(0)) {
        for (std::size_t i = 0; i + 1 < kMaxLimbs; ++i)
            d.w[i] = (d.w[i] >> 1) | (d.w[i + 1] << 63);
        d.w[kMaxLimbs - 1] >>= 1;
        ++s;
    }

    static const std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t base : kBases) {
        BigUint b = BigUint::from_u64(base);
        if (cmp(b, p_minus_1) >= 0) continue;
        BigUint bm = domain_convert(f.from_uint(b), f, Domain::montgomery).v;
        BigUint x = pow_mont(f, bm, d);
        BigUint x_std = domain_convert(Fp{x, Domain::montgomery, Range::reduced}, f,
                                       Domain::standard)
                            .v;
        if (cmp(x_std, one) == 0 || cmp(x_std, p_minus_1) == 0) continue;
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            Fp xx{x, Domain::montgomery, Range::reduced};
            x = fp_mul(xx, xx, f, MulBackend::montgomery).v;
            x_std = domain_convert(Fp{x, Domain::montgomery, Range::reduced}, f,
                                   Domain::standard)
                        .v;
            if (cmp(x_std, p_minus_1) == 0) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace

FieldParams FieldParams::make(const BigUint& p, unsigned bit_width) {
    FieldParams f;
    f.p_ = p;
    f.bit_width_ = bit_width;
    if (p.bit_length() != bit_width)
        throw std::invalid_argument("modulus bit length does not match declared width");
    if (!p.bit(0)) throw std::invalid_argument("modulus must be odd");
    f.limbs_ = (bit_width + kWordBits - 1) / kWordBits;
    f.two_p_ = p;
    if (shl1_full(f.two_p_)) throw std::invalid_argument("modulus too wide for lazy range");

    f.pinv_ = neg_inv64(p.w[0]);

    // R mod p and R^2 mod p by repeated doubling (R = 2^(64*limbs)).
    BigUint t = BigUint::from_u64(1);
    cond_sub(t, f.p_);
    const unsigned rbits = unsigned(f.limbs_) * kWordBits;
    for (unsigned i = 0; i < rbits; ++i) {
        shl1_full(t);
        cond_sub(t, f.p_);
    }
    f.r_mod_p_ = t;
    for (unsigned i = 0; i < rbits; ++i) {
        shl1_full(t);
        cond_sub(t, f.p_);
    }
    f.r2_mod_p_ = t;

    // Standard-backend byte tables.
    f.base_byte_ = bit_width / 8;
    unsigned positions = unsigned(16 * f.limbs_) - f.base_byte_;
    f.reduction_tables_.resize(positions);
    BigUint pw = BigUint::from_u64(1);
    for (unsigned i = 0; i < 8 * f.base_byte_; ++i) {
        shl1_full(pw);
        cond_sub(pw, f.p_);
    }
    for (unsigned pos = 0; pos < positions; ++pos) {
        auto& tab = f.reduction_tables_[pos];
        tab[0] = BigUint{};
        for (unsigned b = 1; b < 256; ++b) {
            tab[b] = tab[b - 1];
            add_full(tab[b], pw);
            cond_sub(tab[b], f.p_);
        }
        for (unsigned i = 0; i < 8; ++i) {
            shl1_full(pw);
            cond_sub(pw, f.p_);
        }
    }

    // Constant consistency: mont_mul(R, 1) == 1 and mont_mul(R2, 1) == R.
    BigUint one = BigUint::from_u64(1);
    if (cmp(f.mont_mul(f.r_mod_p_, one), one) != 0 ||
        cmp(f.mont_mul(f.r2_mod_p_, one), f.r_mod_p_) != 0)
        throw std::logic_error("montgomery constant self-check failed");

    if (!miller_rabin(f)) throw std::invalid_argument("modulus is not prime");
    return f;
}

Fp FieldParams::zero(Domain d) const { return Fp{BigUint{}, d, Range::reduced}; }

Fp FieldParams::one(Domain d) const {
    if (d == Domain::montgomery) return Fp{r_mod_p_, d, Range::reduced};
    return Fp{BigUint::from_u64(1), d, Range::reduced};
}

Fp FieldParams::from_uint(const BigUint& v) const {
    if (cmp(v, p_) >= 0) throw std::invalid_argument("field element out of range");
    return Fp{v, Domain::standard, Range::reduced};
}

std::string FieldParams::to_hex_string(const Fp& a) const {
    Fp c = fp_full_reduce(a, *this);
    if (c.domain == Domain::montgomery) c = domain_convert(c, *this, Domain::standard);
    return to_hex(c.v, hex_digits());
}

Fp FieldParams::from_hex_string(const std::string& s) const {
    return from_uint(from_hex(s));
}

static void check_same_domain(const Fp& a, const Fp& b) {
    if (a.domain != b.domain)
        throw std::invalid_argument("field operands are in different domains");
}

Fp fp_add(const Fp& a, const Fp& b, const FieldParams& f, bool full) {
    check_same_domain(a, b);
    assert(cmp(a.v, f.two_p()) < 0 && cmp(b.v, f.two_p()) < 0);
    Fp r{a.v, a.domain, Range::lazy};
    add_full(r.v, b.v);
    cond_sub(r.v, f.two_p_);
    if (full) return fp_full_reduce(r, f);
    return r;
}

Fp fp_sub(const Fp& a, const Fp& b, const FieldParams& f, bool full) {
    check_same_domain(a, b);
    assert(cmp(a.v, f.two_p()) < 0 && cmp(b.v, f.two_p()) < 0);
    Fp r{f.two_p_, a.domain, Range::lazy};
    sub_full(r.v, b.v);
    add_full(r.v, a.v);
    cond_sub(r.v, f.two_p_);
    if (full) return fp_full_reduce(r, f);
    return r;
}

Fp fp_shl1(const Fp& a, const FieldParams& f, bool full) {
    assert(cmp(a.v, f.two_p()) < 0);
    Fp r{a.v, a.domain, Range::lazy};
    shl1_full(r.v);
    cond_sub(r.v, f.two_p_);
    if (full) return fp_full_reduce(r, f);
    return r;
}

Fp fp_full_reduce(const Fp& a, const FieldParams& f) {
    Fp r = a;
    cond_sub(r.v, f.p_);
    r.range = Range::reduced;
    return r;
}

Fp fp_mul(const Fp& a, const Fp& b, const FieldParams& f, MulBackend backend) {
    check_same_domain(a, b);
    if (backend == MulBackend::montgomery) {
        if (a.domain != Domain::montgomery)
            throw std::invalid_argument("montgomery backend requires montgomery operands");
        return Fp{f.mont_mul(a.v, b.v), Domain::montgomery, Range::reduced};
    }
    if (a.domain != Domain::standard)
        throw std::invalid_argument("standard backend requires standard operands");
    return Fp{f.std_mul(a.v, b.v), Domain::standard, Range::reduced};
}

Fp fp_inv(const Fp& a, const FieldParams& f) {
    Fp c = fp_full_reduce(a, f);
    if (c.v.is_zero()) throw std::invalid_argument("inverse of zero");
    BigUint xm = c.domain == Domain::montgomery
                     ? c.v
                     : domain_convert(c, f, Domain::montgomery).v;
    BigUint exp = f.modulus();
    BigUint two = BigUint::from_u64(2);
    sub_full(exp, two);
    BigUint inv_m = pow_mont(f, xm, exp);
    Fp r{inv_m, Domain::montgomery, Range::reduced};
    if (a.domain == Domain::standard) r = domain_convert(r, f, Domain::standard);
    return r;
}

Fp domain_convert(const Fp& a, const FieldParams& f, Domain to) {
    Fp c = fp_full_reduce(a, f);
    if (c.domain == to) return c;
    if (to == Domain::montgomery)
        return Fp{f.mont_mul(c.v, f.r2_mod_p_), Domain::montgomery, Range::reduced};
    BigUint one = BigUint::from_u64(1);
    return Fp{f.mont_mul(c.v, one), Domain::standard, Range::reduced};
}

bool fp_equal(const Fp& a, const Fp& b, const FieldParams& f) {
    check_same_domain(a, b);
    Fp ca = fp_full_reduce(a, f);
    Fp cb = fp_full_reduce(b, f);
    return cmp(ca.v, cb.v) == 0;
}

}  // namespace msmx
