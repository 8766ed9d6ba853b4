#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "msmx/bigint.hpp"

namespace msmx {

enum class Domain : std::uint8_t { standard, montgomery };
enum class MulBackend : std::uint8_t { montgomery, standard };

/// Range class of a field element: reduced values live in [0,p), lazy values
/// in [0,2p). Additive operations keep results lazy; multiplications always
/// return reduced values.
enum class Range : std::uint8_t { reduced, lazy };

/// Field element: little-endian limbs plus domain/range tags. The tags travel
/// with the value so contract violations (mixing domains) can be reported;
/// range assertions are debug-only.
struct Fp {
    BigUint v;
    Domain domain = Domain::standard;
    Range range = Range::reduced;

    bool is_zero_raw() const { return v.is_zero(); }
};

/// Constant-modulus field description with precomputed reduction data for
/// both multiplication backends. Immutable after construction; safe to share
/// across threads.
class FieldParams {
  public:
    /// Builds parameters for an odd prime p. Runs a Miller-Rabin primality
    /// check and verifies the Montgomery constants once, here, so per-op code
    /// can assume they hold.
    static FieldParams make(const BigUint& p, unsigned bit_width);

    const BigUint& modulus() const { return p_; }
    const BigUint& two_p() const { return two_p_; }
    unsigned bit_width() const { return bit_width_; }
    std::size_t limb_count() const { return limbs_; }
    unsigned hex_digits() const { return (bit_width_ + 3) / 4; }

    const BigUint& montgomery_r() const { return r_mod_p_; }
    const BigUint& montgomery_r2() const { return r2_mod_p_; }
    std::uint64_t montgomery_pinv() const { return pinv_; }

    // --- element constructors ---
    Fp zero(Domain d = Domain::standard) const;
    Fp one(Domain d = Domain::standard) const;
    /// Standard-domain element from an integer already in [0,p).
    Fp from_uint(const BigUint& v) const;
    Fp from_u64(std::uint64_t v) const { return from_uint(BigUint::from_u64(v)); }

    std::string to_hex_string(const Fp& a) const;
    Fp from_hex_string(const std::string& s) const;

    friend Fp fp_mul(const Fp&, const Fp&, const FieldParams&, MulBackend);
    friend Fp domain_convert(const Fp&, const FieldParams&, Domain);
    friend Fp fp_add(const Fp&, const Fp&, const FieldParams&, bool);
    friend Fp fp_sub(const Fp&, const Fp&, const FieldParams&, bool);
    friend Fp fp_shl1(const Fp&, const FieldParams&, bool);
    friend Fp fp_full_reduce(const Fp&, const FieldParams&);
    friend Fp fp_inv(const Fp&, const FieldParams&);

  private:
    BigUint mont_mul(const BigUint& a, const BigUint& b) const;
    BigUint std_mul(const BigUint& a, const BigUint& b) const;
    BigUint table_reduce(const std::uint64_t* bytes_src, unsigned n_bytes) const;

    BigUint p_;
    BigUint two_p_;
    unsigned bit_width_ = 0;
    std::size_t limbs_ = 0;

    BigUint r_mod_p_;
    BigUint r2_mod_p_;
    std::uint64_t pinv_ = 0;

    // Standard-backend reduction: residues byte * 2^(8*(base_byte_+i)) mod p.
    // Chunk width is 8 bits; tables cover every product byte at or above the
    // split point 8*base_byte_ <= bit_width.
    unsigned base_byte_ = 0;
    std::vector<std::array<BigUint, 256>> reduction_tables_;
};

// --- operations (pure; see FieldParams for thread-safety) ---

/// a+b with lazy output in [0,2p); set full to land in [0,p).
Fp fp_add(const Fp& a, const Fp& b, const FieldParams& f, bool full = false);
/// a-b mod p, lazy output in [0,2p) (computed as a + (2p-b)).
Fp fp_sub(const Fp& a, const Fp& b, const FieldParams& f, bool full = false);
/// 2a with lazy output.
Fp fp_shl1(const Fp& a, const FieldParams& f, bool full = false);
/// Fully reduced product in [0,p); inputs may be lazy. The montgomery backend
/// computes a*b*R^-1 mod p, the standard backend reduces the double-width
/// product through the byte tables.
Fp fp_mul(const Fp& a, const Fp& b, const FieldParams& f,
          MulBackend backend = MulBackend::montgomery);
/// Modular inverse of a nonzero reduced element (Fermat exponentiation).
Fp fp_inv(const Fp& a, const FieldParams& f);
/// Converts between standard and montgomery representations; round-trip is
/// the identity. Input must be reduced.
Fp domain_convert(const Fp& a, const FieldParams& f, Domain to);
/// Canonical representative in [0,p).
Fp fp_full_reduce(const Fp& a, const FieldParams& f);
/// Equality of field elements (canonicalizes lazy ranges first).
bool fp_equal(const Fp& a, const Fp& b, const FieldParams& f);

}  // namespace msmx
