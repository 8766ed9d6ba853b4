#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "msmx/field.hpp"

namespace msmx {

/// Counts of field and point operations accumulated during a computation.
/// Point counters track invocations (cheap degenerate cases included); the
/// mod_* counters track field operations actually performed. Caller-owned:
/// parallel workers keep independent counters and merge them afterwards.
struct OpCounters {
    std::uint64_t mod_muls = 0;
    std::uint64_t mod_sqrs = 0;
    std::uint64_t mod_adds = 0;
    std::uint64_t point_adds = 0;
    std::uint64_t point_doubles = 0;
    std::uint64_t uda_ops = 0;

    std::uint64_t field_muls() const { return mod_muls + mod_sqrs; }
    std::uint64_t point_ops() const { return point_adds + point_doubles + uda_ops; }
    /// Uniform accounting mode: every point operation charged 16 modular
    /// multiplications, the convention behind worst-case MSM cost estimates.
    std::uint64_t charged_mod_muls() const { return 16 * point_ops(); }

    OpCounters& operator+=(const OpCounters& o) {
        mod_muls += o.mod_muls;
        mod_sqrs += o.mod_sqrs;
        mod_adds += o.mod_adds;
        point_adds += o.point_adds;
        point_doubles += o.point_doubles;
        uda_ops += o.uda_ops;
        return *this;
    }
};

struct AffinePoint {
    Fp x, y;
    bool is_infinity = false;
};

/// Jacobian coordinates: (X/Z^2, Y/Z^3); Z = 0 encodes the point at infinity.
struct JacobianPoint {
    Fp X, Y, Z;
};

/// Short-Weierstrass curve y^2 = x^3 + ax + b over a prime field, together
/// with the scalar width used for accounting and the multiplication backend
/// the group law runs on.
class CurveParams {
  public:
    CurveParams(std::string name, FieldParams field, const BigUint& a, const BigUint& b,
                unsigned scalar_bit_width, const BigUint& group_order,
                const BigUint& gen_x, const BigUint& gen_y,
                MulBackend backend = MulBackend::montgomery);

    const std::string& name() const { return name_; }
    const FieldParams& field() const { return *field_; }
    unsigned scalar_bits() const { return scalar_bits_; }
    const BigUint& group_order() const { return order_; }
    const AffinePoint& generator() const { return generator_; }
    MulBackend backend() const { return backend_; }
    Domain work_domain() const {
        return backend_ == MulBackend::montgomery ? Domain::montgomery : Domain::standard;
    }
    const Fp& a_coeff() const { return a_; }
    const Fp& b_coeff() const { return b_; }
    bool a_is_zero() const { return a_zero_; }

    JacobianPoint infinity() const;
    JacobianPoint to_jacobian(const AffinePoint& p) const;
    /// Brings a point into the curve's working domain (montgomery or standard).
    AffinePoint to_work_domain(const AffinePoint& p) const;

  private:
    std::string name_;
    std::shared_ptr<const FieldParams> field_;
    Fp a_, b_;
    bool a_zero_ = false;
    unsigned scalar_bits_;
    BigUint order_;
    AffinePoint generator_;
    MulBackend backend_;
};

bool is_infinity(const JacobianPoint& p, const CurveParams& c);
bool is_on_curve(const AffinePoint& p, const CurveParams& c);
bool is_on_curve(const JacobianPoint& p, const CurveParams& c);

/// Full Jacobian addition (11M + 5S = 16 field multiplications in the generic
/// case). Requires P != Q as group elements; throws std::domain_error on
/// equal inputs. P + (-P) and infinity operands are handled.
JacobianPoint point_add(const JacobianPoint& p, const JacobianPoint& q,
                        const CurveParams& c, OpCounters& ctr);

/// Jacobian doubling (1M + 8S = 9 field multiplications for a = 0; curves
/// with a != 0 pay one extra multiplication). 2O = O; doubling a point with
/// y = 0 yields O.
JacobianPoint point_double(const JacobianPoint& p, const CurveParams& c, OpCounters& ctr);

/// Single-call group addition handling every case: infinity operands, P = Q
/// (doubles), P = -Q (infinity), generic addition. The case split uses the
/// division-free Jacobian test X1*Z2^2 == X2*Z1^2, Y1*Z2^3 == Y2*Z1^3, whose
/// products are shared with the addition path; no path exceeds 18 field
/// multiplications.
JacobianPoint unified_double_add(const JacobianPoint& p, const JacobianPoint& q,
                                 const CurveParams& c, OpCounters& ctr);

JacobianPoint point_negate(const JacobianPoint& p, const CurveParams& c);
AffinePoint point_negate(const AffinePoint& p, const CurveParams& c);

AffinePoint to_affine(const JacobianPoint& p, const CurveParams& c);

bool point_equal(const JacobianPoint& p, const JacobianPoint& q, const CurveParams& c);
bool point_equal(const AffinePoint& p, const AffinePoint& q, const CurveParams& c);

/// MSB-first double-and-add over the full scalar width: one double per bit,
/// one add per set bit.
JacobianPoint scalar_mul_double_and_add(const BigUint& s, const JacobianPoint& p,
                                        const CurveParams& c, OpCounters& ctr);

}  // namespace msmx
