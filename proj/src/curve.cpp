#include "msmx/curve.hpp"

#include <stdexcept>

namespace msmx {

namespace {

// Counted field helpers; the group-law formulas below are written in terms of
// these so the counters reflect exactly what was computed.
struct FieldCtx {
    const FieldParams& f;
    MulBackend backend;
    OpCounters& ctr;

    Fp mul(const Fp& a, const Fp& b) {
        ++ctr.mod_muls;
        return fp_mul(a, b, f, backend);
    }
    Fp sqr(const Fp& a) {
        ++ctr.mod_sqrs;
        return fp_mul(a, a, f, backend);
    }
    Fp add(const Fp& a, const Fp& b) {
        ++ctr.mod_adds;
        return fp_add(a, b, f);
    }
    Fp sub(const Fp& a, const Fp& b) {
        ++ctr.mod_adds;
        return fp_sub(a, b, f);
    }
    Fp dbl(const Fp& a) {
        ++ctr.mod_adds;
        return fp_shl1(a, f);
    }
    bool eq(const Fp& a, const Fp& b) { return fp_equal(a, b, f); }
    bool is_zero(const Fp& a) { return fp_full_reduce(a, f).v.is_zero(); }
};

// Tail of the addition formula once U1/U2/S1/S2 are known (3S + 5M).
JacobianPoint add_tail(FieldCtx& fx, const JacobianPoint& p, const JacobianPoint& q,
                       const Fp& z1z1, const Fp& z2z2, const Fp& u1, const Fp& u2,
                       const Fp& s1, const Fp& s2) {
    Fp h = fx.sub(u2, u1);
    Fp i = fx.sqr(fx.dbl(h));
    Fp j = fx.mul(h, i);
    Fp r = fx.dbl(fx.sub(s2, s1));
    Fp v = fx.mul(u1, i);
    Fp x3 = fx.sub(fx.sub(fx.sqr(r), j), fx.dbl(v));
    Fp y3 = fx.sub(fx.mul(r, fx.sub(v, x3)), fx.dbl(fx.mul(s1, j)));
    Fp z3 = fx.mul(fx.sub(fx.sub(fx.sqr(fx.add(p.Z, q.Z)), z1z1), z2z2), h);
    return JacobianPoint{x3, y3, z3};
}

// Doubling tail; z1z1 is reused from the caller when available. Squares the
// a-coefficient operand unconditionally so the generic cost is fixed at
// 1M + 8S regardless of the curve constant (a != 0 adds the one extra
// multiplication by a).
JacobianPoint double_tail(FieldCtx& fx, const CurveParams& c, const JacobianPoint& p,
                          const Fp& z1z1) {
    Fp xx = fx.sqr(p.X);
    Fp yy = fx.sqr(p.Y);
    Fp yyyy = fx.sqr(yy);
    Fp s = fx.dbl(fx.sub(fx.sub(fx.sqr(fx.add(p.X, yy)), xx), yyyy));
    Fp zzzz = fx.sqr(z1z1);
    Fp m = fx.add(fx.dbl(xx), xx);
    if (!c.a_is_zero()) m = fx.add(m, fx.mul(c.a_coeff(), zzzz));
    Fp t = fx.sub(fx.sqr(m), fx.dbl(s));
    Fp y3 = fx.sub(fx.mul(m, fx.sub(s, t)), fx.dbl(fx.dbl(fx.dbl(yyyy))));
    Fp z3 = fx.sub(fx.sub(fx.sqr(fx.add(p.Y, p.Z)), yy), z1z1);
    if (fx.is_zero(z3)) return c.infinity();  // tangent vertical: y = 0
    return JacobianPoint{t, y3, z3};
}

}  // namespace

CurveParams::CurveParams(std::string name, FieldParams field, const BigUint& a,
                         const BigUint& b, unsigned scalar_bit_width,
                         const BigUint& group_order, const BigUint& gen_x,
                         const BigUint& gen_y, MulBackend backend)
    : name_(std::move(name)),
      field_(std::make_shared<FieldParams>(std::move(field))),
      scalar_bits_(scalar_bit_width),
      order_(group_order),
      backend_(backend) {
    const FieldParams& f = *field_;
    Domain d = work_domain();
    a_ = domain_convert(f.from_uint(a), f, d);
    b_ = domain_convert(f.from_uint(b), f, d);
    a_zero_ = a.is_zero();
    generator_ = AffinePoint{domain_convert(f.from_uint(gen_x), f, d),
                             domain_convert(f.from_uint(gen_y), f, d), false};

    if (!is_on_curve(generator_, *this))
        throw std::invalid_argument("generator is not on the curve");
    // Non-singularity: 4a^3 + 27b^2 != 0.
    Fp a3 = fp_mul(fp_mul(a_, a_, f, backend_), a_, f, backend_);
    Fp b2 = fp_mul(b_, b_, f, backend_);
    Fp four_a3 = fp_shl1(fp_shl1(a3, f), f);
    Fp t = b2;
    for (int i = 0; i < 26; ++i) t = fp_add(t, b2, f);
    if (fp_full_reduce(fp_add(four_a3, t, f), f).v.is_zero())
        throw std::invalid_argument("curve is singular");
}

JacobianPoint CurveParams::infinity() const {
    Domain d = work_domain();
    return JacobianPoint{field_->one(d), field_->one(d), field_->zero(d)};
}

JacobianPoint CurveParams::to_jacobian(const AffinePoint& p) const {
    if (p.is_infinity) return infinity();
    return JacobianPoint{p.x, p.y, field_->one(p.x.domain)};
}

AffinePoint CurveParams::to_work_domain(const AffinePoint& p) const {
    if (p.is_infinity) return p;
    AffinePoint r = p;
    r.x = domain_convert(r.x, *field_, work_domain());
    r.y = domain_convert(r.y, *field_, work_domain());
    return r;
}

bool is_infinity(const JacobianPoint& p, const CurveParams& c) {
    return fp_full_reduce(p.Z, c.field()).v.is_zero();
}

bool is_on_curve(const AffinePoint& p, const CurveParams& c) {
    if (p.is_infinity) return true;
    const FieldParams& f = c.field();
    MulBackend bk = p.x.domain == Domain::montgomery ? MulBackend::montgomery
                                                     : MulBackend::standard;
    Fp a = domain_convert(c.a_coeff(), f, p.x.domain);
    Fp b = domain_convert(c.b_coeff(), f, p.x.domain);
    Fp lhs = fp_mul(p.y, p.y, f, bk);
    Fp rhs = fp_add(fp_mul(fp_mul(p.x, p.x, f, bk), p.x, f, bk),
                    fp_add(fp_mul(a, p.x, f, bk), b, f), f);
    return fp_equal(lhs, rhs, f);
}

bool is_on_curve(const JacobianPoint& p, const CurveParams& c) {
    const FieldParams& f = c.field();
    Fp z = fp_full_reduce(p.Z, f);
    if (z.v.is_zero()) return true;
    MulBackend bk = p.X.domain == Domain::montgomery ? MulBackend::montgomery
                                                     : MulBackend::standard;
    Fp a = domain_convert(c.a_coeff(), f, p.X.domain);
    Fp b = domain_convert(c.b_coeff(), f, p.X.domain);
    // Y^2 = X^3 + a X Z^4 + b Z^6
    Fp z2 = fp_mul(z, z, f, bk);
    Fp z4 = fp_mul(z2, z2, f, bk);
    Fp z6 = fp_mul(z4, z2, f, bk);
    Fp lhs = fp_mul(p.Y, p.Y, f, bk);
    Fp rhs = fp_add(fp_mul(fp_mul(p.X, p.X, f, bk), p.X, f, bk),
                    fp_add(fp_mul(fp_mul(a, p.X, f, bk), z4, f, bk),
                           fp_mul(b, z6, f, bk), f),
                    f);
    return fp_equal(lhs, rhs, f);
}

JacobianPoint point_add(const JacobianPoint& p, const JacobianPoint& q,
                        const CurveParams& c, OpCounters& ctr) {
    ++ctr.point_adds;
    const FieldParams& f = c.field();
    if (fp_full_reduce(p.Z, f).v.is_zero()) return q;
    if (fp_full_reduce(q.Z, f).v.is_zero()) return p;

    FieldCtx fx{f, c.backend(), ctr};
    Fp z1z1 = fx.sqr(p.Z);
    Fp z2z2 = fx.sqr(q.Z);
    Fp u1 = fx.mul(p.X, z2z2);
    Fp u2 = fx.mul(q.X, z1z1);
    Fp s1 = fx.mul(p.Y, fx.mul(q.Z, z2z2));
    Fp s2 = fx.mul(q.Y, fx.mul(p.Z, z1z1));
    if (fx.eq(u1, u2)) {
        if (fx.eq(s1, s2)) throw std::domain_error("point_add: equal inputs");
        return c.infinity();
    }
    return add_tail(fx, p, q, z1z1, z2z2, u1, u2, s1, s2);
}

JacobianPoint point_double(const JacobianPoint& p, const CurveParams& c, OpCounters& ctr) {
    ++ctr.point_doubles;
    const FieldParams& f = c.field();
    if (fp_full_reduce(p.Z, f).v.is_zero()) return c.infinity();
    FieldCtx fx{f, c.backend(), ctr};
    Fp z1z1 = fx.sqr(p.Z);
    return double_tail(fx, c, p, z1z1);
}

JacobianPoint unified_double_add(const JacobianPoint& p, const JacobianPoint& q,
                                 const CurveParams& c, OpCounters& ctr) {
    ++ctr.uda_ops;
    const FieldParams& f = c.field();
    if (fp_full_reduce(p.Z, f).v.is_zero()) return q;
    if (fp_full_reduce(q.Z, f).v.is_zero()) return p;

    FieldCtx fx{f, c.backend(), ctr};
    Fp z1z1 = fx.sqr(p.Z);
    Fp z2z2 = fx.sqr(q.Z);
    Fp u1 = fx.mul(p.X, z2z2);
    Fp u2 = fx.mul(q.X, z1z1);
    Fp s1 = fx.mul(p.Y, fx.mul(q.Z, z2z2));
    Fp s2 = fx.mul(q.Y, fx.mul(p.Z, z1z1));
    if (fx.eq(u1, u2)) {
        if (!fx.eq(s1, s2)) return c.infinity();  // P = -Q
        return double_tail(fx, c, p, z1z1);       // P = Q (covers y = 0 -> O)
    }
    return add_tail(fx, p, q, z1z1, z2z2, u1, u2, s1, s2);
}

JacobianPoint point_negate(const JacobianPoint& p, const CurveParams& c) {
    const FieldParams& f = c.field();
    JacobianPoint r = p;
    r.Y = fp_sub(f.zero(p.Y.domain), p.Y, f, true);
    return r;
}

AffinePoint point_negate(const AffinePoint& p, const CurveParams& c) {
    if (p.is_infinity) return p;
    const FieldParams& f = c.field();
    AffinePoint r = p;
    r.y = fp_sub(f.zero(p.y.domain), p.y, f, true);
    return r;
}

AffinePoint to_affine(const JacobianPoint& p, const CurveParams& c) {
    const FieldParams& f = c.field();
    Fp z = fp_full_reduce(p.Z, f);
    if (z.v.is_zero()) {
        Domain d = p.X.domain;
        return AffinePoint{f.zero(d), f.zero(d), true};
    }
    MulBackend bk = p.X.domain == Domain::montgomery ? MulBackend::montgomery
                                                     : MulBackend::standard;
    Fp zinv = fp_inv(z, f);
    Fp zinv2 = fp_mul(zinv, zinv, f, bk);
    Fp zinv3 = fp_mul(zinv2, zinv, f, bk);
    return AffinePoint{fp_mul(p.X, zinv2, f, bk), fp_mul(p.Y, zinv3, f, bk), false};
}

bool point_equal(const JacobianPoint& p, const JacobianPoint& q, const CurveParams& c) {
    const FieldParams& f = c.field();
    bool pi = fp_full_reduce(p.Z, f).v.is_zero();
    bool qi = fp_full_reduce(q.Z, f).v.is_zero();
    if (pi || qi) return pi == qi;
    MulBackend bk = p.X.domain == Domain::montgomery ? MulBackend::montgomery
                                                     : MulBackend::standard;
    Fp z1z1 = fp_mul(p.Z, p.Z, f, bk);
    Fp z2z2 = fp_mul(q.Z, q.Z, f, bk);
    if (!fp_equal(fp_mul(p.X, z2z2, f, bk), fp_mul(q.X, z1z1, f, bk), f)) return false;
    Fp s1 = fp_mul(p.Y, fp_mul(q.Z, z2z2, f, bk), f, bk);
    Fp s2 = fp_mul(q.Y, fp_mul(p.Z, z1z1, f, bk), f, bk);
    return fp_equal(s1, s2, f);
}

bool point_equal(const AffinePoint& p, const AffinePoint& q, const CurveParams& c) {
    if (p.is_infinity || q.is_infinity) return p.is_infinity == q.is_infinity;
    const FieldParams& f = c.field();
    return fp_equal(p.x, q.x, f) && fp_equal(p.y, q.y, f);
}

JacobianPoint scalar_mul_double_and_add(const BigUint& s, const JacobianPoint& p,
                                        const CurveParams& c, OpCounters& ctr) {
    JacobianPoint q = c.infinity();
    for (int j = int(c.scalar_bits()) - 1; j >= 0; --j) {
        q = point_double(q, c, ctr);
        if (s.bit(unsigned(j))) q = unified_double_add(q, p, c, ctr);
    }
    return q;
}

}  // namespace msmx
