#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "msmx/curve.hpp"

namespace msmx {

enum class CombineStrategy : std::uint8_t { running_sum, recursive };

struct MsmConfig {
    unsigned window_bits = 12;
    CombineStrategy combine = CombineStrategy::running_sum;
    unsigned inner_window_bits = 4;
    unsigned parallelism_hint = 1;

    void validate() const;
};

/// Per-window k-bit digits of all scalars, window 0 = least significant.
/// Recomposition identity: sum_j slices[j][i] * 2^(k*j) == scalar i.
struct ScalarSlices {
    unsigned window_bits = 0;
    unsigned window_count = 0;
    std::vector<std::vector<std::uint32_t>> slices;  // [window][scalar]
};

/// Running bucket sums for one window: bucket d (1 <= d < 2^k) lives at
/// index d-1; digit 0 contributes nothing and has no slot.
struct BucketArray {
    unsigned window_bits = 0;
    std::vector<JacobianPoint> buckets;

    JacobianPoint& at(std::uint32_t digit) { return buckets[digit - 1]; }
    const JacobianPoint& at(std::uint32_t digit) const { return buckets[digit - 1]; }
};

struct WindowResult {
    unsigned window_index = 0;
    JacobianPoint partial;
};

/// Per-phase operation totals of one Pippenger run, plus the derived
/// bucket-fill cost per input point.
struct MsmPhases {
    OpCounters fill;
    OpCounters reduce;
    OpCounters combine;
    double fill_adds_per_point = 0.0;
};

/// Reference evaluation: per-term double-and-add plus accumulation. Serves as
/// the correctness oracle for the windowed strategies.
JacobianPoint msm_naive(std::span<const BigUint> scalars,
                        std::span<const AffinePoint> points, const CurveParams& c,
                        OpCounters& ctr);

/// Splits each scalar into p = ceil(N/k) k-bit digits, LSB-first; the top
/// window is zero-padded when k does not divide N.
ScalarSlices slice_scalars(std::span<const BigUint> scalars, unsigned scalar_bits,
                           unsigned window_bits);

/// Fills one window's buckets: bucket d accumulates every point whose digit
/// is d. Zero digits are skipped; each remaining pair costs exactly one
/// unified_double_add.
BucketArray bucket_accumulate(unsigned window_bits, std::span<const std::uint32_t> digits,
                              std::span<const JacobianPoint> points, const CurveParams& c,
                              OpCounters& ctr);

/// Weighted bucket sum  sum_d d*B[d]  by the descending two-accumulator sweep
/// (at most 2*(2^k-1) point operations).
JacobianPoint bucket_reduce_running_sum(const BucketArray& b, const CurveParams& c,
                                        OpCounters& ctr);

/// Same weighted sum computed as a smaller MSM: scalars are the bucket
/// indices, points the bucket values; sliced at inner_window_bits and reduced
/// with the running sum at the innermost level. Result is identical to
/// bucket_reduce_running_sum.
JacobianPoint bucket_reduce_recursive(const BucketArray& b, unsigned inner_window_bits,
                                      const CurveParams& c, OpCounters& ctr);

/// Horner combination from the top window: k doublings then one addition per
/// step; requires results for every window index 0..p-1.
JacobianPoint combine_windows(std::span<const WindowResult> results, unsigned window_bits,
                              const CurveParams& c, OpCounters& ctr);

/// Full windowed pipeline: slice, accumulate per window (optionally across
/// parallelism_hint workers), reduce per the configured strategy, combine.
/// Result equals msm_naive exactly; `phases` (optional) receives per-phase
/// totals.
JacobianPoint msm_pippenger(std::span<const BigUint> scalars,
                            std::span<const AffinePoint> points, const CurveParams& c,
                            const MsmConfig& cfg, OpCounters& ctr,
                            MsmPhases* phases = nullptr);

}  // namespace msmx
