#include "msmx/msm.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace msmx {

void MsmConfig::validate() const {
    if (window_bits < 1 || window_bits > 20)
        throw std::invalid_argument("window_bits must be in [1, 20]");
    if (inner_window_bits < 1 || inner_window_bits > window_bits)
        throw std::invalid_argument("inner_window_bits must be in [1, window_bits]");
}

JacobianPoint msm_naive(std::span<const BigUint> scalars,
                        std::span<const AffinePoint> points, const CurveParams& c,
                        OpCounters& ctr) {
    if (scalars.size() != points.size())
        throw std::invalid_argument("scalar/point count mismatch");
    if (scalars.empty()) throw std::invalid_argument("empty msm");
    JacobianPoint acc = c.infinity();
    for (std::size_t i = 0; i < scalars.size(); ++i) {
        AffinePoint p = c.to_work_domain(points[i]);
        if (!is_on_curve(p, c)) throw std::invalid_argument("input point off curve");
        JacobianPoint term = scalar_mul_double_and_add(scalars[i], c.to_jacobian(p), c, ctr);
        acc = unified_double_add(acc, term, c, ctr);
    }
    return acc;
}

ScalarSlices slice_scalars(std::span<const BigUint> scalars, unsigned scalar_bits,
                           unsigned window_bits) {
    if (window_bits < 1) throw std::invalid_argument("window_bits must be >= 1");
    ScalarSlices out;
    out.window_bits = window_bits;
    out.window_count = (scalar_bits + window_bits - 1) / window_bits;
    out.slices.assign(out.window_count, std::vector<std::uint32_t>(scalars.size(), 0));
    for (std::size_t i = 0; i < scalars.size(); ++i) {
        const BigUint& s = scalars[i];
        for (unsigned j = 0; j < out.window_count; ++j) {
            std::uint32_t digit = 0;
            unsigned base = j * window_bits;
            for (unsigned b = 0; b < window_bits; ++b) {
                unsigned bit = base + b;
                if (bit >= scalar_bits) break;  // top window zero-padded
                if (s.bit(bit)) digit |= std::uint32_t{1} << b;
            }
            out.slices[j][i] = digit;
        }
    }
    return out;
}

BucketArray bucket_accumulate(unsigned window_bits, std::span<const std::uint32_t> digits,
                              std::span<const JacobianPoint> points, const CurveParams& c,
                              OpCounters& ctr) {
    if (digits.size() != points.size())
        throw std::invalid_argument("digit/point count mismatch");
    BucketArray b;
    b.window_bits = window_bits;
    b.buckets.assign((std::size_t{1} << window_bits) - 1, c.infinity());
    for (std::size_t i = 0; i < digits.size(); ++i) {
        std::uint32_t d = digits[i];
        if (d == 0) continue;
        if (d >= (std::uint32_t{1} << window_bits))
            throw std::invalid_argument("digit exceeds window width");
        b.at(d) = unified_double_add(b.at(d), points[i], c, ctr);
    }
    return b;
}

JacobianPoint bucket_reduce_running_sum(const BucketArray& b, const CurveParams& c,
                                        OpCounters& ctr) {
    JacobianPoint running = c.infinity();   // sum of buckets d..top
    JacobianPoint total = c.infinity();     // sum of running sums = sum d*B[d]
    for (std::size_t d = b.buckets.size(); d >= 1; --d) {
        running = unified_double_add(running, b.buckets[d - 1], c, ctr);
        total = unified_double_add(total, running, c, ctr);
    }
    return total;
}

JacobianPoint bucket_reduce_recursive(const BucketArray& b, unsigned inner_window_bits,
                                      const CurveParams& c, OpCounters& ctr) {
    unsigned k = b.window_bits;
    if (inner_window_bits < 1 || inner_window_bits > k)
        throw std::invalid_argument("inner window must be in [1, window_bits]");
    if (inner_window_bits == k) return bucket_reduce_running_sum(b, c, ctr);

    // The weighted bucket sum is itself an MSM: scalars are the bucket
    // indices (k-bit), points the bucket values.
    std::vector<BigUint> index_scalars(b.buckets.size());
    for (std::size_t d = 1; d <= b.buckets.size(); ++d)
        index_scalars[d - 1] = BigUint::from_u64(d);
    ScalarSlices inner = slice_scalars(index_scalars, k, inner_window_bits);

    std::vector<WindowResult> results(inner.window_count);
    for (unsigned j = 0; j < inner.window_count; ++j) {
        BucketArray ib = bucket_accumulate(inner_window_bits, inner.slices[j],
                                             b.buckets, c, ctr);
        results[j] = WindowResult{j, bucket_reduce_running_sum(ib, c, ctr)};
    }
    return combine_windows(results, inner_window_bits, c, ctr);
}

JacobianPoint combine_windows(std::span<const WindowResult> results, unsigned window_bits,
                              const CurveParams& c, OpCounters& ctr) {
    if (results.empty()) throw std::invalid_argument("no window results");
    std::vector<const WindowResult*> ordered(results.size(), nullptr);
    for (const auto& r : results) {
        if (r.window_index >= results.size() || ordered[r.window_index])
            throw std::invalid_argument("missing or duplicate window result");
        ordered[r.window_index] = &r;
    }
    JacobianPoint acc = ordered.back()->partial;
    for (std::size_t j = ordered.size() - 1; j-- > 0;) {
        for (unsigned d = 0; d < window_bits; ++d) acc = point_double(acc, c, ctr);
        acc = unified_double_add(acc, ordered[j]->partial, c, ctr);
    }
    return acc;
}

JacobianPoint msm_pippenger(std::span<const BigUint> scalars,
                            std::span<const AffinePoint> points, const CurveParams& c,
                            const MsmConfig& cfg, OpCounters& ctr, MsmPhases* phases) {
    cfg.validate();
    if (scalars.size() != points.size())
        throw std::invalid_argument("scalar/point count mismatch");
    if (scalars.empty()) throw std::invalid_argument("empty msm");

    std::vector<JacobianPoint> jac(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        AffinePoint p = c.to_work_domain(points[i]);
        if (!is_on_curve(p, c)) throw std::invalid_argument("input point off curve");
        jac[i] = c.to_jacobian(p);
    }

    ScalarSlices sl = slice_scalars(scalars, c.scalar_bits(), cfg.window_bits);
    const unsigned p = sl.window_count;

    std::vector<WindowResult> results(p);
    std::vector<OpCounters> fill_ctrs(p), reduce_ctrs(p);

    auto run_window = [&](unsigned j) {
        BucketArray b = bucket_accumulate(cfg.window_bits, sl.slices[j], jac, c,
                                            fill_ctrs[j]);
        JacobianPoint partial =
            cfg.combine == CombineStrategy::running_sum
                ? bucket_reduce_running_sum(b, c, reduce_ctrs[j])
                : bucket_reduce_recursive(b, cfg.inner_window_bits, c, reduce_ctrs[j]);
        results[j] = WindowResult{j, partial};
    };

    unsigned workers = std::max(1u, std::min(cfg.parallelism_hint, p));
    if (workers == 1) {
        for (unsigned j = 0; j < p; ++j) run_window(j);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (unsigned j = w; j < p; j += workers) run_window(j);
            });
        }
        for (auto& t : pool) t.join();
    }

    // Merge per-window counters in window order (a deterministic fold).
    MsmPhases ph;
    for (unsigned j = 0; j < p; ++j) {
        ph.fill += fill_ctrs[j];
        ph.reduce += reduce_ctrs[j];
    }
    JacobianPoint out = combine_windows(results, cfg.window_bits, c, ph.combine);
    ph.fill_adds_per_point = double(ph.fill.uda_ops) / double(scalars.size());

    ctr += ph.fill;
    ctr += ph.reduce;
    ctr += ph.combine;
    if (phases) *phases = ph;
    return out;
}

}  // namespace msmx
