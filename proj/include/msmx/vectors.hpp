#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "msmx/curve.hpp"
#include "msmx/curves.hpp"

namespace msmx {

/// A generated or loaded MSM instance. Points are standard-domain affine.
struct VectorSet {
    std::string curve_name;
    std::size_t m = 0;
    std::vector<BigUint> scalars;
    std::vector<AffinePoint> points;
    std::optional<AffinePoint> expected_result;
};

/// Parse/validation error with the 1-based line it was detected on.
struct VectorFormatError : std::runtime_error {
    int line;
    VectorFormatError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// Deterministic instance: scalars uniform in [0, 2^N), points h_i * G for
/// seeded h_i (on-curve by construction). Same (curve, m, seed) gives an
/// identical set. When with_expected is set the golden result is computed and
/// stored.
VectorSet generate_vectors(const CurveParams& c, std::size_t m, std::uint64_t seed,
                           bool with_expected = true);

/// Line-oriented text format:
///   curve=<name> m=<count>
///   <m scalar hex lines>
///   <m point lines "x_hex y_hex" or "inf">
///   [result x_hex y_hex | result inf]
void write_vectors(const VectorSet& vs, const std::string& path);
VectorSet read_vectors(const std::string& path);

/// Affine point text form used by the vector files.
std::string format_point(const AffinePoint& p, const CurveParams& c);

struct BenchRow {
    std::string curve;
    std::string algo;
    std::uint64_t m = 0;
    unsigned k = 0;
    double seconds = 0.0;
    std::uint64_t mod_muls = 0;
    std::uint64_t point_adds = 0;
    std::uint64_t point_doubles = 0;
};

/// CSV with header curve,algo,m,k,seconds,mpps,mod_muls,point_adds,point_doubles;
/// mpps = m / seconds / 1e6.
void write_bench_csv(const std::vector<BenchRow>& rows, const std::string& path);

}  // namespace msmx
