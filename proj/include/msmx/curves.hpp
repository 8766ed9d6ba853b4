#pragma once

#include <memory>
#include <string>
#include <vector>

#include "msmx/curve.hpp"

namespace msmx {

/// Named curves: "bn128" (254-bit field), "bls12-381" (381-bit field), and
/// "toy" (p = 1009), used for exhaustive checks. Instances are built once and
/// cached. Throws std::invalid_argument for unknown names.
std::shared_ptr<const CurveParams> curve_by_name(const std::string& name,
                                                 MulBackend backend = MulBackend::montgomery);

std::vector<std::string> curve_names();

}  // namespace msmx
