#include "msmx/curves.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace msmx {

namespace {

// bn128: 254-bit base field, y^2 = x^3 + 3, generator (1, 2).
constexpr const char* kBnP =
    "30644e72e131a029b85045b68181585d97816a916871ca8d3c208c16d87cfd47";
constexpr const char* kBnR =
    "30644e72e131a029b85045b68181585d2833e84879b9709143e1f593f0000001";

// bls12-381: 381-bit base field, y^2 = x^3 + 4.
constexpr const char* kBlsP =
    "1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf6730d2a0f6b0f6241eabfffeb153ffff"
    "b9feffffffffaaab";
constexpr const char* kBlsR =
    "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001";
constexpr const char* kBlsGx =
    "17f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac586c55e83ff97a1aef"
    "fb3af00adb22c6bb";
constexpr const char* kBlsGy =
    "08b3f481e3aaa0f1a09e30ed741d8ae4fcf5e095d5d00af600db18cb2c04b3edd03cc744a2888ae4"
    "0caa232946c5e7e1";

std::shared_ptr<const CurveParams> build(const std::string& name, MulBackend backend) {
    if (name == "bn128") {
        BigUint p = from_hex(kBnP);
        return std::make_shared<CurveParams>(
            "bn128", FieldParams::make(p, 254), BigUint{}, BigUint::from_u64(3), 254,
            from_hex(kBnR), BigUint::from_u64(1), BigUint::from_u64(2), backend);
    }
    if (name == "bls12-381") {
        BigUint p = from_hex(kBlsP);
        return std::make_shared<CurveParams>(
            "bls12-381", FieldParams::make(p, 381), BigUint{}, BigUint::from_u64(4), 381,
            from_hex(kBlsR), from_hex(kBlsGx), from_hex(kBlsGy), backend);
    }
    if (name == "toy") {
        // y^2 = x^3 + 3 over F_1009; G = (1, 2) generates a subgroup of
        // order 237 (curve order 948). Small enough to enumerate in tests.
        BigUint p = BigUint::from_u64(1009);
        return std::make_shared<CurveParams>(
            "toy", FieldParams::make(p, 10), BigUint{}, BigUint::from_u64(3), 16,
            BigUint::from_u64(237), BigUint::from_u64(1), BigUint::from_u64(2), backend);
    }
    throw std::invalid_argument("unknown curve: " + name);
}

}  // namespace

std::shared_ptr<const CurveParams> curve_by_name(const std::string& name,
                                                 MulBackend backend) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, std::shared_ptr<const CurveParams>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(name, int(backend));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto c = build(name, backend);
    cache.emplace(key, c);
    return c;
}

std::vector<std::string> curve_names() { return {"bn128", "bls12-381", "toy"}; }

}  // namespace msmx
