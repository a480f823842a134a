#include "schottky/characteristics.hpp"

#include "schottky/errors.hpp"

namespace schottky {

ThetaCharacteristic characteristic_from_bits(int g, unsigned bits) {
    if (g < 1 || g > 12) throw GenusUnsupported("genus " + std::to_string(g));
    ThetaCharacteristic xi;
    xi.a = VectorXi::Zero(g);
    xi.b = VectorXi::Zero(g);
    for (int j = 0; j < g; ++j) {
        xi.a[j] = static_cast<int>((bits >> (2 * g - 1 - j)) & 1u);
        xi.b[j] = static_cast<int>((bits >> (g - 1 - j)) & 1u);
    }
    return xi;
}

std::vector<ThetaCharacteristic> enumerate_characteristics(int g, Parity parity) {
    if (g < 1 || g > 12) throw GenusUnsupported("genus " + std::to_string(g));
    std::vector<ThetaCharacteristic> out;
    const unsigned total = 1u << (2 * g);
    for (unsigned bits = 0; bits < total; ++bits) {
        ThetaCharacteristic xi = characteristic_from_bits(g, bits);
        if (parity == Parity::odd && !xi.is_odd()) continue;
        if (parity == Parity::even && xi.is_odd()) continue;
        out.push_back(std::move(xi));
    }
    return out;
}

}  // namespace schottky
