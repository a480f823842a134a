#pragma once

#include <vector>

#include "schottky/types.hpp"

namespace schottky {

// Half-integer theta characteristic, stored as bit vectors. The halves a/2,
// b/2 enter only inside theta summation.
struct ThetaCharacteristic {
    VectorXi a;
    VectorXi b;

    int genus() const { return static_cast<int>(a.size()); }
    int parity() const { return static_cast<int>(a.dot(b)) & 1; }
    bool is_odd() const { return parity() == 1; }

    bool operator==(const ThetaCharacteristic& o) const { return a == o.a && b == o.b; }
};

enum class Parity { odd, even, all };

// Deterministic enumeration: index of (a, b) is the big-endian integer with
// bit order a_1 .. a_g b_1 .. b_g, ascending. Parity filtering keeps that
// order, so "xi index k" in reports always refers to position k of the
// filtered list.
std::vector<ThetaCharacteristic> enumerate_characteristics(int g, Parity parity);

ThetaCharacteristic characteristic_from_bits(int g, unsigned bits);

}  // namespace schottky
