#include "schottky/types.hpp"

#include <numeric>

#include "schottky/errors.hpp"

namespace schottky {

Rational Rational::reduced(long long n, long long d) {
    if (d == 0) throw BadInput("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    return Rational{g ? n / g : n, g ? d / g : d};
}

}  // namespace schottky
