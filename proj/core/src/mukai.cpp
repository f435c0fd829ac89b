#include "cohocalc/mukai.hpp"

#include "cohocalc/errors.hpp"

namespace cohocalc {

namespace {

void require_same_polarization(const MukaiVector& a, const MukaiVector& b) {
    if (a.H2 != b.H2)
        throw MixedPolarization("Mukai vectors carry different polarizations");
}

} // namespace

long long mukai_pairing(const MukaiVector& a, const MukaiVector& b) {
    require_same_polarization(a, b);
    return a.m * b.m * a.H2 - a.r * b.s - b.r * a.s;
}

long long bb_pairing(const MukaiVector& a, const MukaiVector& b) {
    return mukai_pairing(a, b) + 2 * a.r * b.r;
}

long long chi_k3(const MukaiVector& x, const MukaiVector& y) {
    require_same_polarization(x, y);
    MukaiVector dual{x.r, -x.m, x.s, x.H2};
    return -mukai_pairing(dual, y);
}

CurveKClass curve_mul(const CurveKClass& a, const CurveKClass& b) {
    return {a.r * b.r, a.r * b.d + b.r * a.d};
}

long long curve_chi(const CurveKClass& a, int g) {
    return a.d + a.r * (1 - g);
}

CurveKClass restrict_to_curve(const MukaiVector& x, int n) {
    if (n < 1)
        throw Error("restrict_to_curve requires n >= 1");
    return {x.r, static_cast<long long>(n) * x.m * x.H2};
}

std::vector<std::pair<int, int>> nilpotent_strata(int g) {
    if (g < 2)
        throw Error("nilpotent_strata requires g >= 2");
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k <= g - 1; ++k)
        out.emplace_back(k, 2 * g - 2 * k - 1);
    return out;
}

} // namespace cohocalc
