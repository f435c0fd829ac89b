#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cohocalc {

/// Lattice point (r, m*H, s) on a polarized K3 with H^2 = 2g-2. The rank-1
/// sublattice Z*H of NS suffices: every evaluation in play only uses c.H.
struct MukaiVector {
    long long r = 0;
    long long m = 0;  // c1 = m*H
    long long s = 0;
    int H2 = 2;

    friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

/// <(r,c,s),(r',c',s')> = c.c' - r s' - r' s.
long long mukai_pairing(const MukaiVector& a, const MukaiVector& b);

/// Beauville-Bogomolov form under the lambda identification:
/// mukai_pairing + 2 r r'.
long long bb_pairing(const MukaiVector& a, const MukaiVector& b);

/// chi(x (x) y) = -<x^v, y> with the degree-2-negating dual x^v = (r, -m, s).
long long chi_k3(const MukaiVector& x, const MukaiVector& y);

/// Numerical K-theory class on a curve, (rank, degree).
struct CurveKClass {
    long long r = 0;
    long long d = 0;

    friend bool operator==(const CurveKClass&, const CurveKClass&) = default;
};

/// Product (r r', r d' + r' d).
CurveKClass curve_mul(const CurveKClass& a, const CurveKClass& b);

/// chi = d + r(1-g).
long long curve_chi(const CurveKClass& a, int g);

/// Li^* along a curve D in |nH|: (r, m*H, s) -> (r, n*m*H^2).
CurveKClass restrict_to_curve(const MukaiVector& x, int n);

/// Strata of the nilpotent cone for rank 2: (k, d) = (deg L, deg D) with
/// d = 2g-2k-1, k = 1..g-1.
std::vector<std::pair<int, int>> nilpotent_strata(int g);

} // namespace cohocalc
