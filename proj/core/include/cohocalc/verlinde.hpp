#pragma once

#include "cohocalc/rational.hpp"

namespace cohocalc {

/// Exact B_n via sum_{k=0}^{n} C(n+1,k) B_k = 0 with B_0 = 1 (so B_1 = -1/2).
Rational bernoulli(int n);

/// Theta self-intersection numbers for rank-2 moduli on a genus-g curve.
struct ThetaNumbers {
    int g = 2;
    int dim_m = 5;            // dim M_C(2,1) = 4(g-1) + 1
    Rational theta_top_sm;    // integral of Theta^(dim-g) over the fixed-determinant moduli
    Rational theta_top_m;     // integral of Theta^dim over M_C(2,1)
};

ThetaNumbers theta_numbers_rank2(int g);

/// integral of Theta^dim over M_C(2,1):
/// dim! (2^(2g-2) - 2) (-1)^g 2^(2g-2) B_(2g-2) / (2g-2)!  with dim = 4(g-1)+1.
Rational theta_top_rank2(int g);

/// Fixed-determinant companion value theta_top_rank2(g) / (C(dim,g) g!);
/// equals the leading term of the rank-2 Verlinde formula (4 for g = 2).
Rational theta_top_sm_rank2(int g);

/// integral of Theta^dim via the degree-n^(2g) etale cover
/// SM_C(n,d) x Pic^0 -> M_C(n,d): expands (Theta_SM + n^2 Theta_0)^dim
/// symbolically in the Kuenneth product ring and divides by the cover degree.
Rational deg_n0_via_cover(int g, int n, const Rational& theta_top_sm);

struct GeneralDegrees {
    Rational deg_f;    // (n(2g-2))^dim * dim!
    Rational deg_n0;   // (2g-2)^dim * theta_top
};

/// Both degree formulas with dim the Lagrangian fiber dimension
/// n^2(g-1) + 1 (the bookkeeping that reproduces the verified g = 2 values).
GeneralDegrees general_degrees(int g, int n, const Rational& theta_top);

} // namespace cohocalc
