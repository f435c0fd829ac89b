#pragma once

#include "cohocalc/mukai.hpp"
#include "cohocalc/ring.hpp"
#include "cohocalc/spaces.hpp"

namespace cohocalc {

using KClass = CurveKClass;

/// td(C) = 1 - (g-1)*rho in curve_even_ring(g).
Element todd_curve(int g);

/// ch of a Poincare bundle on Pic^k(C) x C in the Kuenneth model:
/// 1 + mu + gamma + k*rho + rho*(k*mu - theta). Computed as
/// exp_truncated(mu + gamma + k*rho) and checked against the closed form;
/// a disagreement means a broken presentation (ModelMismatch).
Element ch_poincare(int g, int k);
Element ch_poincare(const SpacePtr& jac, int g, int k);

/// Pushforward along the curve factor of a cdeg-tagged ring: a monomial maps
/// to m/rho when it contains rho and no cdeg-1 class, to 0 otherwise.
Element pushforward_curve(const Element& x);

enum class LambdaSource { closed, grr, box_delta, assembled };

/// A determinant-line-bundle class: a degree-2 element together with the
/// formula that produced it.
struct LambdaResult {
    Element value;
    LambdaSource source = LambdaSource::closed;
    int g = 0;
    int k = 0;
    KClass input;

    /// The evaluation with the Poincare bundle normalized so that the (2,0)
    /// Kuenneth part of c1 vanishes (mu = 0).
    Element mu_normalized() const;
};

/// lambda_P(r,d) = (d + (k+1-g) r) mu - r theta on Pic^k(C) for genus g.
LambdaResult lambda_closed(int g, int k, KClass x);

/// Same value derived through the GRR pipeline
/// degree_2(p_*(ch(P) * (r + ((1-g)r + d) rho))); throws OracleMismatch if it
/// ever disagrees with the closed form.
LambdaResult lambda_grr(int g, int k, KClass x);

/// Degree-0 part of the GRR pushforward (the rank of Rp_*), which must equal
/// d + r(k+1-g).
Rational lambda_grr_rank(int g, int k, KClass x);

/// lambda_{F (x) O(Delta)}(x) = lambda_F(x) + r c1(F) + c0(F)(d - r(2g-2)) rho;
/// the (d - 2r) of the g = 2 statement is this formula's instance.
LambdaResult lambda_box_delta(int g, const Element& lambda_F, long long c0_F,
                              const Element& c1_F, KClass x);

/// lambda twisted by a pullback line bundle: base + chi(c.x) * c1(M).
Element lambda_twist(const Element& base, long long chi_cx, const Element& c1_M);

/// nu^* of lambda_M(2c.H, c, s) restricted to the extension component, in the
/// wbar ring: cH * (-4 theta + 2 pi - 7 rho - zeta), assembled from the
/// box-with-diagonal and Poincare lambdas plus the fiber twist.
LambdaResult assemble_n1(long long cH);

/// The multiple t with lambda_{M_C(n,d)}(x) = t * Theta, where
/// Theta = lambda(-n, d + n(1-g)); requires x in the theta line of c-perp.
Rational theta_class_multiple(int g, int n, int d, KClass x);

} // namespace cohocalc
