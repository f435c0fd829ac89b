#pragma once

#include "cohocalc/ring.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cohocalc {

enum class SpaceKind { point, curve, abelian, jac_x_curve, product, proj_bundle };

/// A presentation together with the named classes living on it and, for
/// projective bundles, the bundle data needed for pushforwards.
struct SpaceRing {
    RingPtr ring;
    SpaceKind kind = SpaceKind::point;
    std::map<std::string, Element, std::less<>> named;

    // proj_bundle only
    std::shared_ptr<const SpaceRing> base;
    std::string fiber_name;
    int fiber_rank = 0;

    const Element& cls(std::string_view name) const;
};

using SpacePtr = std::shared_ptr<const SpaceRing>;

/// Q[theta]/(theta^(g+1)), top 2g, with the principal polarization
/// normalization integral theta^g = g!. g = 0 yields the point ring.
SpacePtr abelian_ring(int g);

/// Even cohomology of a curve: Q[rho]/(rho^2) with rho the point class
/// (cdeg 2), top 2, integral rho = 1.
SpacePtr curve_even_ring(int g);

/// Kuenneth model of Pic^k(C) x C for a genus-g curve: classes theta, gamma
/// (the (1,1) part of c1 of a Poincare bundle, cdeg 1), rho, and optionally
/// mu (the (2,0) part). Relations: rho^2 = 0, gamma*rho = 0,
/// gamma^2 = -2*rho*theta, theta^(g+1) = 0, gamma*theta^g = 0 and, with mu:
/// mu^2 = 0, mu*gamma = 0, mu*rho*theta = 0. Named class pi = gamma + k*rho.
///
/// The mu model is faithful only for extracting degree <= 2 components of
/// curve pushforwards (equivalently degree <= 4 classes upstairs); mu is
/// normalizable to zero, and every mu-containing top integral is set to 0.
SpacePtr jac_x_curve_ring(int g, int k, bool with_mu);

/// P(E) over a base: adds the fiber class (highest precedence) with the
/// relation fiber^rank = -sum_i chern[i-1] * fiber^(rank-i); integrals are
/// inherited against fiber^(rank-1).
SpacePtr proj_bundle_ring(const SpacePtr& base, const std::vector<Element>& chern, int rank,
                          const std::string& fiber_name);

/// The compactified extension space for genus 2: a P^2-bundle over
/// Pic^1(C) x C with c1 = 4*rho, top degree 10, integral
/// zeta^2*theta^2*rho = 2.
SpacePtr wbar_ring();

/// tau_*: coefficient of fiber^(rank-1) of the normal form, as an element of
/// the base ring; lower fiber powers push to zero.
Element bundle_pushforward(const SpacePtr& total, const Element& x);

/// c1 of the rank-(3g-4) relative extension bundle on the curve factor,
/// 2(2g-2)*rho, derived from 0 -> omega^-2 -> O x H^1(omega^-1) -> V' -> 0;
/// higher Chern classes vanish.
Element curve_chern_of_extension_bundle(int g);

/// rank W = rank V + 1 = 3g - 3.
int extension_bundle_rank(int g);

} // namespace cohocalc
