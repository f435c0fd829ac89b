#include "cohocalc/grr_lambda.hpp"

#include "cohocalc/errors.hpp"

namespace cohocalc {

Element todd_curve(int g) {
    if (g < 0)
        throw NegativeGenus("todd_curve requires g >= 0");
    SpacePtr curve = curve_even_ring(g);
    return curve->ring->one() + Rational(-(g - 1)) * curve->cls("rho");
}

Element ch_poincare(const SpacePtr& jac, int g, int k) {
    if (jac->ring->top_degree() != 2 * g + 2)
        throw ModelMismatch("the model ring does not match genus " + std::to_string(g));
    const Element mu = jac->cls("mu");
    const Element gamma = jac->cls("gamma");
    const Element theta = jac->cls("theta");
    const Element rho = jac->cls("rho");

    Element c1 = mu + gamma + Rational(k) * rho;
    Element ch = exp_truncated(c1);
    Element closed = jac->ring->one() + c1 + mul(rho, Rational(k) * mu - theta);
    if (ch != closed)
        throw ModelMismatch("exp of c1(P) disagrees with 1 + mu + gamma + k rho + rho(k mu - theta)");
    return closed;
}

Element ch_poincare(int g, int k) {
    return ch_poincare(jac_x_curve_ring(g, k, /*with_mu=*/true), g, k);
}

Element pushforward_curve(const Element& x) {
    const RingPtr& ring = x.ring();
    int rho_index = -1;
    for (std::size_t i = 0; i < ring->generators().size(); ++i) {
        if (ring->generators()[i].cdeg == 2) {
            if (rho_index >= 0)
                throw UntaggedRing("more than one cdeg-2 generator");
            rho_index = static_cast<int>(i);
        }
    }
    if (rho_index < 0)
        throw UntaggedRing("the ring carries no cdeg-2 point class");

    Element n = normalize(x);
    TermMap out;
    for (const auto& [m, c] : n.terms()) {
        bool has_cdeg1 = false;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (ring->generators()[i].cdeg == 1 && m.exp(i) > 0)
                has_cdeg1 = true;
        if (has_cdeg1)
            continue;
        int rho_exp = m.exp(static_cast<std::size_t>(rho_index));
        if (rho_exp > 1)
            throw UntaggedRing("the point class is not square-zero in this ring");
        if (rho_exp == 0)
            continue;  // fiber degree 0 pushes to zero
        Monomial stripped = m;
        stripped.set_exp(static_cast<std::size_t>(rho_index), 0);
        out.emplace(stripped, c);
    }
    return Element(ring, std::move(out));
}

Element LambdaResult::mu_normalized() const {
    const RingPtr& ring = value.ring();
    int mu_index = ring->generator_index("mu");
    if (mu_index < 0)
        return value;
    return coeff_of(value, mu_index, 0);
}

LambdaResult lambda_closed(int g, int k, KClass x) {
    SpacePtr jac = jac_x_curve_ring(g, k, /*with_mu=*/true);
    Element value = Rational(x.d + (k + 1 - g) * x.r) * jac->cls("mu") +
                    Rational(-x.r) * jac->cls("theta");
    return {value, LambdaSource::closed, g, k, x};
}

namespace {

Element grr_pushforward(int g, int k, KClass x) {
    SpacePtr jac = jac_x_curve_ring(g, k, /*with_mu=*/true);
    Element ch = ch_poincare(jac, g, k);
    // ch(q^*x) q^*td(C) = r + ((1-g)r + d) rho, entered pre-multiplied.
    Element chx_td = Rational(x.r) * jac->ring->one() +
                     Rational((1 - g) * x.r + x.d) * jac->cls("rho");
    return pushforward_curve(mul(ch, chx_td));
}

} // namespace

LambdaResult lambda_grr(int g, int k, KClass x) {
    Element value = degree_component(grr_pushforward(g, k, x), 2);
    LambdaResult closed = lambda_closed(g, k, x);
    if (value != closed.value)
        throw OracleMismatch("GRR lambda disagrees with the closed form");
    return {value, LambdaSource::grr, g, k, x};
}

Rational lambda_grr_rank(int g, int k, KClass x) {
    Element rank = degree_component(grr_pushforward(g, k, x), 0);
    if (rank.is_zero())
        return Rational(0);
    return rank.terms().begin()->second;
}

LambdaResult lambda_box_delta(int g, const Element& lambda_F, long long c0_F,
                              const Element& c1_F, KClass x) {
    if (lambda_F.ring() != c1_F.ring())
        throw MixedRings("lambda_box_delta operands belong to different rings");
    const RingPtr& ring = lambda_F.ring();
    int rho_index = -1;
    for (std::size_t i = 0; i < ring->generators().size(); ++i)
        if (ring->generators()[i].cdeg == 2)
            rho_index = static_cast<int>(i);
    if (rho_index < 0)
        throw UntaggedRing("the ring carries no cdeg-2 point class");
    Monomial rho_mono(ring->generators().size());
    rho_mono.set_exp(static_cast<std::size_t>(rho_index), 1);
    Element rho = ring->monomial_element(rho_mono);

    Element value = lambda_F + Rational(x.r) * c1_F +
                    Rational(c0_F * (x.d - x.r * (2 * g - 2))) * rho;
    return {normalize(value), LambdaSource::box_delta, g, 0, x};
}

Element lambda_twist(const Element& base, long long chi_cx, const Element& c1_M) {
    return base + Rational(chi_cx) * c1_M;
}

LambdaResult assemble_n1(long long cH) {
    constexpr int g = 2;
    SpacePtr wbar = wbar_ring();

    // Li^* x = c.H (2,1); twisting by omega^-1 = (1, -2) gives c.H (2,-3).
    KClass lx{2 * cH, cH};
    KClass lx_tw = curve_mul(lx, KClass{1, -(2 * g - 2)});

    Element lam_tw = embed_by_name(lambda_closed(g, 1, lx_tw).mu_normalized(), wbar->ring);
    Element lam = embed_by_name(lambda_closed(g, 1, lx).mu_normalized(), wbar->ring);

    // With mu = 0, c1(P) becomes pi = gamma + k rho.
    Element box = lambda_box_delta(g, lam_tw, /*c0_F=*/1, wbar->cls("pi"), lx_tw).value;
    Element value = lambda_twist(box + lam, curve_chi(lx, g), wbar->cls("zeta"));
    return {value, LambdaSource::assembled, g, 1, lx};
}

Rational theta_class_multiple(int g, int n, int d, KClass x) {
    KClass c{n, d};
    KClass cperp{-n, d + n * (1 - g)};
    if (curve_chi(curve_mul(c, x), g) != 0)
        throw Error("theta_class_multiple: the class is not orthogonal to c");
    if (x.r * cperp.d != x.d * cperp.r)
        throw Error("theta_class_multiple: the class is not a multiple of the theta class");
    if (cperp.r != 0)
        return Rational(x.r, cperp.r);
    if (cperp.d != 0)
        return Rational(x.d, cperp.d);
    throw Error("theta_class_multiple: degenerate moduli datum");
}

} // namespace cohocalc
