#include "cohocalc/verlinde.hpp"

#include "cohocalc/errors.hpp"
#include "cohocalc/ring.hpp"
#include "cohocalc/spaces.hpp"

#include <vector>

namespace cohocalc {

Rational bernoulli(int n) {
    if (n < 0)
        throw Error("bernoulli requires n >= 0");
    std::vector<Rational> b;
    b.reserve(static_cast<std::size_t>(n) + 1);
    b.emplace_back(1);
    for (int i = 1; i <= n; ++i) {
        Rational sum(0);
        for (int k = 0; k < i; ++k)
            sum += Rational(binomial(static_cast<unsigned>(i) + 1, static_cast<unsigned>(k))) *
                   b[static_cast<std::size_t>(k)];
        b.push_back(-sum / Rational(i + 1));
    }
    return b[static_cast<std::size_t>(n)];
}

Rational theta_top_rank2(int g) {
    if (g < 2)
        throw Error("theta_top_rank2 requires g >= 2");
    int dim = 4 * (g - 1) + 1;
    Rational pow2 = Rational(2).pow(2 * g - 2);
    Rational sign(g % 2 == 0 ? 1 : -1);
    return Rational(factorial(static_cast<unsigned>(dim))) * (pow2 - Rational(2)) * sign * pow2 *
           bernoulli(2 * g - 2) / Rational(factorial(static_cast<unsigned>(2 * g - 2)));
}

Rational theta_top_sm_rank2(int g) {
    int dim = 4 * (g - 1) + 1;
    return theta_top_rank2(g) /
           (Rational(binomial(static_cast<unsigned>(dim), static_cast<unsigned>(g))) *
            Rational(factorial(static_cast<unsigned>(g))));
}

ThetaNumbers theta_numbers_rank2(int g) {
    ThetaNumbers t;
    t.g = g;
    t.dim_m = 4 * (g - 1) + 1;
    t.theta_top_m = theta_top_rank2(g);
    t.theta_top_sm = theta_top_sm_rank2(g);
    return t;
}

Rational deg_n0_via_cover(int g, int n, const Rational& theta_top_sm) {
    if (g < 1 || n < 1)
        throw Error("deg_n0_via_cover requires g >= 1 and n >= 1");
    int dim = n * n * (g - 1) + 1;
    int sm_power = dim - g;

    std::vector<Generator> gens{{"theta_sm", 2, 0}};
    Monomial nil(1);
    nil.set_exp(0, sm_power + 1);
    Monomial top_m(1);
    top_m.set_exp(0, sm_power);
    RingPtr sm = make_ring(std::move(gens), {{nil, {}}}, 2 * sm_power, {{top_m, theta_top_sm}});

    RingPtr product = tensor_product(sm, abelian_ring(g)->ring);
    Element theta_sm = product->generator_element("theta_sm");
    Element theta0 = product->generator_element("theta");
    Element h_theta = theta_sm + Rational(static_cast<long long>(n) * n) * theta0;
    Rational cover_degree = Rational(n).pow(2 * g);
    return integrate(pow(h_theta, static_cast<unsigned>(dim))) / cover_degree;
}

GeneralDegrees general_degrees(int g, int n, const Rational& theta_top) {
    if (g < 2 || n < 1)
        throw Error("general_degrees requires g >= 2 and n >= 1");
    int dim = n * n * (g - 1) + 1;
    GeneralDegrees out;
    out.deg_f = Rational(static_cast<long long>(n) * (2 * g - 2)).pow(dim) *
                Rational(factorial(static_cast<unsigned>(dim)));
    out.deg_n0 = Rational(2 * g - 2).pow(dim) * theta_top;
    return out;
}

} // namespace cohocalc
