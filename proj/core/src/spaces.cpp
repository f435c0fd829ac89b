#include "cohocalc/spaces.hpp"

#include "cohocalc/errors.hpp"

#include <mutex>

namespace cohocalc {

namespace {

std::mutex g_cache_mutex;

Monomial mono(std::size_t n, std::initializer_list<std::pair<int, int>> exps) {
    Monomial m(n);
    for (auto [i, e] : exps)
        m.set_exp(static_cast<std::size_t>(i), e);
    return m;
}

} // namespace

const Element& SpaceRing::cls(std::string_view name) const {
    auto it = named.find(name);
    if (it == named.end())
        throw Error("no named class '" + std::string(name) + "' on this space");
    return it->second;
}

SpacePtr abelian_ring(int g) {
    if (g < 0)
        throw NegativeGenus("abelian_ring requires g >= 0");
    static std::map<int, SpacePtr> cache;
    std::lock_guard lock(g_cache_mutex);
    auto it = cache.find(g);
    if (it != cache.end())
        return it->second;

    std::vector<Generator> gens{{"theta", 2, 0}};
    std::vector<RewriteRule> rules{{mono(1, {{0, g + 1}}), {}}};
    TermMap integrals{{mono(1, {{0, g}}), Rational(factorial(static_cast<unsigned>(g)))}};
    RingPtr ring = make_ring(std::move(gens), std::move(rules), 2 * g, std::move(integrals));

    auto space = std::make_shared<SpaceRing>();
    space->ring = ring;
    space->kind = g == 0 ? SpaceKind::point : SpaceKind::abelian;
    space->named.emplace("theta", normalize(ring->generator_element("theta")));
    cache.emplace(g, space);
    return space;
}

SpacePtr curve_even_ring(int g) {
    if (g < 0)
        throw NegativeGenus("curve_even_ring requires g >= 0");
    static std::map<int, SpacePtr> cache;
    std::lock_guard lock(g_cache_mutex);
    auto it = cache.find(g);
    if (it != cache.end())
        return it->second;

    std::vector<Generator> gens{{"rho", 2, 2}};
    std::vector<RewriteRule> rules{{mono(1, {{0, 2}}), {}}};
    TermMap integrals{{mono(1, {{0, 1}}), Rational(1)}};
    RingPtr ring = make_ring(std::move(gens), std::move(rules), 2, std::move(integrals));

    auto space = std::make_shared<SpaceRing>();
    space->ring = ring;
    space->kind = SpaceKind::curve;
    space->named.emplace("rho", normalize(ring->generator_element("rho")));
    cache.emplace(g, space);
    return space;
}

SpacePtr jac_x_curve_ring(int g, int k, bool with_mu) {
    if (g < 1)
        throw NegativeGenus("jac_x_curve_ring requires g >= 1");
    static std::map<std::tuple<int, int, bool>, SpacePtr> cache;
    std::lock_guard lock(g_cache_mutex);
    auto key = std::make_tuple(g, k, with_mu);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;

    // Precedence gamma > theta > rho (> mu) so gamma^2 -> -2 rho theta
    // decreases in the graded-lex order.
    std::vector<Generator> gens{{"gamma", 2, 1}, {"theta", 2, 0}, {"rho", 2, 2}};
    if (with_mu)
        gens.push_back({"mu", 2, 0});
    const std::size_t n = gens.size();
    const int GAMMA = 0, THETA = 1, RHO = 2, MU = 3;

    std::vector<RewriteRule> rules;
    rules.push_back({mono(n, {{RHO, 2}}), {}});
    rules.push_back({mono(n, {{GAMMA, 1}, {RHO, 1}}), {}});
    rules.push_back({mono(n, {{GAMMA, 2}}),
                     {{mono(n, {{RHO, 1}, {THETA, 1}}), Rational(-2)}}});
    rules.push_back({mono(n, {{THETA, g + 1}}), {}});
    rules.push_back({mono(n, {{GAMMA, 1}, {THETA, g}}), {}});
    if (with_mu) {
        rules.push_back({mono(n, {{MU, 2}}), {}});
        rules.push_back({mono(n, {{MU, 1}, {GAMMA, 1}}), {}});
        // Needed for confluence: mu*gamma^2 reduces to 0 via mu*gamma and to
        // -2*mu*rho*theta via gamma^2. Sound on the mu-faithful range.
        rules.push_back({mono(n, {{MU, 1}, {RHO, 1}, {THETA, 1}}), {}});
    }

    // Two-phase build: probe for the top-degree normal monomials, then
    // attach the integral table (rho*theta^g = g!, mu-monomials integrate
    // to 0 under the mu = 0 normalization).
    RingPtr probe = make_ring(gens, rules, 2 * g + 2, {});
    TermMap integrals;
    Monomial principal = mono(n, {{RHO, 1}, {THETA, g}});
    for (const Monomial& m : probe->top_normal_monomials()) {
        if (m == principal)
            integrals.emplace(m, Rational(factorial(static_cast<unsigned>(g))));
        else
            integrals.emplace(m, Rational(0));
    }
    RingPtr ring = make_ring(std::move(gens), std::move(rules), 2 * g + 2, std::move(integrals));

    auto space = std::make_shared<SpaceRing>();
    space->ring = ring;
    space->kind = SpaceKind::jac_x_curve;
    Element gamma = normalize(ring->generator_element("gamma"));
    Element rho = normalize(ring->generator_element("rho"));
    space->named.emplace("gamma", gamma);
    space->named.emplace("theta", normalize(ring->generator_element("theta")));
    space->named.emplace("rho", rho);
    space->named.emplace("pi", gamma + Rational(k) * rho);
    if (with_mu)
        space->named.emplace("mu", normalize(ring->generator_element("mu")));
    cache.emplace(key, space);
    return space;
}

SpacePtr proj_bundle_ring(const SpacePtr& base, const std::vector<Element>& chern, int rank,
                          const std::string& fiber_name) {
    if (rank < 1)
        throw Error("proj_bundle_ring requires rank >= 1");
    if (static_cast<int>(chern.size()) > rank)
        throw BadChernDegrees("more Chern classes than the bundle rank");
    if (base->ring->generator_index(fiber_name) >= 0)
        throw NameCollision("fiber class '" + fiber_name + "' collides with a base generator");
    for (std::size_t i = 0; i < chern.size(); ++i) {
        const Element& c = chern[i];
        if (c.ring() != base->ring)
            throw MixedRings("Chern classes must live in the base ring");
        Element cn = normalize(c);
        if (!cn.is_zero() && cn.homogeneous_degree() != 2 * static_cast<int>(i + 1))
            throw BadChernDegrees("c_" + std::to_string(i + 1) + " must have degree " +
                                  std::to_string(2 * (i + 1)));
    }

    // Fiber class first: highest precedence, so the bundle relation rewrites
    // downward in fiber powers.
    std::vector<Generator> gens{{fiber_name, 2, 0}};
    for (const Generator& g : base->ring->generators())
        gens.push_back(g);
    const std::size_t n = gens.size();

    auto lift = [&](const Monomial& m, int fiber_exp) {
        Monomial out(n);
        out.set_exp(0, fiber_exp);
        for (std::size_t i = 0; i < m.size(); ++i)
            out.set_exp(i + 1, m.exp(i));
        return out;
    };

    std::vector<RewriteRule> rules;
    for (const RewriteRule& r : base->ring->rules()) {
        RewriteRule nr;
        nr.lhs = lift(r.lhs, 0);
        for (const auto& [m, c] : r.rhs)
            nr.rhs.emplace(lift(m, 0), c);
        rules.push_back(std::move(nr));
    }
    {
        RewriteRule bundle;
        bundle.lhs = lift(Monomial(base->ring->generators().size()), rank);
        for (std::size_t i = 0; i < chern.size(); ++i) {
            Element cn = normalize(chern[i]);
            for (const auto& [m, c] : cn.terms())
                bundle.rhs.emplace(lift(m, rank - static_cast<int>(i) - 1), -c);
        }
        rules.push_back(std::move(bundle));
    }

    TermMap integrals;
    for (const auto& [m, c] : base->ring->integrals())
        integrals.emplace(lift(m, rank - 1), c);

    RingPtr ring = make_ring(std::move(gens), std::move(rules),
                             base->ring->top_degree() + 2 * (rank - 1), std::move(integrals));

    auto space = std::make_shared<SpaceRing>();
    space->ring = ring;
    space->kind = SpaceKind::proj_bundle;
    space->base = base;
    space->fiber_name = fiber_name;
    space->fiber_rank = rank;
    for (const auto& [name, e] : base->named)
        space->named.emplace(name, embed_by_name(e, ring));
    space->named.emplace(fiber_name, normalize(ring->generator_element(fiber_name)));
    return space;
}

SpacePtr wbar_ring() {
    static SpacePtr cached;
    {
        std::lock_guard lock(g_cache_mutex);
        if (cached)
            return cached;
    }
    SpacePtr base = jac_x_curve_ring(2, 1, false);
    Element c1 = Rational(4) * base->cls("rho");
    SpacePtr space = proj_bundle_ring(base, {c1}, 3, "zeta");
    std::lock_guard lock(g_cache_mutex);
    if (!cached)
        cached = space;
    return cached;
}

Element bundle_pushforward(const SpacePtr& total, const Element& x) {
    if (total->kind != SpaceKind::proj_bundle)
        throw NotABundleRing("bundle_pushforward requires a projective-bundle ring");
    if (x.ring() != total->ring)
        throw MixedRings("element does not live on the bundle ring");
    Element c = coeff_of(normalize(x), total->fiber_name, total->fiber_rank - 1);
    return embed_by_name(c, total->base->ring);
}

Element curve_chern_of_extension_bundle(int g) {
    if (g < 2)
        throw Error("curve_chern_of_extension_bundle requires g >= 2");
    SpacePtr curve = curve_even_ring(g);
    const Element rho = curve->cls("rho");
    // Whitney: c(V') = c(O x H^1(omega^-1)) / c(omega^-2), in Q[rho]/(rho^2).
    Element c_omega_inv2 = curve->ring->one() + Rational(-2 * (2 * g - 2)) * rho;
    Element c_vprime = inverse_unit(c_omega_inv2);
    Element c1 = degree_component(c_vprime, 2);
    Element expected = Rational(2 * (2 * g - 2)) * rho;
    if (c1 != expected || !degree_component(c_vprime, 4).is_zero())
        throw ModelMismatch("extension bundle Chern classes disagree with 2(2g-2)rho");
    return c1;
}

int extension_bundle_rank(int g) {
    if (g < 2)
        throw Error("extension_bundle_rank requires g >= 2");
    return 3 * g - 3;
}

} // namespace cohocalc
