#include "cohocalc/errors.hpp"
#include "cohocalc/ring.hpp"
#include "cohocalc/spaces.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace cohocalc;

namespace {

// The extension-space presentation, built by hand. Fiber class first so the
// bundle relation rewrites downward.
RingPtr make_wbar() {
    std::vector<Generator> gens{
        {"zeta", 2, 0}, {"gamma", 2, 1}, {"theta", 2, 0}, {"rho", 2, 2}};
    const int Z = 0, G = 1, T = 2, R = 3;
    auto m = [&](std::initializer_list<std::pair<int, int>> exps) {
        Monomial mm(4);
        for (auto [i, e] : exps)
            mm.set_exp(i, e);
        return mm;
    };
    std::vector<RewriteRule> rules;
    rules.push_back({m({{R, 2}}), {}});
    rules.push_back({m({{G, 1}, {R, 1}}), {}});
    rules.push_back({m({{G, 2}}), {{m({{R, 1}, {T, 1}}), Rational(-2)}}});
    rules.push_back({m({{T, 3}}), {}});
    rules.push_back({m({{G, 1}, {T, 2}}), {}});
    rules.push_back({m({{Z, 3}}), {{m({{R, 1}, {Z, 2}}), Rational(-4)}}});
    TermMap integrals{{m({{Z, 2}, {T, 2}, {R, 1}}), Rational(2)}};
    return make_ring(gens, rules, 10, integrals);
}

// Independent reduction oracle: explore every applicable rule at every step
// and collect all fully reduced results.
void reduce_all_orders(const RingPtr& ring, const TermMap& poly, std::set<TermMap>& out) {
    for (const auto& [mono, coeff] : poly) {
        if (ring->monomial_degree(mono) > ring->top_degree()) {
            TermMap next = poly;
            next.erase(mono);
            reduce_all_orders(ring, next, out);
            return;
        }
        for (const RewriteRule& r : ring->rules()) {
            if (!r.lhs.divides(mono))
                continue;
            Monomial q = mono.divide(r.lhs);
            TermMap next = poly;
            Rational c = coeff;
            next.erase(mono);
            for (const auto& [rm, rc] : r.rhs) {
                Monomial t = rm.times(q);
                auto [it, inserted] = next.emplace(t, c * rc);
                if (!inserted) {
                    it->second += c * rc;
                    if (it->second.is_zero())
                        next.erase(it);
                }
            }
            reduce_all_orders(ring, next, out);
        }
    }
    // fully reduced iff no rule applied anywhere
    bool reduced = true;
    for (const auto& [mono, coeff] : poly) {
        if (ring->monomial_degree(mono) > ring->top_degree())
            reduced = false;
        for (const RewriteRule& r : ring->rules())
            if (r.lhs.divides(mono))
                reduced = false;
    }
    if (reduced)
        out.insert(poly);
}

Element random_element(const RingPtr& ring, std::mt19937_64& rng, int max_terms = 5) {
    const auto& monos = ring->monomials_up_to_top();
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> nterms(0, max_terms);
    TermMap terms;
    for (int i = 0, n = nterms(rng); i < n; ++i) {
        Rational c(coeff(rng));
        if (c.is_zero())
            continue;
        auto [it, inserted] = terms.emplace(monos[pick(rng)], c);
        if (!inserted)
            it->second += c;
    }
    std::erase_if(terms, [](const auto& t) { return t.second.is_zero(); });
    return Element(ring, std::move(terms));
}

} // namespace

TEST_SUITE_BEGIN("ring");

TEST_CASE("make_ring: the Picard-variety ring of a genus-5 curve") {
    RingPtr pic = make_ring({{"theta", 2, 0}}, {{Monomial{6}, {}}}, 10,
                            {{Monomial{5}, Rational(120)}});
    Element theta = pic->generator_element("theta");
    CHECK(integrate(pow(Rational(4) * theta, 5)) == Rational(122880));
    CHECK(normalize(pow(theta, 6)).is_zero());
}

TEST_CASE("make_ring: the point ring") {
    RingPtr pt = make_ring({}, {}, 0, {{Monomial(0), Rational(1)}});
    CHECK(integrate(pt->one()) == Rational(1));
    CHECK(mul(pt->one(), pt->one()) == pt->one());
}

TEST_CASE("make_ring: the extension-space ring") {
    RingPtr wbar = make_wbar();
    CHECK(wbar->top_degree() == 10);
    Element gamma = wbar->generator_element("gamma");
    Element rho = wbar->generator_element("rho");
    Element theta = wbar->generator_element("theta");
    CHECK(normalize(pow(gamma, 2)) == Rational(-2) * mul(rho, theta));
    Element top = mul(pow(wbar->generator_element("zeta"), 2), mul(rho, pow(theta, 2)));
    CHECK(integrate(top) == Rational(2));
}

TEST_CASE("make_ring: validation errors") {
    CHECK_THROWS_AS(make_ring({{"x", 2, 0}, {"x", 2, 0}}, {}, 4, {}), DuplicateGenerator);
    // gamma^2 -> rho is not degree-homogeneous
    CHECK_THROWS_AS(make_ring({{"gamma", 2, 1}, {"rho", 2, 2}},
                              {{Monomial{2, 0}, {{Monomial{0, 1}, Rational(1)}}}}, 4, {}),
                    NonHomogeneousRule);
    // rho^2 -> gamma^2 does not decrease (gamma precedes rho)
    CHECK_THROWS_AS(make_ring({{"gamma", 2, 1}, {"rho", 2, 2}},
                              {{Monomial{0, 2}, {{Monomial{2, 0}, Rational(1)}}}}, 4, {}),
                    NonDecreasingRule);
    // contradictory rules
    std::vector<RewriteRule> contradictory;
    contradictory.push_back({Monomial{2, 0, 0}, {{Monomial{0, 1, 1}, Rational(-2)}}});
    contradictory.push_back({Monomial{2, 0, 0}, {{Monomial{0, 1, 1}, Rational(1)}}});
    CHECK_THROWS_AS(make_ring({{"gamma", 2, 1}, {"theta", 2, 0}, {"rho", 2, 2}},
                              contradictory, 4, {}),
                    NotConfluent);
    CHECK_THROWS_AS(make_ring({{"odd", 3, 0}}, {}, 6, {}), Error);
    CHECK_THROWS_AS(make_ring({{"x", 2, 5}}, {}, 4, {}), Error);  // bad fiber tag
}

TEST_CASE("normalize: rewrite examples against the all-orders oracle") {
    RingPtr wbar = make_wbar();
    Element zeta = wbar->generator_element("zeta");

    // zeta^4 -> -4 rho zeta^3 -> 16 rho^2 zeta^2 -> 0
    Element z4 = pow(zeta, 4);
    CHECK(z4.is_zero());

    Monomial z4m(4);
    z4m.set_exp(0, 4);
    std::set<TermMap> results;
    reduce_all_orders(wbar, {{z4m, Rational(1)}}, results);
    REQUIRE(results.size() == 1);
    CHECK(results.begin()->empty());

    Monomial g2(4);
    g2.set_exp(1, 2);
    results.clear();
    reduce_all_orders(wbar, {{g2, Rational(1)}}, results);
    REQUIRE(results.size() == 1);
    CHECK(Element(wbar, *results.begin()) == normalize(wbar->monomial_element(g2)));
}

TEST_CASE("every monomial reduces to one normal form under every order") {
    RingPtr wbar = make_wbar();
    for (const Monomial& m : wbar->monomials_up_to_top()) {
        std::set<TermMap> results;
        reduce_all_orders(wbar, {{m, Rational(1)}}, results);
        REQUIRE(results.size() == 1);
        CHECK(Element(wbar, *results.begin()) == normalize(wbar->monomial_element(m)));
    }
}

TEST_CASE("normalize: fixed point and idempotence") {
    RingPtr wbar = make_wbar();
    Element rt2 = mul(wbar->generator_element("rho"), pow(wbar->generator_element("theta"), 2));
    CHECK(normalize(rt2) == rt2);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Element x = random_element(wbar, rng);
        CHECK(normalize(normalize(x)) == normalize(x));
    }
}

TEST_CASE("normalize preserves homogeneous degree") {
    RingPtr wbar = make_wbar();
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        Element x = random_element(wbar, rng);
        for (int d = 0; d <= wbar->top_degree(); d += 2) {
            Element comp = degree_component(x, d);
            Element n = normalize(comp);
            if (!n.is_zero())
                CHECK(n.homogeneous_degree() == d);
        }
    }
}

TEST_CASE("linear_combine") {
    RingPtr wbar = make_wbar();
    Element theta = wbar->generator_element("theta");
    std::vector<std::pair<Rational, Element>> pairs{{Rational(1), theta},
                                                    {Rational(-1), theta}};
    CHECK(linear_combine(pairs).is_zero());

    RingPtr other = make_wbar();
    std::vector<std::pair<Rational, Element>> mixed{{Rational(1), theta},
                                                    {Rational(1), other->generator_element("theta")}};
    CHECK_THROWS_AS(linear_combine(mixed), MixedRings);
}

TEST_CASE("mul: vanishing and nonvanishing products") {
    SpacePtr jac = jac_x_curve_ring(2, 1, false);
    Element pi = jac->cls("pi");
    Element rho = jac->cls("rho");
    Element theta = jac->cls("theta");
    CHECK(mul(rho, pi).is_zero());
    CHECK(mul(pow(pi, 2), theta) == Rational(-2) * mul(rho, pow(theta, 2)));
    Element x = Rational(3) * theta + rho;
    CHECK(mul(jac->ring->one(), x) == x);
}

TEST_CASE("pow") {
    SpacePtr pic3 = abelian_ring(3);
    Element theta = pic3->cls("theta");
    CHECK(pow(Rational(4) * theta, 3) == Rational(64) * pow(theta, 3));
    CHECK(pow(theta, 0) == pic3->ring->one());

    SpacePtr pic5 = abelian_ring(5);
    CHECK(pow(Rational(4) * pic5->cls("theta"), 5) ==
          Rational(1024) * pow(pic5->cls("theta"), 5));

    SpacePtr wbar = wbar_ring();
    Element cls = Rational(-4) * wbar->cls("theta") + Rational(2) * wbar->cls("pi") -
                  Rational(7) * wbar->cls("rho") - wbar->cls("zeta");
    Element expected = Rational(-800) * mul(pow(wbar->cls("zeta"), 2),
                                            mul(wbar->cls("rho"), pow(wbar->cls("theta"), 2)));
    CHECK(pow(cls, 5) == expected);
}

TEST_CASE("exp_truncated") {
    SpacePtr curve = curve_even_ring(2);
    Element rho = curve->cls("rho");
    CHECK(exp_truncated(rho) == curve->ring->one() + rho);
    CHECK(exp_truncated(curve->ring->zero()) == curve->ring->one());
    CHECK_THROWS_AS(exp_truncated(curve->ring->one() + rho), NonPositiveDegreeTerm);

    SpacePtr jac = jac_x_curve_ring(2, 1, true);
    Element c1 = jac->cls("mu") + jac->cls("gamma") + jac->cls("rho");
    Element expected = jac->ring->one() + c1 +
                       mul(jac->cls("rho"), jac->cls("mu") - jac->cls("theta"));
    CHECK(exp_truncated(c1) == expected);
}

TEST_CASE("exp(x) exp(-x) = 1") {
    RingPtr wbar = make_wbar();
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        Element x = random_element(wbar, rng);
        TermMap positive;
        for (const auto& [m, c] : x.terms())
            if (wbar->monomial_degree(m) > 0)
                positive.emplace(m, c);
        Element p(wbar, positive);
        CHECK(mul(exp_truncated(p), exp_truncated(-p)) == wbar->one());
    }
}

TEST_CASE("degree_component") {
    SpacePtr jac = jac_x_curve_ring(2, 1, true);
    Element ch = jac->ring->one() + jac->cls("mu") + jac->cls("gamma") + jac->cls("rho") +
                 mul(jac->cls("rho"), jac->cls("mu") - jac->cls("theta"));
    CHECK(degree_component(ch, 4) ==
          mul(jac->cls("rho"), jac->cls("mu")) - mul(jac->cls("rho"), jac->cls("theta")));
    CHECK(degree_component(ch, 12).is_zero());
    CHECK(degree_component(ch, 0) == jac->ring->one());
}

TEST_CASE("integrate") {
    SpacePtr pic5 = abelian_ring(5);
    CHECK(integrate(pow(Rational(4) * pic5->cls("theta"), 5)) == Rational(122880));
    CHECK(integrate(pic5->ring->one()) == Rational(0));

    RingPtr wbar = make_wbar();
    Element top = mul(pow(wbar->generator_element("zeta"), 2),
                      mul(wbar->generator_element("rho"),
                          pow(wbar->generator_element("theta"), 2)));
    CHECK(integrate(top) == Rational(2));

    // missing table entry for a genuine top-degree normal monomial
    RingPtr gap = make_ring({{"a", 2, 0}, {"b", 2, 0}},
                            {{Monomial{2, 0}, {}}, {Monomial{0, 2}, {}}}, 4,
                            {{Monomial{1, 0}, Rational(1)}});
    Element ab = mul(gap->generator_element("a"), gap->generator_element("b"));
    CHECK_THROWS_AS(integrate(ab), UnknownTopMonomial);

    RingPtr empty = make_ring({{"a", 2, 0}}, {{Monomial{2}, {}}}, 2, {});
    CHECK_THROWS_AS(integrate(empty->one()), Error);
}

TEST_CASE("integrate is linear") {
    RingPtr wbar = make_wbar();
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int i = 0; i < 100; ++i) {
        Element x = random_element(wbar, rng);
        Element y = random_element(wbar, rng);
        Rational a(coeff(rng)), b(coeff(rng));
        CHECK(integrate(a * x + b * y) == a * integrate(x) + b * integrate(y));
    }
}

TEST_CASE("coeff_of") {
    RingPtr wbar = make_wbar();
    Element quintic = Rational(-800) * mul(pow(wbar->generator_element("zeta"), 2),
                                           mul(wbar->generator_element("rho"),
                                               pow(wbar->generator_element("theta"), 2)));
    Element c = coeff_of(quintic, "zeta", 2);
    CHECK(c == Rational(-800) * mul(wbar->generator_element("rho"),
                                    pow(wbar->generator_element("theta"), 2)));

    Element x = mul(wbar->generator_element("rho"), wbar->generator_element("theta"));
    CHECK(coeff_of(x, "zeta", 0) == x);

    Element zeta = wbar->generator_element("zeta");
    Element mixed = zeta + mul(wbar->generator_element("rho"), pow(zeta, 2));
    CHECK(coeff_of(mixed, "zeta", 1) == wbar->one());
}

TEST_CASE("tensor_product") {
    RingPtr sm = make_ring({{"alpha", 2, 0}}, {{Monomial{4}, {}}}, 6,
                           {{Monomial{3}, Rational(4)}});
    RingPtr pic0 = make_ring({{"theta0", 2, 0}}, {{Monomial{3}, {}}}, 4,
                             {{Monomial{2}, Rational(2)}});
    RingPtr prod = tensor_product(sm, pic0);
    CHECK(prod->top_degree() == 10);
    Element alpha = prod->generator_element("alpha");
    Element theta0 = prod->generator_element("theta0");
    CHECK(integrate(mul(pow(alpha, 3), pow(theta0, 2))) == Rational(8));
    CHECK(integrate(pow(alpha + Rational(4) * theta0, 5)) == Rational(1280));

    // A (x) point leaves the integrals unchanged
    RingPtr pt = make_ring({}, {}, 0, {{Monomial(0), Rational(1)}});
    RingPtr same = tensor_product(sm, pt);
    CHECK(integrate(pow(same->generator_element("alpha"), 3)) == Rational(4));

    CHECK_THROWS_AS(tensor_product(sm, sm), NameCollision);
}

TEST_CASE("tensor-product integral factorizes") {
    RingPtr sm = make_ring({{"alpha", 2, 0}}, {{Monomial{4}, {}}}, 6,
                           {{Monomial{3}, Rational(4)}});
    RingPtr pic0 = make_ring({{"theta0", 2, 0}}, {{Monomial{3}, {}}}, 4,
                             {{Monomial{2}, Rational(2)}});
    RingPtr prod = tensor_product(sm, pic0);
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        Element x = random_element(sm, rng);
        Element y = random_element(pic0, rng);
        CHECK(integrate(mul(embed_by_name(x, prod), embed_by_name(y, prod))) ==
              integrate(x) * integrate(y));
    }
}

TEST_CASE("mul is commutative, associative and distributive") {
    RingPtr wbar = make_wbar();
    std::mt19937_64 rng(0x5eed);
    for (int i = 0; i < 200; ++i) {
        Element a = random_element(wbar, rng);
        Element b = random_element(wbar, rng);
        Element c = random_element(wbar, rng);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
    }
}

TEST_CASE("inverse_unit") {
    SpacePtr curve = curve_even_ring(2);
    Element u = curve->ring->one() + Rational(-4) * curve->cls("rho");
    CHECK(mul(inverse_unit(u), u) == curve->ring->one());

    RingPtr wbar = make_wbar();
    Element c = wbar->one() + Rational(4) * wbar->generator_element("rho") +
                mul(wbar->generator_element("theta"), wbar->generator_element("rho"));
    CHECK(mul(inverse_unit(c), c) == wbar->one());
    CHECK_THROWS_AS(inverse_unit(wbar->generator_element("rho")), Error);
}

TEST_CASE("verify_presentation") {
    RingPtr wbar = make_wbar();
    CHECK(verify_presentation(wbar).passed());

    // contradictory rules, reported with the witness monomial
    RingPtr bad = RingPresentation::make_unchecked(
        {{"gamma", 2, 1}, {"theta", 2, 0}, {"rho", 2, 2}},
        {{Monomial{2, 0, 0}, {{Monomial{0, 1, 1}, Rational(-2)}}},
         {Monomial{2, 0, 0}, {{Monomial{0, 1, 1}, Rational(1)}}}},
        4, {});
    Report r = verify_presentation(bad);
    CHECK_FALSE(r.passed());
    bool witness = false;
    for (const Step& s : r.steps)
        if (s.verdict == Verdict::fail && s.computed.find("gamma^2") != std::string::npos)
            witness = true;
    CHECK(witness);

    // missing integral entry
    RingPtr gapped = RingPresentation::make_unchecked(
        {{"theta", 2, 0}}, {{Monomial{3}, {}}}, 4, {});
    Report g = verify_presentation(gapped);
    CHECK_FALSE(g.passed());
    bool coverage = false;
    for (const Step& s : g.steps)
        if (s.label.find("integrals coverage") != std::string::npos &&
            s.verdict == Verdict::fail)
            coverage = true;
    CHECK(coverage);

    // a non-terminating rule is reported and the confluence check stands down
    RingPtr rising = RingPresentation::make_unchecked(
        {{"gamma", 2, 1}, {"rho", 2, 2}},
        {{Monomial{0, 2}, {{Monomial{2, 0}, Rational(1)}}}}, 4, {});
    Report nt = verify_presentation(rising);
    CHECK_FALSE(nt.passed());
    bool termination = false;
    for (const Step& s : nt.steps)
        if (s.label.find("order-decreasing") != std::string::npos &&
            s.verdict == Verdict::fail)
            termination = true;
    CHECK(termination);
}

TEST_CASE("canonical element strings") {
    RingPtr wbar = make_wbar();
    CHECK(wbar->zero().str() == "0");
    CHECK(wbar->one().str() == "1");
    Element g2 = normalize(pow(wbar->generator_element("gamma"), 2));
    CHECK(g2.str() == "-2*rho*theta");
    Element top = Rational(-800) * mul(pow(wbar->generator_element("zeta"), 2),
                                       mul(wbar->generator_element("rho"),
                                           pow(wbar->generator_element("theta"), 2)));
    CHECK(top.str() == "-800*rho*theta^2*zeta^2");
    Element half = Rational(1, 2) * wbar->generator_element("theta");
    CHECK(half.str() == "1/2*theta");
}

TEST_CASE("embed_by_name") {
    SpacePtr jac = jac_x_curve_ring(2, 1, false);
    SpacePtr wbar = wbar_ring();
    Element moved = embed_by_name(jac->cls("theta"), wbar->ring);
    CHECK(moved == wbar->cls("theta"));
    SpacePtr pic = abelian_ring(2);
    CHECK_THROWS_AS(embed_by_name(jac->cls("rho"), pic->ring), Error);
}

TEST_SUITE_END();
