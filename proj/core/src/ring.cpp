#include "cohocalc/ring.hpp"

#include "cohocalc/errors.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>

namespace cohocalc {

namespace {

// Enumeration guard; the presentations in use stay far below this.
constexpr std::size_t kMaxMonomials = 1'000'000;

int degree_of(const std::vector<Generator>& gens, const Monomial& m) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += m.exp(i) * gens[i].degree;
    return d;
}

// Graded-lexicographic: total degree first, then the first generator (in
// list order) with differing exponent decides, larger exponent = larger.
bool graded_lex_less(const std::vector<Generator>& gens, const Monomial& a, const Monomial& b) {
    int da = degree_of(gens, a);
    int db = degree_of(gens, b);
    if (da != db)
        return da < db;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.exp(i) != b.exp(i))
            return a.exp(i) < b.exp(i);
    }
    return false;
}

std::string monomial_str(const std::vector<Generator>& gens, const Monomial& m) {
    if (m.is_one())
        return "1";
    std::string s;
    // Base classes first: reverse of declaration (= precedence) order.
    for (std::size_t j = gens.size(); j-- > 0;) {
        int e = m.exp(j);
        if (e == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += gens[j].name;
        if (e > 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

void enumerate_monomials(const std::vector<Generator>& gens, int top, std::size_t idx,
                         Monomial& current, int degree, std::vector<Monomial>& out) {
    if (out.size() > kMaxMonomials)
        throw Error("monomial enumeration exceeds the supported size");
    if (idx == gens.size()) {
        out.push_back(current);
        return;
    }
    int gdeg = gens[idx].degree;
    for (int e = 0; degree + e * gdeg <= top; ++e) {
        current.set_exp(idx, e);
        enumerate_monomials(gens, top, idx + 1, current, degree + e * gdeg, out);
    }
    current.set_exp(idx, 0);
}

void add_term(TermMap& into, const Monomial& m, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = into.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            into.erase(it);
    }
}

} // namespace

// --- Monomial ----------------------------------------------------------------

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& m) const {
    assert(size() == m.size());
    for (std::size_t i = 0; i < size(); ++i)
        if (exps_[i] > m.exp(i))
            return false;
    return true;
}

Monomial Monomial::times(const Monomial& m) const {
    assert(size() == m.size());
    Monomial r = *this;
    for (std::size_t i = 0; i < size(); ++i)
        r.exps_[i] += m.exp(i);
    return r;
}

Monomial Monomial::divide(const Monomial& m) const {
    assert(m.divides(*this));
    Monomial r = *this;
    for (std::size_t i = 0; i < size(); ++i)
        r.exps_[i] -= m.exp(i);
    return r;
}

// --- RingPresentation --------------------------------------------------------

RingPtr RingPresentation::make(std::vector<Generator> generators, std::vector<RewriteRule> rules,
                               int top_degree, TermMap integrals) {
    auto ring = std::shared_ptr<RingPresentation>(new RingPresentation());
    ring->generators_ = std::move(generators);
    ring->rules_ = std::move(rules);
    ring->top_degree_ = top_degree;
    ring->integrals_ = std::move(integrals);
    ring->build_tables(/*validate=*/true);
    return ring;
}

RingPtr RingPresentation::make_unchecked(std::vector<Generator> generators,
                                         std::vector<RewriteRule> rules, int top_degree,
                                         TermMap integrals) {
    auto ring = std::shared_ptr<RingPresentation>(new RingPresentation());
    ring->generators_ = std::move(generators);
    ring->rules_ = std::move(rules);
    ring->top_degree_ = top_degree;
    ring->integrals_ = std::move(integrals);
    ring->build_tables(/*validate=*/false);
    return ring;
}

void RingPresentation::build_tables(bool validate) {
    const std::size_t n = generators_.size();

    for (std::size_t i = 0; i < n; ++i) {
        const Generator& g = generators_[i];
        if (validate && (g.degree <= 0 || g.degree % 2 != 0))
            throw Error("generator '" + g.name + "' must have positive even degree");
        if (validate && (g.cdeg < 0 || g.cdeg > 2))
            throw Error("generator '" + g.name + "' must have fiber degree 0, 1 or 2");
        auto [it, inserted] = index_by_name_.emplace(g.name, static_cast<int>(i));
        if (!inserted) {
            if (validate)
                throw DuplicateGenerator("duplicate generator name '" + g.name + "'");
        }
    }
    if (validate && top_degree_ < 0)
        throw Error("top degree must be non-negative");

    bool rules_terminate = true;
    for (const RewriteRule& r : rules_) {
        if (r.lhs.size() != n)
            throw Error("rule monomial width does not match the generator count");
        int lhs_deg = degree_of(generators_, r.lhs);
        for (const auto& [m, c] : r.rhs) {
            if (m.size() != n)
                throw Error("rule monomial width does not match the generator count");
            if (degree_of(generators_, m) != lhs_deg) {
                if (validate)
                    throw NonHomogeneousRule("rule " + monomial_str(generators_, r.lhs) +
                                             " -> ... is not degree-homogeneous at " +
                                             monomial_str(generators_, m));
            }
            if (!graded_lex_less(generators_, m, r.lhs)) {
                rules_terminate = false;
                if (validate)
                    throw NonDecreasingRule("rule " + monomial_str(generators_, r.lhs) +
                                            " -> ... does not decrease at " +
                                            monomial_str(generators_, m));
            }
        }
    }

    Monomial scratch(n);
    enumerate_monomials(generators_, top_degree_, 0, scratch, 0, all_monomials_);
    std::sort(all_monomials_.begin(), all_monomials_.end(),
              [this](const Monomial& a, const Monomial& b) {
                  return graded_lex_less(generators_, a, b);
              });

    if (!rules_terminate) {
        // Cannot reduce safely; leave every monomial in place so that
        // verify_presentation can still report the defect.
        for (const Monomial& m : all_monomials_)
            nf_table_[m] = TermMap{{m, Rational(1)}};
        return;
    }

    // Normal forms in ascending monomial order: a rule application replaces a
    // monomial by strictly smaller ones of the same degree, so every lookup
    // below is already resolved.
    for (const Monomial& m : all_monomials_) {
        const RewriteRule* applicable = nullptr;
        for (const RewriteRule& r : rules_) {
            if (r.lhs.divides(m)) {
                applicable = &r;
                break;
            }
        }
        if (!applicable) {
            nf_table_[m] = TermMap{{m, Rational(1)}};
            continue;
        }
        Monomial q = m.divide(applicable->lhs);
        TermMap nf;
        for (const auto& [rm, rc] : applicable->rhs) {
            const TermMap& sub = nf_table_.at(rm.times(q));
            for (const auto& [sm, sc] : sub)
                add_term(nf, sm, rc * sc);
        }
        nf_table_[m] = std::move(nf);
    }

    if (validate) {
        for (const Monomial& m : all_monomials_) {
            const TermMap& expected = nf_table_.at(m);
            for (const RewriteRule& r : rules_) {
                if (!r.lhs.divides(m))
                    continue;
                Monomial q = m.divide(r.lhs);
                TermMap candidate;
                for (const auto& [rm, rc] : r.rhs) {
                    const TermMap& sub = nf_table_.at(rm.times(q));
                    for (const auto& [sm, sc] : sub)
                        add_term(candidate, sm, rc * sc);
                }
                if (candidate != expected)
                    throw NotConfluent("monomial " + monomial_str(generators_, m) +
                                       " has two distinct normal forms");
            }
        }
    }
}

int RingPresentation::generator_index(std::string_view name) const {
    auto it = index_by_name_.find(name);
    return it == index_by_name_.end() ? -1 : it->second;
}

int RingPresentation::monomial_degree(const Monomial& m) const {
    return degree_of(generators_, m);
}

int RingPresentation::monomial_cdeg(const Monomial& m) const {
    int c = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        c += m.exp(i) * generators_[i].cdeg;
    return c;
}

bool RingPresentation::monomial_less(const Monomial& a, const Monomial& b) const {
    return graded_lex_less(generators_, a, b);
}

std::vector<Monomial> RingPresentation::top_normal_monomials() const {
    std::vector<Monomial> out;
    for (const Monomial& m : all_monomials_) {
        if (monomial_degree(m) != top_degree_)
            continue;
        if (is_normal(m))
            out.push_back(m);
    }
    return out;
}

const TermMap& RingPresentation::normal_form(const Monomial& m) const {
    static const TermMap zero;
    if (monomial_degree(m) > top_degree_)
        return zero;
    auto it = nf_table_.find(m);
    if (it == nf_table_.end())
        throw Error("monomial does not belong to this presentation");
    return it->second;
}

bool RingPresentation::is_normal(const Monomial& m) const {
    const TermMap& nf = normal_form(m);
    return nf.size() == 1 && nf.begin()->first == m && nf.begin()->second == Rational(1);
}

Element RingPresentation::zero() const {
    return Element(shared_from_this(), {});
}

Element RingPresentation::one() const {
    return Element(shared_from_this(), {{Monomial(generators_.size()), Rational(1)}});
}

Element RingPresentation::generator_element(std::string_view name) const {
    int idx = generator_index(name);
    if (idx < 0)
        throw Error("no generator named '" + std::string(name) + "'");
    Monomial m(generators_.size());
    m.set_exp(static_cast<std::size_t>(idx), 1);
    return Element(shared_from_this(), {{m, Rational(1)}});
}

Element RingPresentation::monomial_element(const Monomial& m, const Rational& c) const {
    if (m.size() != generators_.size())
        throw Error("monomial width does not match the generator count");
    if (c.is_zero())
        return zero();
    return Element(shared_from_this(), {{m, c}});
}

// --- Element -----------------------------------------------------------------

int Element::homogeneous_degree() const {
    if (terms_.empty())
        return 0;
    int d = ring_->monomial_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (ring_->monomial_degree(m) != d)
            return -1;
    return d;
}

std::string Element::str() const {
    if (terms_.empty())
        return "0";
    std::vector<const std::pair<const Monomial, Rational>*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_)
        sorted.push_back(&t);
    std::stable_sort(sorted.begin(), sorted.end(), [this](const auto* a, const auto* b) {
        return ring_->monomial_less(b->first, a->first);
    });
    std::string s;
    bool first = true;
    for (const auto* t : sorted) {
        const Rational& c = t->second;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0)
                s += "-";
            first = false;
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        if (t->first.is_one()) {
            s += a.str();
        } else {
            if (a != Rational(1))
                s += a.str() + "*";
            s += monomial_str(ring_->generators(), t->first);
        }
    }
    return s;
}

bool operator==(const Element& a, const Element& b) {
    if (a.ring_ != b.ring_)
        return false;
    if (!a.ring_)
        return true;
    return normalize(a).terms() == normalize(b).terms();
}

Element Element::operator-() const {
    TermMap t;
    for (const auto& [m, c] : terms_)
        t.emplace(m, -c);
    return Element(ring_, std::move(t));
}

Element operator+(const Element& a, const Element& b) {
    if (a.ring() != b.ring())
        throw MixedRings("elements belong to different rings");
    TermMap t = a.terms();
    for (const auto& [m, c] : b.terms())
        add_term(t, m, c);
    return normalize(Element(a.ring(), std::move(t)));
}

Element operator-(const Element& a, const Element& b) {
    return a + (-b);
}

Element operator*(const Element& a, const Element& b) {
    return mul(a, b);
}

Element operator*(const Rational& c, const Element& a) {
    TermMap t;
    for (const auto& [m, k] : a.terms())
        add_term(t, m, c * k);
    return normalize(Element(a.ring(), std::move(t)));
}

std::ostream& operator<<(std::ostream& os, const Element& e) {
    return os << e.str();
}

// --- operations --------------------------------------------------------------

RingPtr make_ring(std::vector<Generator> generators, std::vector<RewriteRule> rules,
                  int top_degree, TermMap integrals) {
    return RingPresentation::make(std::move(generators), std::move(rules), top_degree,
                                  std::move(integrals));
}

Element normalize(const Element& e) {
    const RingPtr& ring = e.ring();
    if (!ring)
        return e;
    TermMap out;
    for (const auto& [m, c] : e.terms()) {
        if (ring->monomial_degree(m) > ring->top_degree())
            continue;
        for (const auto& [nm, nc] : ring->normal_form(m))
            add_term(out, nm, c * nc);
    }
    return Element(ring, std::move(out));
}

Element linear_combine(std::span<const std::pair<Rational, Element>> pairs) {
    if (pairs.empty())
        throw Error("linear_combine: empty combination");
    const RingPtr& ring = pairs.front().second.ring();
    TermMap out;
    for (const auto& [c, e] : pairs) {
        if (e.ring() != ring)
            throw MixedRings("elements belong to different rings");
        for (const auto& [m, k] : e.terms())
            add_term(out, m, c * k);
    }
    return normalize(Element(ring, std::move(out)));
}

Element mul(const Element& a, const Element& b) {
    if (a.ring() != b.ring())
        throw MixedRings("elements belong to different rings");
    const RingPtr& ring = a.ring();
    TermMap out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m = ma.times(mb);
            if (ring->monomial_degree(m) > ring->top_degree())
                continue;
            add_term(out, m, ca * cb);
        }
    }
    return normalize(Element(ring, std::move(out)));
}

Element pow(const Element& a, unsigned n) {
    Element r = a.ring()->one();
    for (unsigned i = 0; i < n; ++i)
        r = mul(r, a);
    return r;
}

Element exp_truncated(const Element& a) {
    const RingPtr& ring = a.ring();
    for (const auto& [m, c] : a.terms())
        if (ring->monomial_degree(m) <= 0)
            throw NonPositiveDegreeTerm("exp_truncated requires positive-degree terms");
    Element sum = ring->one();
    Element term = ring->one();
    Rational nfact(1);
    int max_n = ring->top_degree() / 2 + 1;  // every term has degree >= 2
    for (int n = 1; n <= max_n; ++n) {
        term = mul(term, a);
        if (term.is_zero())
            break;
        nfact *= Rational(n);
        sum = sum + (Rational(1) / nfact) * term;
    }
    return sum;
}

Element degree_component(const Element& a, int d) {
    Element n = normalize(a);
    TermMap out;
    for (const auto& [m, c] : n.terms())
        if (a.ring()->monomial_degree(m) == d)
            out.emplace(m, c);
    return Element(a.ring(), std::move(out));
}

Rational integrate(const Element& a) {
    const RingPtr& ring = a.ring();
    if (ring->integrals().empty())
        throw Error("integrate: the ring has an empty integrals table");
    Element n = normalize(a);
    Rational total(0);
    for (const auto& [m, c] : n.terms()) {
        if (ring->monomial_degree(m) != ring->top_degree())
            continue;
        auto it = ring->integrals().find(m);
        if (it == ring->integrals().end())
            throw UnknownTopMonomial("no integral entry for top monomial " +
                                     monomial_str(ring->generators(), m));
        total += c * it->second;
    }
    return total;
}

Element coeff_of(const Element& a, int gen_index, int k) {
    const RingPtr& ring = a.ring();
    if (gen_index < 0 || gen_index >= static_cast<int>(ring->generators().size()))
        throw Error("coeff_of: generator index out of range");
    Element n = normalize(a);
    TermMap out;
    for (const auto& [m, c] : n.terms()) {
        if (m.exp(static_cast<std::size_t>(gen_index)) != k)
            continue;
        Monomial stripped = m;
        stripped.set_exp(static_cast<std::size_t>(gen_index), 0);
        out.emplace(stripped, c);
    }
    return Element(ring, std::move(out));
}

Element coeff_of(const Element& a, std::string_view gen, int k) {
    int idx = a.ring()->generator_index(gen);
    if (idx < 0)
        throw Error("coeff_of: no generator named '" + std::string(gen) + "'");
    return coeff_of(a, idx, k);
}

Element inverse_unit(const Element& a) {
    const RingPtr& ring = a.ring();
    Element n = normalize(a);
    Rational c = degree_component(n, 0).terms().empty()
                     ? Rational(0)
                     : degree_component(n, 0).terms().begin()->second;
    if (c.is_zero())
        throw Error("inverse_unit: the degree-0 part vanishes");
    Element rest = (Rational(1) / c) * (n - c * ring->one());  // nilpotent part
    Element sum = ring->one();
    Element term = ring->one();
    int max_n = ring->top_degree() / 2 + 1;
    for (int k = 1; k <= max_n; ++k) {
        term = mul(term, -rest);
        if (term.is_zero())
            break;
        sum = sum + term;
    }
    return (Rational(1) / c) * sum;
}

namespace {

Monomial pad_monomial(const Monomial& m, std::size_t total, std::size_t offset) {
    Monomial out(total);
    for (std::size_t i = 0; i < m.size(); ++i)
        out.set_exp(i + offset, m.exp(i));
    return out;
}

} // namespace

RingPtr tensor_product(const RingPtr& a, const RingPtr& b) {
    std::vector<Generator> gens = a->generators();
    for (const Generator& g : b->generators()) {
        if (a->generator_index(g.name) >= 0)
            throw NameCollision("generator '" + g.name + "' occurs in both factors");
        gens.push_back(g);
    }
    const std::size_t na = a->generators().size();
    const std::size_t total = gens.size();

    std::vector<RewriteRule> rules;
    for (const RewriteRule& r : a->rules()) {
        RewriteRule nr;
        nr.lhs = pad_monomial(r.lhs, total, 0);
        for (const auto& [m, c] : r.rhs)
            nr.rhs.emplace(pad_monomial(m, total, 0), c);
        rules.push_back(std::move(nr));
    }
    for (const RewriteRule& r : b->rules()) {
        RewriteRule nr;
        nr.lhs = pad_monomial(r.lhs, total, na);
        for (const auto& [m, c] : r.rhs)
            nr.rhs.emplace(pad_monomial(m, total, na), c);
        rules.push_back(std::move(nr));
    }

    TermMap integrals;
    for (const auto& [ma, ca] : a->integrals())
        for (const auto& [mb, cb] : b->integrals())
            integrals.emplace(pad_monomial(ma, total, 0).times(pad_monomial(mb, total, na)),
                              ca * cb);

    return make_ring(std::move(gens), std::move(rules), a->top_degree() + b->top_degree(),
                     std::move(integrals));
}

Report verify_presentation(const RingPtr& ring) {
    Report rep;
    rep.scenario = "verify_presentation";
    const auto& gens = ring->generators();
    const char* cite = "kernel invariant";

    {
        std::map<std::string, int> seen;
        std::string dup;
        for (const auto& g : gens)
            if (++seen[g.name] == 2)
                dup = g.name;
        rep.add({"generator names distinct", dup.empty() ? "ok" : "duplicate '" + dup + "'",
                 "ok", cite, dup.empty() ? Verdict::pass : Verdict::fail});
    }

    bool homogeneous = true;
    bool decreasing = true;
    std::string witness_h, witness_d;
    for (const RewriteRule& r : ring->rules()) {
        int lhs_deg = ring->monomial_degree(r.lhs);
        for (const auto& [m, c] : r.rhs) {
            if (ring->monomial_degree(m) != lhs_deg && homogeneous) {
                homogeneous = false;
                witness_h = monomial_str(gens, r.lhs);
            }
            if (!ring->monomial_less(m, r.lhs) && decreasing) {
                decreasing = false;
                witness_d = monomial_str(gens, r.lhs);
            }
        }
    }
    rep.add({"rules degree-homogeneous", homogeneous ? "ok" : "violated at " + witness_h, "ok",
             cite, homogeneous ? Verdict::pass : Verdict::fail});
    rep.add({"rules order-decreasing (termination)",
             decreasing ? "ok" : "violated at " + witness_d, "ok", cite,
             decreasing ? Verdict::pass : Verdict::fail});

    if (decreasing) {
        std::string witness;
        for (const Monomial& m : ring->monomials_up_to_top()) {
            const TermMap& expected = ring->normal_form(m);
            for (const RewriteRule& r : ring->rules()) {
                if (!r.lhs.divides(m))
                    continue;
                Monomial q = m.divide(r.lhs);
                TermMap candidate;
                for (const auto& [rm, rc] : r.rhs) {
                    Monomial t = rm.times(q);
                    for (const auto& [sm, sc] : ring->normal_form(t))
                        add_term(candidate, sm, rc * sc);
                }
                if (candidate != expected) {
                    witness = monomial_str(gens, m);
                    break;
                }
            }
            if (!witness.empty())
                break;
        }
        rep.add({"confluence (exhaustive, " + std::to_string(ring->monomials_up_to_top().size()) +
                     " monomials)",
                 witness.empty() ? "ok" : "witness " + witness, "ok", cite,
                 witness.empty() ? Verdict::pass : Verdict::fail});
    } else {
        rep.add({"confluence (exhaustive)", "skipped: rules do not terminate", "ok", cite,
                 Verdict::fail});
    }

    {
        std::string missing;
        for (const Monomial& m : ring->top_normal_monomials()) {
            if (!ring->integrals().count(m)) {
                missing = monomial_str(gens, m);
                break;
            }
        }
        std::string extra;
        for (const auto& [m, c] : ring->integrals()) {
            if (ring->monomial_degree(m) != ring->top_degree() || !ring->is_normal(m)) {
                extra = monomial_str(gens, m);
                break;
            }
        }
        std::string verdict = missing.empty() && extra.empty()
                                  ? "ok"
                                  : (!missing.empty() ? "missing entry for " + missing
                                                      : "entry for non-normal-top " + extra);
        rep.add({"integrals coverage", verdict, "ok", cite,
                 missing.empty() && extra.empty() ? Verdict::pass : Verdict::fail});
    }

    return rep;
}

Element embed_by_name(const Element& e, const RingPtr& target) {
    const RingPtr& src = e.ring();
    if (src == target)
        return normalize(e);
    std::vector<int> map(src->generators().size(), -1);
    for (std::size_t i = 0; i < src->generators().size(); ++i) {
        const Generator& g = src->generators()[i];
        int j = target->generator_index(g.name);
        if (j >= 0 && target->generators()[static_cast<std::size_t>(j)].degree != g.degree)
            throw Error("embed_by_name: generator '" + g.name + "' changes degree");
        map[i] = j;
    }
    TermMap out;
    for (const auto& [m, c] : e.terms()) {
        Monomial t(target->generators().size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m.exp(i) == 0)
                continue;
            if (map[i] < 0)
                throw Error("embed_by_name: generator '" + src->generators()[i].name +
                            "' is absent from the target ring");
            t.set_exp(static_cast<std::size_t>(map[i]), m.exp(i));
        }
        add_term(out, t, c);
    }
    return normalize(Element(target, std::move(out)));
}

} // namespace cohocalc
