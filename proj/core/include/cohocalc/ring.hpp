#pragma once

#include "cohocalc/rational.hpp"
#include "cohocalc/report.hpp"

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cohocalc {

/// A degree-2k generator of a graded-commutative presentation. Only even
/// cohomological degrees occur; odd classes enter through even composites.
/// `cdeg` tags the fiber degree along a curve factor (0, 1 or 2) and drives
/// the curve pushforward.
struct Generator {
    std::string name;
    int degree = 2;
    int cdeg = 0;
};

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

/// Exponent vector over the generators of one ring. Index i refers to
/// generators()[i] of the owning presentation.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t ngens) : exps_(ngens, 0) {}
    Monomial(std::initializer_list<int> exps) : exps_(exps) {}
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

    std::size_t size() const { return exps_.size(); }
    int exp(std::size_t i) const { return exps_[i]; }
    void set_exp(std::size_t i, int e) { exps_[i] = e; }

    bool is_one() const;
    bool divides(const Monomial& m) const;
    Monomial times(const Monomial& m) const;
    Monomial divide(const Monomial& m) const;  // requires divides(m) from the other side

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

private:
    std::vector<int> exps_;
};

/// Polynomial data: monomial -> nonzero rational coefficient.
using TermMap = std::map<Monomial, Rational>;

/// Degree-homogeneous rewrite rule lhs -> rhs where every rhs monomial is
/// strictly smaller than lhs in the ring's monomial order.
struct RewriteRule {
    Monomial lhs;
    TermMap rhs;
};

class Element;

/// A finitely presented graded-commutative algebra over the rationals with a
/// top degree and an integration table on its top-degree normal monomials.
///
/// Immutable after construction; safe to share between threads.
class RingPresentation : public std::enable_shared_from_this<RingPresentation> {
public:
    /// Validated construction: checks generator-name uniqueness, rule
    /// homogeneity, order decrease and (exhaustively, over all monomials of
    /// degree <= top_degree) confluence. Throws DuplicateGenerator,
    /// NonHomogeneousRule, NonDecreasingRule or NotConfluent.
    static RingPtr make(std::vector<Generator> generators,
                        std::vector<RewriteRule> rules,
                        int top_degree,
                        TermMap integrals);

    /// Construction without validation, for diagnostics: verify_presentation
    /// can then report the defects instead of refusing to build.
    static RingPtr make_unchecked(std::vector<Generator> generators,
                                  std::vector<RewriteRule> rules,
                                  int top_degree,
                                  TermMap integrals);

    const std::vector<Generator>& generators() const { return generators_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    int top_degree() const { return top_degree_; }
    const TermMap& integrals() const { return integrals_; }

    /// Index of a generator by name, -1 if absent.
    int generator_index(std::string_view name) const;

    int monomial_degree(const Monomial& m) const;
    int monomial_cdeg(const Monomial& m) const;

    /// Graded-lexicographic order: total degree first, then lexicographic
    /// with precedence given by generator list position (earlier = higher).
    bool monomial_less(const Monomial& a, const Monomial& b) const;

    /// All monomials of degree <= top_degree, and the normal-form monomials
    /// of exact degree top_degree.
    const std::vector<Monomial>& monomials_up_to_top() const { return all_monomials_; }
    std::vector<Monomial> top_normal_monomials() const;

    /// Normal form of a monomial of degree <= top_degree (table lookup).
    const TermMap& normal_form(const Monomial& m) const;
    bool is_normal(const Monomial& m) const;

    Element zero() const;
    Element one() const;
    Element generator_element(std::string_view name) const;
    /// Raw (unnormalized) element c * prod generators[i]^exps[i].
    Element monomial_element(const Monomial& m, const Rational& c = 1) const;

private:
    RingPresentation() = default;
    void build_tables(bool validate);

    std::vector<Generator> generators_;
    std::vector<RewriteRule> rules_;
    int top_degree_ = 0;
    TermMap integrals_;

    std::map<std::string, int, std::less<>> index_by_name_;
    std::vector<Monomial> all_monomials_;
    std::map<Monomial, TermMap> nf_table_;
};

/// An element of a RingPresentation: finitely many monomials with nonzero
/// rational coefficients. Construction through the ring or the module
/// operations; values are immutable.
class Element {
public:
    Element() = default;
    Element(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Exact degree if homogeneous (zero counts as homogeneous of any
    /// degree); -1 if mixed.
    int homogeneous_degree() const;

    /// Canonical string "c1*m1 + c2*m2": terms in descending monomial order,
    /// monomial factors listed base-classes-first (reverse generator
    /// precedence), unit coefficients omitted.
    std::string str() const;

    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const Rational& c, const Element& a);

private:
    RingPtr ring_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

// --- ring_core operations ---------------------------------------------------

RingPtr make_ring(std::vector<Generator> generators,
                  std::vector<RewriteRule> rules,
                  int top_degree,
                  TermMap integrals);

/// Exhaustive rule application plus truncation above top_degree. Idempotent.
Element normalize(const Element& e);

/// Exact linear combination of elements of one ring, normalized.
Element linear_combine(std::span<const std::pair<Rational, Element>> pairs);

/// Cup product: commutative, associative, distributive; normalized.
Element mul(const Element& a, const Element& b);

Element pow(const Element& a, unsigned n);

/// sum a^n / n! truncated at top_degree; a must have positive degree only.
Element exp_truncated(const Element& a);

/// Sum of the terms of exact degree d.
Element degree_component(const Element& a, int d);

/// Applies the integrals table to the top-degree component; lower degrees
/// contribute 0. Throws UnknownTopMonomial on a missing table entry.
Rational integrate(const Element& a);

/// Coefficient of g^k: the terms with exact exponent k of g, divided by g^k.
Element coeff_of(const Element& a, std::string_view gen, int k);
Element coeff_of(const Element& a, int gen_index, int k);

/// Multiplicative inverse of an element whose degree-0 part is nonzero,
/// computed by the truncated geometric series. Used for total Chern / Segre
/// class manipulations.
Element inverse_unit(const Element& a);

/// Kuenneth product of two presentations with disjoint generator names.
RingPtr tensor_product(const RingPtr& a, const RingPtr& b);

/// Re-runs all construction checks plus integrals coverage, reporting
/// failures with witnesses instead of throwing.
Report verify_presentation(const RingPtr& ring);

/// Transfers an element into another ring by matching generator names
/// (each used generator must exist in the target with the same degree).
Element embed_by_name(const Element& e, const RingPtr& target);

} // namespace cohocalc
