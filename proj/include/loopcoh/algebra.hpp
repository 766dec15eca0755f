#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "loopcoh/presentation.hpp"
#include "loopcoh/steenrod.hpp"
#include "loopcoh/term_order.hpp"

namespace loopcoh {

// Memo of monomial normal forms; owned by one thread at a time.
using NormalFormMemo = std::unordered_map<Monomial, Poly, MonomialHash>;

// Normal form with respect to a list of relations: repeatedly replaces a
// multiple of a lead by the same multiple of its tail, using the first
// matching relation in list order. Terminates when every tail is below its
// lead in a monomial order.
Poly reduce_by(const Poly& p, const std::vector<Relation>& relations);
Poly reduce_by(const Poly& p, const std::vector<Relation>& relations, NormalFormMemo& memo);

// A validated presentation together with its full Steenrod action.
//
// Construction checks the presentation invariants and extends the stored
// table to every Sq^k on every generator: Sq^0 g = g, Sq^{|g|} g = g^2,
// Sq^k g = 0 above |g|, stored powers of two are looked up, and any other
// k < |g| is expanded as Sq^k = Sq^{k-b} Sq^b + sum_{c>=1} binom(b-c-1, k-b-2c)
// Sq^{k-c} Sq^c with b the largest power of two below k. The c = 0 Adem
// coefficient binom(b-1, k-b) is 1 because b-1 is all ones in binary, and
// every operation on the right has index below k, so the table is filled in
// increasing k. Products are handled by the Cartan formula through the total
// square, which is multiplicative.
//
// Instances are immutable; every member function is safe to call from
// several threads at once.
class UnstableAlgebra
{
public:
    explicit UnstableAlgebra(Presentation p);

    const Presentation& presentation() const { return pres_; }
    const TermOrder& order() const { return order_; }
    std::size_t num_generators() const { return pres_.generators.size(); }
    int generator_degree(std::size_t g) const { return pres_.generators[g].degree; }
    int max_generator_degree() const;
    Poly generator(std::size_t g) const { return Poly(Monomial::generator(g)); }

    // Not divisible by any relation lead.
    bool is_normal(const Monomial& m) const;
    // Rewrites lead -> tail until no lead divides any monomial; the first
    // matching relation in list order is used.
    Poly normal_form(const Poly& p) const;
    Poly normal_form(const Monomial& m) const;
    Poly normal_form(const Poly& p, NormalFormMemo& memo) const;
    // As normal_form, but throws VerificationError when the presentation has
    // relations and p has degree above the bound its rewrite system was
    // checked to.
    Poly checked_normal_form(const Poly& p, int confluence_bound) const;
    // One rewrite step of m with relation r (whose lead must divide m).
    Poly rewrite_once(const Monomial& m, std::size_t relation) const;

    Poly multiply(const Poly& a, const Poly& b) const;

    // Sq^k on a generator, 0 <= k; normal form.
    const Poly& generator_sq(std::size_t g, int k) const;
    // Sq^k e for homogeneous e, in normal form. Throws ValidationError on
    // inhomogeneous input.
    Poly apply_sq(int k, const Poly& e) const;
    // (Sq^0 m, Sq^1 m, ..., Sq^max_k m), all in normal form.
    std::vector<Poly> total_square(const Monomial& m, int max_k) const;
    // Admissible (or any) composite operations, applied right to left.
    Poly apply(const SqMonomial& op, const Poly& e) const;
    Poly apply(const SteenrodElement& op, const Poly& e) const;

    // Normal monomials of each degree 0..max_degree, each list in raw order.
    std::vector<std::vector<Monomial>> basis_by_degree(int max_degree) const;
    std::vector<std::uint64_t> poincare_series(int max_degree) const;

private:
    void validate();
    void build_action();
    // Frob^s(Sq^j g) in normal form.
    Poly factor(std::size_t g, int s, int j) const;

    Presentation pres_;
    TermOrder order_;
    // action_[g][k] = Sq^k g for 0 <= k <= |g|
    std::vector<std::vector<Poly>> action_;
    // frob_[g][s][j] = Frob^s(Sq^j g), cached while (|g| + j) 2^s stays
    // within kFrobeniusCacheDegree.
    std::vector<std::vector<std::vector<Poly>>> frob_;
    bool frob_ready_ = false;
    Poly zero_;
};

inline constexpr int kFrobeniusCacheDegree = 160;

}  // namespace loopcoh
