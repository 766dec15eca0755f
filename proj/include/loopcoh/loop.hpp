#pragma once

// Cohomology of the (twisted) free loop space of X from a polynomial
// presentation of H*(X; Z/2).
//
// With v_i the image of x_i under evaluation and y_i = sigma(x_i) of degree
// |x_i| - 1, the loop cohomology is free over Z/2[v_1, ...] on square-free
// monomials in the y_i. sigma is a derivation into it,
// sigma(xy) = sigma(x) v(y) + v(x) sigma(y), that commutes with every Sq^k.
// Squares of the y_i follow from instability:
// y^2 = Sq^{|y|} y = sigma(Sq^{|y|} x).

#include <string>
#include <vector>

#include "loopcoh/algebra.hpp"
#include "loopcoh/sweeps.hpp"

namespace loopcoh {

// An element of the base algebra H*(X). sigma accepts only these, so it is
// never applied to an element of the loop algebra.
struct BaseElement
{
    Poly value;
};

struct Elimination
{
    std::string generator;
    int degree = 0;
    Poly value;  // over the surviving alphabet

    friend bool operator==(const Elimination&, const Elimination&) = default;
};

struct LoopPresentation
{
    std::string base_name;
    // The x_i, in base order.
    std::vector<Generator> base_generators;
    // Alphabet v_1..v_n (same indices as the x_i) followed by the surviving
    // y's; Sq table and relations over it. name is "L" + base name.
    Presentation presentation;
    // sigma[i] = sigma(x_i) over presentation's alphabet.
    std::vector<Poly> sigma;
    std::vector<Elimination> eliminations;

    std::size_t num_base() const { return base_generators.size(); }
    std::vector<Generator> base_gens() const;
    std::vector<Generator> derived_gens() const;

    friend bool operator==(const LoopPresentation&, const LoopPresentation&) = default;
};

struct DeriveOptions
{
    int bound = kDefaultBound;
    Execution execution = Execution::parallel;
    // Re-run coherence and confluence on the result.
    bool self_check = true;
};

// Renamed generators, one y per base generator, sigma(x_i) = y_i, no table
// and no relations. Names come from the base presentation's loop names,
// defaulting to v<d> and y<d-1>.
LoopPresentation initial_loop_presentation(const UnstableAlgebra& base);

// sigma(e) over the loop alphabet, before reduction. Throws ValidationError
// for inhomogeneous input or input with a degree-0 part.
Poly sigma(const BaseElement& e, const LoopPresentation& L);

// Sq^k v_i from the base table by renaming, Sq^k y_i = sigma(Sq^k x_i), for
// powers of two k below each degree; reduced by L's relations.
SqTable derive_sq_table(const UnstableAlgebra& base, const LoopPresentation& L);

// y^2 -> reduce(sigma(Sq^{|y|} x)); y is an index into L's alphabet and
// must be a derived generator.
Relation compute_square_relation(std::size_t y, const UnstableAlgebra& base, const LoopPresentation& L);

// Repeatedly solves a relation whose tail contains a derived generator on
// its own, smallest such generator first, substitutes it everywhere and
// drops it. The surviving relations are interreduced and sorted by lead,
// smallest first. Throws VerificationError on an inhomogeneous
// substitution.
LoopPresentation eliminate_redundant_generators(LoopPresentation L);

// The whole pipeline. Throws ValidationError for non-polynomial input and
// VerificationError when the base or the result fails a check at the bound.
LoopPresentation derive_loop_presentation(const UnstableAlgebra& base, const DeriveOptions& options = {});

// Dimensions of Z/2[v's] (x) free on square-free y-monomials in every
// base degree: prod_i (1 + t^{|x_i|-1}) / (1 - t^{|x_i|}), degrees 0..max.
std::vector<std::uint64_t> loop_poincare_product(const std::vector<Generator>& base, int max_degree);

}  // namespace loopcoh
