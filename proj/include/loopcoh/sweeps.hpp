#pragma once

// Degree-bounded verification sweeps over an UnstableAlgebra.
//
// Each sweep has a serial reference implementation that follows the
// definition literally, and an OpenMP kernel that shares intermediate total
// squares between checks. Both produce identical reports. Coherence and
// instability violations are ordered by degree, then monomial, then
// operation indices; confluence divergences by relation pair, then degree,
// then monomial.

#include <cstddef>
#include <vector>

#include "loopcoh/algebra.hpp"

namespace loopcoh {

enum class Execution
{
    serial,
    parallel,
};

inline constexpr int kDefaultBound = 64;

struct CoherenceViolation
{
    Monomial monomial;
    int a = 0;
    int b = 0;
    Poly composite;  // Sq^a Sq^b m
    Poly admissible; // adem_reduce(Sq^a Sq^b) applied to m

    friend bool operator==(const CoherenceViolation&, const CoherenceViolation&) = default;
};

struct CoherenceReport
{
    int bound = 0;
    std::size_t checks = 0;
    std::vector<CoherenceViolation> violations;

    bool ok() const { return violations.empty(); }
    friend bool operator==(const CoherenceReport&, const CoherenceReport&) = default;
};

// For every normal monomial m with |m| <= bound and every 0 < a < 2b with
// a + b + |m| <= bound, compares Sq^a(Sq^b m) with the admissible expansion
// of Sq^a Sq^b applied to m.
CoherenceReport check_adem_coherence(const UnstableAlgebra& A, int bound, Execution exec = Execution::parallel);

struct ConfluenceDivergence
{
    Monomial monomial;
    std::size_t first = 0;   // relation indices
    std::size_t second = 0;
    Poly via_first;
    Poly via_second;

    friend bool operator==(const ConfluenceDivergence&, const ConfluenceDivergence&) = default;
};

struct ConfluenceReport
{
    int bound = 0;
    std::size_t checks = 0;
    std::vector<ConfluenceDivergence> divergences;

    bool ok() const { return divergences.empty(); }
    friend bool operator==(const ConfluenceReport&, const ConfluenceReport&) = default;
};

// For every monomial of degree <= bound divisible by two relation leads,
// fully reduces both one-step rewrites and compares the results.
ConfluenceReport check_confluence(const UnstableAlgebra& A, int bound, Execution exec = Execution::parallel);

struct InstabilityViolation
{
    Monomial monomial;
    int k = 0;
    Poly value;
    Poly expected;

    friend bool operator==(const InstabilityViolation&, const InstabilityViolation&) = default;
};

struct InstabilityReport
{
    int bound = 0;
    std::size_t checks = 0;
    std::vector<InstabilityViolation> violations;

    bool ok() const { return violations.empty(); }
    friend bool operator==(const InstabilityReport&, const InstabilityReport&) = default;
};

// Sq^{|m|} m = m^2 and Sq^k m = 0 for k > |m|, over normal monomials m and
// k >= |m| with |m| + k <= bound.
InstabilityReport check_instability(const UnstableAlgebra& A, int bound, Execution exec = Execution::parallel);

namespace detail {

// Serial references.
CoherenceReport coherence_serial(const UnstableAlgebra& A, int bound);
ConfluenceReport confluence_serial(const UnstableAlgebra& A, int bound);
InstabilityReport instability_serial(const UnstableAlgebra& A, int bound);

// OpenMP kernels.
CoherenceReport coherence_parallel(const UnstableAlgebra& A, int bound);
ConfluenceReport confluence_parallel(const UnstableAlgebra& A, int bound);
InstabilityReport instability_parallel(const UnstableAlgebra& A, int bound);

// Monomials q with |lcm| + |q| <= bound, over the whole alphabet (not only
// normal ones), in raw order.
std::vector<Monomial> all_monomials_up_to(const UnstableAlgebra& A, int max_degree);

// Admissible expansions of Sq^a Sq^b for 0 < a < 2b, a + b <= bound.
std::vector<std::vector<SteenrodElement>> adem_pair_table(int bound);

}  // namespace detail

}  // namespace loopcoh
