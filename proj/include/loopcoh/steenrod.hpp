#pragma once

// Mod-2 Steenrod algebra in the admissible (Adem) basis.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "loopcoh/gf2_poly.hpp"

namespace loopcoh {

// binom(m, n) mod 2 by Lucas' theorem; 0 when n > m.
constexpr bool binom_mod2(std::uint64_t m, std::uint64_t n)
{
    return (n & ~m) == 0;
}

// Composition Sq^{i_1} Sq^{i_2} ... Sq^{i_k}, applied right to left. The empty
// sequence is the identity.
class SqMonomial
{
public:
    SqMonomial() = default;
    explicit SqMonomial(std::vector<int> exponents);
    SqMonomial(std::initializer_list<int> exponents) : SqMonomial(std::vector<int>(exponents)) {}

    const std::vector<int>& exponents() const { return exps_; }
    std::size_t length() const { return exps_.size(); }
    bool is_identity() const { return exps_.empty(); }
    int degree() const;
    bool is_admissible() const;

    friend SqMonomial operator*(const SqMonomial& a, const SqMonomial& b);

    friend auto operator<=>(const SqMonomial&, const SqMonomial&) = default;
    friend bool operator==(const SqMonomial&, const SqMonomial&) = default;

private:
    std::vector<int> exps_;
};

// i_1 - (i_2 + ... + i_k); throws ValidationError on inadmissible input.
int excess(const SqMonomial& m);

// GF(2) formal sum of SqMonomials.
class SteenrodElement
{
public:
    SteenrodElement() = default;
    explicit SteenrodElement(const SqMonomial& m) : terms_{m} {}
    static SteenrodElement identity() { return SteenrodElement(SqMonomial{}); }
    static SteenrodElement sq(int k);
    // Sorts and cancels repeated monomials in pairs.
    static SteenrodElement from_terms(std::vector<SqMonomial> terms);

    const std::vector<SqMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    // Degree of a homogeneous element; throws ValidationError on mixed degree
    // or zero.
    int degree() const;
    bool is_admissible() const;

    SteenrodElement& operator+=(const SteenrodElement& other);
    friend SteenrodElement operator+(SteenrodElement a, const SteenrodElement& b) { return a += b; }

    friend bool operator==(const SteenrodElement&, const SteenrodElement&) = default;

private:
    // Increasing in the SqMonomial order; the text form prints them reversed.
    std::vector<SqMonomial> terms_;
};

// Unique admissible expansion of e.
//
// The leftmost inadmissible pair (a, b), a < 2b, is replaced by
// sum_c binom(b-c-1, a-2c) Sq^{a+b-c} Sq^c. Every rewrite keeps the entries
// left of the pair, strictly raises the entry at the pair (a+b-c > a) and
// keeps the total degree, so each term's exponent sequence strictly increases
// in lexicographic order inside the finite set of sequences of that degree.
SteenrodElement adem_reduce(const SteenrodElement& e);

// Composition a*b (b acts first), reduced to the admissible basis.
SteenrodElement multiply(const SteenrodElement& a, const SteenrodElement& b);

// All admissible monomials of the given degree, in increasing order.
std::vector<SqMonomial> admissible_basis(int degree);

// Text form: `Sq7 Sq1 + Sq6 Sq2`, `1` for the identity, `0` for zero.
SteenrodElement parse_steenrod(std::string_view text);
std::string to_string(const SqMonomial& m);
std::string to_string(const SteenrodElement& e);

// Independent action on GF(2)[t_1..t_n] with |t_i| = 1, using only Sq^0 = id,
// Sq^1 t = t^2, Sq^k t = 0 for k > 1 and the Cartan formula. Polynomials use
// the generic Monomial/Poly types with the variables at indices 0..n-1.
struct OracleResult
{
    Poly value;
    // Set when some term would exceed the truncation degree; those terms are
    // dropped from value.
    bool truncated = false;
};

OracleResult oracle_apply(const SteenrodElement& e, const Poly& p, int truncation_degree);

// t_1 t_2 ... t_d
Poly oracle_product(int d);

}  // namespace loopcoh
