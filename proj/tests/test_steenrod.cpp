#include <doctest.h>

#include <random>

#include "loopcoh/error.hpp"
#include "loopcoh/steenrod.hpp"

using namespace loopcoh;

namespace {

// Pascal's triangle mod 2, no bit tricks.
bool pascal_mod2(int m, int n)
{
    if (n < 0 || m < 0 || n > m)
        return false;
    static std::vector<std::vector<bool>> rows{{true}};
    while (int(rows.size()) <= m) {
        const auto& prev = rows.back();
        std::vector<bool> row(prev.size() + 1, true);
        for (std::size_t i = 1; i < prev.size(); ++i)
            row[i] = prev[i - 1] != prev[i];
        rows.push_back(std::move(row));
    }
    return rows[std::size_t(m)][std::size_t(n)];
}

SteenrodElement E(std::string_view s)
{
    return parse_steenrod(s);
}

SteenrodElement random_monomial(std::mt19937& rng, int max_len, int max_exp)
{
    std::uniform_int_distribution<int> len(0, max_len), exp(1, max_exp);
    std::vector<int> x(std::size_t(len(rng)));
    for (auto& v : x)
        v = exp(rng);
    return SteenrodElement(SqMonomial(x));
}

}  // namespace

TEST_CASE("binom_mod2 against Pascal's triangle")
{
    CHECK(binom_mod2(7, 3));
    CHECK_FALSE(binom_mod2(4, 2));
    for (int k = 0; k < 40; ++k)
        CHECK(binom_mod2(std::uint64_t(k), 0));
    for (int m = 0; m < 130; ++m)
        for (int n = 0; n < 140; ++n)
            REQUIRE(binom_mod2(std::uint64_t(m), std::uint64_t(n)) == pascal_mod2(m, n));
}

TEST_CASE("monomials, admissibility and excess")
{
    CHECK(SqMonomial{7, 1}.is_admissible());
    CHECK_FALSE(SqMonomial{2, 2}.is_admissible());
    CHECK(SqMonomial{}.is_admissible());
    CHECK(excess(SqMonomial{15}) == 15);
    CHECK(excess(SqMonomial{3, 1}) == 2);
    CHECK(excess(SqMonomial{}) == 0);
    CHECK_THROWS_AS(excess(SqMonomial{2, 2}), ValidationError);
    CHECK_THROWS_AS(SqMonomial({0}), ValidationError);
    CHECK(SqMonomial{4, 2}.degree() == 6);
}

TEST_CASE("adem_reduce on the displayed instances")
{
    CHECK(adem_reduce(E("Sq2 Sq2")) == E("Sq3 Sq1"));
    CHECK(adem_reduce(E("Sq4 Sq4")) == E("Sq7 Sq1 + Sq6 Sq2"));
    CHECK(adem_reduce(E("Sq7 Sq8")) == E("Sq15"));
    CHECK(adem_reduce(E("Sq1 Sq1")).is_zero());
    CHECK(adem_reduce(E("Sq3 Sq4")) == E("Sq7"));
    CHECK(adem_reduce(E("Sq2 Sq4")) == E("Sq6 + Sq5 Sq1"));
    CHECK(adem_reduce(E("1")) == SteenrodElement::identity());
    CHECK(adem_reduce(E("0")).is_zero());
}

TEST_CASE("single Adem relations match the binomial formula")
{
    // Every term Sq^{a+b-c} Sq^c of one relation is already admissible, so
    // the reduced pair is the formula itself.
    for (int b = 1; b <= 24; ++b) {
        for (int a = 1; a < 2 * b && a + b <= 40; ++a) {
            std::vector<SqMonomial> terms;
            for (int c = 0; 2 * c <= a; ++c)
                if (pascal_mod2(b - c - 1, a - 2 * c))
                    terms.push_back(c == 0 ? SqMonomial{a + b} : SqMonomial{a + b - c, c});
            REQUIRE(adem_reduce(SteenrodElement(SqMonomial{a, b})) == SteenrodElement::from_terms(terms));
        }
    }
}

TEST_CASE("multiply")
{
    CHECK(multiply(SteenrodElement::sq(1), SteenrodElement::sq(2)) == E("Sq3"));
    CHECK(multiply(SteenrodElement::sq(2), SteenrodElement::sq(2)) == E("Sq3 Sq1"));
    const auto e = E("Sq5 Sq2 + Sq4 Sq2 Sq1");
    CHECK(multiply(SteenrodElement::identity(), e) == e);
    CHECK(multiply(e, SteenrodElement::identity()) == e);
}

TEST_CASE("adem_reduce properties on random monomials")
{
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 300; ++trial) {
        const auto e = random_monomial(rng, 5, 12) + random_monomial(rng, 4, 12);
        const auto r = adem_reduce(e);
        CHECK(adem_reduce(r) == r);
        CHECK(r.is_admissible());
        if (e.is_homogeneous() && !r.is_zero())
            CHECK(r.degree() == e.degree());
    }
    // Rarely reaches exponents near 32, so a few long ones explicitly.
    for (int trial = 0; trial < 20; ++trial) {
        const auto e = random_monomial(rng, 3, 32);
        const auto r = adem_reduce(e);
        CHECK(adem_reduce(r) == r);
        CHECK(r.is_admissible());
    }
}

TEST_CASE("multiply is associative with identity")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_monomial(rng, 2, 6), b = random_monomial(rng, 2, 6), c = random_monomial(rng, 2, 6);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(multiply(SteenrodElement::identity(), a) == adem_reduce(a));
    }
}

TEST_CASE("admissible basis dimensions")
{
    // Admissible monomials of degree n: 1,1,1,2,2,2,3,4,4,5 for n = 0..9
    const int dims[] = {1, 1, 1, 2, 2, 2, 3, 4, 4, 5};
    for (int n = 0; n < 10; ++n)
        CHECK(admissible_basis(n).size() == std::size_t(dims[n]));
    for (const auto& m : admissible_basis(17))
        CHECK(m.is_admissible());
}

TEST_CASE("text form")
{
    CHECK(to_string(E("Sq6 Sq2 + Sq7 Sq1")) == "Sq7 Sq1 + Sq6 Sq2");
    CHECK(to_string(E("1")) == "1");
    CHECK(to_string(SteenrodElement{}) == "0");
    CHECK(to_string(E("Sq2 Sq2 + Sq2 Sq2")) == "0");
    CHECK_THROWS_AS(parse_steenrod("Sq0"), ParseError);
    CHECK_THROWS_AS(parse_steenrod("Sq"), ParseError);
    CHECK_THROWS_AS(parse_steenrod("Sq2 +"), ParseError);
    CHECK_THROWS_AS(parse_steenrod("Sq2 * Sq3"), ParseError);
}

TEST_CASE("oracle action on degree-one variables")
{
    const Monomial t1 = Monomial::generator(0), t2 = Monomial::generator(1);
    CHECK(oracle_apply(E("Sq1"), Poly(t1), 10).value == Poly(t1 * t1));
    CHECK(oracle_apply(E("Sq2"), Poly(t1 * t2), 10).value == Poly(t1 * t1 * t2 * t2));
    CHECK(oracle_apply(E("Sq2"), Poly(t1), 10).value.is_zero());
    // Sq^2 Sq^2 + Sq^3 Sq^1 kills everything.
    const auto rel = E("Sq2 Sq2 + Sq3 Sq1");
    for (int d = 1; d <= 8; ++d) {
        const auto r = oracle_apply(rel, oracle_product(d), 16);
        CHECK_FALSE(r.truncated);
        CHECK(r.value.is_zero());
    }
    const auto cut = oracle_apply(E("Sq4"), oracle_product(4), 6);
    CHECK(cut.truncated);
}

TEST_CASE("oracle soundness of multiply")
{
    // oracle(a*b) = oracle(a) after oracle(b) on products of variables.
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = random_monomial(rng, 2, 5), b = random_monomial(rng, 2, 5);
        for (int d = 1; d <= 6; ++d) {
            const Poly p = oracle_product(d);
            const int top = d + 20;
            const auto lhs = oracle_apply(multiply(a, b), p, top);
            const auto inner = oracle_apply(b, p, top);
            const auto rhs = oracle_apply(a, inner.value, top);
            REQUIRE_FALSE(inner.truncated);
            CHECK(lhs.value == rhs.value);
        }
    }
}
