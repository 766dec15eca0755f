#include <doctest.h>

#include <random>

#include "loopcoh/gf2_poly.hpp"
#include "loopcoh/error.hpp"
#include "loopcoh/term_order.hpp"

using namespace loopcoh;

namespace {

Monomial mono(std::initializer_list<unsigned> e)
{
    return Monomial(e);
}

Poly random_poly(std::mt19937& rng, int vars, int terms)
{
    std::uniform_int_distribution<unsigned> exp(0, 3);
    std::vector<Monomial> t;
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (int v = 0; v < vars; ++v)
            m.set(std::size_t(v), exp(rng));
        t.push_back(m);
    }
    return Poly::from_terms(std::move(t));
}

}  // namespace

TEST_CASE("monomial arithmetic")
{
    const Monomial a = mono({2, 1, 0});
    const Monomial b = mono({1, 0, 3});
    CHECK(a * b == mono({3, 1, 3}));
    CHECK(a.lcm(b) == mono({2, 1, 3}));
    CHECK(mono({1, 0, 0}).divides(a));
    CHECK_FALSE(b.divides(a));
    CHECK(mono({1, 1, 0}).cofactor_in(a) == mono({1, 0, 0}));
    CHECK(a.squared() == mono({4, 2, 0}));
    CHECK(a.support_size() == 2);
    CHECK(Monomial{}.is_one());
    CHECK_THROWS_AS(Monomial().set(kMaxGenerators, 1), Error);
    CHECK_THROWS_AS(Monomial().set(0, kMaxExponent + 1), Error);
}

TEST_CASE("polynomials cancel in pairs")
{
    const Monomial x = Monomial::generator(0), y = Monomial::generator(1);
    Poly p = Poly::from_terms({x, y, x});
    CHECK(p == Poly(y));
    p += y;
    CHECK(p.is_zero());
    CHECK(Poly::from_terms({x, x, x}) == Poly(x));

    // (x + y)^2 = x^2 + y^2 in characteristic 2
    const Poly s = Poly(x) + Poly(y);
    CHECK(s * s == Poly(x * x) + Poly(y * y));
    CHECK(s.squared() == s * s);
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly a = random_poly(rng, 3, 4), b = random_poly(rng, 3, 3), c = random_poly(rng, 3, 3);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + a == Poly{});
        CHECK(a * Poly::one() == a);
        CHECK(a.squared() == a * a);
        const Monomial m = mono({1, 2, 0});
        CHECK(a.times(m) == a * Poly(m));
    }
}

TEST_CASE("term order: degree, then derived weight, then earlier generators first")
{
    const TermOrder order({{"v4", 4, false}, {"v6", 6, false}, {"v7", 7, false}, {"y3", 3, true}, {"y5", 5, true}});
    auto m = [&](std::string_view s) { return parse_monomial(s, order); };
    CHECK(order.degree(m("v4*y3^2")) == 10);
    CHECK(order.derived_weight(m("v4*y3^2")) == 6);
    // The relation leads of LBSpin(7) dominate their tails.
    CHECK(order.less(m("y3^2*v4"), m("y5^2")));
    CHECK(order.less(m("y3*v7"), m("y5^2")));
    CHECK(order.less(m("y5*v7"), m("y3^4")));
    CHECK(order.less(m("y3^2*v6"), m("y3^4")));
    // Same degree and weight: lex with earlier generators dominating.
    CHECK(order.less(m("v6^2"), m("v4^3")));
    CHECK(order.leading(parse_poly("v6^2 + v4^3", order)) == m("v4^3"));
}

TEST_CASE("polynomial text round trip and diagnostics")
{
    const TermOrder order({{"w4", 4, false}, {"w6", 6, false}, {"w7", 7, false}});
    const Poly p = parse_poly("w7*w4^2 + w6^2*w7 + w4*w4*w4*w7", order);
    // w4^2*w7 and w4^3*w7 have different degrees, but parse accepts any sum
    CHECK(p.size() == 3);
    CHECK(format_poly(p, order) == "w4^3*w7 + w6^2*w7 + w4^2*w7");
    CHECK(parse_poly(format_poly(p, order), order) == p);
    CHECK(format_poly(Poly{}, order) == "0");
    CHECK(format_poly(Poly::one(), order) == "1");
    CHECK(parse_poly("w4 + w4", order).is_zero());
    CHECK(parse_poly("0", order).is_zero());
    CHECK(parse_poly("1*w4", order) == Poly(Monomial::generator(0)));

    try {
        parse_poly("w4 + w5", order, 3, 10);
        FAIL("expected a ParseError");
    }
    catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 15);
        CHECK(e.bare_message() == "unknown generator 'w5'");
    }
    CHECK_THROWS_AS(parse_poly("w4 +", order), ParseError);
    CHECK_THROWS_AS(parse_poly("w4^", order), ParseError);
    CHECK_THROWS_AS(parse_poly("2*w4", order), ParseError);
    CHECK_THROWS_AS(parse_poly("", order), ParseError);
    CHECK_THROWS_AS(parse_monomial("w4 + w6", order), ParseError);
}
