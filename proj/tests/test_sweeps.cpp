#include <doctest.h>

#include "loopcoh/dsl.hpp"
#include "loopcoh/sweeps.hpp"
#include "support.hpp"

using namespace test;

TEST_CASE("coherence of the base tables at the default bound")
{
    for (const auto& name : kBases) {
        CAPTURE(name);
        const auto r = check_adem_coherence(base(name), kDefaultBound);
        CHECK(r.ok());
        CHECK(r.checks > 0);
    }
}

TEST_CASE("corrupted BSpin(7) table")
{
    const UnstableAlgebra A(load_presentation(corpus_path("fixtures/corrupted-bspin7.ualg")));
    const auto r = check_adem_coherence(A, 20);
    REQUIRE_FALSE(r.ok());
    const Monomial w6 = Monomial::generator(1);
    bool found = false;
    for (const auto& v : r.violations) {
        if (v.monomial == w6 && v.a == 2 && v.b == 4) {
            found = true;
            CHECK(v.composite.is_zero());
            CHECK(v.admissible == poly(A, "w6^2"));
        }
    }
    CHECK(found);
}

TEST_CASE("forced action with degree-one generators is coherent")
{
    Presentation p;
    p.name = "T3";
    p.generators = {{"t1", 1, false}, {"t2", 1, false}, {"t3", 1, false}};
    const UnstableAlgebra A(p);
    CHECK(check_adem_coherence(A, 24).ok());
    CHECK(check_instability(A, 24).ok());
}

TEST_CASE("confluence")
{
    CHECK(check_confluence(loop("bspin7"), 40).ok());
    CHECK(check_confluence(base("bspin7"), 40).ok());
    CHECK(check_confluence(base("bspin7"), 40).checks == 0);

    // x^2 -> y and x^2 -> 0 disagree at x^2.
    Presentation p;
    p.name = "bad";
    p.generators = {{"x", 1, false}, {"y", 2, false}};
    p.relations = {{Monomial::generator(0, 2), Poly(Monomial::generator(1))}, {Monomial::generator(0, 2), Poly{}}};
    const UnstableAlgebra A(p);
    const auto r = check_confluence(A, 4);
    REQUIRE_FALSE(r.ok());
    CHECK(r.divergences.front().monomial == Monomial::generator(0, 2));
    CHECK(r.divergences.front().via_first == Poly(Monomial::generator(1)));
    CHECK(r.divergences.front().via_second.is_zero());
}

TEST_CASE("serial reference and parallel kernels agree")
{
    const UnstableAlgebra corrupted(load_presentation(corpus_path("fixtures/corrupted-bspin7.ualg")));
    for (const UnstableAlgebra* A : {&base("bspin7"), &base("bf4"), &loop("bspin7"), &loop("bdi4"), &corrupted}) {
        CAPTURE(A->presentation().name);
        CHECK(detail::coherence_serial(*A, 36) == detail::coherence_parallel(*A, 36));
        CHECK(detail::confluence_serial(*A, 36) == detail::confluence_parallel(*A, 36));
        CHECK(detail::instability_serial(*A, 36) == detail::instability_parallel(*A, 36));
    }
}

TEST_CASE("instability sweep")
{
    for (const auto& name : kBases) {
        CAPTURE(name);
        CHECK(check_instability(base(name), 40).ok());
        CHECK(check_instability(loop(name), 40).ok());
    }
}

TEST_CASE("checked normal form refuses degrees beyond the bound")
{
    const auto& L = loop("bspin7");
    CHECK(L.checked_normal_form(poly(L, "y5^2"), 64) == poly(L, "y3^2*v4 + y3*v7"));
    CHECK_THROWS_AS(L.checked_normal_form(poly(L, "y5^2*v8^8"), 64), VerificationError);
}
