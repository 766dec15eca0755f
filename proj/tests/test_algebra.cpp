#include <doctest.h>

#include "loopcoh/error.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace test;

namespace {

Presentation one_generator(const std::string& name, int degree)
{
    Presentation p;
    p.name = "P";
    p.generators = {{name, degree, false}};
    return p;
}

}  // namespace

TEST_CASE("Sq on the base corpus")
{
    const auto& B7 = base("bspin7");
    const auto& B9 = base("bspin9");
    CHECK(text(B7, B7.apply_sq(2, poly(B7, "w4"))) == "w6");
    CHECK(text(B7, B7.apply_sq(3, poly(B7, "w4"))) == "w7");
    CHECK(B7.apply_sq(9, poly(B7, "w8")).is_zero());
    CHECK(B9.apply_sq(4, poly(B9, "w4^2*w7")) == poly(B9, "w4^3*w7 + w6^2*w7"));
    CHECK(B9.apply_sq(2, poly(B9, "w4*w6*w7")) == poly(B9, "w6^2*w7"));
    CHECK(B9.apply_sq(7, poly(B9, "w8*e16")) == poly(B9, "w7*w8*e16"));
    // Sq^15 e16 = Sq^7 Sq^8 e16
    CHECK(B9.apply_sq(15, poly(B9, "e16")) == B9.apply_sq(7, B9.apply_sq(8, poly(B9, "e16"))));
    // Sq^7 w8 = Sq^3 Sq^4 w8 = Sq^1 Sq^2 (w4 w8)
    CHECK(B9.apply_sq(7, poly(B9, "w8")) == poly(B9, "w7*w8"));
    CHECK(B9.apply_sq(0, poly(B9, "w4*w6")) == poly(B9, "w4*w6"));
    CHECK_THROWS_AS(B9.apply_sq(1, poly(B9, "w4 + w6")), ValidationError);
}

TEST_CASE("table extension to non-powers of two")
{
    const auto& F4 = base("bf4");
    // Sq^6 = Sq^2 Sq^4 + Sq^5 Sq^1
    for (std::size_t g = 0; g < F4.num_generators(); ++g) {
        const Poly x = F4.generator(g);
        CHECK(F4.apply_sq(6, x) == F4.apply_sq(2, F4.apply_sq(4, x)) + F4.apply_sq(5, F4.apply_sq(1, x)));
        CHECK(F4.apply_sq(3, x) == F4.apply_sq(1, F4.apply_sq(2, x)));
        CHECK(F4.apply_sq(23, x) == F4.apply_sq(7, F4.apply_sq(16, x)));
    }
}

TEST_CASE("normal forms in the derived presentations")
{
    const auto& L7 = loop("bspin7");
    CHECK(L7.normal_form(poly(L7, "y5^2*v4")) == poly(L7, "y3^2*v4^2 + y3*v4*v7"));
    CHECK(L7.normal_form(poly(L7, "y5*v4")) == poly(L7, "y5*v4"));
    const auto& D4 = loop("bdi4");
    CHECK(D4.normal_form(poly(D4, "y7^4")) == poly(D4, "y13*v15 + v14*y7^2"));
    const auto& B7 = base("bspin7");
    CHECK(B7.normal_form(poly(B7, "w4^5*w7")) == poly(B7, "w4^5*w7"));
}

TEST_CASE("Poincare series")
{
    const UnstableAlgebra A(one_generator("w4", 4));
    CHECK(A.poincare_series(8) == std::vector<std::uint64_t>{1, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(base("bspin7").poincare_series(8) == std::vector<std::uint64_t>{1, 0, 0, 0, 1, 0, 1, 1, 2});
    CHECK(loop("bspin7").poincare_series(3) == std::vector<std::uint64_t>{1, 0, 0, 1});
    CHECK(loop("bdi4").poincare_series(7) == std::vector<std::uint64_t>{1, 0, 0, 0, 0, 0, 0, 1});
    Presentation empty;
    empty.name = "trivial";
    CHECK(UnstableAlgebra(empty).poincare_series(3) == std::vector<std::uint64_t>{1, 0, 0, 0});
}

TEST_CASE("zero generators act on the unit only")
{
    Presentation empty;
    empty.name = "trivial";
    const UnstableAlgebra A(empty);
    CHECK(A.apply_sq(0, Poly::one()) == Poly::one());
    CHECK(A.apply_sq(1, Poly::one()).is_zero());
    CHECK(A.normal_form(Poly::one()) == Poly::one());
}

TEST_CASE("presentation validation")
{
    auto p = one_generator("x", 4);
    p.sq[{0, 3}] = Poly{};
    CHECK_THROWS_AS(UnstableAlgebra{p}, ValidationError);

    p = one_generator("x", 4);
    p.sq[{0, 4}] = Poly(Monomial::generator(0, 2));
    CHECK_THROWS_AS(UnstableAlgebra{p}, ValidationError);

    p = one_generator("x", 4);
    p.sq[{0, 2}] = Poly(Monomial::generator(0));
    CHECK_THROWS_WITH_AS(UnstableAlgebra{p}, doctest::Contains("degree mismatch: expected 6, got 4"),
                         ValidationError);

    p = one_generator("x", 0);
    CHECK_THROWS_AS(UnstableAlgebra{p}, ValidationError);

    p = one_generator("x", 2);
    p.generators.push_back({"x", 3, false});
    CHECK_THROWS_AS(UnstableAlgebra{p}, ValidationError);

    // Relation whose tail is above the lead.
    p = one_generator("x", 1);
    p.generators.push_back({"y", 2, false});
    p.relations.push_back({Monomial::generator(1), Poly(Monomial::generator(0, 2))});
    CHECK_THROWS_AS(UnstableAlgebra{p}, ValidationError);

    // Inhomogeneous relation.
    p = one_generator("x", 1);
    p.relations.push_back({Monomial::generator(0, 3), Poly(Monomial::generator(0))});
    CHECK_THROWS_AS(UnstableAlgebra{p}, ValidationError);
}

TEST_CASE("property suites on all corpus algebras up to degree 20")
{
    for (const auto& name : kBases) {
        for (const UnstableAlgebra* A : {&base(name), &loop(name)}) {
            CAPTURE(A->presentation().name);
            CHECK(instability_failures(*A, 20) == 0);
            CHECK(sq1_failures(*A, 20) == 0);
            CHECK(normal_form_failures(*A, 20) == 0);
        }
    }
}

TEST_CASE("Cartan formula on all corpus algebras up to degree 20")
{
    for (const auto& name : kBases) {
        for (const UnstableAlgebra* A : {&base(name), &loop(name)}) {
            CAPTURE(A->presentation().name);
            CHECK(cartan_failures(*A, 20) == 0);
        }
    }
}
