#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "loopcoh/error.hpp"

namespace loopcoh {

// Upper limit on the number of generators of one presentation. A loop
// presentation doubles the generator count of its base, so base algebras
// are limited to half of this.
inline constexpr std::size_t kMaxGenerators = 16;
inline constexpr unsigned kMaxExponent = 255;

// Exponent vector over a fixed generator alphabet.
class Monomial
{
public:
    Monomial() = default;
    Monomial(std::initializer_list<unsigned> exps);

    static Monomial generator(std::size_t index, unsigned exponent = 1);

    unsigned operator[](std::size_t i) const { return exps_[i]; }
    void set(std::size_t i, unsigned e);

    bool is_one() const;
    bool divides(const Monomial& other) const;
    // Requires divides(other); returns other / *this.
    Monomial cofactor_in(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    Monomial squared() const;
    // Number of nonzero exponents.
    std::size_t support_size() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::size_t hash() const;

private:
    std::array<std::uint8_t, kMaxGenerators> exps_{};
};

struct MonomialHash
{
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Sparse polynomial over GF(2): a set of monomials, kept sorted by the raw
// exponent order so that addition is a symmetric-difference merge. Display
// order is decided by the owning algebra's term order, not here.
class Poly
{
public:
    Poly() = default;
    explicit Poly(const Monomial& m) : terms_{m} {}

    static Poly one() { return Poly(Monomial{}); }
    // Sorts and cancels repeated monomials in pairs.
    static Poly from_terms(std::vector<Monomial> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::span<const Monomial> terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    bool contains(const Monomial& m) const;

    Poly& operator+=(const Poly& other);
    Poly& operator+=(const Monomial& m);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly times(const Monomial& m) const;
    // Frobenius: x -> x^2, which is additive in characteristic two.
    Poly squared() const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    std::vector<Monomial> terms_;
};

}  // namespace loopcoh
