#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loopcoh/gf2_poly.hpp"
#include "loopcoh/presentation.hpp"

namespace loopcoh {

// Degree bookkeeping and the monomial order of one generator alphabet:
// total degree, then degree carried by derived generators, then
// lexicographic with earlier generators dominating.
class TermOrder
{
public:
    TermOrder() = default;
    explicit TermOrder(std::vector<Generator> generators);

    std::span<const Generator> generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    std::optional<std::size_t> find(std::string_view name) const;

    int degree(const Monomial& m) const;
    int derived_weight(const Monomial& m) const;
    // Degree of a homogeneous polynomial; nullopt for zero. Throws
    // ValidationError on mixed degrees.
    std::optional<int> degree(const Poly& p) const;
    bool is_homogeneous(const Poly& p) const;

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    // Largest term first.
    std::vector<Monomial> descending(const Poly& p) const;
    Monomial leading(const Poly& p) const;

private:
    std::vector<Generator> gens_;
};

// `w4^2*w7 + w6^2*w7`; `0` and `1` for the constants. Terms are printed in
// descending term order, factors in generator order.
std::string format_monomial(const Monomial& m, const TermOrder& order);
std::string format_poly(const Poly& p, const TermOrder& order);

// Inverse of format_poly; also accepts any term and factor order and
// repeated factors (`w4*w4`). Line/column seed the diagnostics.
Poly parse_poly(std::string_view text, const TermOrder& order, int line = 1, int column = 1);
Monomial parse_monomial(std::string_view text, const TermOrder& order, int line = 1, int column = 1);

}  // namespace loopcoh
