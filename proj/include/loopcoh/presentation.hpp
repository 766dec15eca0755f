#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopcoh/gf2_poly.hpp"

namespace loopcoh {

struct Generator
{
    std::string name;
    int degree = 0;
    // Derived generators outweigh base ones in the term order: monomials are
    // compared by total degree, then by the degree carried by derived
    // generators, then lexicographically in generator order.
    bool derived = false;

    friend bool operator==(const Generator&, const Generator&) = default;
};

// Stored Sq^k values on generators, k a power of two with 0 < k < degree.
// Missing entries are zero.
using SqTable = std::map<std::pair<std::size_t, int>, Poly>;

// lead -> tail, with every tail monomial below lead in the term order.
struct Relation
{
    Monomial lead;
    Poly tail;

    friend bool operator==(const Relation&, const Relation&) = default;
};

// How a base generator is renamed in a derived loop presentation:
// x -> (image name, suspension name).
struct LoopName
{
    std::string base;
    std::string image;
    std::string suspension;

    friend bool operator==(const LoopName&, const LoopName&) = default;
};

// Plain data. Validation and arithmetic live in UnstableAlgebra.
struct Presentation
{
    std::string name;
    std::vector<Generator> generators;
    SqTable sq;
    std::vector<Relation> relations;
    std::vector<LoopName> loop_names;
    std::map<std::string, std::string> metadata;
    // (generator, k) pairs of the table that were filled with zero because
    // the source omitted them; reported by the lint pass.
    std::vector<std::pair<std::size_t, int>> defaulted;

    std::optional<std::size_t> find(const std::string& generator) const;
    bool is_polynomial() const { return relations.empty(); }

    friend bool operator==(const Presentation& a, const Presentation& b)
    {
        return a.name == b.name && a.generators == b.generators && a.sq == b.sq && a.relations == b.relations &&
               a.loop_names == b.loop_names && a.metadata == b.metadata;
    }
};

constexpr bool is_power_of_two(int k)
{
    return k > 0 && (k & (k - 1)) == 0;
}

}  // namespace loopcoh
