#include "loopcoh/loop.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace loopcoh {

std::vector<Generator> LoopPresentation::base_gens() const
{
    const auto& g = presentation.generators;
    return {g.begin(), g.begin() + std::ptrdiff_t(num_base())};
}

std::vector<Generator> LoopPresentation::derived_gens() const
{
    const auto& g = presentation.generators;
    return {g.begin() + std::ptrdiff_t(num_base()), g.end()};
}

namespace {

// Index of the generator y with sigma(x_i) = y, if it survived elimination.
std::optional<std::size_t> suspension_index(const LoopPresentation& L, std::size_t i)
{
    const Poly& s = L.sigma.at(i);
    if (s.size() != 1)
        return std::nullopt;
    const Monomial& m = s.terms().front();
    if (m.support_size() != 1)
        return std::nullopt;
    for (std::size_t g = 0; g < L.presentation.generators.size(); ++g)
        if (m[g] == 1 && L.presentation.generators[g].derived)
            return g;
    return std::nullopt;
}

Poly as_loop_element(const Poly& base_value)
{
    // v_i and x_i share indices.
    return base_value;
}

Monomial remove_index(const Monomial& m, std::size_t b)
{
    Monomial r;
    for (std::size_t i = 0, j = 0; i < kMaxGenerators; ++i) {
        if (i == b)
            continue;
        r.set(j++, m[i]);
    }
    return r;
}

Poly remove_index(const Poly& p, std::size_t b)
{
    std::vector<Monomial> terms;
    terms.reserve(p.size());
    for (const auto& m : p)
        terms.push_back(remove_index(m, b));
    return Poly::from_terms(std::move(terms));
}

// p with generator b replaced by value.
Poly substitute(const Poly& p, std::size_t b, const Poly& value)
{
    std::vector<Poly> powers{Poly::one()};
    Poly r;
    for (const auto& m : p) {
        const unsigned e = m[b];
        while (powers.size() <= e)
            powers.push_back(powers.back() * value);
        Monomial rest = m;
        rest.set(b, 0);
        r += powers[e].times(rest);
    }
    return r;
}

Relation relation_from(const Poly& p, const TermOrder& order)
{
    Relation r;
    r.lead = order.leading(p);
    r.tail = p;
    r.tail += r.lead;
    return r;
}

Poly relation_poly(const Relation& r)
{
    Poly p = r.tail;
    p += r.lead;
    return p;
}

// Reduces every relation by the others until nothing changes; drops
// relations that reduce to zero.
std::vector<Relation> interreduce(std::vector<Relation> rels, const TermOrder& order)
{
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < rels.size(); ++i) {
            std::vector<Relation> others;
            for (std::size_t j = 0; j < rels.size(); ++j)
                if (j != i)
                    others.push_back(rels[j]);
            const Poly p = relation_poly(rels[i]);
            const Poly q = reduce_by(p, others);
            if (q == p)
                continue;
            changed = true;
            if (q.is_zero()) {
                rels.erase(rels.begin() + std::ptrdiff_t(i));
                break;
            }
            rels[i] = relation_from(q, order);
        }
    }
    return rels;
}

}  // namespace

LoopPresentation initial_loop_presentation(const UnstableAlgebra& base)
{
    const Presentation& bp = base.presentation();
    const std::size_t n = bp.generators.size();
    if (2 * n > kMaxGenerators)
        throw ValidationError("loop derivation supports at most " + std::to_string(kMaxGenerators / 2) +
                              " base generators");
    LoopPresentation L;
    L.base_name = bp.name;
    L.base_generators = bp.generators;
    L.presentation.name = "L" + bp.name;
    std::vector<Generator> ys;
    for (const auto& x : bp.generators) {
        if (x.degree < 2)
            throw ValidationError("loop derivation needs base generators of degree at least 2; " + x.name +
                                  " has degree " + std::to_string(x.degree));
        std::string image = "v" + std::to_string(x.degree);
        std::string susp = "y" + std::to_string(x.degree - 1);
        for (const auto& ln : bp.loop_names) {
            if (ln.base == x.name) {
                image = ln.image;
                susp = ln.suspension;
            }
        }
        L.presentation.generators.push_back({image, x.degree, false});
        ys.push_back({susp, x.degree - 1, true});
    }
    L.presentation.generators.insert(L.presentation.generators.end(), ys.begin(), ys.end());
    std::set<std::string> seen;
    for (const auto& g : L.presentation.generators)
        if (!seen.insert(g.name).second)
            throw ValidationError("loop generator name " + g.name +
                                  " is used twice; add a loopname line for one of its sources");
    for (std::size_t i = 0; i < n; ++i)
        L.sigma.push_back(Poly(Monomial::generator(n + i)));
    return L;
}

Poly sigma(const BaseElement& e, const LoopPresentation& L)
{
    const TermOrder base_order(L.base_generators);
    base_order.degree(e.value);  // rejects inhomogeneous input
    const std::size_t n = L.num_base();
    Poly r;
    for (const auto& m : e.value) {
        if (m.is_one())
            throw ValidationError("sigma is defined in positive degrees only");
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] % 2 == 0)
                continue;
            Monomial rest = m;
            rest.set(i, m[i] - 1);
            r += L.sigma[i].times(rest);
        }
    }
    return r;
}

SqTable derive_sq_table(const UnstableAlgebra& base, const LoopPresentation& L)
{
    const auto& rels = L.presentation.relations;
    SqTable table;
    for (std::size_t i = 0; i < L.num_base(); ++i) {
        const int d = L.base_generators[i].degree;
        for (int k = 1; k < d; k *= 2) {
            Poly v = reduce_by(as_loop_element(base.generator_sq(i, k)), rels);
            if (!v.is_zero())
                table[{i, k}] = std::move(v);
        }
        if (auto y = suspension_index(L, i)) {
            for (int k = 1; k < d - 1; k *= 2) {
                Poly v = reduce_by(sigma(BaseElement{base.generator_sq(i, k)}, L), rels);
                if (!v.is_zero())
                    table[{*y, k}] = std::move(v);
            }
        }
    }
    return table;
}

Relation compute_square_relation(std::size_t y, const UnstableAlgebra& base, const LoopPresentation& L)
{
    for (std::size_t i = 0; i < L.num_base(); ++i) {
        if (suspension_index(L, i) != y)
            continue;
        const int dy = L.presentation.generators[y].degree;
        Relation r;
        r.lead = Monomial::generator(y, 2);
        r.tail = reduce_by(sigma(BaseElement{base.generator_sq(i, dy)}, L), L.presentation.relations);
        return r;
    }
    throw ValidationError("generator index " + std::to_string(y) + " is not a suspension of a base generator");
}

LoopPresentation eliminate_redundant_generators(LoopPresentation L)
{
    for (;;) {
        auto& P = L.presentation;
        const TermOrder order(P.generators);
        // (degree, generator, relation)
        std::optional<std::tuple<int, std::size_t, std::size_t>> pick;
        for (std::size_t ri = 0; ri < P.relations.size(); ++ri) {
            for (const auto& t : P.relations[ri].tail) {
                if (t.support_size() != 1)
                    continue;
                for (std::size_t g = 0; g < P.generators.size(); ++g) {
                    if (t[g] == 1 && P.generators[g].derived) {
                        auto cand = std::make_tuple(P.generators[g].degree, g, ri);
                        if (!pick || cand < *pick)
                            pick = cand;
                    }
                }
            }
        }
        if (!pick)
            break;
        const auto [deg, b, ri] = *pick;
        const Relation consumed = P.relations[ri];
        if (order.degree(consumed.lead) != deg)
            throw VerificationError("cannot eliminate " + P.generators[b].name + ": relation " +
                                    format_monomial(consumed.lead, order) + " has degree " +
                                    std::to_string(order.degree(consumed.lead)) + ", generator has degree " +
                                    std::to_string(deg));
        Poly value = relation_poly(consumed);
        value += Monomial::generator(b);
        const std::string name = P.generators[b].name;

        std::vector<Poly> rel_polys;
        for (std::size_t j = 0; j < P.relations.size(); ++j)
            if (j != ri)
                rel_polys.push_back(substitute(relation_poly(P.relations[j]), b, value));
        SqTable sq;
        for (auto& [key, v] : P.sq)
            if (key.first != b)
                sq[{key.first > b ? key.first - 1 : key.first, key.second}] =
                    remove_index(substitute(v, b, value), b);
        for (auto& s : L.sigma)
            s = remove_index(substitute(s, b, value), b);
        for (auto& e : L.eliminations)
            e.value = remove_index(substitute(e.value, b, value), b);
        L.eliminations.push_back({name, deg, remove_index(value, b)});

        P.generators.erase(P.generators.begin() + std::ptrdiff_t(b));
        const TermOrder reduced_order(P.generators);
        std::vector<Relation> rels;
        for (const auto& p : rel_polys) {
            Poly q = remove_index(p, b);
            if (!q.is_zero())
                rels.push_back(relation_from(q, reduced_order));
        }
        P.relations = interreduce(std::move(rels), reduced_order);
        P.sq.clear();
        for (auto& [key, v] : sq) {
            Poly r = reduce_by(v, P.relations);
            if (!r.is_zero())
                P.sq[key] = std::move(r);
        }
        for (auto& s : L.sigma)
            s = reduce_by(s, P.relations);
        for (auto& e : L.eliminations)
            e.value = reduce_by(e.value, P.relations);
    }
    const TermOrder order(L.presentation.generators);
    std::stable_sort(L.presentation.relations.begin(), L.presentation.relations.end(),
                     [&](const Relation& a, const Relation& b) { return order.less(a.lead, b.lead); });
    return L;
}

LoopPresentation derive_loop_presentation(const UnstableAlgebra& base, const DeriveOptions& options)
{
    if (!base.presentation().is_polynomial())
        throw ValidationError("input must be polynomial");
    if (options.self_check) {
        auto report = check_adem_coherence(base, options.bound, options.execution);
        if (!report.ok())
            throw VerificationError("base presentation " + base.presentation().name +
                                    " is not Adem-coherent up to degree " + std::to_string(options.bound));
    }
    LoopPresentation L = initial_loop_presentation(base);
    L.presentation.sq = derive_sq_table(base, L);
    for (std::size_t y = L.num_base(); y < L.presentation.generators.size(); ++y)
        L.presentation.relations.push_back(compute_square_relation(y, base, L));
    L = eliminate_redundant_generators(std::move(L));

    const UnstableAlgebra result(L.presentation);  // validates relations and table
    if (options.self_check) {
        if (!check_adem_coherence(result, options.bound, options.execution).ok())
            throw VerificationError("derived presentation " + L.presentation.name +
                                    " is not Adem-coherent up to degree " + std::to_string(options.bound));
        if (!check_confluence(result, options.bound, options.execution).ok())
            throw VerificationError("derived relations of " + L.presentation.name +
                                    " are not confluent up to degree " + std::to_string(options.bound));
    }
    return L;
}

std::vector<std::uint64_t> loop_poincare_product(const std::vector<Generator>& base, int max_degree)
{
    std::vector<std::uint64_t> s(std::size_t(std::max(max_degree, -1) + 1), 0);
    if (s.empty())
        return s;
    s[0] = 1;
    for (const auto& x : base) {
        const std::size_t d = std::size_t(x.degree);
        for (std::size_t i = s.size(); i-- > d - 1;)
            s[i] += s[i - (d - 1)];
        for (std::size_t i = d; i < s.size(); ++i)
            s[i] += s[i - d];
    }
    return s;
}

}  // namespace loopcoh
