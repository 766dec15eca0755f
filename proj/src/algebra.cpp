#include "loopcoh/algebra.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

namespace loopcoh {

std::optional<std::size_t> Presentation::find(const std::string& generator) const
{
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == generator)
            return i;
    return std::nullopt;
}

UnstableAlgebra::UnstableAlgebra(Presentation p) : pres_(std::move(p)), order_(pres_.generators)
{
    validate();
    build_action();
}

int UnstableAlgebra::max_generator_degree() const
{
    int d = 0;
    for (const auto& g : pres_.generators)
        d = std::max(d, g.degree);
    return d;
}

void UnstableAlgebra::validate()
{
    std::set<std::string> names;
    for (const auto& g : pres_.generators) {
        if (g.name.empty())
            throw ValidationError("generator with empty name");
        if (g.degree < 1)
            throw ValidationError("generator " + g.name + " must have positive degree");
        if (!names.insert(g.name).second)
            throw ValidationError("duplicate generator " + g.name);
    }
    const std::size_t n = pres_.generators.size();
    auto in_alphabet = [n](const Monomial& m) {
        for (std::size_t i = n; i < kMaxGenerators; ++i)
            if (m[i] != 0)
                return false;
        return true;
    };
    for (const auto& [key, value] : pres_.sq) {
        const auto [g, k] = key;
        if (g >= n)
            throw ValidationError("sq entry for unknown generator index " + std::to_string(g));
        const auto& gen = pres_.generators[g];
        if (!is_power_of_two(k))
            throw ValidationError("sq " + std::to_string(k) + " " + gen.name + ": k must be a power of two");
        if (k >= gen.degree)
            throw ValidationError("sq " + std::to_string(k) + " " + gen.name +
                                  ": only k below the generator degree is stored");
        for (const auto& m : value)
            if (!in_alphabet(m))
                throw ValidationError("sq entry uses an unknown generator");
        if (auto d = order_.degree(value); d && *d != gen.degree + k)
            throw ValidationError("sq " + std::to_string(k) + " " + gen.name + ": degree mismatch: expected " +
                                  std::to_string(gen.degree + k) + ", got " + std::to_string(*d));
    }
    for (const auto& r : pres_.relations) {
        if (r.lead.is_one())
            throw ValidationError("relation lead must be a nonconstant monomial");
        if (!in_alphabet(r.lead))
            throw ValidationError("relation uses an unknown generator");
        const int d = order_.degree(r.lead);
        const std::string where = "relation " + format_monomial(r.lead, order_);
        for (const auto& m : r.tail) {
            if (!in_alphabet(m))
                throw ValidationError(where + ": unknown generator in tail");
            if (order_.degree(m) != d)
                throw ValidationError(where + ": degree mismatch: expected " + std::to_string(d) + ", got " +
                                      std::to_string(order_.degree(m)));
            if (!order_.less(m, r.lead))
                throw ValidationError(where + ": tail term " + format_monomial(m, order_) +
                                      " is not below the lead");
            if (r.lead.divides(m))
                throw ValidationError(where + ": lead divides tail term " + format_monomial(m, order_));
        }
    }
    for (const auto& ln : pres_.loop_names)
        if (!order_.find(ln.base))
            throw ValidationError("loop name for unknown generator " + ln.base);
}

void UnstableAlgebra::build_action()
{
    const std::size_t n = num_generators();
    action_.assign(n, {});
    for (std::size_t g = 0; g < n; ++g) {
        const int d = generator_degree(g);
        action_[g].assign(std::size_t(d) + 1, Poly{});
        action_[g][0] = generator(g);
        action_[g][std::size_t(d)] = normal_form(Monomial::generator(g, 2));
    }
    const int top = max_generator_degree();
    for (int k = 1; k < top; ++k) {
        for (std::size_t g = 0; g < n; ++g) {
            const int d = generator_degree(g);
            if (k >= d)
                continue;
            if (is_power_of_two(k)) {
                auto it = pres_.sq.find({g, k});
                if (it != pres_.sq.end())
                    action_[g][std::size_t(k)] = normal_form(it->second);
                continue;
            }
            const int b = int(std::bit_floor(unsigned(k)));
            const int a = k - b;
            Poly r = apply_sq(a, action_[g][std::size_t(b)]);
            for (int c = 1; 2 * c <= a; ++c)
                if (binom_mod2(std::uint64_t(b - c - 1), std::uint64_t(a - 2 * c)))
                    r += apply_sq(k - c, action_[g][std::size_t(c)]);
            action_[g][std::size_t(k)] = std::move(r);
        }
    }

    frob_.assign(n, {});
    for (std::size_t g = 0; g < n; ++g) {
        const int d = generator_degree(g);
        for (int s = 0; (2 * d) << s <= kFrobeniusCacheDegree; ++s) {
            std::vector<Poly> row;
            row.reserve(std::size_t(d) + 1);
            for (int j = 0; j <= d; ++j)
                row.push_back(s == 0 ? action_[g][std::size_t(j)]
                                     : normal_form(frob_[g][std::size_t(s) - 1][std::size_t(j)].squared()));
            frob_[g].push_back(std::move(row));
        }
    }
    frob_ready_ = true;
}

bool UnstableAlgebra::is_normal(const Monomial& m) const
{
    return std::none_of(pres_.relations.begin(), pres_.relations.end(),
                        [&](const Relation& r) { return r.lead.divides(m); });
}

namespace {

const Poly& nf_monomial(const Monomial& m, const std::vector<Relation>& relations, NormalFormMemo& memo)
{
    if (auto it = memo.find(m); it != memo.end())
        return it->second;
    Poly r;
    auto rel = std::find_if(relations.begin(), relations.end(), [&](const Relation& x) { return x.lead.divides(m); });
    if (rel == relations.end()) {
        r = Poly(m);
    }
    else {
        const Monomial cof = rel->lead.cofactor_in(m);
        for (const auto& t : rel->tail)
            r += nf_monomial(cof * t, relations, memo);
    }
    return memo.emplace(m, std::move(r)).first->second;
}

}  // namespace

Poly reduce_by(const Poly& p, const std::vector<Relation>& relations, NormalFormMemo& memo)
{
    if (relations.empty())
        return p;
    auto reducible = [&](const Monomial& m) {
        return std::any_of(relations.begin(), relations.end(), [&](const Relation& r) { return r.lead.divides(m); });
    };
    if (std::none_of(p.begin(), p.end(), reducible))
        return p;
    Poly r;
    for (const auto& m : p)
        r += nf_monomial(m, relations, memo);
    return r;
}

Poly reduce_by(const Poly& p, const std::vector<Relation>& relations)
{
    NormalFormMemo memo;
    return reduce_by(p, relations, memo);
}

Poly UnstableAlgebra::normal_form(const Poly& p) const
{
    return reduce_by(p, pres_.relations);
}

Poly UnstableAlgebra::normal_form(const Poly& p, NormalFormMemo& memo) const
{
    return reduce_by(p, pres_.relations, memo);
}

Poly UnstableAlgebra::normal_form(const Monomial& m) const
{
    return normal_form(Poly(m));
}

Poly UnstableAlgebra::checked_normal_form(const Poly& p, int confluence_bound) const
{
    if (!pres_.relations.empty())
        for (const auto& m : p)
            if (order_.degree(m) > confluence_bound)
                throw VerificationError("degree " + std::to_string(order_.degree(m)) +
                                        " exceeds the bound " + std::to_string(confluence_bound) +
                                        " to which the relations were checked");
    return normal_form(p);
}

Poly UnstableAlgebra::rewrite_once(const Monomial& m, std::size_t relation) const
{
    const auto& r = pres_.relations.at(relation);
    if (!r.lead.divides(m))
        throw ValidationError("relation lead does not divide the monomial");
    return r.tail.times(r.lead.cofactor_in(m));
}

Poly UnstableAlgebra::multiply(const Poly& a, const Poly& b) const
{
    return normal_form(a * b);
}

const Poly& UnstableAlgebra::generator_sq(std::size_t g, int k) const
{
    if (k < 0)
        throw ValidationError("negative Steenrod square");
    if (k > generator_degree(g))
        return zero_;
    return action_.at(g)[std::size_t(k)];
}

Poly UnstableAlgebra::factor(std::size_t g, int s, int j) const
{
    if (frob_ready_ && std::size_t(s) < frob_[g].size())
        return frob_[g][std::size_t(s)][std::size_t(j)];
    Poly p = action_[g][std::size_t(j)];
    for (int i = 0; i < s; ++i)
        p = normal_form(p.squared());
    return p;
}

std::vector<Poly> UnstableAlgebra::total_square(const Monomial& m, int max_k) const
{
    std::vector<Poly> cur(std::size_t(max_k) + 1);
    cur[0] = Poly::one();
    for (std::size_t g = 0; g < num_generators(); ++g) {
        const unsigned e = m[g];
        const int d = generator_degree(g);
        for (int s = 0; (e >> s) != 0; ++s) {
            if (((e >> s) & 1u) == 0)
                continue;
            const int step = 1 << s;
            std::vector<Poly> next(cur.size());
            for (int j = 0; j <= d && j * step <= max_k; ++j) {
                const Poly f = factor(g, s, j);
                if (f.is_zero())
                    continue;
                for (int t = 0; t + j * step <= max_k; ++t)
                    if (!cur[std::size_t(t)].is_zero())
                        next[std::size_t(t + j * step)] += cur[std::size_t(t)] * f;
            }
            for (auto& p : next)
                p = normal_form(p);
            cur = std::move(next);
        }
    }
    return cur;
}

Poly UnstableAlgebra::apply_sq(int k, const Poly& e) const
{
    if (k < 0)
        throw ValidationError("negative Steenrod square");
    order_.degree(e);  // rejects inhomogeneous input
    if (k == 0)
        return normal_form(e);
    Poly r;
    for (const auto& m : e)
        r += total_square(m, k)[std::size_t(k)];
    return r;
}

Poly UnstableAlgebra::apply(const SqMonomial& op, const Poly& e) const
{
    Poly r = normal_form(e);
    const auto& x = op.exponents();
    for (auto it = x.rbegin(); it != x.rend() && !r.is_zero(); ++it)
        r = apply_sq(*it, r);
    return r;
}

Poly UnstableAlgebra::apply(const SteenrodElement& op, const Poly& e) const
{
    Poly r;
    for (const auto& m : op.terms())
        r += apply(m, e);
    return r;
}

namespace {

void enumerate_basis(const UnstableAlgebra& A, std::size_t g, Monomial& m, int degree, int max_degree,
                     std::vector<std::vector<Monomial>>& out)
{
    if (g == A.num_generators()) {
        out[std::size_t(degree)].push_back(m);
        return;
    }
    const int d = A.generator_degree(g);
    for (unsigned e = 0; degree + int(e) * d <= max_degree && e <= kMaxExponent; ++e) {
        m.set(g, e);
        if (e > 0 && !A.is_normal(m))
            break;
        enumerate_basis(A, g + 1, m, degree + int(e) * d, max_degree, out);
    }
    m.set(g, 0);
}

}  // namespace

std::vector<std::vector<Monomial>> UnstableAlgebra::basis_by_degree(int max_degree) const
{
    std::vector<std::vector<Monomial>> out(std::size_t(std::max(max_degree, -1) + 1));
    if (max_degree < 0)
        return out;
    Monomial m;
    enumerate_basis(*this, 0, m, 0, max_degree, out);
    for (auto& v : out)
        std::sort(v.begin(), v.end());
    return out;
}

std::vector<std::uint64_t> UnstableAlgebra::poincare_series(int max_degree) const
{
    std::vector<std::uint64_t> dims;
    for (const auto& v : basis_by_degree(max_degree))
        dims.push_back(v.size());
    return dims;
}

}  // namespace loopcoh
