#include "loopcoh/gf2_poly.hpp"

#include <string>

namespace loopcoh {

namespace {

std::uint8_t checked_exponent(unsigned e)
{
    if (e > kMaxExponent)
        throw ValidationError("exponent " + std::to_string(e) + " exceeds " + std::to_string(kMaxExponent));
    return static_cast<std::uint8_t>(e);
}

}  // namespace

Monomial::Monomial(std::initializer_list<unsigned> exps)
{
    if (exps.size() > kMaxGenerators)
        throw ValidationError("too many generators");
    std::size_t i = 0;
    for (unsigned e : exps)
        exps_[i++] = checked_exponent(e);
}

Monomial Monomial::generator(std::size_t index, unsigned exponent)
{
    Monomial m;
    m.set(index, exponent);
    return m;
}

void Monomial::set(std::size_t i, unsigned e)
{
    if (i >= kMaxGenerators)
        throw ValidationError("generator index out of range");
    exps_[i] = checked_exponent(e);
}

bool Monomial::is_one() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < kMaxGenerators; ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::cofactor_in(const Monomial& other) const
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxGenerators; ++i)
        r.exps_[i] = static_cast<std::uint8_t>(other.exps_[i] - exps_[i]);
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxGenerators; ++i)
        r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    return r;
}

Monomial Monomial::squared() const
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxGenerators; ++i)
        r.exps_[i] = checked_exponent(2u * exps_[i]);
    return r;
}

std::size_t Monomial::support_size() const
{
    return static_cast<std::size_t>(std::count_if(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e != 0; }));
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxGenerators; ++i) {
        unsigned e = unsigned(a.exps_[i]) + b.exps_[i];
        r.exps_[i] = e > kMaxExponent ? checked_exponent(e) : static_cast<std::uint8_t>(e);
    }
    return r;
}

std::size_t Monomial::hash() const
{
    // FNV-1a over the exponent bytes
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint8_t e : exps_) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

Poly Poly::from_terms(std::vector<Monomial> terms)
{
    std::sort(terms.begin(), terms.end());
    Poly p;
    p.terms_.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2 == 1)
            p.terms_.push_back(terms[i]);
        i = j;
    }
    return p;
}

bool Poly::contains(const Monomial& m) const
{
    return std::binary_search(terms_.begin(), terms_.end(), m);
}

Poly& Poly::operator+=(const Poly& other)
{
    if (other.terms_.empty())
        return *this;
    if (terms_.empty()) {
        terms_ = other.terms_;
        return *this;
    }
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

Poly& Poly::operator+=(const Monomial& m)
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m);
    if (it != terms_.end() && *it == m)
        terms_.erase(it);
    else
        terms_.insert(it, m);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    if (b.size() == 1)
        return a.times(b.terms_[0]);
    if (a.size() == 1)
        return b.times(a.terms_[0]);
    std::vector<Monomial> products;
    products.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            products.push_back(x * y);
    return Poly::from_terms(std::move(products));
}

Poly Poly::times(const Monomial& m) const
{
    // Adding a fixed exponent vector preserves the lexicographic order.
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back(t * m);
    return r;
}

Poly Poly::squared() const
{
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back(t.squared());
    return r;
}

}  // namespace loopcoh
