#include "loopcoh/steenrod.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace loopcoh {

SqMonomial::SqMonomial(std::vector<int> exponents) : exps_(std::move(exponents))
{
    for (int i : exps_)
        if (i <= 0)
            throw ValidationError("Steenrod square exponents must be positive, got " + std::to_string(i));
}

int SqMonomial::degree() const
{
    return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool SqMonomial::is_admissible() const
{
    for (std::size_t j = 0; j + 1 < exps_.size(); ++j)
        if (exps_[j] < 2 * exps_[j + 1])
            return false;
    return true;
}

SqMonomial operator*(const SqMonomial& a, const SqMonomial& b)
{
    SqMonomial r = a;
    r.exps_.insert(r.exps_.end(), b.exps_.begin(), b.exps_.end());
    return r;
}

int excess(const SqMonomial& m)
{
    if (!m.is_admissible())
        throw ValidationError("excess is defined for admissible monomials only: " + to_string(m));
    if (m.is_identity())
        return 0;
    const auto& e = m.exponents();
    return e.front() - std::accumulate(e.begin() + 1, e.end(), 0);
}

SteenrodElement SteenrodElement::sq(int k)
{
    if (k == 0)
        return identity();
    return SteenrodElement(SqMonomial{k});
}

SteenrodElement SteenrodElement::from_terms(std::vector<SqMonomial> terms)
{
    std::sort(terms.begin(), terms.end());
    SteenrodElement r;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2 == 1)
            r.terms_.push_back(terms[i]);
        i = j;
    }
    return r;
}

bool SteenrodElement::is_homogeneous() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const SqMonomial& m) { return m.degree() == terms_.front().degree(); });
}

int SteenrodElement::degree() const
{
    if (terms_.empty())
        throw ValidationError("degree of the zero operation is undefined");
    if (!is_homogeneous())
        throw ValidationError("mixed-degree Steenrod element: " + to_string(*this));
    return terms_.front().degree();
}

bool SteenrodElement::is_admissible() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const SqMonomial& m) { return m.is_admissible(); });
}

SteenrodElement& SteenrodElement::operator+=(const SteenrodElement& other)
{
    std::vector<SqMonomial> merged;
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

namespace {

void toggle(std::set<SqMonomial>& s, SqMonomial m)
{
    auto [it, inserted] = s.insert(std::move(m));
    if (!inserted)
        s.erase(it);
}

}  // namespace

SteenrodElement adem_reduce(const SteenrodElement& e)
{
    std::set<SqMonomial> pending(e.terms().begin(), e.terms().end());
    std::set<SqMonomial> done;
    while (!pending.empty()) {
        SqMonomial m = std::move(pending.extract(pending.begin()).value());
        const auto& x = m.exponents();
        std::size_t j = 0;
        while (j + 1 < x.size() && x[j] >= 2 * x[j + 1])
            ++j;
        if (j + 1 >= x.size()) {
            toggle(done, std::move(m));
            continue;
        }
        const int a = x[j], b = x[j + 1];
        for (int c = 0; 2 * c <= a; ++c) {
            if (!binom_mod2(std::uint64_t(b - c - 1), std::uint64_t(a - 2 * c)))
                continue;
            std::vector<int> y(x.begin(), x.begin() + std::ptrdiff_t(j));
            y.push_back(a + b - c);
            if (c > 0)
                y.push_back(c);
            y.insert(y.end(), x.begin() + std::ptrdiff_t(j) + 2, x.end());
            toggle(pending, SqMonomial(std::move(y)));
        }
    }
    return SteenrodElement::from_terms({done.begin(), done.end()});
}

SteenrodElement multiply(const SteenrodElement& a, const SteenrodElement& b)
{
    std::vector<SqMonomial> products;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            products.push_back(x * y);
    return adem_reduce(SteenrodElement::from_terms(std::move(products)));
}

namespace {

// Admissible sequences of total `degree` whose first entry is at most `cap`.
void admissible_rec(int degree, int cap, std::vector<int>& prefix, std::vector<SqMonomial>& out)
{
    if (degree == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int i = std::min(cap, degree); i >= 1; --i) {
        prefix.push_back(i);
        admissible_rec(degree - i, i / 2, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<SqMonomial> admissible_basis(int degree)
{
    std::vector<SqMonomial> out;
    std::vector<int> prefix;
    if (degree >= 0)
        admissible_rec(degree, degree, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

SteenrodElement parse_steenrod(std::string_view text)
{
    std::vector<SqMonomial> terms;
    std::vector<int> current;
    bool have_factor = false;  // anything seen in the current summand
    bool saw_zero = false;
    bool saw_one = false;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) { throw ParseError(msg, 1, int(i) + 1); };
    auto finish_term = [&] {
        if (!have_factor)
            fail("empty summand");
        if (saw_zero) {
            if (!current.empty() || saw_one)
                fail("0 cannot be combined with other factors");
        }
        else {
            terms.emplace_back(current);
        }
        current.clear();
        have_factor = saw_zero = saw_one = false;
    };
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        }
        else if (ch == '+') {
            finish_term();
            ++i;
        }
        else if (text.substr(i, 2) == "Sq") {
            std::size_t j = i + 2;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            if (j == i + 2)
                fail("expected an exponent after Sq");
            if (j - i - 2 > 6)
                fail("exponent too large");
            int k = std::stoi(std::string(text.substr(i + 2, j - i - 2)));
            if (k == 0)
                fail("Sq0 is written as 1");
            current.push_back(k);
            have_factor = true;
            i = j;
        }
        else if (ch == '1' || ch == '0') {
            if (i + 1 < text.size() && std::isalnum(static_cast<unsigned char>(text[i + 1])))
                fail("unexpected token");
            (ch == '1' ? saw_one : saw_zero) = true;
            have_factor = true;
            ++i;
        }
        else {
            fail(std::string("unexpected character '") + ch + "'");
        }
    }
    finish_term();
    return SteenrodElement::from_terms(std::move(terms));
}

std::string to_string(const SqMonomial& m)
{
    if (m.is_identity())
        return "1";
    std::string s;
    for (int i : m.exponents()) {
        if (!s.empty())
            s += ' ';
        s += "Sq" + std::to_string(i);
    }
    return s;
}

std::string to_string(const SteenrodElement& e)
{
    if (e.is_zero())
        return "0";
    std::string s;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        if (!s.empty())
            s += " + ";
        s += to_string(*it);
    }
    return s;
}

namespace {

int total_exponent(const Monomial& m)
{
    int d = 0;
    for (std::size_t i = 0; i < kMaxGenerators; ++i)
        d += int(m[i]);
    return d;
}

class OracleKernel
{
public:
    explicit OracleKernel(int truncation) : truncation_(truncation) {}

    // Sq^k of a monomial in degree-one variables:
    // Sq^k(t m) = t Sq^k(m) + t^2 Sq^{k-1}(m).
    const Poly& sq(int k, const Monomial& m)
    {
        auto key = std::make_pair(k, m);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        Poly r;
        const int d = total_exponent(m);
        if (k == 0) {
            r = Poly(m);
        }
        else if (k <= d) {
            std::size_t v = 0;
            while (m[v] == 0)
                ++v;
            Monomial rest = m;
            rest.set(v, m[v] - 1);
            r = sq(k, rest).times(Monomial::generator(v));
            r += sq(k - 1, rest).times(Monomial::generator(v, 2));
        }
        return memo_.emplace(key, std::move(r)).first->second;
    }

    Poly apply(const SqMonomial& op, Poly p)
    {
        const auto& x = op.exponents();
        for (auto it = x.rbegin(); it != x.rend(); ++it) {
            Poly next;
            for (const auto& m : p) {
                if (total_exponent(m) + *it > truncation_) {
                    truncated_ = true;
                    continue;
                }
                next += sq(*it, m);
            }
            p = std::move(next);
        }
        return p;
    }

    bool truncated() const { return truncated_; }

private:
    int truncation_;
    bool truncated_ = false;
    std::map<std::pair<int, Monomial>, Poly> memo_;
};

}  // namespace

OracleResult oracle_apply(const SteenrodElement& e, const Poly& p, int truncation_degree)
{
    OracleKernel kernel(truncation_degree);
    OracleResult result;
    Poly input;
    for (const auto& m : p) {
        if (total_exponent(m) > truncation_degree)
            result.truncated = true;
        else
            input += m;
    }
    for (const auto& op : e.terms())
        result.value += kernel.apply(op, input);
    result.truncated = result.truncated || kernel.truncated();
    return result;
}

Poly oracle_product(int d)
{
    if (d < 0 || std::size_t(d) > kMaxGenerators)
        throw ValidationError("oracle supports at most " + std::to_string(kMaxGenerators) + " variables");
    Monomial m;
    for (int i = 0; i < d; ++i)
        m.set(std::size_t(i), 1);
    return Poly(m);
}

}  // namespace loopcoh
