#include "loopcoh/term_order.hpp"

#include <algorithm>
#include <cctype>

namespace loopcoh {

TermOrder::TermOrder(std::vector<Generator> generators) : gens_(std::move(generators))
{
    if (gens_.size() > kMaxGenerators)
        throw ValidationError("at most " + std::to_string(kMaxGenerators) + " generators are supported, got " +
                              std::to_string(gens_.size()));
}

std::optional<std::size_t> TermOrder::find(std::string_view name) const
{
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return i;
    return std::nullopt;
}

int TermOrder::degree(const Monomial& m) const
{
    int d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        d += int(m[i]) * gens_[i].degree;
    return d;
}

int TermOrder::derived_weight(const Monomial& m) const
{
    int d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].derived)
            d += int(m[i]) * gens_[i].degree;
    return d;
}

std::optional<int> TermOrder::degree(const Poly& p) const
{
    if (p.is_zero())
        return std::nullopt;
    const int d = degree(p.terms().front());
    for (const auto& m : p)
        if (degree(m) != d)
            throw ValidationError("inhomogeneous element: " + format_poly(p, *this));
    return d;
}

bool TermOrder::is_homogeneous(const Poly& p) const
{
    if (p.is_zero())
        return true;
    const int d = degree(p.terms().front());
    return std::all_of(p.begin(), p.end(), [&](const Monomial& m) { return degree(m) == d; });
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const
{
    if (auto c = degree(a) <=> degree(b); c != 0)
        return c;
    if (auto c = derived_weight(a) <=> derived_weight(b); c != 0)
        return c;
    return a <=> b;
}

std::vector<Monomial> TermOrder::descending(const Poly& p) const
{
    std::vector<Monomial> v(p.begin(), p.end());
    std::sort(v.begin(), v.end(), [&](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; });
    return v;
}

Monomial TermOrder::leading(const Poly& p) const
{
    if (p.is_zero())
        throw ValidationError("zero polynomial has no leading term");
    return *std::max_element(p.begin(), p.end(), [&](const Monomial& a, const Monomial& b) { return less(a, b); });
}

std::string format_monomial(const Monomial& m, const TermOrder& order)
{
    std::string s;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += order.generators()[i].name;
        if (m[i] > 1)
            s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string format_poly(const Poly& p, const TermOrder& order)
{
    if (p.is_zero())
        return "0";
    std::string s;
    for (const auto& m : order.descending(p)) {
        if (!s.empty())
            s += " + ";
        s += format_monomial(m, order);
    }
    return s;
}

namespace {

class PolyLexer
{
public:
    PolyLexer(std::string_view text, const TermOrder& order, int line, int column)
        : text_(text), order_(order), line_(line), column_(column)
    {
    }

    Poly parse_sum()
    {
        std::vector<Monomial> terms;
        skip_space();
        if (pos_ == text_.size())
            fail("expected a polynomial");
        for (;;) {
            auto term = parse_product();
            if (term)
                terms.push_back(*term);
            skip_space();
            if (pos_ == text_.size())
                break;
            if (text_[pos_] != '+')
                fail(std::string("unexpected character '") + text_[pos_] + "'");
            ++pos_;
        }
        return Poly::from_terms(std::move(terms));
    }

    Monomial parse_single()
    {
        skip_space();
        auto m = parse_product();
        skip_space();
        if (pos_ != text_.size())
            fail(std::string("unexpected character '") + text_[pos_] + "'");
        if (!m)
            fail("expected a monomial, got 0");
        return *m;
    }

private:
    // nullopt encodes a product containing the factor 0.
    std::optional<Monomial> parse_product()
    {
        Monomial m;
        bool zero = false;
        for (;;) {
            skip_space();
            if (pos_ == text_.size())
                fail("expected a factor");
            const std::size_t start = pos_;
            char ch = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                unsigned value = read_number();
                if (value > 1)
                    fail("coefficients are in GF(2); write 0 or 1");
                if (value == 0)
                    zero = true;
                if (peek('^'))
                    fail("constants take no exponent");
            }
            else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                    ++pos_;
                std::string_view name = text_.substr(start, pos_ - start);
                auto idx = order_.find(name);
                if (!idx) {
                    pos_ = start;
                    fail("unknown generator '" + std::string(name) + "'");
                }
                unsigned e = 1;
                skip_space();
                if (peek('^')) {
                    ++pos_;
                    skip_space();
                    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                        fail("expected an exponent after '^'");
                    e = read_number();
                }
                unsigned total = m[*idx] + e;
                if (total > kMaxExponent)
                    fail("exponent too large");
                m.set(*idx, total);
            }
            else {
                fail(std::string("unexpected character '") + ch + "'");
            }
            skip_space();
            if (peek('*')) {
                ++pos_;
                continue;
            }
            break;
        }
        if (zero)
            return std::nullopt;
        return m;
    }

    unsigned read_number()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ - start > 6)
            fail("number too large");
        return unsigned(std::stoul(std::string(text_.substr(start, pos_ - start))));
    }

    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(msg, line_, column_ + int(pos_));
    }

    std::string_view text_;
    const TermOrder& order_;
    int line_;
    int column_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const TermOrder& order, int line, int column)
{
    return PolyLexer(text, order, line, column).parse_sum();
}

Monomial parse_monomial(std::string_view text, const TermOrder& order, int line, int column)
{
    return PolyLexer(text, order, line, column).parse_single();
}

}  // namespace loopcoh
