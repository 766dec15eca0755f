#include "loopcoh/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "loopcoh/error.hpp"
#include "loopcoh/term_order.hpp"

namespace loopcoh {

namespace {

bool is_name_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Reads one line left to right; columns are 1-based.
class LineReader
{
public:
    LineReader(std::string_view text, int line) : text_(text), line_(line) {}

    int line() const { return line_; }
    int column() const { return int(pos_) + 1; }

    int next_column()
    {
        skip_space();
        return column();
    }

    bool at_end()
    {
        skip_space();
        return pos_ == text_.size();
    }

    std::string name(const char* what)
    {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(std::string("expected ") + what);
        while (pos_ < text_.size() && is_name_char(text_[pos_]))
            ++pos_;
        if (pos_ == start)
            fail(std::string("expected ") + what);
        return std::string(text_.substr(start, pos_ - start));
    }

    int integer(const char* what)
    {
        skip_space();
        int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc() || ptr == text_.data() + pos_)
            fail(std::string("expected ") + what);
        pos_ = std::size_t(ptr - text_.data());
        if (pos_ < text_.size() && is_name_char(text_[pos_]))
            fail(std::string("expected ") + what);
        return value;
    }

    void expect(char c)
    {
        skip_space();
        if (pos_ == text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    // Everything up to the end of the line; column of its first character.
    std::pair<std::string_view, int> rest()
    {
        skip_space();
        const int col = column();
        auto r = text_.substr(pos_);
        pos_ = text_.size();
        while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back())))
            r.remove_suffix(1);
        return {r, col};
    }

    void finish()
    {
        if (!at_end())
            fail("unexpected text at end of line");
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column()); }
    [[noreturn]] void fail_at(const std::string& msg, int col) const { throw ParseError(msg, line_, col); }

private:
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

struct Line
{
    int number;
    std::string_view text;
};

std::vector<Line> content_lines(std::string_view text)
{
    std::vector<Line> lines;
    int number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (std::any_of(line.begin(), line.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); }))
            lines.push_back({number, line});
        if (text.empty())
            break;
    }
    return lines;
}

}  // namespace

Presentation parse_presentation(std::string_view text)
{
    const auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError("no generators", 1, 1);

    Presentation p;
    bool have_name = false;
    // Pass 1: name and generators.
    for (const auto& line : lines) {
        LineReader r(line.text, line.number);
        const std::string kw = r.name("a keyword");
        if (kw == "algebra") {
            if (have_name)
                r.fail("duplicate algebra line");
            p.name = r.name("an algebra name");
            r.finish();
            have_name = true;
        }
        else if (kw == "generator") {
            const int col = r.next_column();
            Generator g;
            g.name = r.name("a generator name");
            if (p.find(g.name))
                r.fail_at("duplicate generator " + g.name, col);
            r.expect(':');
            g.degree = r.integer("a degree");
            if (g.degree <= 0)
                r.fail("degree must be positive");
            if (!r.at_end()) {
                if (r.name("'derived'") != "derived")
                    r.fail("expected 'derived'");
                g.derived = true;
            }
            r.finish();
            if (p.generators.size() == kMaxGenerators)
                r.fail_at("too many generators (at most " + std::to_string(kMaxGenerators) + ")", col);
            p.generators.push_back(std::move(g));
        }
        else if (kw != "sq" && kw != "relation" && kw != "loopname" && kw != "meta") {
            r.fail_at("unknown keyword '" + kw + "'", 1);
        }
    }
    if (!have_name)
        throw ParseError("missing algebra line", lines.front().number, 1);

    const TermOrder order(p.generators);
    auto find_generator = [&](LineReader& r, const std::string& name, int col) {
        auto g = order.find(name);
        if (!g)
            r.fail_at("unknown generator '" + name + "'", col);
        return *g;
    };
    // Pass 2: everything that refers to generators.
    std::set<std::pair<std::size_t, int>> given;
    for (const auto& line : lines) {
        LineReader r(line.text, line.number);
        const std::string kw = r.name("a keyword");
        if (kw == "sq") {
            const int kcol = r.next_column();
            const int k = r.integer("an operation index");
            if (!is_power_of_two(k))
                r.fail_at("k must be a power of two, got " + std::to_string(k), kcol);
            const int gcol = r.next_column();
            const auto g = find_generator(r, r.name("a generator name"), gcol);
            r.expect('=');
            auto [expr, col] = r.rest();
            const Poly value = parse_poly(expr, order, line.number, col);
            if (!order.is_homogeneous(value))
                r.fail_at("inhomogeneous value", col);
            const int d = p.generators[g].degree;
            const int expected = d + k;
            if (auto got = order.degree(value); got && *got != expected)
                r.fail_at("degree mismatch: expected " + std::to_string(expected) + ", got " + std::to_string(*got),
                          col);
            if (k >= d) {
                const Poly forced = k == d ? Poly(Monomial::generator(g, 2)) : Poly{};
                if (value != forced)
                    r.fail_at("instability forces sq " + std::to_string(k) + " " + p.generators[g].name + " = " +
                                  format_poly(forced, order),
                              col);
                continue;
            }
            if (!given.insert({g, k}).second)
                r.fail_at("duplicate sq line for sq " + std::to_string(k) + " " + p.generators[g].name, kcol);
            if (!value.is_zero())
                p.sq[{g, k}] = value;
        }
        else if (kw == "relation") {
            auto [text_all, col0] = r.rest();
            const auto eq = text_all.find('=');
            if (eq == std::string_view::npos)
                r.fail_at("expected '='", col0 + int(text_all.size()));
            const Monomial lead = parse_monomial(text_all.substr(0, eq), order, line.number, col0);
            const int tcol = col0 + int(eq) + 1;
            const Poly tail = parse_poly(text_all.substr(eq + 1), order, line.number, tcol);
            if (lead.is_one())
                r.fail_at("relation lead must not be constant", col0);
            if (!order.is_homogeneous(tail))
                r.fail_at("inhomogeneous relation", tcol);
            const int d = order.degree(lead);
            if (auto got = order.degree(tail); got && *got != d)
                r.fail_at("degree mismatch: expected " + std::to_string(d) + ", got " + std::to_string(*got), tcol);
            for (const auto& m : tail) {
                if (!order.less(m, lead))
                    r.fail_at("tail term " + format_monomial(m, order) + " is not below the lead " +
                                  format_monomial(lead, order),
                              tcol);
                if (lead.divides(m))
                    r.fail_at("lead divides tail term " + format_monomial(m, order), tcol);
            }
            for (const auto& rel : p.relations)
                if (rel.lead == lead)
                    r.fail_at("duplicate relation for " + format_monomial(lead, order), col0);
            p.relations.push_back({lead, tail});
        }
        else if (kw == "loopname") {
            const int col = r.next_column();
            LoopName ln;
            ln.base = r.name("a generator name");
            find_generator(r, ln.base, col);
            r.expect(':');
            ln.image = r.name("an image name");
            ln.suspension = r.name("a suspension name");
            r.finish();
            for (const auto& other : p.loop_names)
                if (other.base == ln.base)
                    r.fail_at("duplicate loopname for " + ln.base, col);
            p.loop_names.push_back(std::move(ln));
        }
        else if (kw == "meta") {
            const std::string key = r.name("a metadata key");
            r.expect('=');
            auto [value, col] = r.rest();
            if (!p.metadata.emplace(key, std::string(value)).second)
                r.fail_at("duplicate meta key " + key, col);
        }
    }
    for (std::size_t g = 0; g < p.generators.size(); ++g)
        for (int k = 1; k < p.generators[g].degree; k *= 2)
            if (!given.count({g, k}))
                p.defaulted.push_back({g, k});
    return p;
}

std::string format_presentation(const Presentation& p)
{
    const TermOrder order(p.generators);
    std::string out = "algebra " + p.name + "\n";
    for (const auto& [key, value] : p.metadata)
        out += "meta " + key + " = " + value + "\n";
    for (const auto& g : p.generators)
        out += "generator " + g.name + " : " + std::to_string(g.degree) + (g.derived ? " derived" : "") + "\n";
    for (const auto& ln : p.loop_names)
        out += "loopname " + ln.base + " : " + ln.image + " " + ln.suspension + "\n";
    for (const auto& [key, value] : p.sq)
        out += "sq " + std::to_string(key.second) + " " + p.generators[key.first].name + " = " +
               format_poly(value, order) + "\n";
    for (const auto& rel : p.relations)
        out += "relation " + format_monomial(rel.lead, order) + " = " + format_poly(rel.tail, order) + "\n";
    return out;
}

std::string format_loop_presentation(const LoopPresentation& L)
{
    const TermOrder order(L.presentation.generators);
    std::string out = format_presentation(L.presentation);
    for (std::size_t i = 0; i < L.num_base(); ++i)
        out += "# sigma " + L.base_generators[i].name + " = " + format_poly(L.sigma[i], order) + "\n";
    for (const auto& e : L.eliminations)
        out += "# eliminated " + e.generator + " = " + format_poly(e.value, order) + "\n";
    for (const auto& r : L.presentation.relations) {
        Poly p = r.tail;
        p += r.lead;
        out += "# ideal " + format_poly(p, order) + "\n";
    }
    return out;
}

std::vector<std::string> lint_defaults(const Presentation& p)
{
    std::vector<std::string> out;
    for (const auto& [g, k] : p.defaulted)
        out.push_back("sq " + std::to_string(k) + " " + p.generators[g].name + " omitted, taken as 0");
    return out;
}

}  // namespace loopcoh
