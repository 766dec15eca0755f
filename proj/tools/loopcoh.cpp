// loopcoh: Adem reduction, Steenrod squares on presented algebras, loop
// derivation, verification sweeps and Poincare series.
//
// Exit codes: 0 success, 1 a check failed, 2 bad usage or input.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "loopcoh/algebra.hpp"
#include "loopcoh/dsl.hpp"
#include "loopcoh/error.hpp"
#include "loopcoh/json_io.hpp"
#include "loopcoh/loop.hpp"
#include "loopcoh/steenrod.hpp"
#include "loopcoh/sweeps.hpp"

using namespace loopcoh;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options
{
    int bound = kDefaultBound;
    bool json = false;
    std::string lint = "warn";
    std::string file;
};

std::string tuple_text(const std::vector<std::uint64_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

Presentation load(const Options& opt)
{
    Presentation p = load_presentation(opt.file);
    if (std::filesystem::path(opt.file).extension() == ".json" || opt.lint == "off")
        return p;
    const auto msgs = lint_defaults(p);
    for (const auto& m : msgs)
        std::cerr << opt.file << ": lint: " << m << "\n";
    if (opt.lint == "error" && !msgs.empty())
        throw ValidationError(std::to_string(msgs.size()) + " omitted sq entries");
    return p;
}

int cmd_adem(const std::string& expr, const Options& opt)
{
    const SteenrodElement in = parse_steenrod(expr);
    const SteenrodElement out = adem_reduce(in);
    if (opt.json)
        std::cout << dump({{"kind", "adem"}, {"input", to_string(in)}, {"result", to_string(out)}});
    else
        std::cout << to_string(out) << "\n";
    return kExitOk;
}

int cmd_apply(int k, const std::string& element, const Options& opt)
{
    const UnstableAlgebra A(load(opt));
    if (k < 0)
        throw ValidationError("k must be nonnegative");
    const Poly e = parse_poly(element, A.order());
    const Poly r = A.apply_sq(k, e);
    const std::string text = format_poly(r, A.order());
    if (opt.json)
        std::cout << dump({{"kind", "apply"},
                           {"name", A.presentation().name},
                           {"k", k},
                           {"input", format_poly(A.normal_form(e), A.order())},
                           {"result", text}});
    else
        std::cout << text << "\n";
    return kExitOk;
}

// Line-level difference of two canonical texts, for golden mismatches.
void print_difference(const std::string& expected, const std::string& actual)
{
    auto lines = [](const std::string& s) {
        std::vector<std::string> out;
        std::istringstream in(s);
        for (std::string l; std::getline(in, l);)
            out.push_back(l);
        return out;
    };
    const auto a = lines(expected), b = lines(actual);
    for (const auto& l : a)
        if (std::find(b.begin(), b.end(), l) == b.end())
            std::cerr << "- " << l << "\n";
    for (const auto& l : b)
        if (std::find(a.begin(), a.end(), l) == a.end())
            std::cerr << "+ " << l << "\n";
}

int cmd_derive(const std::optional<std::string>& golden, const Options& opt)
{
    const UnstableAlgebra base(load(opt));
    DeriveOptions d;
    d.bound = opt.bound;
    const LoopPresentation L = derive_loop_presentation(base, d);
    if (opt.json)
        std::cout << dump(to_json(L));
    else
        std::cout << format_loop_presentation(L);
    if (!golden)
        return kExitOk;
    const LoopPresentation expected = load_loop_presentation(*golden);
    if (expected == L) {
        std::cerr << "golden " << *golden << ": match\n";
        return kExitOk;
    }
    std::cerr << "golden " << *golden << ": mismatch\n";
    print_difference(dump(to_json(expected)), dump(to_json(L)));
    return kExitFailed;
}

int cmd_verify(const Options& opt)
{
    const UnstableAlgebra A(load(opt));
    VerifyResult r;
    r.coherence = check_adem_coherence(A, opt.bound);
    r.confluence = check_confluence(A, opt.bound);
    r.instability = check_instability(A, opt.bound);
    if (opt.json) {
        std::cout << dump(to_json(r, A));
        return r.ok() ? kExitOk : kExitFailed;
    }
    const auto& order = A.order();
    const auto& rels = A.presentation().relations;
    std::cout << A.presentation().name << ", bound " << opt.bound << "\n";
    std::cout << "coherence: " << r.coherence.checks << " checks, " << r.coherence.violations.size()
              << " violations\n";
    for (const auto& v : r.coherence.violations) {
        const auto adm = adem_reduce(SteenrodElement(SqMonomial{v.a, v.b}));
        std::cout << "  violation (" << format_monomial(v.monomial, order) << ", " << v.a << ", " << v.b
                  << "): Sq" << v.a << " Sq" << v.b << " gives " << format_poly(v.composite, order) << ", "
                  << to_string(adm) << " gives " << format_poly(v.admissible, order) << "\n";
    }
    std::cout << "confluence: " << r.confluence.checks << " checks, " << r.confluence.divergences.size()
              << " divergences\n";
    for (const auto& d : r.confluence.divergences)
        std::cout << "  divergence at " << format_monomial(d.monomial, order) << ": via "
                  << format_monomial(rels[d.first].lead, order) << " " << format_poly(d.via_first, order)
                  << ", via " << format_monomial(rels[d.second].lead, order) << " "
                  << format_poly(d.via_second, order) << "\n";
    std::cout << "instability: " << r.instability.checks << " checks, " << r.instability.violations.size()
              << " violations\n";
    for (const auto& v : r.instability.violations)
        std::cout << "  violation: Sq" << v.k << " " << format_monomial(v.monomial, order) << " = "
                  << format_poly(v.value, order) << ", expected " << format_poly(v.expected, order) << "\n";
    std::cout << (r.ok() ? "ok" : "FAILED") << "\n";
    return r.ok() ? kExitOk : kExitFailed;
}

int cmd_poincare(const Options& opt)
{
    std::optional<LoopPresentation> loop;
    if (std::filesystem::path(opt.file).extension() == ".json") {
        const json j = json::parse(read_file(opt.file), nullptr, false);
        if (j.is_object() && j.value("kind", "") == "loop")
            loop = load_loop_presentation(opt.file);
    }
    const UnstableAlgebra A(loop ? loop->presentation : load(opt));
    if (!A.presentation().relations.empty()) {
        const auto c = check_confluence(A, opt.bound);
        if (!c.ok()) {
            std::cerr << A.presentation().name << ": relations are not confluent up to degree " << opt.bound
                      << "\n";
            return kExitFailed;
        }
    }
    const auto dims = A.poincare_series(opt.bound);
    std::optional<std::vector<std::uint64_t>> product;
    if (loop)
        product = loop_poincare_product(loop->base_generators, opt.bound);
    const bool ok = !product || *product == dims;
    if (opt.json) {
        json j = {{"kind", "poincare"}, {"name", A.presentation().name}, {"bound", opt.bound}, {"poincare", dims}};
        if (product) {
            j["product"] = *product;
            j["product_ok"] = ok;
        }
        std::cout << dump(j);
    }
    else {
        std::cout << "dimensions " << tuple_text(dims) << "\n";
        if (product) {
            std::cout << "product    " << tuple_text(*product) << "\n";
            std::cout << "product check " << (ok ? "pass" : "FAIL") << "\n";
        }
    }
    return ok ? kExitOk : kExitFailed;
}

int default_bound()
{
    const char* env = std::getenv("LOOPCOH_BOUND");
    if (!env || !*env)
        return kDefaultBound;
    try {
        std::size_t used = 0;
        const int v = std::stoi(env, &used);
        if (used == std::string(env).size() && v >= 0)
            return v;
    }
    catch (const std::exception&) {
    }
    throw CLI::ValidationError("LOOPCOH_BOUND", std::string("not a nonnegative integer: ") + env);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Steenrod squares, loop space cohomology presentations and their checks"};
    app.require_subcommand(1);
    Options opt;
    try {
        opt.bound = default_bound();
    }
    catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    auto add_common = [&](CLI::App* sub, bool with_bound) {
        sub->add_flag("--json", opt.json, "JSON output");
        sub->add_option("--lint", opt.lint, "Report omitted sq entries")
            ->check(CLI::IsMember({"warn", "error", "off"}))
            ->capture_default_str();
        if (with_bound)
            sub->add_option("--bound", opt.bound, "Degree bound (default 64, or LOOPCOH_BOUND)")
                ->check(CLI::NonNegativeNumber);
    };

    std::string expr;
    auto* adem = app.add_subcommand("adem", "Reduce a Steenrod algebra element to admissible form");
    adem->add_option("expr", expr, "e.g. \"Sq2 Sq2 + Sq4\"")->required();
    adem->add_flag("--json", opt.json, "JSON output");

    int k = 0;
    std::string element;
    auto* apply = app.add_subcommand("apply", "Apply Sq^k to an element of a presented algebra");
    apply->add_option("file", opt.file, ".ualg or .json presentation")->required();
    apply->add_option("k", k, "Square index")->required();
    apply->add_option("element", element, "e.g. \"w4*w6 + w8^2\"")->required();
    add_common(apply, false);

    std::optional<std::string> golden;
    auto* derive = app.add_subcommand("derive", "Derive the loop space cohomology presentation");
    derive->add_option("file", opt.file, "Polynomial presentation")->required();
    derive->add_option("--golden", golden, "Expected result (.json); exit 1 on mismatch");
    add_common(derive, true);

    auto* verify = app.add_subcommand("verify", "Adem coherence, confluence and instability sweeps");
    verify->add_option("file", opt.file, "Presentation")->required();
    add_common(verify, true);

    auto* poincare = app.add_subcommand("poincare", "Dimensions of the normal-form basis by degree");
    poincare->add_option("file", opt.file, "Presentation")->required();
    add_common(poincare, true);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*adem)
            return cmd_adem(expr, opt);
        if (*apply)
            return cmd_apply(k, element, opt);
        if (*derive)
            return cmd_derive(golden, opt);
        if (*verify)
            return cmd_verify(opt);
        return cmd_poincare(opt);
    }
    catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitFailed;
    }
    catch (const ParseError& e) {
        std::cerr << (opt.file.empty() ? "" : opt.file + ":") << e.what() << "\n";
        return kExitUsage;
    }
    catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
