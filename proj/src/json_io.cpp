#include "loopcoh/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "loopcoh/dsl.hpp"
#include "loopcoh/error.hpp"

namespace loopcoh {

namespace {

json generators_json(const std::vector<Generator>& gens)
{
    json out = json::array();
    for (const auto& g : gens)
        out.push_back({{"name", g.name}, {"degree", g.degree}, {"derived", g.derived}});
    return out;
}

json sq_json(const SqTable& sq, const std::vector<Generator>& gens, const TermOrder& order)
{
    json out = json::array();
    for (const auto& [key, value] : sq)
        out.push_back({{"generator", gens[key.first].name}, {"k", key.second}, {"value", format_poly(value, order)}});
    return out;
}

json relations_json(const std::vector<Relation>& rels, const TermOrder& order)
{
    json out = json::array();
    for (const auto& r : rels)
        out.push_back({{"lead", format_monomial(r.lead, order)}, {"tail", format_poly(r.tail, order)}});
    return out;
}

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<Generator> generators_from(const json& j)
{
    std::vector<Generator> out;
    for (const auto& g : field(j, "generators"))
        out.push_back({field(g, "name").get<std::string>(), field(g, "degree").get<int>(),
                       g.value("derived", false)});
    if (out.size() > kMaxGenerators)
        throw ParseError("too many generators");
    return out;
}

std::size_t generator_index(const TermOrder& order, const std::string& name)
{
    auto g = order.find(name);
    if (!g)
        throw ParseError("unknown generator '" + name + "'");
    return *g;
}

SqTable sq_from(const json& j, const TermOrder& order)
{
    SqTable sq;
    for (const auto& e : field(j, "sq")) {
        const auto g = generator_index(order, field(e, "generator").get<std::string>());
        const int k = field(e, "k").get<int>();
        Poly v = parse_poly(field(e, "value").get<std::string>(), order);
        if (!sq.emplace(std::pair{g, k}, std::move(v)).second)
            throw ParseError("duplicate sq entry");
    }
    return sq;
}

std::vector<Relation> relations_from(const json& j, const TermOrder& order)
{
    std::vector<Relation> rels;
    for (const auto& r : field(j, "relations"))
        rels.push_back({parse_monomial(field(r, "lead").get<std::string>(), order),
                        parse_poly(field(r, "tail").get<std::string>(), order)});
    return rels;
}

template <typename F>
auto translating_json_errors(F&& f)
{
    try {
        return f();
    }
    catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

json to_json(const Presentation& p)
{
    const TermOrder order(p.generators);
    json loop_names = json::array();
    for (const auto& ln : p.loop_names)
        loop_names.push_back({{"base", ln.base}, {"image", ln.image}, {"suspension", ln.suspension}});
    return {
        {"kind", "presentation"},
        {"name", p.name},
        {"generators", generators_json(p.generators)},
        {"sq", sq_json(p.sq, p.generators, order)},
        {"relations", relations_json(p.relations, order)},
        {"loop_names", loop_names},
        {"metadata", json(p.metadata)},
    };
}

json to_json(const LoopPresentation& L)
{
    const auto& P = L.presentation;
    const TermOrder order(P.generators);
    json sigma = json::array();
    for (std::size_t i = 0; i < L.num_base(); ++i)
        sigma.push_back({{"base", L.base_generators[i].name}, {"value", format_poly(L.sigma[i], order)}});
    json elims = json::array();
    for (const auto& e : L.eliminations)
        elims.push_back({{"generator", e.generator}, {"degree", e.degree}, {"value", format_poly(e.value, order)}});
    return {
        {"kind", "loop"},
        {"name", P.name},
        {"base", L.base_name},
        {"base_generators", generators_json(L.base_generators)},
        {"generators", generators_json(P.generators)},
        {"sigma", sigma},
        {"sq", sq_json(P.sq, P.generators, order)},
        {"relations", relations_json(P.relations, order)},
        {"eliminations", elims},
    };
}

Presentation presentation_from_json(const json& j)
{
    return translating_json_errors([&] {
        if (field(j, "kind") != "presentation")
            throw ParseError("expected a presentation object");
        Presentation p;
        p.name = field(j, "name").get<std::string>();
        p.generators = generators_from(j);
        const TermOrder order(p.generators);
        p.sq = sq_from(j, order);
        p.relations = relations_from(j, order);
        for (const auto& ln : j.value("loop_names", json::array()))
            p.loop_names.push_back({field(ln, "base").get<std::string>(), field(ln, "image").get<std::string>(),
                                    field(ln, "suspension").get<std::string>()});
        p.metadata = j.value("metadata", std::map<std::string, std::string>{});
        for (std::size_t g = 0; g < p.generators.size(); ++g)
            for (int k = 1; k < p.generators[g].degree; k *= 2)
                if (!p.sq.count({g, k}))
                    p.defaulted.push_back({g, k});
        return p;
    });
}

LoopPresentation loop_presentation_from_json(const json& j)
{
    return translating_json_errors([&] {
        if (field(j, "kind") != "loop")
            throw ParseError("expected a loop presentation object");
        LoopPresentation L;
        L.base_name = field(j, "base").get<std::string>();
        json base;
        base["generators"] = field(j, "base_generators");
        L.base_generators = generators_from(base);
        auto& P = L.presentation;
        P.name = field(j, "name").get<std::string>();
        P.generators = generators_from(j);
        const TermOrder order(P.generators);
        P.sq = sq_from(j, order);
        P.relations = relations_from(j, order);
        std::stable_sort(P.relations.begin(), P.relations.end(),
                         [&](const Relation& a, const Relation& b) { return order.less(a.lead, b.lead); });
        const auto& sigma = field(j, "sigma");
        if (sigma.size() != L.base_generators.size())
            throw ParseError("sigma needs one entry per base generator");
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            if (field(sigma[i], "base").get<std::string>() != L.base_generators[i].name)
                throw ParseError("sigma entries must follow the base generator order");
            L.sigma.push_back(parse_poly(field(sigma[i], "value").get<std::string>(), order));
        }
        for (const auto& e : field(j, "eliminations"))
            L.eliminations.push_back({field(e, "generator").get<std::string>(), field(e, "degree").get<int>(),
                                      parse_poly(field(e, "value").get<std::string>(), order)});
        return L;
    });
}

json to_json(const VerifyResult& r, const UnstableAlgebra& A)
{
    const auto& order = A.order();
    const auto& rels = A.presentation().relations;
    json coherence = json::array();
    for (const auto& v : r.coherence.violations)
        coherence.push_back({{"monomial", format_monomial(v.monomial, order)},
                             {"a", v.a},
                             {"b", v.b},
                             {"composite", format_poly(v.composite, order)},
                             {"admissible", format_poly(v.admissible, order)}});
    json confluence = json::array();
    for (const auto& d : r.confluence.divergences)
        confluence.push_back({{"monomial", format_monomial(d.monomial, order)},
                              {"first", format_monomial(rels[d.first].lead, order)},
                              {"second", format_monomial(rels[d.second].lead, order)},
                              {"via_first", format_poly(d.via_first, order)},
                              {"via_second", format_poly(d.via_second, order)}});
    json instability = json::array();
    for (const auto& v : r.instability.violations)
        instability.push_back({{"monomial", format_monomial(v.monomial, order)},
                               {"k", v.k},
                               {"value", format_poly(v.value, order)},
                               {"expected", format_poly(v.expected, order)}});
    return {
        {"kind", "verify"},
        {"name", A.presentation().name},
        {"bound", r.coherence.bound},
        {"ok", r.ok()},
        {"coherence", {{"checks", r.coherence.checks}, {"violations", coherence}}},
        {"confluence", {{"checks", r.confluence.checks}, {"divergences", confluence}}},
        {"instability", {{"checks", r.instability.checks}, {"violations", instability}}},
    };
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

json read_json(const std::filesystem::path& path)
{
    const std::string text = read_file(path);
    try {
        return json::parse(text);
    }
    catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

}  // namespace

Presentation load_presentation(const std::filesystem::path& path)
{
    if (path.extension() == ".json") {
        const json j = read_json(path);
        if (j.is_object() && j.value("kind", "") == "loop")
            return loop_presentation_from_json(j).presentation;
        return presentation_from_json(j);
    }
    return parse_presentation(read_file(path));
}

LoopPresentation load_loop_presentation(const std::filesystem::path& path)
{
    return loop_presentation_from_json(read_json(path));
}

}  // namespace loopcoh
