#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "loopcoh/algebra.hpp"
#include "loopcoh/json_io.hpp"
#include "loopcoh/loop.hpp"
#include "loopcoh/term_order.hpp"

namespace test {

using namespace loopcoh;

inline const std::array<std::string, 5> kBases = {"bspin7", "bspin8", "bspin9", "bf4", "bdi4"};

inline std::filesystem::path corpus_path(const std::string& relative)
{
    return std::filesystem::path(LOOPCOH_SOURCE_DIR) / "corpus" / relative;
}

// Base algebra from corpus/<name>.ualg, built once.
inline const UnstableAlgebra& base(const std::string& name)
{
    static std::map<std::string, std::unique_ptr<UnstableAlgebra>> cache;
    auto& slot = cache[name];
    if (!slot)
        slot = std::make_unique<UnstableAlgebra>(load_presentation(corpus_path(name + ".ualg")));
    return *slot;
}

// Golden record corpus/golden/l<name>.json.
inline const LoopPresentation& golden(const std::string& name)
{
    static std::map<std::string, LoopPresentation> cache;
    auto it = cache.find(name);
    if (it == cache.end())
        it = cache.emplace(name, load_loop_presentation(corpus_path("golden/l" + name + ".json"))).first;
    return it->second;
}

// The golden presentation as an algebra.
inline const UnstableAlgebra& loop(const std::string& name)
{
    static std::map<std::string, std::unique_ptr<UnstableAlgebra>> cache;
    auto& slot = cache[name];
    if (!slot)
        slot = std::make_unique<UnstableAlgebra>(golden(name).presentation);
    return *slot;
}

inline Poly poly(const UnstableAlgebra& A, std::string_view text)
{
    return parse_poly(text, A.order());
}

inline std::string text(const UnstableAlgebra& A, const Poly& p)
{
    return format_poly(p, A.order());
}

}  // namespace test
