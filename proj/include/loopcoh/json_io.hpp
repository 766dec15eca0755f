#pragma once

// Canonical JSON for presentations, derived loop presentations and sweep
// reports. Object keys are sorted, polynomials are strings with terms in
// descending term order, and dump() output is stable byte for byte.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "loopcoh/algebra.hpp"
#include "loopcoh/loop.hpp"
#include "loopcoh/sweeps.hpp"

namespace loopcoh {

using json = nlohmann::json;

json to_json(const Presentation& p);
json to_json(const LoopPresentation& L);

// Inverses of to_json. Loop presentation relations are sorted by lead, as
// derive_loop_presentation leaves them. Throw ParseError on missing or
// ill-typed fields and on polynomials that do not parse.
Presentation presentation_from_json(const json& j);
LoopPresentation loop_presentation_from_json(const json& j);

struct VerifyResult
{
    CoherenceReport coherence;
    ConfluenceReport confluence;
    InstabilityReport instability;

    bool ok() const { return coherence.ok() && confluence.ok() && instability.ok(); }
};

json to_json(const VerifyResult& r, const UnstableAlgebra& A);

// Two-space indentation and a trailing newline.
std::string dump(const json& j);

// Any file the tools accept, by extension: .ualg text, or .json holding a
// presentation or a loop presentation (whose table and relations are used).
Presentation load_presentation(const std::filesystem::path& path);
// A .json file holding a loop presentation.
LoopPresentation load_loop_presentation(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace loopcoh
