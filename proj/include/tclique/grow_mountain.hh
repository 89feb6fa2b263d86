#ifndef TCLIQUE_GROW_MOUNTAIN_HH
#define TCLIQUE_GROW_MOUNTAIN_HH

#include <tclique/bounds.hh>
#include <tclique/mountains.hh>
#include <tclique/omega.hh>

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace tclique
{
    struct GrowMountainParams
    {
        int r = 1, s = 1, b = 1, c = 1;
        /// Replaces q = R(b (r!)^2 + 1, s + 1) + s for desk-scale runs; the final counting step then becomes inconclusive.
        std::optional<long> q_override;
        /// Replaces the first hypothesis threshold (b+1)q + c; the steps derived from it are then checked directly.
        std::optional<long> threshold_override;
        OmegaOptions omega;
        MountainOptions mountains;
        /// Largest tournament on which the third hypothesis is checked over all subsets.
        int subset_check_limit = 16;
    };

    struct GrowMountainOutcome
    {
        enum class Kind
        {
            mountain,
            hypothesis_failed,
            proof_step_contradiction
        };

        Kind kind = Kind::mountain;
        /// The q actually used.
        BigInt q;
        /// An (r, s+1)-mountain, for Kind::mountain.
        std::optional<MountainCertificate> mountain;
        /// Which branch produced the mountain: "heavy clique in S_B" or "A' plus v".
        std::string route;
        /// 1, 2 or 3 for Kind::hypothesis_failed.
        int bullet = 0;
        std::string measured, required;
        std::string diagnostic;
        /// The contradiction sits on a step that only follows from the hypotheses at their true values.
        bool relaxed = false;
    };

    auto to_string(GrowMountainOutcome::Kind k) -> std::string;

    /// Third hypothesis: every subset with ω⃗ >= c contains an r-mountain and an (r,s)-mountain. Returns a violating set if any.
    auto find_mountain_hypothesis_violation(const Tournament & t, int r, int s, int c, const GrowMountainParams & params = {})
        -> std::optional<VertexSet>;

    /// Runs the mountain-growing proof step on t: measure the hypotheses, then follow the proof to an (r, s+1)-mountain.
    auto grow_mountain_step(const Tournament & t, const GrowMountainParams & params) -> GrowMountainOutcome;

    auto to_json(const GrowMountainOutcome & o) -> nlohmann::json;
}

#endif
