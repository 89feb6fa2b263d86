#ifndef TCLIQUE_MOUNTAINS_HH
#define TCLIQUE_MOUNTAINS_HH

#include <tclique/tournament.hh>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace tclique
{
    inline constexpr int default_mountain_cap = 4;

    /**
     * Witness tree for an (r,s)-mountain: an s-vertex clique of r-heavy arcs plus,
     * for each clique arc u->v, an r-mountain inside N^-(u) ∩ N^+(v). An m-mountain
     * is stored as a (1,1) certificate when m = 1 and as an (m-1,m) certificate
     * otherwise.
     */
    struct MountainCertificate
    {
        int r = 1, s = 1;
        std::vector<Vertex> clique;
        std::map<std::pair<Vertex, Vertex>, MountainCertificate> witnesses;
        VertexSet vertex_set;

        /// m if this certifies an m-mountain, otherwise 0.
        auto order() const -> int;
    };

    struct MountainOptions
    {
        /// Subset evaluations; negative means unlimited.
        long budget = -1;
        int cap = default_mountain_cap;
    };

    /**
     * Memoised heaviness oracle for one tournament. has_mountain(Y, m) asks whether
     * T[Y] contains an m-mountain; heavy(Y, u, v, r) whether u->v is r-heavy in T[Y].
     */
    class MountainOracle
    {
    public:
        explicit MountainOracle(const Tournament & t, MountainOptions options = {});

        auto tournament() const -> const Tournament & { return _t; }

        auto has_mountain(const VertexSet & y, int m) -> bool;
        auto heavy(const VertexSet & y, Vertex u, Vertex v, int r) -> bool;
        /// Undirected graph on T whose edges are the r-heavy arcs of T[Y].
        auto heavy_graph(const VertexSet & y, int r) -> Graph;
        /// Does T[Y] contain an (r,s)-clique?
        auto has_clique(const VertexSet & y, int r, int s) -> bool;
        /// A lowest (r,s)-clique of T[Y], vertices ascending.
        auto find_clique(const VertexSet & y, int r, int s) -> std::optional<std::vector<Vertex>>;

        /// Minimal (r,s)-mountain certificate inside Y.
        auto certificate(const VertexSet & y, int r, int s) -> std::optional<MountainCertificate>;
        /// Minimal m-mountain certificate inside Y.
        auto mountain_certificate(const VertexSet & y, int m) -> std::optional<MountainCertificate>;
        /// Certificate built around the given clique, witnesses drawn from Y, then minimised.
        auto certificate_from_clique(const VertexSet & y, int r, const std::vector<Vertex> & clique) -> MountainCertificate;

        /// Greedy single-vertex removal to a fixpoint, keeping an (r,s)-clique.
        auto minimise(VertexSet x, int r, int s) -> VertexSet;

        auto evaluations() const -> long { return _evaluations; }

    private:
        const Tournament & _t;
        MountainOptions _options;
        long _evaluations = 0;
        std::vector<std::unordered_map<VertexSet, bool, VertexSetHash>> _memo;

        auto tick() -> void;
        auto assemble(const VertexSet & y, int r, const std::vector<Vertex> & clique) -> MountainCertificate;
    };

    struct ArcClassification
    {
        int r = 1;
        int n = 0;
        /// heavy_out[u] holds v iff the arc u->v is r-heavy.
        std::vector<VertexSet> heavy_out;
        /// light_out[u] holds v iff the arc u->v is r-light.
        std::vector<VertexSet> light_out;
        std::map<std::pair<Vertex, Vertex>, MountainCertificate> witnesses;

        auto is_heavy(Vertex u, Vertex v) const -> bool { return heavy_out[static_cast<std::size_t>(u)].test(v); }
        auto is_light(Vertex u, Vertex v) const -> bool { return light_out[static_cast<std::size_t>(u)].test(v); }
        /// Vertices with a light arc into v.
        auto light_in(Vertex v) const -> VertexSet;
    };

    auto classify_arcs(const Tournament & t, int r, bool with_witnesses = true, const MountainOptions & options = {}) -> ArcClassification;

    auto find_mountain(const Tournament & t, int r, int s, const MountainOptions & options = {}) -> std::optional<MountainCertificate>;

    struct VerifyReport
    {
        bool ok = true;
        std::vector<std::string> violations;
    };

    /// Recursive check of clique arcs, witness completeness, vertex set, minimality and the (m!)^2 size bound.
    auto verify_mountain(const Tournament & t, const MountainCertificate & cert, const MountainOptions & options = {}) -> VerifyReport;

    enum class Colour
    {
        red,
        blue
    };

    struct ColouredMountain
    {
        Colour colour;
        /// The mountain order reached: a for red, b for blue.
        int order;
        MountainCertificate certificate;
    };

    /**
     * Given an r-mountain and a 2-colouring of V(T) (indexed by host vertex), returns
     * a red a-mountain or a blue b-mountain inside it, following the recursive
     * descent on the blue or red majority of the clique. Requires a + b = r + 1.
     */
    auto two_colouring_witness(const Tournament & t, const MountainCertificate & cert, const std::vector<Colour> & phi, int a, int b)
        -> ColouredMountain;

    struct DominatingResult
    {
        VertexSet set;
        bool exact = true;
        long nodes = 0;
    };

    /// Minimum r-light dominating set by branch and bound; V(T) is always feasible.
    auto min_light_dominating(const ArcClassification & arcs, long budget = -1) -> DominatingResult;
    auto min_light_dominating(const Tournament & t, int r, long budget = -1) -> DominatingResult;

    /// Left-to-right scan adding each vertex with no light in-neighbour already chosen. `order` may be any sequence of distinct vertices.
    auto greedy_light_set(const ArcClassification & arcs, const std::vector<Vertex> & order) -> VertexSet;
    /// As above; `order` must be a permutation of V(T).
    auto greedy_light_set(const Tournament & t, int r, const std::vector<Vertex> & order) -> VertexSet;

    auto is_light_dominating(const ArcClassification & arcs, const VertexSet & w) -> bool;

    struct LogBoundAudit
    {
        bool ok = true;
        int largest_mountain = 0;
        int bound = 0;
        int omega = 0;
    };

    /// Largest m (up to the cap) with an m-mountain in T, checked against ω⃗(T) >= floor(log2 m).
    auto log_bound_audit(const Tournament & t, const MountainOptions & options = {}) -> LogBoundAudit;

    auto to_json(const MountainCertificate & cert) -> nlohmann::json;
    auto mountain_from_json(const nlohmann::json & j, int n) -> MountainCertificate;

    /// (m!)^2.
    auto mountain_size_bound(int m) -> long;
}

#endif
