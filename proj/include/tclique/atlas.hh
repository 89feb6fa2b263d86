#ifndef TCLIQUE_ATLAS_HH
#define TCLIQUE_ATLAS_HH

#include <tclique/omega.hh>
#include <tclique/tournament.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tclique
{
    /// Cached invariants of one tournament, keyed by its canonical code (hex).
    struct AtlasRecord
    {
        std::string code;
        int n = 0;
        int omega_lower = 0, omega_upper = 0;
        std::optional<int> chi;
        int omega_a = 0, omega_d = 0;
        std::int64_t created = 0, updated = 0;
        std::string omega_mode, chi_mode;
        /// The tournament in ".trn" form, so the record can be re-derived.
        std::string trn;

        auto omega_exact() const -> bool { return omega_lower == omega_upper; }
        friend auto operator==(const AtlasRecord &, const AtlasRecord &) -> bool = default;
    };

    auto to_json(const AtlasRecord & r) -> nlohmann::json;
    auto atlas_record_from_json(const nlohmann::json & j) -> AtlasRecord;

    /// Throws InvalidInput unless omega_lower <= omega_upper, omega_lower <= chi and both indices are positive for n >= 1.
    auto validate_record(const AtlasRecord & r) -> void;

    struct AtlasComputeOptions
    {
        OmegaOptions omega;
        /// χ⃗ is attempted up to this many vertices.
        int chi_limit = 20;
    };

    /// Computes every field for t (timestamps left at zero).
    auto compute_atlas_record(const Tournament & t, const AtlasComputeOptions & options = {}) -> AtlasRecord;

    /// A byte range of the log that failed its checksum or framing.
    struct QuarantinedSpan
    {
        std::uint64_t offset = 0, length = 0;
        std::string reason;
    };

    /**
     * Append-only log of framed records: magic, payload length, crc32, JSON payload.
     * Writers serialise through an exclusive flock on "<path>.lock" held for each
     * append or compaction; readers take no lock and stop at a torn tail. Corrupt
     * spans are skipped and listed; compaction moves them to "<path>.quarantine".
     */
    class Atlas
    {
    public:
        explicit Atlas(std::string path);

        auto path() const -> const std::string & { return _path; }
        /// Picks up records appended (or a compaction performed) by other processes.
        auto refresh() -> void;
        auto get(const std::string & code) -> std::optional<AtlasRecord>;
        /// Validates and appends; keeps the original creation time of an existing code.
        auto upsert(AtlasRecord record) -> AtlasRecord;
        auto records() -> std::vector<AtlasRecord>;
        auto quarantined() const -> const std::vector<QuarantinedSpan> & { return _quarantined; }
        /// Rewrites the log with the latest record per code; returns the number of records dropped.
        auto compact() -> long;

    private:
        std::string _path;
        std::map<std::string, AtlasRecord> _latest;
        std::vector<QuarantinedSpan> _quarantined;
        std::uint64_t _offset = 0;
        std::uint64_t _inode = 0;
        long _appended = 0;

        auto reset() -> void;
        auto scan(const std::string & bytes, std::uint64_t base) -> std::uint64_t;
    };

    /// Frames one payload as it appears in the log.
    auto atlas_frame(const std::string & payload) -> std::string;
}

#endif
