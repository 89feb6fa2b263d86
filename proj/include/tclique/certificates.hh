#ifndef TCLIQUE_CERTIFICATES_HH
#define TCLIQUE_CERTIFICATES_HH

#include <tclique/chi.hh>
#include <tclique/omega.hh>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace tclique
{
    inline constexpr int certificate_schema = 1;

    auto to_json(const OmegaResult & r) -> nlohmann::json;
    auto to_json(const ChiResult & r) -> nlohmann::json;
    auto to_json(const OmegaBounds & b) -> nlohmann::json;
    auto set_to_json(const VertexSet & s) -> nlohmann::json;

    auto omega_result_from_json(const nlohmann::json & j) -> OmegaResult;
    auto chi_result_from_json(const nlohmann::json & j, int n) -> ChiResult;

    /// Checks the witness side of a certificate: the order realises `value`, or the classes are a transitive partition of that size.
    auto verify_omega_certificate(const Tournament & t, const OmegaResult & r) -> bool;
    auto verify_chi_certificate(const Tournament & t, const ChiResult & r) -> bool;
}

#endif
