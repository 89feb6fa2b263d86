#include <tclique/certificates.hh>
#include <tclique/errors.hh>

using nlohmann::json;

namespace tclique
{
    auto set_to_json(const VertexSet & s) -> json
    {
        return json(s.members());
    }

    auto to_json(const OmegaResult & r) -> json
    {
        json j;
        j["schema"] = certificate_schema;
        j["kind"] = "omega";
        j["value"] = r.value;
        j["lower"] = r.lower;
        j["upper"] = r.upper;
        j["order"] = r.order;
        j["mode"] = to_string(r.status);
        j["lex_least"] = r.lex_least;
        j["lower_witness"] = r.lower_witness;
        j["nodes_expanded"] = r.nodes;
        return j;
    }

    auto to_json(const ChiResult & r) -> json
    {
        json j;
        j["schema"] = certificate_schema;
        j["kind"] = "chi";
        j["value"] = r.value;
        j["lower"] = r.lower;
        j["upper"] = r.upper;
        j["classes"] = json::array();
        for (auto & c : r.classes)
            j["classes"].push_back(set_to_json(c));
        j["mode"] = to_string(r.status);
        j["nodes_expanded"] = r.nodes;
        return j;
    }

    auto to_json(const OmegaBounds & b) -> json
    {
        json j;
        j["schema"] = certificate_schema;
        j["kind"] = "omega_bounds";
        j["lower"] = b.lower;
        j["upper"] = b.upper;
        j["order"] = b.upper_order;
        j["lower_set"] = set_to_json(b.lower_set);
        j["mode"] = "bounds";
        return j;
    }

    namespace
    {
        auto status_of(const std::string & s) -> SolveStatus
        {
            if (s == "exact")
                return SolveStatus::exact;
            if (s == "exceeded")
                return SolveStatus::exceeded;
            throw InvalidInput("unknown certificate mode '" + s + "'");
        }

        auto check_schema(const json & j, const std::string & kind) -> void
        {
            if (j.value("schema", 0) != certificate_schema)
                throw InvalidInput("unsupported certificate schema");
            if (j.value("kind", std::string{}) != kind)
                throw InvalidInput("certificate is not of kind " + kind);
        }
    }

    auto omega_result_from_json(const json & j) -> OmegaResult
    {
        check_schema(j, "omega");
        OmegaResult r;
        r.value = j.at("value").get<int>();
        r.lower = j.value("lower", r.value);
        r.upper = j.value("upper", r.value);
        r.order = j.at("order").get<std::vector<Vertex>>();
        r.status = status_of(j.at("mode").get<std::string>());
        r.lex_least = j.value("lex_least", false);
        r.lower_witness = j.value("lower_witness", std::string{"exhaustive"});
        r.nodes = j.value("nodes_expanded", 0L);
        return r;
    }

    auto chi_result_from_json(const json & j, int n) -> ChiResult
    {
        check_schema(j, "chi");
        ChiResult r;
        r.value = j.at("value").get<int>();
        r.lower = j.value("lower", r.value);
        r.upper = j.value("upper", r.value);
        for (auto & c : j.at("classes"))
            r.classes.push_back(VertexSet::of(n, c.get<std::vector<Vertex>>()));
        r.status = status_of(j.at("mode").get<std::string>());
        r.nodes = j.value("nodes_expanded", 0L);
        return r;
    }

    auto verify_omega_certificate(const Tournament & t, const OmegaResult & r) -> bool
    {
        try {
            validate_permutation(t.size(), r.order);
        }
        catch (const InvalidInput &) {
            return false;
        }
        return ordering_clique_number(t, r.order) == r.upper && r.lower <= r.upper &&
            (r.status != SolveStatus::exact || r.value == r.upper);
    }

    auto verify_chi_certificate(const Tournament & t, const ChiResult & r) -> bool
    {
        return is_transitive_partition(t, r.classes) && static_cast<int>(r.classes.size()) == r.upper && r.lower <= r.upper;
    }
}
