#ifndef TCLIQUE_CONSTRUCTIONS_HH
#define TCLIQUE_CONSTRUCTIONS_HH

#include <tclique/tournament.hh>

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace tclique
{
    enum class Family
    {
        A,
        D,
        U
    };

    auto family_from_string(const std::string & s) -> Family;
    auto to_string(Family f) -> std::string;

    struct FamilyId
    {
        Family tag;
        int n;
    };

    /// A generated tournament with a role label per vertex (spine v_i, block path, u_i, Δ path).
    struct LabelledTournament
    {
        Tournament tournament;
        std::vector<std::string> labels;
    };

    inline constexpr int max_D_index = 8;
    inline constexpr int max_A_index = 5;

    /// D_1 is one vertex, D_n = Δ(D_{n-1}, D_{n-1}, D_1). Labels are the Δ path, e.g. "1.3".
    auto build_D(int n) -> LabelledTournament;

    /// A_n in the order (v_1, T_1, v_2, ..., T_{n-1}, v_n). Labels "v3" or "T2/v1" etc.
    auto build_A(int n) -> LabelledTournament;

    /// U_n on u_1..u_{2n-1}: u_i->u_j iff both odd and i>j, or one is even and i<j.
    auto build_U(int n) -> LabelledTournament;

    auto build_family(FamilyId id) -> LabelledTournament;

    /// Vertex count of A_n from a_1 = 1, a_n = (n-1)a_{n-1} + n; checks a_n <= 2 n!.
    auto size_A(int n) -> boost::multiprecision::cpp_int;

    /// U_n with A_{n-1} substituted for u_2, u_4, ..., u_{2n-2}.
    auto A_from_U(int n) -> Tournament;
}

#endif
