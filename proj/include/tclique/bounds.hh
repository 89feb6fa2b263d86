#ifndef TCLIQUE_BOUNDS_HH
#define TCLIQUE_BOUNDS_HH

#include <boost/multiprecision/cpp_int.hpp>

#include <nlohmann/json.hpp>

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace tclique
{
    using BigInt = boost::multiprecision::cpp_int;

    /**
     * A non-negative integer quantity that may only be known from below. Exact and
     * LowerBound carry the integer itself; Log10LowerBound carries L with value >= 10^L
     * and is used once integers grow past the digit cap.
     */
    struct BoundValue
    {
        enum class Kind
        {
            exact,
            lower_bound,
            log10_lower_bound
        };

        Kind kind = Kind::exact;
        BigInt value = 0;

        static auto exact_of(BigInt v) -> BoundValue { return {Kind::exact, std::move(v)}; }

        auto is_exact() const -> bool { return kind == Kind::exact; }
        /// floor(log10) of the guaranteed lower bound (-1 for zero).
        auto log10_floor() const -> BigInt;
        /// Decimal digits, prefixed by ">=" for lower bounds; ">=10^L" in the log domain.
        auto to_string() const -> std::string;
        auto kind_name() const -> std::string;

        friend auto operator==(const BoundValue &, const BoundValue &) -> bool = default;
    };

    struct BoundsContext
    {
        /// g45(b) is evaluated exactly for b up to this value.
        int g45_exact_cap = 5;
        /// Above the cap the ladder is truncated after this many rungs (a valid lower bound).
        int g45_truncated_rungs = 3;
        /// Integers with more decimal digits than this move to the log10 domain.
        long digit_cap = 20000;
    };

    auto default_bounds_context() -> const BoundsContext &;

    struct BoundNode;
    using BoundExpr = std::shared_ptr<const BoundNode>;

    /// One step of a derivation: op applied to operands (and integer params), labelled with its anchor.
    struct BoundNode
    {
        std::string op;
        std::string anchor;
        std::vector<BoundExpr> operands;
        std::vector<long> params;
        BoundValue value;
    };

    auto constant(BigInt v, std::string anchor = "constant") -> BoundExpr;
    auto add(const BoundExpr & a, const BoundExpr & b, std::string anchor = "sum") -> BoundExpr;
    auto mul(const BoundExpr & a, const BoundExpr & b, std::string anchor = "product") -> BoundExpr;
    auto max_of(const std::vector<BoundExpr> & xs, std::string anchor = "max") -> BoundExpr;
    auto mul_pow2(long k, const BoundExpr & x, std::string anchor = "2^k times") -> BoundExpr;

    /// Upper bound on R(s,t): exact table for small values, C(s+t-2, min(s,t)-1) otherwise.
    auto ramsey_upper(long s, long t) -> BoundExpr;
    /// As above with a possibly huge first argument.
    auto ramsey_upper(const BoundExpr & s, long t) -> BoundExpr;

    /// q = R(b (r!)^2 + 1, s + 1) + s.
    auto q_of(long b, int r, int s) -> BoundExpr;
    auto q_of(const BoundExpr & b, int r, int s) -> BoundExpr;

    /// c_1, ..., c_{2^b+1}. Requires b <= context.g45_exact_cap.
    auto mountain_ladder(long b, const BoundsContext & context = default_bounds_context()) -> std::vector<BoundExpr>;

    /// Final ladder entry; exact up to the cap, truncated-ladder lower bound above it; g45(0) = 1.
    auto g45(const BoundExpr & b, const BoundsContext & context = default_bounds_context()) -> BoundExpr;
    auto g45(long b, const BoundsContext & context = default_bounds_context()) -> BoundExpr;

    using BoundFunction = std::function<BoundExpr(const BoundExpr &)>;

    struct Ladder2a
    {
        /// entries[i-1] = c_i for i = 1..t.
        std::vector<BoundExpr> entries;
        BoundExpr C;
    };

    /// c_t = c, c_i = 2 g45(c_{i+1}) + 2^{i+1} f(c_{i+1}), C = 2 g45(c_1) + 1.
    auto c_ladder_2a(const BoundExpr & c, long t, const BoundFunction & f, const BoundsContext & context = default_bounds_context())
        -> Ladder2a;

    /// 1 + C_ladder(x -> c_large + g45((1 + |V(D_{n-1})|) x), c, |V(D_n)|).
    auto C54(const BoundExpr & c_large, const BoundExpr & c, int n, const BoundsContext & context = default_bounds_context())
        -> BoundExpr;
    /// c_0 = c_large, c_i = C54(c_{i-1}, c), returns c_3.
    auto C55(const BoundExpr & c_large, const BoundExpr & c, int n, const BoundsContext & context = default_bounds_context())
        -> BoundExpr;

    /// f(1) = 0, f(t) = 16t max{c_large, C55(c_large, c_small), (4 t! + 1) c_small}.
    auto f_main(int t, const BoundsContext & context = default_bounds_context()) -> BoundExpr;

    /// Recomputes the value bottom-up from the trace.
    auto reevaluate(const BoundExpr & e, const BoundsContext & context = default_bounds_context()) -> BoundValue;
    /// True iff every node re-evaluates to its stored value.
    auto trace_consistent(const BoundExpr & e, const BoundsContext & context = default_bounds_context()) -> bool;

    auto trace_size(const BoundExpr & e) -> long;
    auto to_json(const BoundExpr & e, int max_depth = 4) -> nlohmann::json;

    // plain arithmetic on bound values, shared with the trace evaluator
    auto bv_add(const BoundValue & a, const BoundValue & b, const BoundsContext & context) -> BoundValue;
    auto bv_mul(const BoundValue & a, const BoundValue & b, const BoundsContext & context) -> BoundValue;
    auto bv_max(const BoundValue & a, const BoundValue & b) -> BoundValue;
    auto bv_mul_pow2(long k, const BoundValue & x, const BoundsContext & context) -> BoundValue;
    auto bv_binomial(const BoundValue & n, long k, const BoundsContext & context) -> BoundValue;
    auto bv_ramsey(const BoundValue & s, long t, const BoundsContext & context) -> BoundValue;
    auto bv_g45(const BoundValue & b, const BoundsContext & context) -> BoundValue;

    /// Exact R(s,t) values used by ramsey_upper; zero where not tabulated.
    auto ramsey_table(long s, long t) -> long;
}

#endif
