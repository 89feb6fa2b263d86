#include <tclique/bounds.hh>
#include <tclique/errors.hh>

#include <algorithm>
#include <map>

using nlohmann::json;
using std::string;
using std::vector;

namespace tclique
{
    namespace
    {
        using Kind = BoundValue::Kind;

        // floor(k log10 2) from below; 0.30102 < log10 2
        auto log10_of_pow2(const BigInt & k) -> BigInt
        {
            return k * 30102 / 100000;
        }

        auto is_log(const BoundValue & v) -> bool
        {
            return v.kind == Kind::log10_lower_bound;
        }

        auto merge_kind(const BoundValue & a, const BoundValue & b) -> Kind
        {
            if (is_log(a) || is_log(b))
                return Kind::log10_lower_bound;
            if (a.is_exact() && b.is_exact())
                return Kind::exact;
            return Kind::lower_bound;
        }

        // a guaranteed L with value >= 10^L, for positive values
        auto lower_log10(const BoundValue & v) -> BigInt
        {
            if (is_log(v))
                return v.value;
            if (v.value <= 0)
                return -1;
            return log10_of_pow2(BigInt(boost::multiprecision::msb(v.value)));
        }

        auto normalise(BoundValue v, const BoundsContext & context) -> BoundValue
        {
            if (! is_log(v) && v.value > 0 && lower_log10(v) > context.digit_cap)
                return {Kind::log10_lower_bound, lower_log10(v)};
            return v;
        }

        auto small(long v) -> BoundValue
        {
            return BoundValue::exact_of(BigInt(v));
        }

        auto factorial(long n) -> BigInt
        {
            BigInt f = 1;
            for (long i = 2; i <= n; ++i)
                f *= i;
            return f;
        }

        auto ceil_log10(long k) -> long
        {
            long l = 0, p = 1;
            while (p < k) {
                p *= 10;
                ++l;
            }
            return l;
        }

        auto node(string op, string anchor, vector<BoundExpr> operands, vector<long> params, BoundValue value) -> BoundExpr
        {
            return std::make_shared<const BoundNode>(BoundNode{std::move(op), std::move(anchor), std::move(operands), std::move(params), std::move(value)});
        }

        auto ladder_values(const BoundValue & b, long rungs, const BoundsContext & context) -> vector<BoundValue>
        {
            vector<BoundValue> c{small(1)};
            auto b_plus_1 = bv_add(b, small(1), context);
            for (long r = 1; r <= rungs; ++r) {
                auto cur = bv_max(c.back(), small(r));
                auto rf2 = BoundValue::exact_of(factorial(r) * factorial(r));
                for (long s = 1; s <= r; ++s) {
                    auto arg = bv_add(bv_mul(b, rf2, context), small(1), context);
                    auto q = bv_add(bv_ramsey(arg, s + 1, context), small(s), context);
                    cur = bv_add(bv_mul(b_plus_1, q, context), cur, context);
                }
                c.push_back(cur);
            }
            return c;
        }
    }

    auto default_bounds_context() -> const BoundsContext &
    {
        static const BoundsContext context;
        return context;
    }

    auto BoundValue::log10_floor() const -> BigInt
    {
        if (kind == Kind::log10_lower_bound)
            return value;
        if (value <= 0)
            return -1;
        return BigInt(value.str().size() - 1);
    }

    auto BoundValue::kind_name() const -> string
    {
        switch (kind) {
        case Kind::exact: return "exact";
        case Kind::lower_bound: return "lower_bound";
        case Kind::log10_lower_bound: return "log10_lower_bound";
        }
        return "?";
    }

    auto BoundValue::to_string() const -> string
    {
        switch (kind) {
        case Kind::exact: return value.str();
        case Kind::lower_bound: return ">=" + value.str();
        case Kind::log10_lower_bound: return ">=10^" + value.str();
        }
        return "?";
    }

    auto ramsey_table(long s, long t) -> long
    {
        if (s > t)
            std::swap(s, t);
        static const std::map<std::pair<long, long>, long> table{
            {{3, 3}, 6}, {{3, 4}, 9}, {{3, 5}, 14}, {{3, 6}, 18}, {{3, 7}, 23}, {{3, 8}, 28}, {{3, 9}, 36}, {{4, 4}, 18}, {{4, 5}, 25}};
        auto it = table.find({s, t});
        return it == table.end() ? 0 : it->second;
    }

    auto bv_add(const BoundValue & a, const BoundValue & b, const BoundsContext & context) -> BoundValue
    {
        if (is_log(a) || is_log(b))
            return {Kind::log10_lower_bound, std::max(lower_log10(a), lower_log10(b))};
        return normalise({merge_kind(a, b), a.value + b.value}, context);
    }

    auto bv_mul(const BoundValue & a, const BoundValue & b, const BoundsContext & context) -> BoundValue
    {
        for (auto * z : {&a, &b})
            if (! is_log(*z) && z->value == 0)
                return {z->is_exact() ? Kind::exact : Kind::lower_bound, 0};
        if (is_log(a) || is_log(b))
            return {Kind::log10_lower_bound, lower_log10(a) + lower_log10(b)};
        return normalise({merge_kind(a, b), a.value * b.value}, context);
    }

    auto bv_max(const BoundValue & a, const BoundValue & b) -> BoundValue
    {
        if (! is_log(a) && ! is_log(b)) {
            auto kind = merge_kind(a, b);
            return {kind, a.value >= b.value ? a.value : b.value};
        }
        if (is_log(a) && is_log(b))
            return {Kind::log10_lower_bound, std::max(a.value, b.value)};
        const auto & integer = is_log(a) ? b : a;
        const auto & logarithm = is_log(a) ? a : b;
        if (lower_log10(integer) >= logarithm.value)
            return {Kind::lower_bound, integer.value};
        return logarithm;
    }

    auto bv_mul_pow2(long k, const BoundValue & x, const BoundsContext & context) -> BoundValue
    {
        if (is_log(x))
            return {Kind::log10_lower_bound, x.value + log10_of_pow2(BigInt(k))};
        return normalise({x.kind, x.value << k}, context);
    }

    auto bv_binomial(const BoundValue & n, long k, const BoundsContext & context) -> BoundValue
    {
        if (k < 0)
            return small(0);
        if (is_log(n)) {
            // C(N,k) >= (N/k)^k
            BigInt l = BigInt(k) * (n.value - ceil_log10(k));
            return {Kind::log10_lower_bound, l > 0 ? l : BigInt(0)};
        }
        if (n.value < k)
            return {n.kind, 0};
        BigInt r = 1;
        for (long i = 0; i < k; ++i)
            r = r * (n.value - i) / (i + 1);
        return normalise({n.kind, r}, context);
    }

    auto bv_ramsey(const BoundValue & s, long t, const BoundsContext & context) -> BoundValue
    {
        if (t < 1)
            throw InvalidInput("ramsey_upper: arguments must be positive");
        if (! is_log(s)) {
            if (s.value < 1)
                throw InvalidInput("ramsey_upper: arguments must be positive");
            if (s.value == 1 || t == 1)
                return {s.kind, 1};
            if (s.value == 2)
                return {s.kind, t};
            if (t == 2)
                return s;
            if (s.value <= 64)
                if (long v = ramsey_table(static_cast<long>(s.value), t))
                    return {s.kind, v};
            if (s.value < t)
                return bv_binomial({s.kind, s.value + t - 2}, static_cast<long>(s.value) - 1, context);
        }
        else if (t == 2)
            return s;
        return bv_binomial(bv_add(s, small(t - 2), context), t - 1, context);
    }

    auto bv_g45(const BoundValue & b, const BoundsContext & context) -> BoundValue
    {
        if (is_log(b))
            // the first rung alone gives c_2 = (b+1)(b+2)+1 > b^2
            return {Kind::log10_lower_bound, 2 * b.value};
        if (b.value <= 0)
            return {b.kind, 1};
        if (b.value <= context.g45_exact_cap) {
            long bb = static_cast<long>(b.value);
            auto c = ladder_values(b, 1L << bb, context);
            return c.back();
        }
        auto c = ladder_values(b, context.g45_truncated_rungs, context);
        auto last = c.back();
        if (last.kind == Kind::exact)
            last.kind = Kind::lower_bound;
        return last;
    }

    auto constant(BigInt v, string anchor) -> BoundExpr
    {
        if (v < 0)
            throw InvalidInput("bound constants must be non-negative");
        return node("const", std::move(anchor), {}, {}, BoundValue::exact_of(std::move(v)));
    }

    auto add(const BoundExpr & a, const BoundExpr & b, string anchor) -> BoundExpr
    {
        return node("add", std::move(anchor), {a, b}, {}, bv_add(a->value, b->value, default_bounds_context()));
    }

    auto mul(const BoundExpr & a, const BoundExpr & b, string anchor) -> BoundExpr
    {
        return node("mul", std::move(anchor), {a, b}, {}, bv_mul(a->value, b->value, default_bounds_context()));
    }

    auto max_of(const vector<BoundExpr> & xs, string anchor) -> BoundExpr
    {
        if (xs.empty())
            throw InvalidInput("max_of needs at least one operand");
        auto v = xs.front()->value;
        for (size_t i = 1; i < xs.size(); ++i)
            v = bv_max(v, xs[i]->value);
        return node("max", std::move(anchor), xs, {}, v);
    }

    auto mul_pow2(long k, const BoundExpr & x, string anchor) -> BoundExpr
    {
        return node("mul_pow2", std::move(anchor), {x}, {k}, bv_mul_pow2(k, x->value, default_bounds_context()));
    }

    auto ramsey_upper(const BoundExpr & s, long t) -> BoundExpr
    {
        return node("ramsey", "R denotes the Ramsey number", {s}, {t}, bv_ramsey(s->value, t, default_bounds_context()));
    }

    auto ramsey_upper(long s, long t) -> BoundExpr
    {
        return ramsey_upper(constant(s, "s"), t);
    }

    auto q_of(const BoundExpr & b, int r, int s) -> BoundExpr
    {
        if (r < 1 || s < 1 || s > r)
            throw InvalidInput("q_of: need r >= 1 and 1 <= s <= r");
        auto rf = factorial(r);
        auto arg = add(mul(b, constant(rf * rf, "(r!)^2")), constant(1), "b (r!)^2 + 1");
        return add(ramsey_upper(arg, s + 1), constant(s, "s"), "q = R(b (r!)^2 + 1, s + 1) + s");
    }

    auto q_of(long b, int r, int s) -> BoundExpr
    {
        if (b < 1)
            throw InvalidInput("q_of: b must be positive");
        return q_of(constant(b, "b"), r, s);
    }

    auto mountain_ladder(long b, const BoundsContext & context) -> vector<BoundExpr>
    {
        if (b < 1)
            throw InvalidInput("mountain_ladder: b must be positive");
        if (b > context.g45_exact_cap)
            throw SizeLimitExceeded("mountain_ladder: b = " + std::to_string(b) + " exceeds the exact cap " + std::to_string(context.g45_exact_cap));
        auto bx = constant(b, "b");
        auto b_plus_1 = constant(b + 1, "b + 1");
        vector<BoundExpr> c{constant(1, "every tournament contains a 1-mountain")};
        for (long r = 1; r <= (1L << b); ++r) {
            auto cur = max_of({c.back(), constant(r, "r")}, "c = max{c_r, r}");
            for (int s = 1; s <= r; ++s)
                cur = add(mul(b_plus_1, q_of(bx, static_cast<int>(r), s)), cur, "(b+1)q + c");
            c.push_back(cur);
        }
        return c;
    }

    auto g45(const BoundExpr & b, const BoundsContext & context) -> BoundExpr
    {
        return node("g45", "nondecreasing function g", {b}, {}, bv_g45(b->value, context));
    }

    auto g45(long b, const BoundsContext & context) -> BoundExpr
    {
        return g45(constant(b, "b"), context);
    }

    auto c_ladder_2a(const BoundExpr & c, long t, const BoundFunction & f, const BoundsContext & context) -> Ladder2a
    {
        if (t < 1)
            throw InvalidInput("c_ladder_2a: t must be positive");
        Ladder2a result;
        result.entries.assign(static_cast<size_t>(t), nullptr);
        result.entries[static_cast<size_t>(t - 1)] = c;
        auto two = constant(2);
        for (long i = t - 1; i >= 1; --i) {
            auto next = result.entries[static_cast<size_t>(i)];
            result.entries[static_cast<size_t>(i - 1)] =
                add(mul(two, g45(next, context)), mul_pow2(i + 1, f(next)), "c_i = 2g(c_{i+1}) + 2^{i+1} f(c_{i+1})");
        }
        result.C = add(mul(two, g45(result.entries[0], context)), constant(1), "C = 2g(c_1) + 1");
        return result;
    }

    auto C54(const BoundExpr & c_large, const BoundExpr & c, int n, const BoundsContext & context) -> BoundExpr
    {
        if (n < 2 || n > 62)
            throw InvalidInput("C54: n must be in 2..62");
        long d_prev = (1L << (n - 1)) - 1, d_n = (1L << n) - 1;
        auto factor = constant(1 + d_prev, "1 + |V(D_{n-1})|");
        BoundFunction f = [&](const BoundExpr & x) {
            return add(c_large, g45(mul(factor, x), context), "g(x) = c_large + g((1 + |V(D_{n-1})|) x)");
        };
        auto ladder = c_ladder_2a(c, d_n, f, context);
        return add(constant(1), ladder.C, "C54(c_large, c) = 1 + C_ladder(g, c, |V(D_n)|)");
    }

    auto C55(const BoundExpr & c_large, const BoundExpr & c, int n, const BoundsContext & context) -> BoundExpr
    {
        auto cur = c_large;
        for (int i = 1; i <= 3; ++i)
            cur = C54(cur, c, n, context);
        return node("max", "c_i = C54(c_{i-1}, c)", {cur}, {}, cur->value);
    }

    auto f_main(int t, const BoundsContext & context) -> BoundExpr
    {
        if (t < 1)
            throw InvalidInput("f_main: t must be positive");
        if (t == 1)
            return constant(0, "f(1) = 0");
        auto c_small = f_main(t - 1, context);
        auto c_large = mul_pow2(t, c_small, "c_large = 2^t c_small");
        auto third = mul(constant(4 * factorial(t) + 1, "4 t! + 1"), c_small, "(4 t! + 1) c_small");
        auto inner = max_of({c_large, C55(c_large, c_small, t, context), third});
        return mul(constant(16 * t, "16t"), inner, "f(t) = 16t max{c_large, C55(c_large, c_small), (4 t! + 1) c_small}");
    }

    namespace
    {
        auto reevaluate_into(const BoundExpr & e, const BoundsContext & context, std::map<const BoundNode *, BoundValue> & memo) -> BoundValue
        {
            if (auto it = memo.find(e.get()); it != memo.end())
                return it->second;
            vector<BoundValue> ops;
            for (auto & o : e->operands)
                ops.push_back(reevaluate_into(o, context, memo));
            BoundValue v;
            const auto & op = e->op;
            if (op == "const")
                v = e->value;
            else if (op == "add")
                v = bv_add(ops.at(0), ops.at(1), context);
            else if (op == "mul")
                v = bv_mul(ops.at(0), ops.at(1), context);
            else if (op == "max") {
                v = ops.at(0);
                for (size_t i = 1; i < ops.size(); ++i)
                    v = bv_max(v, ops[i]);
            }
            else if (op == "mul_pow2")
                v = bv_mul_pow2(e->params.at(0), ops.at(0), context);
            else if (op == "ramsey")
                v = bv_ramsey(ops.at(0), e->params.at(0), context);
            else if (op == "g45")
                v = bv_g45(ops.at(0), context);
            else
                throw InvalidInput("unknown bound op '" + op + "'");
            memo.emplace(e.get(), v);
            return v;
        }

        auto consistent_into(const BoundExpr & e, const BoundsContext & context, std::map<const BoundNode *, BoundValue> & memo) -> bool
        {
            if (memo.count(e.get()))
                return true;
            for (auto & o : e->operands)
                if (! consistent_into(o, context, memo))
                    return false;
            return reevaluate_into(e, context, memo) == e->value;
        }

        auto size_into(const BoundExpr & e, std::map<const BoundNode *, bool> & seen) -> long
        {
            if (seen.count(e.get()))
                return 0;
            seen[e.get()] = true;
            long total = 1;
            for (auto & o : e->operands)
                total += size_into(o, seen);
            return total;
        }
    }

    auto reevaluate(const BoundExpr & e, const BoundsContext & context) -> BoundValue
    {
        std::map<const BoundNode *, BoundValue> memo;
        return reevaluate_into(e, context, memo);
    }

    auto trace_consistent(const BoundExpr & e, const BoundsContext & context) -> bool
    {
        std::map<const BoundNode *, BoundValue> memo;
        return consistent_into(e, context, memo);
    }

    auto trace_size(const BoundExpr & e) -> long
    {
        std::map<const BoundNode *, bool> seen;
        return size_into(e, seen);
    }

    auto to_json(const BoundExpr & e, int max_depth) -> json
    {
        json j;
        j["op"] = e->op;
        j["anchor"] = e->anchor;
        j["kind"] = e->value.kind_name();
        auto text = e->value.value.str();
        if (text.size() > 40)
            j["value"] = text.substr(0, 20) + "..." + text.substr(text.size() - 10) + " (" + std::to_string(text.size()) + " digits)";
        else
            j["value"] = text;
        if (! e->params.empty())
            j["params"] = e->params;
        if (! e->operands.empty()) {
            if (max_depth <= 0)
                j["operands_elided"] = e->operands.size();
            else {
                j["operands"] = json::array();
                for (auto & o : e->operands)
                    j["operands"].push_back(to_json(o, max_depth - 1));
            }
        }
        return j;
    }
}
