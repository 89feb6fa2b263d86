#include <tclique/canonical.hh>
#include <tclique/errors.hh>

#include <algorithm>
#include <cstdint>
#include <map>

using std::string;
using std::vector;

namespace tclique
{
    namespace
    {
        using Mask = std::uint32_t;

        struct Search
        {
            int n;
            vector<Mask> out;
            string best_code;
            vector<Vertex> best_labelling;
            bool have_best = false;

            auto code_for(const vector<int> & colours) const -> string
            {
                // colours are a bijection onto 0..n-1 at a leaf
                vector<Vertex> at(static_cast<size_t>(n));
                for (int v = 0; v < n; ++v)
                    at[static_cast<size_t>(colours[static_cast<size_t>(v)])] = v;
                string code(1, static_cast<char>(n));
                unsigned char byte = 0;
                int bits = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        byte = static_cast<unsigned char>((byte << 1) | ((out[static_cast<size_t>(at[static_cast<size_t>(i)])] >> at[static_cast<size_t>(j)]) & 1u));
                        if (++bits == 8) {
                            code.push_back(static_cast<char>(byte));
                            byte = 0;
                            bits = 0;
                        }
                    }
                if (bits)
                    code.push_back(static_cast<char>(byte << (8 - bits)));
                return code;
            }

            // equitable refinement; colour values are ranks of invariant signatures
            auto refine(vector<int> colours) const -> vector<int>
            {
                int classes = -1;
                while (true) {
                    int k = 1 + *std::max_element(colours.begin(), colours.end());
                    vector<vector<int>> signatures(static_cast<size_t>(n));
                    for (int v = 0; v < n; ++v) {
                        auto & sig = signatures[static_cast<size_t>(v)];
                        sig.assign(static_cast<size_t>(k + 1), 0);
                        sig[0] = colours[static_cast<size_t>(v)];
                        for (int w = 0; w < n; ++w)
                            if ((out[static_cast<size_t>(v)] >> w) & 1u)
                                ++sig[static_cast<size_t>(1 + colours[static_cast<size_t>(w)])];
                    }
                    auto sorted = signatures;
                    std::sort(sorted.begin(), sorted.end());
                    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
                    for (int v = 0; v < n; ++v)
                        colours[static_cast<size_t>(v)] = static_cast<int>(
                            std::lower_bound(sorted.begin(), sorted.end(), signatures[static_cast<size_t>(v)]) - sorted.begin());
                    int now = static_cast<int>(sorted.size());
                    if (now == classes)
                        return colours;
                    classes = now;
                }
            }

            auto explore(const vector<int> & colours) -> void
            {
                vector<int> cell_size(static_cast<size_t>(n), 0);
                for (auto c : colours)
                    ++cell_size[static_cast<size_t>(c)];
                int target = -1;
                for (int c = 0; c < n; ++c)
                    if (cell_size[static_cast<size_t>(c)] > 1) {
                        target = c;
                        break;
                    }
                if (target == -1) {
                    auto code = code_for(colours);
                    if (! have_best || code < best_code) {
                        best_code = std::move(code);
                        best_labelling.assign(static_cast<size_t>(n), 0);
                        for (int v = 0; v < n; ++v)
                            best_labelling[static_cast<size_t>(colours[static_cast<size_t>(v)])] = v;
                        have_best = true;
                    }
                    return;
                }
                for (int v = 0; v < n; ++v) {
                    if (colours[static_cast<size_t>(v)] != target)
                        continue;
                    vector<int> split(static_cast<size_t>(n));
                    for (int w = 0; w < n; ++w)
                        split[static_cast<size_t>(w)] = 2 * colours[static_cast<size_t>(w)] + (colours[static_cast<size_t>(w)] == target && w != v ? 1 : 0);
                    explore(refine(split));
                }
            }
        };

        auto run(const Tournament & t, int limit) -> Search
        {
            if (t.size() > limit || t.size() > 32)
                throw SizeLimitExceeded("canonical_code supports at most " + std::to_string(std::min(limit, 32)) + " vertices, got " +
                    std::to_string(t.size()));
            Search s{t.size(), vector<Mask>(static_cast<size_t>(t.size()), 0), {}, {}, false};
            for (int v = 0; v < t.size(); ++v)
                s.out[static_cast<size_t>(v)] = static_cast<Mask>(t.out(v).mask());
            if (t.size() == 0) {
                s.best_code = string(1, '\0');
                return s;
            }
            s.explore(s.refine(vector<int>(static_cast<size_t>(t.size()), 0)));
            return s;
        }
    }

    auto canonical_code(const Tournament & t, int limit) -> string
    {
        return run(t, limit).best_code;
    }

    auto canonical_labelling(const Tournament & t, int limit) -> vector<Vertex>
    {
        return run(t, limit).best_labelling;
    }

    auto to_hex(const string & bytes) -> string
    {
        static const char digits[] = "0123456789abcdef";
        string out;
        for (unsigned char c : bytes) {
            out.push_back(digits[c >> 4]);
            out.push_back(digits[c & 15]);
        }
        return out;
    }

    auto isomorphic(const Tournament & a, const Tournament & b) -> bool
    {
        return a.size() == b.size() && canonical_code(a) == canonical_code(b);
    }
}
