#ifndef TCLIQUE_VERTEX_SET_HH
#define TCLIQUE_VERTEX_SET_HH

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tclique
{
    using Vertex = int;

    /**
     * A subset of {0, ..., n-1} stored as a bit row. The ambient size n is part of
     * the value: sets over different universes never compare equal, and binary
     * operations require matching universes.
     */
    class VertexSet
    {
    public:
        using Word = std::uint64_t;
        static constexpr int bits_per_word = 64;

        VertexSet() = default;
        explicit VertexSet(int universe);

        static auto full(int universe) -> VertexSet;
        static auto of(int universe, std::initializer_list<Vertex> members) -> VertexSet;
        static auto of(int universe, std::span<const Vertex> members) -> VertexSet;
        static auto from_mask(int universe, std::uint64_t mask) -> VertexSet;

        auto universe() const -> int { return _universe; }
        auto count() const -> int;
        auto empty() const -> bool;
        auto any() const -> bool { return ! empty(); }

        auto test(Vertex v) const -> bool
        {
            return (_words[static_cast<std::size_t>(v) / bits_per_word] >> (static_cast<unsigned>(v) % bits_per_word)) & 1u;
        }
        auto set(Vertex v) -> void
        {
            _words[static_cast<std::size_t>(v) / bits_per_word] |= Word{1} << (static_cast<unsigned>(v) % bits_per_word);
        }
        auto reset(Vertex v) -> void
        {
            _words[static_cast<std::size_t>(v) / bits_per_word] &= ~(Word{1} << (static_cast<unsigned>(v) % bits_per_word));
        }

        /// Smallest member, or -1.
        auto first() const -> Vertex;
        /// Smallest member strictly greater than v, or -1.
        auto next(Vertex v) const -> Vertex;

        auto members() const -> std::vector<Vertex>;
        auto is_subset_of(const VertexSet & other) const -> bool;
        auto intersects(const VertexSet & other) const -> bool;
        auto complement() const -> VertexSet;

        /// Low 64 bits; only meaningful when universe() <= 64.
        auto mask() const -> std::uint64_t { return _words.empty() ? 0 : _words[0]; }

        auto words() const -> std::span<const Word> { return _words; }

        auto operator&=(const VertexSet & other) -> VertexSet &;
        auto operator|=(const VertexSet & other) -> VertexSet &;
        auto operator-=(const VertexSet & other) -> VertexSet &;

        friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
        friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
        friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

        friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

        /// Lexicographic comparison of the ascending member lists.
        auto lex_compare(const VertexSet & other) const -> std::strong_ordering;

        auto to_string() const -> std::string;

        template <typename F>
        auto for_each(F && f) const -> void
        {
            for (std::size_t w = 0; w < _words.size(); ++w) {
                Word bits = _words[w];
                while (bits) {
                    int b = std::countr_zero(bits);
                    f(static_cast<Vertex>(w * bits_per_word + static_cast<std::size_t>(b)));
                    bits &= bits - 1;
                }
            }
        }

    private:
        int _universe = 0;
        std::vector<Word> _words;

        auto check_same_universe(const VertexSet & other) const -> void;
    };

    struct VertexSetHash
    {
        auto operator()(const VertexSet & s) const -> std::size_t;
    };
}

#endif
