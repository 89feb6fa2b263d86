#include <tclique/vertex_set.hh>

#include <algorithm>
#include <sstream>
#include <stdexcept>

using std::size_t;
using std::string;
using std::vector;

namespace tclique
{
    VertexSet::VertexSet(int universe) :
        _universe(universe),
        _words(static_cast<size_t>((universe + bits_per_word - 1) / bits_per_word), 0)
    {
        if (universe < 0)
            throw std::invalid_argument("VertexSet universe must be non-negative");
    }

    auto VertexSet::full(int universe) -> VertexSet
    {
        VertexSet result(universe);
        for (auto & w : result._words)
            w = ~Word{0};
        if (universe % bits_per_word != 0 && ! result._words.empty())
            result._words.back() = (Word{1} << (universe % bits_per_word)) - 1;
        return result;
    }

    auto VertexSet::of(int universe, std::initializer_list<Vertex> members) -> VertexSet
    {
        return of(universe, std::span<const Vertex>(members.begin(), members.size()));
    }

    auto VertexSet::of(int universe, std::span<const Vertex> members) -> VertexSet
    {
        VertexSet result(universe);
        for (auto v : members) {
            if (v < 0 || v >= universe)
                throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe));
            result.set(v);
        }
        return result;
    }

    auto VertexSet::from_mask(int universe, std::uint64_t mask) -> VertexSet
    {
        if (universe > bits_per_word)
            throw std::invalid_argument("from_mask requires universe <= 64");
        VertexSet result(universe);
        if (universe == 0)
            return result;
        if (universe < bits_per_word)
            mask &= (Word{1} << universe) - 1;
        result._words[0] = mask;
        return result;
    }

    auto VertexSet::count() const -> int
    {
        int c = 0;
        for (auto w : _words)
            c += std::popcount(w);
        return c;
    }

    auto VertexSet::empty() const -> bool
    {
        return std::all_of(_words.begin(), _words.end(), [](Word w) { return w == 0; });
    }

    auto VertexSet::first() const -> Vertex
    {
        for (size_t w = 0; w < _words.size(); ++w)
            if (_words[w])
                return static_cast<Vertex>(w * bits_per_word + static_cast<size_t>(std::countr_zero(_words[w])));
        return -1;
    }

    auto VertexSet::next(Vertex v) const -> Vertex
    {
        auto start = static_cast<size_t>(v + 1);
        if (start >= static_cast<size_t>(_universe))
            return -1;
        size_t w = start / bits_per_word;
        Word bits = _words[w] & (~Word{0} << (start % bits_per_word));
        while (true) {
            if (bits)
                return static_cast<Vertex>(w * bits_per_word + static_cast<size_t>(std::countr_zero(bits)));
            if (++w >= _words.size())
                return -1;
            bits = _words[w];
        }
    }

    auto VertexSet::members() const -> vector<Vertex>
    {
        vector<Vertex> result;
        result.reserve(static_cast<size_t>(count()));
        for_each([&](Vertex v) { result.push_back(v); });
        return result;
    }

    auto VertexSet::check_same_universe(const VertexSet & other) const -> void
    {
        if (_universe != other._universe)
            throw std::invalid_argument("VertexSet universes differ (" + std::to_string(_universe) + " vs " +
                std::to_string(other._universe) + ")");
    }

    auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
    {
        check_same_universe(other);
        for (size_t w = 0; w < _words.size(); ++w)
            if (_words[w] & ~other._words[w])
                return false;
        return true;
    }

    auto VertexSet::intersects(const VertexSet & other) const -> bool
    {
        check_same_universe(other);
        for (size_t w = 0; w < _words.size(); ++w)
            if (_words[w] & other._words[w])
                return true;
        return false;
    }

    auto VertexSet::complement() const -> VertexSet
    {
        return full(_universe) - *this;
    }

    auto VertexSet::operator&=(const VertexSet & other) -> VertexSet &
    {
        check_same_universe(other);
        for (size_t w = 0; w < _words.size(); ++w)
            _words[w] &= other._words[w];
        return *this;
    }

    auto VertexSet::operator|=(const VertexSet & other) -> VertexSet &
    {
        check_same_universe(other);
        for (size_t w = 0; w < _words.size(); ++w)
            _words[w] |= other._words[w];
        return *this;
    }

    auto VertexSet::operator-=(const VertexSet & other) -> VertexSet &
    {
        check_same_universe(other);
        for (size_t w = 0; w < _words.size(); ++w)
            _words[w] &= ~other._words[w];
        return *this;
    }

    auto VertexSet::lex_compare(const VertexSet & other) const -> std::strong_ordering
    {
        Vertex a = first(), b = other.first();
        while (a != -1 && b != -1) {
            if (a != b)
                return a <=> b;
            a = next(a);
            b = other.next(b);
        }
        if (a == -1 && b == -1)
            return std::strong_ordering::equal;
        return a == -1 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    auto VertexSet::to_string() const -> string
    {
        std::ostringstream out;
        out << '{';
        bool first_member = true;
        for_each([&](Vertex v) {
            if (! first_member)
                out << ' ';
            out << v;
            first_member = false;
        });
        out << '}';
        return out.str();
    }

    auto VertexSetHash::operator()(const VertexSet & s) const -> size_t
    {
        size_t h = std::hash<int>{}(s.universe());
        for (auto w : s.words())
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
}
