#include <tclique/errors.hh>
#include <tclique/trn_io.hh>

#include <fstream>
#include <sstream>

using std::istream;
using std::string;
using std::to_string;
using std::vector;

namespace tclique
{
    namespace
    {
        auto rstrip(string s) -> string
        {
            while (! s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
                s.pop_back();
            return s;
        }

        // next line that is neither a comment nor blank; false at end of input
        auto next_content_line(istream & in, string & line, int & line_no) -> bool
        {
            string raw;
            while (std::getline(in, raw)) {
                ++line_no;
                raw = rstrip(raw);
                if (raw.empty() || raw.front() == '#')
                    continue;
                line = raw;
                return true;
            }
            return false;
        }
    }

    auto read_trn(istream & in) -> Tournament
    {
        string line;
        int line_no = 0;
        if (! next_content_line(in, line, line_no))
            throw InvalidInput("trn: missing vertex count");
        int n = 0;
        try {
            size_t used = 0;
            n = std::stoi(line, &used);
            if (used != line.size() || n < 0)
                throw InvalidInput("");
        }
        catch (const std::exception &) {
            throw InvalidInput("trn line " + to_string(line_no) + ": expected a non-negative vertex count");
        }

        vector<vector<int>> cells;
        for (int i = 0; i < n; ++i) {
            if (! next_content_line(in, line, line_no))
                throw InvalidInput("trn: expected " + to_string(n) + " matrix rows, found " + to_string(i));
            if (line.size() != static_cast<size_t>(n))
                throw InvalidInput("trn line " + to_string(line_no) + ": expected " + to_string(n) + " characters");
            vector<int> row;
            for (char c : line) {
                if (c != '0' && c != '1')
                    throw InvalidInput("trn line " + to_string(line_no) + ": unexpected character '" + string(1, c) + "'");
                row.push_back(c == '1');
            }
            cells.push_back(std::move(row));
        }
        if (next_content_line(in, line, line_no))
            throw InvalidInput("trn line " + to_string(line_no) + ": trailing content after matrix");
        return from_matrix(n, cells);
    }

    auto parse_trn(const string & text) -> Tournament
    {
        std::istringstream in(text);
        return read_trn(in);
    }

    auto read_trn_file(const string & path) -> Tournament
    {
        std::ifstream in(path);
        if (! in)
            throw InvalidInput("cannot open " + path);
        return read_trn(in);
    }

    auto format_trn(const Tournament & t) -> string
    {
        string out = to_string(t.size()) + "\n";
        for (int i = 0; i < t.size(); ++i) {
            for (int j = 0; j < t.size(); ++j)
                out.push_back(t.arc(i, j) ? '1' : '0');
            out.push_back('\n');
        }
        return out;
    }

    auto write_trn(std::ostream & out, const Tournament & t) -> void
    {
        out << format_trn(t);
    }

    auto read_bags(istream & in, int n) -> vector<VertexSet>
    {
        vector<VertexSet> bags;
        string line;
        int line_no = 0;
        while (next_content_line(in, line, line_no)) {
            std::istringstream fields(line);
            VertexSet bag(n);
            string token;
            while (fields >> token) {
                int v = -1;
                try {
                    size_t used = 0;
                    v = std::stoi(token, &used);
                    if (used != token.size())
                        v = -1;
                }
                catch (const std::exception &) {
                    v = -1;
                }
                if (v < 0 || v >= n)
                    throw InvalidInput("bag line " + to_string(line_no) + ": bad vertex '" + token + "'");
                bag.set(v);
            }
            bags.push_back(std::move(bag));
        }
        return bags;
    }

    auto read_bags_file(const string & path, int n) -> vector<VertexSet>
    {
        std::ifstream in(path);
        if (! in)
            throw InvalidInput("cannot open " + path);
        return read_bags(in, n);
    }

    auto format_bags(const vector<VertexSet> & bags) -> string
    {
        string out;
        for (auto & bag : bags) {
            bool first = true;
            bag.for_each([&](Vertex v) {
                if (! first)
                    out.push_back(' ');
                out += to_string(v);
                first = false;
            });
            out.push_back('\n');
        }
        return out;
    }
}
