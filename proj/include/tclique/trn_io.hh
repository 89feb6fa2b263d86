#ifndef TCLIQUE_TRN_IO_HH
#define TCLIQUE_TRN_IO_HH

#include <tclique/tournament.hh>

#include <iosfwd>
#include <string>
#include <vector>

namespace tclique
{
    /**
     * ".trn" text format: first non-comment line is n, then n lines of n characters
     * from {0,1}; character j of line i is 1 iff the arc i->j exists. Lines starting
     * with '#' are comments, blank lines are skipped and trailing whitespace is
     * ignored. Throws InvalidInput on malformed input.
     */
    auto read_trn(std::istream & in) -> Tournament;
    auto parse_trn(const std::string & text) -> Tournament;
    auto read_trn_file(const std::string & path) -> Tournament;

    /// Canonical rendering; parse_trn(format_trn(t)) == t and the text is reproduced byte for byte.
    auto format_trn(const Tournament & t) -> std::string;
    auto write_trn(std::ostream & out, const Tournament & t) -> void;

    /// Bag file: one bag per line, space separated vertex ids; '#' comments.
    auto read_bags(std::istream & in, int n) -> std::vector<VertexSet>;
    auto read_bags_file(const std::string & path, int n) -> std::vector<VertexSet>;
    auto format_bags(const std::vector<VertexSet> & bags) -> std::string;
}

#endif
