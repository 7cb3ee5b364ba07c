#ifndef COSPEC_IO_HPP
#define COSPEC_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cospec/signed_graph.hpp"

namespace cospec {

/// Text graph format, one graph per stream:
///   first non-comment line:  "n m"
///   then m lines:            "u v s"   with s in {+, -, +1, -1}
/// Vertices are 0-indexed; lines starting with '#' are comments.
SignedGraph parse_graph(std::istream& in);
SignedGraph parse_graph(const std::string& text);
SignedGraph load_graph_file(const std::string& path);

/// Serializes in the same format; optional comment lines go first
/// (without their leading '#').
std::string write_graph(const SignedGraph& g, const std::vector<std::string>& comments = {});
void save_graph_file(const SignedGraph& g, const std::string& path,
                     const std::vector<std::string>& comments = {});

}  // namespace cospec

#endif
