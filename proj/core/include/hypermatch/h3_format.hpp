#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

// Text format:
//   n m
//   a b c      (m lines, 0-based vertex indices)
// '#' starts a comment running to end of line. Writers emit edges in
// lexicographic order with single spaces, so equal hypergraphs serialize
// to identical bytes.

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& what);
    std::size_t line;
};

std::string to_h3(const Hypergraph3& h);
void write_h3(std::ostream& os, const Hypergraph3& h);

Hypergraph3 parse_h3(std::string_view text);
Hypergraph3 read_h3(std::istream& is);
Hypergraph3 load_h3(const std::string& path);
void save_h3(const std::string& path, const Hypergraph3& h);

}  // namespace hypermatch
