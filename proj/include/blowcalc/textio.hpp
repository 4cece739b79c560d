#pragma once

#include <string>
#include <variant>

#include "blowcalc/graph.hpp"
#include "blowcalc/seq.hpp"

namespace blowcalc {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Chain bracket syntax: `[x1,x2,...]`, repetition sugar `x^k`, empty `[]`.
IntSeq parse_seq(const std::string& text);

/// Fully expanded form, no repetition sugar.
std::string seq_to_string(const IntSeq& s);

/// Line-based graph format: `v <id> <weight>` and `e <id> <id>`, `#` comments.
WeightedGraph parse_graph(const std::string& text);

/// Vertices in ascending id, then edges with smaller endpoint first.
std::string graph_to_string(const WeightedGraph& g);

using ParsedInput = std::variant<WeightedGraph, IntSeq>;

/// Accepts either syntax; chains keep their sequence form.
ParsedInput parse_input(const std::string& text);

}  // namespace blowcalc
