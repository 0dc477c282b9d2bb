#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qsym/model.hpp"

namespace qsym {

class ColoredGraph;
struct DetectionResult;

// Line-oriented problem grammar, '#' starts a comment:
//
//   var <name> in [<lo>,<hi>]            continuous; bounds may be -inf/inf
//   var <name> int in [<lo>,<hi>]        integer
//   var <name> bin                       binary
//   ... [aux <a>*<b>]                    marks a linearization auxiliary
//   min <expr> | max <expr>
//   st [<label>:] <expr> (<=|>=|=) <expr>
//
//   expr := ['+'|'-'] term (('+'|'-') term)*
//   term := num | [num ['*']] name [('*' name) | '^2']
//   num  := decimal | decimal '/' decimal
//
// Names must be declared before use. Unlabelled constraints get "c<k>".
Problem parse_problem(std::string_view text);
Problem read_problem_file(const std::filesystem::path& path);

// Canonical printer; parse_problem(print_problem(p)) == p for parsed p.
std::string print_problem(const Problem& problem);

std::string write_dreadnaut(const ColoredGraph& graph);
std::string write_dot(const ColoredGraph& graph);
std::string write_group_json(const DetectionResult& result, bool include_timings = false);

}  // namespace qsym
