#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "abovelp/bip2.hpp"
#include "abovelp/frontends.hpp"
#include "abovelp/multiway.hpp"

namespace abovelp::io {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// DIMACS graph extended with vertex weights and terminal marks:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>          1-based endpoints
//   w <v> <weight>     default weight 1
//   t <v>              terminal (node multiway cut)
struct ParsedGraph {
    WeightedGraph g;
    std::vector<int32_t> terminals;
};
ParsedGraph parse_dimacs_graph(const std::string& text);

// DIMACS cnf: p cnf <nvars> <nclauses>, clause lines terminated by 0
Cnf parse_dimacs_cnf(const std::string& text);

// bip2 text format:
//   bip2 <nvars> <ncons>
//   v <id> <weight> <B|N>
//   c <a> <i> <b> <j> <rhs> <d|H>     1-based ids; j = 0 when b = 0
Bip2Instance parse_bip2(const std::string& text);

// pair file accompanying a bip2 instance:
//   pair <nvars> <ncons>
//   x <id> <value>
//   y <cid> <value>
// values accept "3", "0.5" and "1/2" spellings
LpPair parse_pair(const std::string& text, const Bip2Instance& inst);

std::optional<HalfInt> parse_halfint(const std::string& token);

std::string write_dimacs_graph(const WeightedGraph& g, const std::vector<int32_t>& terminals = {});
std::string write_dimacs_cnf(const Cnf& f);
std::string write_bip2(const Bip2Instance& inst);

uint64_t fnv1a(const std::string& bytes);

}  // namespace abovelp::io
