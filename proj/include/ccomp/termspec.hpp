#pragma once

#include "ccomp/engine.hpp"

#include <string>

namespace ccomp {

// Parses a textual term stream, as used by the CLI and the identity corpus.
//
//   const:a=2[,b=1][,sign=-1]
//   arith:start=1,step=1[,bstart=1][,bstep=0]
//   periodic:signs=+-[,a=2][,b=1][,pre=-]  multiplier signs, optional non-repeating head
//   geom:a0=4,ratio=4[,b=1]           a_i = a0 * ratio^i
//   dexp:base=2,growth=3[,scale=1]    a_i = scale * base^(growth^i), kept in log form
//   eexp:c=0.5                        a_i = exp(exp(c*i)), kept in log form
//   mcguffin:x=2,n=1,a=0              addend a(x+i n)+(n+a)^2, multiplier x+i n
//   ramanujan1 | ramanujan2
//   list:1,2,3  or a bare comma list
//
// Numbers are decimal strings; throws std::invalid_argument on bad syntax.
TermStream parse_term_stream(const std::string& text);

// "sqrt", "root:3", "power:2", "recip:2", "cot", "log:10", "fraction".
CompositionKind parse_kind(const std::string& text);

}  // namespace ccomp
