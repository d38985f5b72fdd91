#pragma once

#include <iosfwd>
#include <string_view>

#include "chainprof/certificate.hpp"
#include "chainprof/poset.hpp"
#include "chainprof/profile.hpp"

namespace chainprof {

/// `poset v1` text format: header, `elements <n>`, then `cover <i> <j>`
/// lines (0-based). Blank lines are ignored; anything else is a ParseError
/// carrying the offending line number.
Poset read_poset(std::istream& in);
void write_poset(std::ostream& out, const Poset& p);

/// `cert v1` text format: header, `m <m>`, `mprime <pos...>` (ascending,
/// 1-based), `x <count>`, then `edge <u> <v>` lines with vertex tokens
/// `M<pos>` or `X<idx>`. Syntax only; semantic validity is verify()'s job.
CompressedPoset read_certificate(std::istream& in);
void write_certificate(std::ostream& out, const CompressedPoset& cert);

/// Comma-separated multiset with optional `xK` multiplicity shorthand
/// (`5x2` = two fives).
ChainProfile parse_profile_arg(std::string_view text);
std::string format_profile(const ChainProfile& s);

/// Hasse diagram as a DOT digraph, ranked bottom to top.
void write_dot(std::ostream& out, const Poset& p);

}  // namespace chainprof
