#pragma once

#include <string>

#include "yev/algebra.hpp"

namespace yev {

// Grammar (whitespace-insensitive between tokens):
//   expr      := ['+'|'-'] term (('+'|'-') term)*
//   term      := factor ('*' factor)*
//   factor    := atom ('^' uint)?
//   atom      := rational | generator | central-symbol | '(' expr ')'
//   generator := name '_' uint   (lower index)
//              | name '^' uint   (upper index, metric-raised)
//   rational  := uint ('/' uint)?
// Central symbols (adjoined ones and the spectral u, v, d) carry no index.
// The result is returned in normal form; parse(print(e)) == e.
NCElement parse(const std::string& text, const AlgebraSpec::Ptr& spec);

} // namespace yev
