#ifndef WREATH_TEXTIO_HPP_
#define WREATH_TEXTIO_HPP_

#include <string>

#include "wreath/algebra.hpp"
#include "wreath/report.hpp"
#include "wreath/omega.hpp"
#include "wreath/typefunc.hpp"

namespace wreath {

// Evaluates an element expression over the rook algebra.  Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' UINT)?
//   atom   := INT | 's'I | 'e'I | 'xi[' I ']' | 'u[' I ']' | 't[' I ',' I ']'
//           | 'g[' names ']' | 'C[' body ']' | 'D[' body ']'
//           | '{' rook matrix '}' | '(' expr ')' | '-' atom
//   body   := (omega ';')? partition (';' partition)*
// with omega written as O<m>{col->(row,label[,exp]), ...}.  C and D build
// the orbit class sum and its corner-stable version; without an omega the
// plain (center) versions are built.  Parse errors carry the position.
AlgebraElement<Rational> evaluate_element_expression(const std::string& text,
                                                     const Ambient<Rational>& amb);

// JSON forms used by the CLI: element as an array of
// [label-string, numerator, denominator]; type and omega as arrays.
Json element_to_json(const AlgebraElement<Rational>& e);
Json type_to_json(const TypeFunction& t);
Json omega_to_json(const OmegaMatrix& o, const Group& G);

}  // namespace wreath

#endif  // WREATH_TEXTIO_HPP_
