// Text presentations of Hopf algebras.
//
//   hopf-sc v1 p=<p> k=<k> dim=<d>     (k= is optional, default 1)
//   MULT        lines "a b c x":  e_a e_b contains x e_c
//   COMULT      lines "a b c x":  Delta(e_a) contains x e_b (x) e_c
//   UNIT        lines "a x"
//   COUNIT      lines "a x"
//   ANTIPODE    lines "a b x":    S(e_a) contains x e_b
//
// or, instead of the five sections, GROUP_ALGEBRA or DUAL_GROUP_ALGEBRA
// followed by d rows of a Cayley table. Field elements are comma separated
// coefficient lists, lowest degree first, over the least-code modulus of
// GF(p^k). Blank lines and lines starting with '#' are ignored.

#ifndef HOPF_FUSION_PRESENTATION_HPP_
#define HOPF_FUSION_PRESENTATION_HPP_

#include <istream>
#include <string>

#include "hopf_fusion/hopf.hpp"

namespace hopf_fusion {

inline constexpr int kMaxPresentationDim = 1024;

// Parses without checking the Hopf axioms. Throws InvalidInput with the
// offending line number on malformed text, out-of-range indices or
// coefficients, or a Cayley table that is not a group.
HopfAlgebra parse_presentation(std::istream& in);
HopfAlgebra parse_presentation_string(const std::string& text);
HopfAlgebra load_presentation(const std::string& path);

// Explicit five-section form, entries in index order; parses back to equal
// structure constants.
std::string write_presentation(const HopfAlgebra& h);

} // namespace hopf_fusion

#endif
