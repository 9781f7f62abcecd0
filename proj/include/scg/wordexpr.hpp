#pragma once

#include <string_view>
#include <vector>

#include "scg/perm.hpp"

namespace scg {

// Evaluates a word over generators r0, r1, ... Products read left to right in
// application order (the first factor acts first). Supported syntax:
//
//   r2 (r1 r0)^2          integer powers (negative = inverse)
//   ((r1 r2 r3)^7)^(r1)   ^(expr) is conjugation: g^h = h^-1 g h
//   (4,7,6)(9,11)         literal cycles, 1-based points
//   id                    the identity
Permutation eval_word(std::string_view expr, const std::vector<Permutation>& gens, int degree);

}  // namespace scg
