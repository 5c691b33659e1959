#pragma once

#include <string>

#include "acdkit/group.hpp"

namespace acdkit {

/// Builds a group from a textual spec:
///   cyclic:n | elab:p^a | frob:p,a,h | nonab:p
///   affine:p,a,gens=r11 r12;r21 r22|s11 s12;s21 s22
///   prod:A*B   (split at the first '*'; B may itself be a product)
/// Throws std::invalid_argument on malformed input.
FiniteGroup parse_group_spec(const std::string& spec);

}  // namespace acdkit
