#pragma once

#include <span>
#include <vector>

#include "bergman/signed_set.hpp"

namespace bergman::internal {

// Keep one canonical signed set per inclusion-minimal support.  Two survivors
// with equal support must be proportional; anything else indicates invalid
// input circuits.
std::vector<SignedSet> minimal_support_circuits(const std::vector<SignedSet>& candidates,
                                                const char* context);

}  // namespace bergman::internal
