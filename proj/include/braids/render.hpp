#pragma once

#include "braids/braid.hpp"

#include <string>

namespace braids {

// One four-column block per sigma letter, n rows of text. The overpassing
// strand is drawn unbroken through the block, the underpassing one is
// interrupted. For s1 the block reads "\\ /" over "/ \\"; for s1^-1 it
// reads "\ //" over "// \". A positive crossing takes the upper strand
// over the lower one.
std::string render_braid(const BraidWord& b);

}  // namespace braids
