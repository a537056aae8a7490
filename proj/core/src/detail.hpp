#pragma once

#include "stochtop/traversal.hpp"

namespace stochtop::detail {

/// Class of a finite rooted complex by canonical vertex labelling, without the
/// tree shortcut (callers route tree-shaped balls to tree_code first).
NeighborhoodClass labelled_code(const RootedComplex& ball);

}  // namespace stochtop::detail
