#pragma once

#include <functional>
#include <string>
#include <vector>

#include "alcove/affine.hpp"

namespace alcove {

/// Rank-2 alcove picture: every alcove whose center lies in the coordinate
/// box [-window, window]^2 is drawn, members of the set are shaded.
/// Deterministic output (stable order, fixed viewbox, fixed formatting).
std::string render_alcove_svg(const RootSystem& rs, Int window,
                              const std::function<bool(const AffElem&)>& member);

}  // namespace alcove
