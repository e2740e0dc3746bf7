#pragma once

#include "gsqg/field.hpp"

#include <cstdint>
#include <string>

namespace gsqg {

/// Named analytic fields used for initial data and forcing profiles.
/// Recognized names (x~ = 2 pi x / L, y~ = 2 pi y / L):
///   zero
///   cos_x           cos(x~)                       (one-mode steady state)
///   cos_y           cos(y~)
///   two_mode        cos(x~) + sin(2 y~)
///   shear_band      sin(y~) + 0.4 cos(2 x~ + 1) sin(3 y~)
///   random_band:K   seeded Hermitian spectrum filling 0 < |m| <= K, smooth
///                   1/(1+|m|^2) falloff, normalized to unit max amplitude
///   file:PATH       snapshot file (resolution must match the grid)
/// The result is scaled by `amplitude`, dealiased and exactly mean-free
/// except for `file:` data, which is loaded verbatim.
Field make_named_field(const TorusGrid& grid, const std::string& name,
                       double amplitude, std::uint64_t seed);

} // namespace gsqg
