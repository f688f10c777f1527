#pragma once

#include "skew46/projective.hpp"

#include <iosfwd>
#include <string>

namespace skew46::svg {

enum class ColorBy { Depth, SoulHash };

struct RenderSpec {
    proj::Chart chart = proj::Chart::Z1;
    int depth = 6;
    int max_depth = 12; // configured cap
    ColorBy color_by = ColorBy::Depth;
    // viewport in chart coordinates
    double x0, y0, x1, y1;
    int pixels = 900;

    static RenderSpec for_chart(proj::Chart c, int depth);
};

// Draws the three square zones plus every triangle zone of the tree as
// polygons in the chosen chart. Affine charts get exact straight edges;
// the disc model subdivides edges since projective lines bend there.
void render_zones(std::ostream& os, const RenderSpec& spec);

} // namespace skew46::svg
