#pragma once

#include <vector>

#include "dhull/geometry.hpp"

namespace fixtures {

// Clockwise unit square (0,0),(0,1),(1,1),(1,0); L = 4.
inline dhull::Polygon square() {
    return dhull::validate_polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
}

// Clockwise 4x4 square with a notch cut into the top edge; L = 18.
// Hull is the 4x4 square; single lid (1.5,4)-(2.5,4).
inline dhull::Polygon notch() {
    return dhull::validate_polygon({{0, 0},
                                    {0, 4},
                                    {1.5, 4},
                                    {1.5, 3},
                                    {2.5, 3},
                                    {2.5, 4},
                                    {4, 4},
                                    {4, 0}});
}

} // namespace fixtures
