#pragma once

// k-center on a line: cover planar points by k congruent metric balls whose
// centers are collinear, minimizing the common radius. Variants: the center
// line fully fixed, only its orientation fixed, or completely free.

#include "linecenter/approx.hpp"
#include "linecenter/fixed_line.hpp"
#include "linecenter/fixed_orientation.hpp"
#include "linecenter/free_line.hpp"
#include "linecenter/geometry.hpp"
#include "linecenter/instance.hpp"
#include "linecenter/oracle.hpp"
#include "linecenter/piercing.hpp"
