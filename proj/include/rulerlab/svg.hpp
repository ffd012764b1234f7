#pragma once

#include <string>

#include "rulerlab/cantor.hpp"
#include "rulerlab/demography.hpp"
#include "rulerlab/dynamics.hpp"
#include "rulerlab/polygon.hpp"
#include "rulerlab/ruler.hpp"

namespace rulerlab {

// Self-contained SVG documents (no external assets), deterministic bytes
// for a fixed input.

// Ruler-tick plot of the order-n block: one vertical line per term, height
// proportional to the term value.
std::string svg_ruler_ticks(int n);

// Age pyramid: one centered bar per age class, width proportional to the
// population share.
std::string svg_age_pyramid(const AgeCensus& census);

// Level diagram: one row per construction step, middle intervals drawn to
// scale and labelled with their index.
std::string svg_cantor_levels(int n);

// Nested 2^m-gons (m <= n) inscribed in a circle, vertices labelled with
// their index.
std::string svg_polygon_generations(int n);

// One period of an orbit as vertical stems with forward-visibility arcs.
std::string svg_visibility_diagram(const Orbit& orbit);

} // namespace rulerlab
