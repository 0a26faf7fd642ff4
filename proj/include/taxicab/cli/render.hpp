#pragma once

#include <optional>
#include <string>

#include "taxicab/conic.hpp"
#include "taxicab/polygonize.hpp"

namespace taxicab::cli {

/// Bounding box used when none is given: the region's box padded by 20% for
/// the closed families, a focus-centred window for hyperbolas and parabolas.
BoundingBox default_render_box(const ConicSpec& spec);

/// SVG 1.1 drawing of the curve with focus markers; the viewBox is `bbox`
/// with y pointing up. Identical inputs give byte-identical documents.
std::string render_svg(const ConicSpec& spec, const std::optional<BoundingBox>& bbox, int resolution);

}  // namespace taxicab::cli
