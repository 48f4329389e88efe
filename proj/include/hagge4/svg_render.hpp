#pragma once

/**
 * @file svg_render.hpp
 * @brief SVG rendering of the two standard figures.
 *
 * The only place in the library where exact values are converted to
 * floating point; the drawing carries no exactness contract. Output is
 * deterministic for fixed inputs: fixed element order and fixed %.6g
 * number formatting.
 */

#include <string>

#include "hagge4/quad_config.hpp"

namespace hagge {

enum class Figure {
    Config, ///< hyperbola, circumcircle, named centres, concurrency pencils
    Hagge,  ///< circumcircle, four Hagge circles, axes, centre line, letter lines
};

struct RenderSpec {
    Figure figure = Figure::Config;
    int size_px = 800;    ///< rendered width in pixels; must be >= 100
    std::string out_path; ///< destination file, consumed by the CLI layer
};

/// Renders the chosen figure for the configuration as a standalone SVG
/// document. Structural contract: the Config figure contains exactly
/// two path elements of class "hyperbola" (one per branch); the Hagge
/// figure contains exactly five circle elements of class "main-circle"
/// (circumcircle plus four Hagge circles).
/// Throws InvalidParameter if spec.size_px < 100.
std::string render_svg(const QuadConfig& cfg, const RenderSpec& spec);

} // namespace hagge
