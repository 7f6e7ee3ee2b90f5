#pragma once

#include <ostream>
#include <string>

#include "tifl/envelope.hpp"
#include "tifl/guidelines.hpp"
#include "tifl/laplace_grid.hpp"
#include "tifl/plane.hpp"
#include "tifl/scenario.hpp"

namespace tifl {

/// Shortest decimal that round-trips to the same double; '.' separator, no locale.
std::string format_number(double v);

/// Header x,y,z,V,Ex,Ey,Ez; one row per masked-in sample in row-major order.
/// `left` selects the left pair (E2) instead of the right pair (E1).
void write_fields_csv(std::ostream& os, const PlaneGrid<PairFields>& fields, bool left);

/// Header x,y,z,am_max; one row per masked-in sample in row-major order.
void write_envelope_csv(std::ostream& os, const PlaneGrid<double>& map);

/// Binary 8-bit PGM (P5), linear scale normalized by the map maximum. The top image row is
/// the largest y (xy plane) or z (xz plane). Masked-out samples are black.
void write_pgm(std::ostream& os, const PlaneGrid<double>& map);

/// Header param,argmax_x,argmax_y,argmax_z,peak,extent,region,depth; one row per sweep value.
/// Argmax and extent come from the requested plane's focal summary.
void write_scenario_csv(std::ostream& os, const ScenarioResult& result, Plane plane);

/// Aligned text tables: one for R_ij cells, one for depth bands.
void write_guideline_tables(std::ostream& os, const GuidelineReport& report);

/// Header x,y,z,V,Ex,Ey,Ez over the inside cells of a grid solution, k-then-j-then-i order.
void write_volume_csv(std::ostream& os, const GridSolution& solution);

}  // namespace tifl
