#pragma once

#include <iosfwd>
#include <string>

#include "ratdiag/fan.hpp"
#include "ratdiag/series.hpp"

namespace ratdiag {

// Deterministic data emission for the CLI: byte-identical output for
// identical inputs, no timestamps.

// CSV rows: kind,i,j,gen1_p,gen1_q,gen2_p,gen2_q,base_z,base_w
void emit_fan_csv(const Fan& fan, std::ostream& out);

// Static quadrant plot of the polygon and the cone generator rays.
void emit_fan_svg(const Fan& fan, const Polygon& poly, std::ostream& out);

// CSV rows: x,y,numerator,denominator
void emit_table_csv(const CoeffTable& table, std::ostream& out);

void write_plot_data(const Fan& fan, const Polygon& poly,
                     const std::string& path, const std::string& format);

} // namespace ratdiag
