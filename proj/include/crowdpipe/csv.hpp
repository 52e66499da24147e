#pragma once

#include <iosfwd>
#include <vector>

#include "crowdpipe/optimizer.hpp"

namespace crowdpipe {

// Comma-separated text with one header row; numbers printed with 9
// significant digits so identical runs diff byte-identically.

// curve: budget,inspected,precision,recall,f_measure
void write_curve_csv(const std::vector<CurvePoint>& curve, std::ostream& out);
std::vector<CurvePoint> read_curve_csv(std::istream& in);

// surface:  threshold,budget,f_measure
void write_surface_csv(const SweepSurface& s, std::ostream& out);

// envelope: budget,best_threshold,best_f
void write_envelope_csv(const SweepSurface& s, std::ostream& out);

}  // namespace crowdpipe
