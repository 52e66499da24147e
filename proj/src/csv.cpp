#include "crowdpipe/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "crowdpipe/dataset.hpp"

namespace crowdpipe {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

void write_curve_csv(const std::vector<CurvePoint>& curve, std::ostream& out) {
  out << "budget,inspected,precision,recall,f_measure\n";
  for (const auto& p : curve) {
    out << num(p.budget) << ',' << p.inspected << ',' << num(p.precision) << ','
        << num(p.recall) << ',' << num(p.f_measure) << '\n';
  }
}

std::vector<CurvePoint> read_curve_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) ||
      line != "budget,inspected,precision,recall,f_measure") {
    throw ValidationError("curve file missing expected header row");
  }
  std::vector<CurvePoint> curve;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    CurvePoint p;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    if (!(row >> p.budget >> p.inspected >> p.precision >> p.recall >>
          p.f_measure)) {
      throw ValidationError("malformed curve row at line " +
                            std::to_string(lineno));
    }
    curve.push_back(p);
  }
  return curve;
}

void write_surface_csv(const SweepSurface& s, std::ostream& out) {
  out << "threshold,budget,f_measure\n";
  for (std::size_t ti = 0; ti < s.thresholds.size(); ++ti) {
    for (std::size_t bi = 0; bi < s.budgets.size(); ++bi) {
      out << num(s.thresholds[ti]) << ',' << num(s.budgets[bi]) << ','
          << num(s.at(ti, bi)) << '\n';
    }
  }
}

void write_envelope_csv(const SweepSurface& s, std::ostream& out) {
  out << "budget,best_threshold,best_f\n";
  for (std::size_t bi = 0; bi < s.budgets.size(); ++bi) {
    out << num(s.budgets[bi]) << ',' << num(s.envelope_t[bi]) << ','
        << num(s.envelope_f[bi]) << '\n';
  }
}

}  // namespace crowdpipe
