#pragma once

#include <string>
#include <vector>

#include "heights/census.hpp"
#include "heights/realalg.hpp"

namespace heights {

// The real root of p with the given 0-based index among ascending real
// roots (inverse of RealAlgebraic::root_index for the canonical minpoly).
RealAlgebraic real_root_by_index(const IntPoly& p, int index);

// CSV with header: key_minpoly,key_root_index,key_approx,d,k,count,deg_Hd.
// key_minpoly is quoted (it contains commas); key_approx carries 20
// fractional digits and is informative only.
std::string census_to_csv(const std::vector<CensusRecord>& records);

// JSON array mirroring the CSV fields; parses back to exact records.
std::string census_to_json(const std::vector<CensusRecord>& records);
std::vector<CensusRecord> census_from_json(const std::string& text);

// Two columns (key approximation, count) for gnuplot.
std::string census_to_gnuplot(const std::vector<CensusRecord>& records);

// (key_approx, count) pairs from census CSV text, for slope fitting.
std::vector<std::pair<double, unsigned long>> slope_points_from_csv(
    const std::string& text);

}  // namespace heights
