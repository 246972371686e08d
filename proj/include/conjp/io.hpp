#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "conjp/extendibility.hpp"
#include "conjp/geometry.hpp"
#include "conjp/harmonic.hpp"

namespace conjp {

inline constexpr int kReportSchemaVersion = 1;

/// {"outer":{"center":[x,y],"radius":r},"holes":[{"center":[x,y],"radius":r},...]}
CircleDomain domain_from_json(const nlohmann::json& j);
nlohmann::json domain_to_json(const CircleDomain& d);
CircleDomain load_domain(const std::string& path);

/// CSV with header `circle_index,theta,re,im`; circle_index is the 1-based
/// boundary component (holes 1..m-1, outer m). Rows must list the grid
/// nodes in grid order; any other layout is a GridMismatch.
BoundarySamples read_samples_csv(std::istream& in, const BoundaryGrid& grid);
BoundarySamples load_samples_csv(const std::string& path, const BoundaryGrid& grid);
void write_samples_csv(std::ostream& out, const BoundaryGrid& grid, const BoundarySamples& samples);

nlohmann::json complex_to_json(Complex c);
nlohmann::json harmonic_to_json(const HarmonicRep& rep);
nlohmann::json report_to_json(const ExtendibilityReport& r);

}  // namespace conjp
