#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gps/harness.hpp"
#include "gps/model.hpp"
#include "gps/spectra.hpp"
#include "gps/structure_maps.hpp"
#include "gps/topology.hpp"

namespace gps {

enum class Format { Text, Json, Dot };

// Every renderer ends its output with a newline. Dot is accepted only by
// render_space, render_topology and render_points (as an edgeless graph).
std::string render_model(const Model& m, Format f);
std::string render_points(const std::string& title, const std::vector<GradedSubmodule>& points, Format f);
std::string render_radical(const GradedSubmodule& n, const RadicalResult& r, Format f);
std::string render_variety(const FiniteSpace& space, const GradedSubmodule& n, bool star, Format f);
std::string render_space(const FiniteSpace& space, Format f);
std::string render_topology(const FiniteSpace& space, const TopologyReport& report, Format f);
std::string render_map(const FiniteSpace& domain, const FiniteSpace& ring_space, const MapAnalysis& a, Format f);
std::string render_checks(const std::vector<CheckResult>& results, Format f, bool timings = false);
std::string render_trilean(const std::string& what, const Trilean& t, Format f);

// Specialization preorder: an edge Q -> Q' when Q' is in Cl({Q}), reduced
// transitively, with points of equal closure grouped in clusters.
std::string specialization_dot(const FiniteSpace& space);

std::string to_string(RadicalStrategy s);

}  // namespace gps
