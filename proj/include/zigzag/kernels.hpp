#pragma once

#include <cstddef>
#include <vector>

#include "zigzag/paintbox.hpp"
#include "zigzag/semifinite.hpp"
#include "zigzag/templates.hpp"

namespace zigzag {

// Level scans over every vertex of one level. Serial versions are the reference; the
// parallel ones split the vertices across OpenMP threads and must agree exactly.
enum class Exec { Serial, Parallel };

// Vertices of level n in lexicographic order (the root alone at level 0).
std::vector<Vertex> level_vertices(std::size_t n);

enum class Region { Outside, Finite, Infinite };  // zeta(t)^c, zeta(t) \ J(t), J(t)

std::vector<Region> classify_level(const Template& t, std::size_t n, Exec exec);
std::vector<Rational> phi_w_level(const Paintbox& w, std::size_t n, Exec exec);
std::vector<ExtValue> phi_tw_level(const GrowthModel& model, std::size_t n, Exec exec);

// Vertices of level n where harmonicity fails.
std::vector<Vertex> harmonic_defects(const Paintbox& w, std::size_t n, Exec exec);
std::vector<Vertex> harmonic_defects(const GrowthModel& model, std::size_t n, Exec exec);

}  // namespace zigzag
