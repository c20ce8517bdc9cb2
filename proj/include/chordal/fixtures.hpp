#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chordal/clutter.hpp"

namespace chordal {

/// 3-uniform clutter on [7] with nine circuits; {2,3} and {2,6} are its only
/// non-simplicial submaximal circuits.
Clutter figure1_clutter();
/// Chordal 3-uniform clutter on [6].
Clutter figure2_c();
/// Non-chordal 3-uniform clutter on [5].
Clutter figure2_d();
/// {123,134,235,345}: chordal but not W-chordal.
Clutter w_separation_example();
/// {123,124,134,235,245,345,125,135,145}: chordal but not E-chordal.
Clutter e_separation_example();

/// The 17 triangles of the 8-vertex dunce hat triangulation.
std::vector<VertexSet> dunce_hat_triangles();
/// C_{8,5} minus the complements [8] - F of the triangles.
Clutter dunce_hat_clutter();
/// The 33-step elimination order printed alongside the dunce hat example.
std::vector<VertexSet> dunce_hat_printed_order();

std::vector<std::string> fixture_names();
/// Throws InvalidArgument for an unknown name.
Clutter fixture(std::string_view name);

}  // namespace chordal
