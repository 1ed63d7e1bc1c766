#pragma once

#include <array>
#include <string>
#include <vector>

#include "lws/minkowski.hpp"
#include "lws/surface.hpp"

namespace lws {

/// Quad mesh of a parametrized patch with per-vertex curvature attributes.
struct SurfaceMesh {
    std::vector<MVec3> vertices;
    std::vector<std::array<int, 4>> quads; // 0-based vertex indices
    std::vector<double> H, K;
    std::vector<int> w_sign;
    std::vector<double> us, vs; // parameter values per vertex
};

/// Sample the patch on an nu x nv vertex grid (nu, nv >= 2) and build the
/// quad connectivity. Grid lines are strictly increasing, so no face is
/// degenerate in parameter space.
SurfaceMesh build_mesh(const SurfacePatch& patch, int nu, int nv);

/// Wavefront OBJ with `v x y z` and quad `f` records only, ASCII, LF line
/// endings, shortest-round-trip floats.
std::string mesh_to_obj(const SurfaceMesh& mesh);

/// CSV with header u,v,x,y,z,H,K.
std::string mesh_to_csv(const SurfaceMesh& mesh);

} // namespace lws
