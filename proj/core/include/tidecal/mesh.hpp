/**
 * @file mesh.hpp
 * @brief Structured quadrilateral mesh clipped to the cross-section polygon.
 *
 * Cells whose center lies inside the polygon are active. Boundary faces
 * (between an active cell and the outside) inherit the condition tag of the
 * nearest cross-section edge.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tidecal/model.hpp"

namespace tidecal::flow {

struct Cell {
    int ix = 0;
    int iy = 0;
    double cx = 0.0;
    double cy = 0.0;
    int zone = 0;
};

struct Face {
    int cell_a = -1;          ///< active cell index
    int cell_b = -1;          ///< active cell index, or -1 for boundary faces
    std::uint8_t axis = 0;    ///< 0 = x-normal, 1 = y-normal
    double area = 0.0;        ///< face length (unit thickness)
    double dist = 0.0;        ///< center-to-center (or center-to-face) distance
    BoundaryKind boundary = BoundaryKind::Wall;  ///< valid for boundary faces
    double fx = 0.0;          ///< face midpoint
    double fy = 0.0;
};

struct Mesh {
    double x0 = 0.0, y0 = 0.0;  ///< lattice origin (lower-left corner)
    double dx = 1.0, dy = 0.25;
    int nx = 0, ny = 0;
    std::vector<int> lattice;   ///< nx*ny -> active cell index or -1
    std::vector<Cell> cells;
    std::vector<Face> faces;
    std::vector<std::string> warnings;

    int lattice_at(int ix, int iy) const {
        if (ix < 0 || iy < 0 || ix >= nx || iy >= ny) return -1;
        return lattice[static_cast<std::size_t>(iy) * nx + ix];
    }
    double cell_volume() const { return dx * dy; }
    std::size_t active_count() const { return cells.size(); }
};

/// Build the clipped structured mesh. Emits a MeshTooCoarse warning when a
/// zone spans fewer than 3 cells.
Mesh build_mesh(const DikeModel& model, double dx, double dy);

}  // namespace tidecal::flow
