/**
 * @file geometry.hpp
 * @brief Planar polygon utilities for cross-section geometry.
 */
#pragma once

#include <cstddef>
#include <vector>

namespace tidecal {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Closed polygon given by its vertices in order; the closing edge
/// (last -> first) is implicit.
using Polygon = std::vector<Point2>;

/// Signed area (positive for counter-clockwise orientation).
double polygon_signed_area(const Polygon& poly);

/// Point-in-polygon test. Points within `edge_tol` of an edge count as inside.
bool point_in_polygon(const Polygon& poly, Point2 p, double edge_tol = 1e-9);

/// Distance from point to segment [a, b].
double point_segment_distance(Point2 p, Point2 a, Point2 b);

/// Distance from point to the polygon boundary.
double point_polygon_boundary_distance(const Polygon& poly, Point2 p);

/// Index of the polygon edge (i -> i+1 mod n) closest to p.
std::size_t nearest_polygon_edge(const Polygon& poly, Point2 p);

/// True if any two non-adjacent edges intersect.
bool polygon_self_intersects(const Polygon& poly);

/// Axis-aligned bounding box as (min, max) corners.
void polygon_bounds(const Polygon& poly, Point2& lo, Point2& hi);

}  // namespace tidecal
