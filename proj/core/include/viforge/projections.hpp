#pragma once

#include "viforge/types.hpp"

namespace viforge {

// Coordinatewise clamp onto the box [lo, hi].
Vector project_box(const Vector& x, const Vector& lo, const Vector& hi);

// Radial projection onto the closed ball {y: ||y - center|| <= r}.
Vector project_ball(const Vector& x, const Vector& center, double r);

// Euclidean projection onto {y: ||y||_1 <= l} by sort-and-scan soft
// thresholding, O(n log n).
Vector project_l1_ball(const Vector& x, double l);

// Projection onto the half space {y: y[coord] >= 0}.
Vector project_halfspace_nonneg(const Vector& x, int coord);

// Projection onto the unit half disk {y in R^2: ||y|| <= 1, y1 >= 0}.
// Clamp-then-scale is exact here because the half-space boundary passes
// through the ball's center.
Vector project_half_disk(const Vector& x);

struct FeasibleSet {
    enum class Kind { Box, Ball, L1Ball, HalfSpaceNonneg, HalfDisk };

    Kind kind = Kind::Box;
    int dim = 0;
    Vector lo, hi;     // Box
    Vector center;     // Ball
    double radius = 0; // Ball
    double l = 0;      // L1Ball
    int coord = 0;     // HalfSpaceNonneg

    static FeasibleSet box(const Vector& lo, const Vector& hi);
    static FeasibleSet uniform_box(int dim, double lo, double hi);
    static FeasibleSet ball(const Vector& center, double radius);
    static FeasibleSet origin_ball(int dim, double radius);
    static FeasibleSet l1_ball(int dim, double l);
    static FeasibleSet halfspace_nonneg(int dim, int coord);
    static FeasibleSet half_disk();

    Vector project(const Vector& x) const;
    bool contains(const Vector& x, double tol = 1e-12) const;
};

} // namespace viforge
