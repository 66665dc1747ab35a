#include "viforge/projections.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace viforge {

Vector project_box(const Vector& x, const Vector& lo, const Vector& hi) {
    return x.cwiseMax(lo).cwiseMin(hi);
}

Vector project_ball(const Vector& x, const Vector& center, double r) {
    Vector d = x - center;
    double n = d.norm();
    if (n <= r) return x;
    return center + (r / n) * d;
}

/* returns argmin_{||y||_1 <= l} ||y - x|| via soft thresholding with the
   sort-and-scan threshold */
Vector project_l1_ball(const Vector& x, double l) {
    if (l < 0) throw ConfigError("project_l1_ball: negative radius");
    if (x.lpNorm<1>() <= l) return x;
    if (l == 0) return Vector::Zero(x.size());

    Vector a = x.cwiseAbs();
    std::vector<double> mu(a.data(), a.data() + a.size());
    std::sort(mu.begin(), mu.end(), std::greater<double>());

    double csum = 0;
    double tau = 0;
    for (std::size_t j = 0; j < mu.size(); ++j) {
        csum += mu[j];
        double cand = (csum - l) / static_cast<double>(j + 1);
        if (mu[j] - cand > 0)
            tau = cand;
        else
            break;
    }

    Vector y(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        double m = std::abs(x[i]) - tau;
        y[i] = m > 0 ? (x[i] > 0 ? m : -m) : 0.0;
    }
    return y;
}

Vector project_halfspace_nonneg(const Vector& x, int coord) {
    Vector y = x;
    if (y[coord] < 0) y[coord] = 0;
    return y;
}

Vector project_half_disk(const Vector& x) {
    Vector y = x;
    if (y[0] < 0) y[0] = 0;
    double n = y.norm();
    if (n > 1.0) y /= n;
    return y;
}

FeasibleSet FeasibleSet::box(const Vector& lo, const Vector& hi) {
    FeasibleSet s;
    s.kind = Kind::Box;
    s.dim = static_cast<int>(lo.size());
    s.lo = lo;
    s.hi = hi;
    return s;
}

FeasibleSet FeasibleSet::uniform_box(int dim, double lo, double hi) {
    return box(Vector::Constant(dim, lo), Vector::Constant(dim, hi));
}

FeasibleSet FeasibleSet::ball(const Vector& center, double radius) {
    FeasibleSet s;
    s.kind = Kind::Ball;
    s.dim = static_cast<int>(center.size());
    s.center = center;
    s.radius = radius;
    return s;
}

FeasibleSet FeasibleSet::origin_ball(int dim, double radius) {
    return ball(Vector::Zero(dim), radius);
}

FeasibleSet FeasibleSet::l1_ball(int dim, double l) {
    FeasibleSet s;
    s.kind = Kind::L1Ball;
    s.dim = dim;
    s.l = l;
    return s;
}

FeasibleSet FeasibleSet::halfspace_nonneg(int dim, int coord) {
    FeasibleSet s;
    s.kind = Kind::HalfSpaceNonneg;
    s.dim = dim;
    s.coord = coord;
    return s;
}

FeasibleSet FeasibleSet::half_disk() {
    FeasibleSet s;
    s.kind = Kind::HalfDisk;
    s.dim = 2;
    return s;
}

Vector FeasibleSet::project(const Vector& x) const {
    switch (kind) {
    case Kind::Box: return project_box(x, lo, hi);
    case Kind::Ball: return project_ball(x, center, radius);
    case Kind::L1Ball: return project_l1_ball(x, l);
    case Kind::HalfSpaceNonneg: return project_halfspace_nonneg(x, coord);
    case Kind::HalfDisk: return project_half_disk(x);
    }
    throw ConfigError("FeasibleSet: unknown kind");
}

bool FeasibleSet::contains(const Vector& x, double tol) const {
    switch (kind) {
    case Kind::Box:
        return ((x - lo).minCoeff() >= -tol) && ((hi - x).minCoeff() >= -tol);
    case Kind::Ball:
        return (x - center).norm() <= radius + tol;
    case Kind::L1Ball:
        return x.lpNorm<1>() <= l + tol;
    case Kind::HalfSpaceNonneg:
        return x[coord] >= -tol;
    case Kind::HalfDisk:
        return x.norm() <= 1.0 + tol && x[0] >= -tol;
    }
    throw ConfigError("FeasibleSet: unknown kind");
}

} // namespace viforge
