#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ashyp/asdet.hpp"
#include "ashyp/errors.hpp"

namespace ashyp::geom {

struct Tolerances {
    double eps_sep = 1e-9;       // minimum pairwise point separation
    double eps_boundary = 1e-12; // minimum distance from the unit sphere
    double eps_unit = 1e-9;      // unit-norm slack for sphere directions
};

/// A point of the Poincare unit-ball model of H3 (strictly interior).
struct BallPoint {
    double x = 0.0, y = 0.0, z = 0.0;

    double norm2() const { return x * x + y * y + z * z; }
    double norm() const;
    BallPoint operator-() const { return {-x, -y, -z}; }
    bool operator==(const BallPoint&) const = default;
};

double distance(const BallPoint& a, const BallPoint& b);

/// A point of the sphere at infinity; normalized on construction.
struct SphereDirection {
    SphereDirection(double u_, double v_, double w_);

    double u, v, w;
    bool operator==(const SphereDirection&) const = default;
};

/// Ordered list of n >= 2 pairwise-distinct interior points.
class Configuration {
public:
    Configuration(std::vector<BallPoint> points, const Tolerances& tol = {});

    int size() const { return static_cast<int>(points_.size()); }
    const BallPoint& operator[](int i) const { return points_[i]; }  // 0-based
    const std::vector<BallPoint>& points() const { return points_; }

private:
    std::vector<BallPoint> points_;
};

/// Mobius (gyro) addition on the open ball; a + x in Ungar's notation.
BallPoint mobius_add(const BallPoint& a, const BallPoint& x);

/// The canonical hyperbolic isometry sending `center` to the origin, applied
/// to p. Throws NumericalDegeneracy when either argument is within
/// eps_boundary of the unit sphere.
BallPoint mobius_translate(const BallPoint& center, const BallPoint& p,
                           const Tolerances& tol = {});

/// Ideal endpoint of the geodesic ray from a through b: translate a to the
/// origin, normalize the image of b, translate back (geodesics through the
/// origin are Euclidean diameters).
SphereDirection ideal_endpoint(const BallPoint& a, const BallPoint& b,
                               const Tolerances& tol = {});

/// Stereographic projection s(x,y,z) = (x+iy)/(1-z) as a homogeneous pair;
/// the north pole maps to [2 : 0] (infinity), no division anywhere.
asdet::ExtendedComplex stereographic(const SphereDirection& d);

/// Entry (a,b) = stereographic(ideal_endpoint(x_a, x_b)).
asdet::DirectionMatrix direction_matrix(const Configuration& cfg, const Tolerances& tol = {});

/// Embeds H2 (the y=0 plane) points (x,z) into the ball model.
Configuration embed_h2(const std::vector<std::array<double, 2>>& disk_points,
                       const Tolerances& tol = {});

/// Rotation about the origin; unit quaternion, normalized on construction.
class Rotation {
public:
    Rotation() = default;  // identity
    Rotation(double w, double x, double y, double z);

    BallPoint apply(const BallPoint& p) const;
    Rotation inverse() const;
    static Rotation about_y(double angle);

    double qw = 1.0, qx = 0.0, qy = 0.0, qz = 0.0;
};

/// Orientation-preserving ball isometry: rotate about the origin, then
/// gyro-translate the origin to `translation`.
struct Isometry {
    Rotation rotation;
    BallPoint translation;

    BallPoint apply(const BallPoint& p) const;
    Isometry inverse() const;
    static Isometry identity() { return {}; }
};

/// Seeded isometry with rotation uniform on SO(3) and translation center
/// uniform in hyperbolic radius <= radius.
Isometry random_isometry(std::uint64_t seed, double radius = 1.5);

/// Same, restricted to maps preserving the y=0 plane (in-plane rotation and
/// translation); used for coplanar invariance tests.
Isometry random_h2_isometry(std::uint64_t seed, double radius = 1.5);

Configuration apply_isometry(const Isometry& iso, const Configuration& cfg,
                             const Tolerances& tol = {});

/// Euclidean ball radius of the hyperbolic circle of radius rho about the origin.
double euclidean_radius(double rho);

}  // namespace ashyp::geom
