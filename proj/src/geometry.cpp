#include "ashyp/geometry.hpp"

#include <cmath>
#include <string>

#include "ashyp/rng.hpp"

namespace ashyp::geom {

double BallPoint::norm() const { return std::sqrt(norm2()); }

double distance(const BallPoint& a, const BallPoint& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

SphereDirection::SphereDirection(double u_, double v_, double w_) : u(u_), v(v_), w(w_) {
    const double n = std::sqrt(u * u + v * v + w * w);
    if (!(n > 0.0) || !std::isfinite(n)) throw InvalidPoint("zero or non-finite direction");
    u /= n;
    v /= n;
    w /= n;
}

Configuration::Configuration(std::vector<BallPoint> points, const Tolerances& tol)
    : points_(std::move(points)) {
    if (points_.size() < 2) throw InvalidPoint("a configuration needs n >= 2 points");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].norm() >= 1.0 - tol.eps_boundary)
            throw NumericalDegeneracy("point " + std::to_string(i + 1) +
                                      " is not strictly interior");
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (distance(points_[i], points_[j]) <= tol.eps_sep)
                throw InvalidPoint("points " + std::to_string(i + 1) + " and " +
                                   std::to_string(j + 1) + " coincide within eps_sep");
    }
}

BallPoint mobius_add(const BallPoint& a, const BallPoint& x) {
    const double ax = a.x * x.x + a.y * x.y + a.z * x.z;
    const double na = a.norm2(), nx = x.norm2();
    const double den = 1.0 + 2.0 * ax + na * nx;
    const double ca = (1.0 + 2.0 * ax + nx) / den;
    const double cx = (1.0 - na) / den;
    return {ca * a.x + cx * x.x, ca * a.y + cx * x.y, ca * a.z + cx * x.z};
}

static void check_interior(const BallPoint& p, const Tolerances& tol, const char* what) {
    if (p.norm() >= 1.0 - tol.eps_boundary)
        throw NumericalDegeneracy(std::string(what) + " is within eps_boundary of the sphere");
}

BallPoint mobius_translate(const BallPoint& center, const BallPoint& p, const Tolerances& tol) {
    check_interior(center, tol, "translation center");
    check_interior(p, tol, "point");
    return mobius_add(-center, p);
}

SphereDirection ideal_endpoint(const BallPoint& a, const BallPoint& b, const Tolerances& tol) {
    if (distance(a, b) <= tol.eps_sep)
        throw DegenerateRay("ray endpoints closer than eps_sep");
    const BallPoint d = mobius_translate(a, b, tol);
    const double n = d.norm();
    const BallPoint u{d.x / n, d.y / n, d.z / n};
    // boundary extension of x -> a (+) x; for |x| = 1 the gyro-addition
    // denominator is (1 - |a|)^2-bounded away from zero
    const double au = a.x * u.x + a.y * u.y + a.z * u.z;
    const double na = a.norm2();
    const double den = 1.0 + 2.0 * au + na;
    const double ca = 2.0 * (1.0 + au) / den;
    const double cu = (1.0 - na) / den;
    return SphereDirection(ca * a.x + cu * u.x, ca * a.y + cu * u.y, ca * a.z + cu * u.z);
}

asdet::ExtendedComplex stereographic(const SphereDirection& d) {
    using C = asdet::Complex;
    // [x+iy : 1-z] and [1+z : x-iy] agree projectively on the sphere; pick the
    // branch whose second component is well away from zero
    if (d.w >= 0.0) return {C(1.0 + d.w, 0.0), C(d.u, -d.v)};
    return {C(d.u, d.v), C(1.0 - d.w, 0.0)};
}

asdet::DirectionMatrix direction_matrix(const Configuration& cfg, const Tolerances& tol) {
    const int n = cfg.size();
    asdet::DirectionMatrix dm(n);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            dm.set(a, b, stereographic(ideal_endpoint(cfg[a - 1], cfg[b - 1], tol)));
        }
    return dm;
}

Configuration embed_h2(const std::vector<std::array<double, 2>>& disk_points,
                       const Tolerances& tol) {
    std::vector<BallPoint> pts;
    pts.reserve(disk_points.size());
    for (const auto& [x, z] : disk_points) {
        if (x * x + z * z >= 1.0) throw InvalidPoint("disk point outside the open unit disk");
        pts.push_back({x, 0.0, z});
    }
    try {
        return Configuration(std::move(pts), tol);
    } catch (const NumericalDegeneracy& e) {
        throw InvalidPoint(e.what());
    }
}

Rotation::Rotation(double w, double x, double y, double z) : qw(w), qx(x), qy(y), qz(z) {
    const double n = std::sqrt(qw * qw + qx * qx + qy * qy + qz * qz);
    if (!(n > 0.0) || !std::isfinite(n)) throw InvalidPoint("zero quaternion");
    qw /= n;
    qx /= n;
    qy /= n;
    qz /= n;
}

BallPoint Rotation::apply(const BallPoint& p) const {
    // v' = v + 2 q x (q x v + w v), q = (qx,qy,qz)
    const double tx = 2.0 * (qy * p.z - qz * p.y);
    const double ty = 2.0 * (qz * p.x - qx * p.z);
    const double tz = 2.0 * (qx * p.y - qy * p.x);
    return {p.x + qw * tx + (qy * tz - qz * ty),
            p.y + qw * ty + (qz * tx - qx * tz),
            p.z + qw * tz + (qx * ty - qy * tx)};
}

Rotation Rotation::inverse() const {
    Rotation r;
    r.qw = qw;
    r.qx = -qx;
    r.qy = -qy;
    r.qz = -qz;
    return r;
}

Rotation Rotation::about_y(double angle) {
    return Rotation(std::cos(angle / 2.0), 0.0, std::sin(angle / 2.0), 0.0);
}

BallPoint Isometry::apply(const BallPoint& p) const {
    return mobius_add(translation, rotation.apply(p));
}

Isometry Isometry::inverse() const {
    // inverse of p -> c (+) Rp is p -> (-R^{-1}c) (+) R^{-1}p
    Isometry inv;
    inv.rotation = rotation.inverse();
    inv.translation = -inv.rotation.apply(translation);
    return inv;
}

double euclidean_radius(double rho) { return std::tanh(rho / 2.0); }

Isometry random_isometry(std::uint64_t seed, double radius) {
    rng::Engine eng(seed);
    double q[4];
    for (double& c : q) c = eng.gaussian();
    Isometry iso;
    iso.rotation = Rotation(q[0], q[1], q[2], q[3]);
    // translation center uniform in hyperbolic volume within `radius`
    const double u = eng.uniform();
    const double target = u * (std::sinh(2.0 * radius) / 4.0 - radius / 2.0);
    double lo = 0.0, hi = radius;
    for (int i = 0; i < 64; ++i) {
        const double mid = (lo + hi) / 2.0;
        (std::sinh(2.0 * mid) / 4.0 - mid / 2.0 < target ? lo : hi) = mid;
    }
    const double r = euclidean_radius((lo + hi) / 2.0);
    double v[3];
    for (double& c : v) c = eng.gaussian();
    const double vn = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    iso.translation = vn > 0.0 ? BallPoint{r * v[0] / vn, r * v[1] / vn, r * v[2] / vn}
                               : BallPoint{};
    return iso;
}

Isometry random_h2_isometry(std::uint64_t seed, double radius) {
    rng::Engine eng(seed);
    Isometry iso;
    iso.rotation = Rotation::about_y(eng.uniform(0.0, 2.0 * M_PI));
    const double u = eng.uniform();
    const double rho = std::acosh(1.0 + u * (std::cosh(radius) - 1.0));
    const double r = euclidean_radius(rho);
    const double theta = eng.uniform(0.0, 2.0 * M_PI);
    iso.translation = {r * std::cos(theta), 0.0, r * std::sin(theta)};
    return iso;
}

Configuration apply_isometry(const Isometry& iso, const Configuration& cfg,
                             const Tolerances& tol) {
    std::vector<BallPoint> pts;
    pts.reserve(cfg.size());
    for (const auto& p : cfg.points()) pts.push_back(iso.apply(p));
    return Configuration(std::move(pts), tol);
}

}  // namespace ashyp::geom
