#include "ashyp/asdet.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace ashyp::asdet {

std::string to_string(Variant v) { return v == Variant::observer ? "observer" : "star"; }

Variant parse_variant(const std::string& s) {
    if (s == "observer") return Variant::observer;
    if (s == "star") return Variant::star;
    throw ParseError("unknown variant: " + s);
}

Complex bracket(const ExtendedComplex& u, const ExtendedComplex& v) {
    return v.z * u.w - u.z * v.w;
}

CoeffVector poly_from_roots(std::span<const ExtendedComplex> roots, int length) {
    if (static_cast<int>(roots.size()) + 1 > length)
        throw InvalidPoint("coefficient vector too short for root count");
    CoeffVector c(length, Complex(0.0, 0.0));
    c[0] = Complex(1.0, 0.0);
    int deg = 0;
    for (const auto& r : roots) {
        if (r.w == Complex(0.0, 0.0)) {
            // root at infinity: the factor collapses to the constant z
            for (int i = 0; i <= deg; ++i) c[i] *= r.z;
            continue;
        }
        // multiply by (w*t - z)
        for (int i = deg; i >= 0; --i) {
            c[i + 1] += r.w * c[i];
            c[i] *= -r.z;
        }
        ++deg;
    }
    return c;
}

Complex as_numerator(const DirectionMatrix& dm, Variant variant) {
    const int n = dm.size();
    Eigen::MatrixXcd m(n, n);
    std::vector<ExtendedComplex> roots;
    roots.reserve(n - 1);
    for (int a = 1; a <= n; ++a) {
        roots.clear();
        for (int b = 1; b <= n; ++b) {
            if (b == a) continue;
            roots.push_back(variant == Variant::observer ? dm.at(a, b) : dm.at(b, a));
        }
        const CoeffVector col = poly_from_roots(roots, n);
        for (int i = 0; i < n; ++i) m(i, a - 1) = col[i];
    }
    return m.partialPivLu().determinant();
}

Complex denominator_product(const DirectionMatrix& dm, Variant variant) {
    const int n = dm.size();
    Complex prod(1.0, 0.0);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            // observer: det(p_ab, p_ba) = t_ba - t_ab; star: det(q_ab, q_ba) = t_ab - t_ba
            const Complex f = variant == Variant::observer ? bracket(dm.at(a, b), dm.at(b, a))
                                                           : bracket(dm.at(b, a), dm.at(a, b));
            prod *= f;
        }
    return prod;
}

Complex normalized_det(const DirectionMatrix& dm, Variant variant, double eps_den) {
    const DirectionMatrix nd = dm.normalized();
    const int n = nd.size();
    Complex den(1.0, 0.0);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            const Complex f = variant == Variant::observer ? bracket(nd.at(a, b), nd.at(b, a))
                                                           : bracket(nd.at(b, a), nd.at(a, b));
            if (std::abs(f) < eps_den)
                throw DegenerateDenominator("bracket (" + std::to_string(a) + "," +
                                            std::to_string(b) + ") is numerically zero");
            den *= f;
        }
    return as_numerator(nd, variant) / den;
}

// ---- exact path ----------------------------------------------------------------

namespace {

RatComplex rc_of(const Complex& c) {
    return {exact::from_double(c.real()), exact::from_double(c.imag())};
}

RatComplex bracket_exact(const ExactPair& u, const ExactPair& v) {
    return v.z * u.w - u.z * v.w;
}

std::vector<RatComplex> poly_from_roots_exact(const std::vector<ExactPair>& roots, int length) {
    std::vector<RatComplex> c(length);
    c[0] = RatComplex(Rational(1));
    int deg = 0;
    for (const auto& r : roots) {
        if (r.w.is_zero()) {
            for (int i = 0; i <= deg; ++i) c[i] = c[i] * r.z;
            continue;
        }
        for (int i = deg; i >= 0; --i) {
            c[i + 1] = c[i + 1] + r.w * c[i];
            c[i] = -r.z * c[i];
        }
        ++deg;
    }
    return c;
}

RatComplex det_exact(std::vector<std::vector<RatComplex>> m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    RatComplex acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<RatComplex>> minor(n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor[r - 1].push_back(m[r][c]);
        const RatComplex term = m[0][j] * det_exact(std::move(minor));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

Rational ExactDet::abs_squared() const {
    if (denominator.is_zero()) throw DegenerateDenominator("exact denominator is zero");
    return numerator.norm2() / denominator.norm2();
}

Rational ExactDet::real_value() const {
    if (denominator.is_zero()) throw DegenerateDenominator("exact denominator is zero");
    // num/den = num*conj(den)/|den|^2
    const RatComplex prod{numerator.re * denominator.re + numerator.im * denominator.im,
                          numerator.im * denominator.re - numerator.re * denominator.im};
    if (prod.im != 0) throw Error("exact determinant ratio is not real");
    return prod.re / denominator.norm2();
}

ExactDet exact_normalized_det(const DirectionMatrix& dm, Variant variant) {
    const DirectionMatrix nd = dm.normalized();
    const int n = nd.size();
    std::vector<std::vector<ExactPair>> t(n + 1, std::vector<ExactPair>(n + 1));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b) t[a][b] = {rc_of(nd.at(a, b).z), rc_of(nd.at(a, b).w)};

    std::vector<std::vector<RatComplex>> m(n, std::vector<RatComplex>(n));
    std::vector<ExactPair> roots;
    for (int a = 1; a <= n; ++a) {
        roots.clear();
        for (int b = 1; b <= n; ++b) {
            if (b == a) continue;
            roots.push_back(variant == Variant::observer ? t[a][b] : t[b][a]);
        }
        const auto col = poly_from_roots_exact(roots, n);
        for (int i = 0; i < n; ++i) m[i][a - 1] = col[i];
    }

    ExactDet result;
    result.numerator = det_exact(std::move(m));
    result.denominator = RatComplex(Rational(1));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            const RatComplex f = variant == Variant::observer ? bracket_exact(t[a][b], t[b][a])
                                                              : bracket_exact(t[b][a], t[a][b]);
            result.denominator = result.denominator * f;
        }
    return result;
}

}  // namespace ashyp::asdet
