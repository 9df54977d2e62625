#pragma once

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ashyp/errors.hpp"
#include "ashyp/exact.hpp"

namespace ashyp::asdet {

using Complex = std::complex<double>;

/// A direction on the Riemann sphere as a homogeneous pair [z : w] on P1(C).
/// Finite values are [t : 1]; infinity is [z : 0] with z != 0.
struct ExtendedComplex {
    Complex z{0.0, 0.0};
    Complex w{1.0, 0.0};

    static ExtendedComplex of(Complex value) { return {value, Complex(1.0, 0.0)}; }
    static ExtendedComplex infinity() { return {Complex(1.0, 0.0), Complex(0.0, 0.0)}; }

    bool is_infinite(double eps = 0.0) const { return std::abs(w) <= eps * std::abs(z); }

    /// z/w; only meaningful away from infinity.
    Complex value() const { return z / w; }

    /// Projectively equal pair scaled so the larger-modulus component is 1.
    ExtendedComplex normalized() const {
        const double az = std::abs(z), aw = std::abs(w);
        if (az == 0.0 && aw == 0.0) throw InvalidPoint("homogeneous pair [0:0]");
        const Complex d = az >= aw ? z : w;
        return {z / d, w / d};
    }
};

/// The n-by-n array of pairwise directions t_ab, nothing on the diagonal.
class DirectionMatrix {
public:
    explicit DirectionMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
        if (n < 2) throw InvalidPoint("direction matrix needs n >= 2");
    }

    int size() const { return n_; }

    /// 1-based indices, a != b.
    const ExtendedComplex& at(int a, int b) const { return entries_[index(a, b)]; }
    void set(int a, int b, const ExtendedComplex& e) { entries_[index(a, b)] = e; }

    /// All pairs renormalized to max-modulus 1 (permitted by scale invariance;
    /// limits float drift in the determinants).
    DirectionMatrix normalized() const {
        DirectionMatrix r(n_);
        for (int a = 1; a <= n_; ++a)
            for (int b = 1; b <= n_; ++b)
                if (a != b) r.set(a, b, at(a, b).normalized());
        return r;
    }

private:
    std::size_t index(int a, int b) const {
        if (a < 1 || b < 1 || a > n_ || b > n_ || a == b)
            throw InvalidPoint("direction matrix index out of range");
        return static_cast<std::size_t>(a - 1) * n_ + (b - 1);
    }

    int n_;
    std::vector<ExtendedComplex> entries_;
};

enum class Variant { observer, star };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

/// Coefficients of a one-variable polynomial, ascending powers, fixed length.
using CoeffVector = std::vector<Complex>;

/// 2x2 determinant of the coefficient vectors of the linear factors of u and v:
/// u = [z1:w1] stands for (w1*t - z1), so bracket = z2*w1 - z1*w2. For finite
/// pairs this is t_v - t_u.
Complex bracket(const ExtendedComplex& u, const ExtendedComplex& v);

/// Coefficient vector (length n, ascending) of the product of the linear
/// factors (w*t - z) over the roots; a root at infinity [z:0] contributes the
/// constant factor z instead (degree drop).
CoeffVector poly_from_roots(std::span<const ExtendedComplex> roots, int length);

/// det of the n-by-n matrix whose a-th column is the coefficient vector of
/// p_a (observer: roots = row a of dm) or q_a (star: roots = column a).
Complex as_numerator(const DirectionMatrix& dm, Variant variant);

/// Product of the pairwise 2x2 brackets, det(p_ab, p_ba) for a < b
/// (star variant: det(q_ab, q_ba)).
Complex denominator_product(const DirectionMatrix& dm, Variant variant);

/// The normalized determinant D (observer) or D^s (star).
/// Throws DegenerateDenominator when a bracket modulus falls below eps_den
/// (measured on max-modulus-1 pairs).
Complex normalized_det(const DirectionMatrix& dm, Variant variant, double eps_den = 1e-13);

// ---- exact re-evaluation on rationalized inputs ------------------------------

using exact::RatComplex;
using exact::Rational;

struct ExactPair {
    RatComplex z;
    RatComplex w;
};

struct ExactDet {
    RatComplex numerator;
    RatComplex denominator;

    /// |D|^2 as an exact rational.
    Rational abs_squared() const;
    /// D for exactly-real results (throws if the exact imaginary part is nonzero).
    Rational real_value() const;
};

/// Rationalizes every homogeneous pair of dm (exact dyadic components) and
/// evaluates numerator and denominator with exact arithmetic. Used to confirm
/// or refute any float value that lands near a proven bound.
ExactDet exact_normalized_det(const DirectionMatrix& dm, Variant variant);

}  // namespace ashyp::asdet
