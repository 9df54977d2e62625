#pragma once

#include <string>
#include <vector>

#include "ashyp/asdet.hpp"
#include "ashyp/multipoly.hpp"

namespace ashyp::sym {

/// Variable names "tab" for every off-diagonal pair, lexicographic in (a,b).
std::vector<std::string> t_var_names(int n);
VarList t_vars(int n);

/// Exact numerator polynomial: det of the n-by-n matrix whose a-th column is
/// the coefficient vector of prod_{b != a} (T - t_ab) (observer) or
/// (T - t_ba) (star), over the n(n-1) direction variables.
MultiPoly sym_numerator(int n, asdet::Variant variant);

/// AS_4: the n=4 observer numerator (multilinear, homogeneous of degree 6).
MultiPoly sym_as4();

/// B_4 = prod_{a<b} (t_ba - t_ab), the n=4 observer denominator.
MultiPoly sym_b4();

/// y0 = sum of all sources; y_k = order[k] - order[k-1]. The inverse matrix is
/// solved exactly.
struct LinearSubstitution {
    std::vector<std::string> sources;                  // canonical t-variable order
    std::vector<std::string> targets;                  // y0..y_{m-1}
    std::vector<std::vector<Rational>> forward;        // y = forward * t
    std::vector<std::vector<Rational>> inverse;        // t = inverse * y

    std::vector<Rational> apply_forward(std::span<const Rational> t_values) const;
    std::vector<Rational> apply_inverse(std::span<const Rational> y_values) const;
};

LinearSubstitution build_substitution(const std::vector<std::string>& order);

/// Exact expansion of p (over the substitution's sources) in the y-variables.
MultiPoly change_vars(const MultiPoly& p, const LinearSubstitution& s);

enum class Ordering { thm1, zhangma };

std::string to_string(Ordering o);
Ordering parse_ordering(const std::string& s);

/// The direction sequence whose consecutive differences define y1..y11.
const std::vector<std::string>& ordering_directions(Ordering o);

/// Machine-checkable record of one sign census.
struct Certificate {
    std::string ordering;                      // "thm1" | "zhangma"
    std::vector<std::string> direction_order;  // the 12 t_ab names used
    std::string polynomial;                    // "AS4" | "B4" | "delta4"
    bool y0_free = false;
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
    std::size_t n_zero = 0;
    int uniform_sign = 0;  // +1, -1, or 0 for mixed
    std::size_t n_monomials = 0;
    std::string verdict;                        // "pass" | "fail"
    std::vector<std::string> offending_monomials;  // only on failure, capped
};

/// Exact certificates for AS4, B4 and delta4 = AS4 - B4 under the requested
/// ordering. Expected pattern: thm1 -> all three y0-free and uniform with one
/// common sign; zhangma -> AS4/B4 uniform common sign, delta4 mixed.
std::vector<Certificate> certify(Ordering ordering);

/// Throws CertificateFailed (message lists offending monomials) when any
/// verdict is "fail".
void ensure_certificates(const std::vector<Certificate>& certs);

}  // namespace ashyp::sym
