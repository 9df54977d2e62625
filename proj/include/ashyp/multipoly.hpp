#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ashyp/exact.hpp"

namespace ashyp::sym {

using exact::Rational;

/// Packed exponent vector: up to 32 variables, 4 bits (degree <= 15) each.
class ExpKey {
public:
    static constexpr int kMaxVars = 32;
    static constexpr unsigned kMaxDegree = 15;

    unsigned get(int i) const {
        return static_cast<unsigned>(limbs[i >> 4] >> ((i & 15) * 4)) & 0xF;
    }

    void set(int i, unsigned e) {
        const int limb = i >> 4, shift = (i & 15) * 4;
        limbs[limb] = (limbs[limb] & ~(0xFULL << shift)) |
                      (static_cast<std::uint64_t>(e & 0xF) << shift);
    }

    /// Component-wise sum; throws on a nibble overflowing past 15.
    ExpKey plus(const ExpKey& o) const {
        ExpKey r;
        // both operands' nibbles < 8 cannot carry; that covers every workload here
        if (((limbs[0] | o.limbs[0] | limbs[1] | o.limbs[1]) & 0x8888888888888888ULL) == 0) {
            r.limbs[0] = limbs[0] + o.limbs[0];
            r.limbs[1] = limbs[1] + o.limbs[1];
            return r;
        }
        for (int i = 0; i < kMaxVars; ++i) {
            const unsigned s = get(i) + o.get(i);
            if (s > kMaxDegree) throw Error("exponent overflow in monomial product");
            r.set(i, s);
        }
        return r;
    }

    bool operator==(const ExpKey&) const = default;

    std::array<std::uint64_t, 2> limbs{0, 0};
};

struct ExpKeyHash {
    std::size_t operator()(const ExpKey& k) const noexcept {
        std::uint64_t h = k.limbs[0] * 0x9E3779B97F4A7C15ULL;
        h ^= (k.limbs[1] + 0xBF58476D1CE4E5B9ULL) + (h << 6) + (h >> 2);
        h ^= h >> 29;
        h *= 0x94D049BB133111EBULL;
        return static_cast<std::size_t>(h ^ (h >> 32));
    }
};

/// Shared, immutable variable universe of a polynomial.
using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms never store zero coefficients; canonical order is graded lex
/// (total degree, then exponents) over the declared variable list.
class MultiPoly {
public:
    using TermMap = std::unordered_map<ExpKey, Rational, ExpKeyHash>;

    explicit MultiPoly(VarList vars);

    static MultiPoly constant(VarList vars, Rational c);
    static MultiPoly variable(VarList vars, std::string_view name);
    static MultiPoly variable(VarList vars, int index);

    const VarList& vars() const { return vars_; }
    int n_vars() const { return static_cast<int>(vars_->size()); }
    int var_index(std::string_view name) const;  // -1 if absent

    bool is_zero() const { return terms_.empty(); }
    std::size_t n_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    int total_degree() const;
    unsigned degree_in(int var) const;
    bool depends_on(int var) const { return degree_in(var) > 0; }

    void add_term(const ExpKey& key, const Rational& coeff);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    /// Content equality over the same variable list.
    bool operator==(const MultiPoly& o) const;

    Rational eval(std::span<const Rational> point) const;

    /// Replaces one variable by a polynomial over the same variable list,
    /// fully collected.
    MultiPoly substituted(int var, const MultiPoly& image) const;

    /// Re-keys terms onto a new variable list; index_map[i] gives the target
    /// slot of source variable i and must be defined wherever the term map
    /// has a nonzero exponent.
    MultiPoly mapped_vars(VarList target, std::span<const int> index_map) const;

    struct Term {
        std::vector<unsigned> exponents;
        Rational coeff;
    };
    /// Terms in canonical (graded-lex, leading first) order.
    std::vector<Term> canonical_terms() const;

    /// Deterministic human-readable rendering of a term, e.g. "-3/2*y1^2*y4".
    std::string term_to_string(const Term& t) const;

    struct Census {
        std::size_t n_pos = 0;
        std::size_t n_neg = 0;
        std::size_t n_zero = 0;  // always 0: zero coefficients are never stored
        std::size_t n_monomials = 0;
        int uniform_sign = 0;  // +1 / -1 when all coefficients share a sign, else 0
    };
    Census census() const;

private:
    VarList vars_;
    TermMap terms_;
};

}  // namespace ashyp::sym
