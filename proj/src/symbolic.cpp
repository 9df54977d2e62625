#include "ashyp/symbolic.hpp"

#include <algorithm>

namespace ashyp::sym {

std::vector<std::string> t_var_names(int n) {
    if (n < 2 || n > 9) throw Error("direction variables defined for 2 <= n <= 9");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b) names.push_back("t" + std::to_string(a) + std::to_string(b));
    return names;
}

VarList t_vars(int n) { return make_vars(t_var_names(n)); }

namespace {

/// Determinant of a small matrix of polynomials by cofactor expansion.
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m, const VarList& vars) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    MultiPoly acc(vars);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<MultiPoly> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        const MultiPoly term = m[0][j] * poly_det(minor, vars);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace

MultiPoly sym_numerator(int n, asdet::Variant variant) {
    const VarList vars = t_vars(n);
    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
    for (int a = 1; a <= n; ++a) {
        // coefficient vector of prod (T - root), ascending in T
        std::vector<MultiPoly> coeffs{MultiPoly::constant(vars, 1)};
        for (int b = 1; b <= n; ++b) {
            if (b == a) continue;
            const std::string root = variant == asdet::Variant::observer
                                         ? "t" + std::to_string(a) + std::to_string(b)
                                         : "t" + std::to_string(b) + std::to_string(a);
            const MultiPoly rv = MultiPoly::variable(vars, root);
            std::vector<MultiPoly> next(coeffs.size() + 1, MultiPoly(vars));
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                next[i + 1] += coeffs[i];
                next[i] -= rv * coeffs[i];
            }
            coeffs = std::move(next);
        }
        for (int i = 0; i < n; ++i) m[i][a - 1] = coeffs[i];
    }
    return poly_det(m, vars);
}

MultiPoly sym_as4() { return sym_numerator(4, asdet::Variant::observer); }

MultiPoly sym_b4() {
    const VarList vars = t_vars(4);
    MultiPoly prod = MultiPoly::constant(vars, 1);
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b) {
            const MultiPoly f = MultiPoly::variable(vars, "t" + std::to_string(b) + std::to_string(a)) -
                                MultiPoly::variable(vars, "t" + std::to_string(a) + std::to_string(b));
            prod = prod * f;
        }
    return prod;
}

std::vector<Rational> LinearSubstitution::apply_forward(std::span<const Rational> t_values) const {
    const std::size_t m = sources.size();
    if (t_values.size() != m) throw Error("wrong arity for substitution");
    std::vector<Rational> y(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (forward[i][j] != 0) y[i] += forward[i][j] * t_values[j];
    return y;
}

std::vector<Rational> LinearSubstitution::apply_inverse(std::span<const Rational> y_values) const {
    const std::size_t m = targets.size();
    if (y_values.size() != m) throw Error("wrong arity for substitution");
    std::vector<Rational> t(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (inverse[i][j] != 0) t[i] += inverse[i][j] * y_values[j];
    return t;
}

LinearSubstitution build_substitution(const std::vector<std::string>& order) {
    LinearSubstitution s;
    s.sources = order;
    std::sort(s.sources.begin(), s.sources.end());  // canonical lex source order
    const std::size_t m = order.size();
    {
        // `order` must be a permutation of the sources
        std::vector<std::string> check = s.sources;
        std::vector<std::string> given = order;
        std::sort(given.begin(), given.end());
        if (given != check || std::adjacent_find(given.begin(), given.end()) != given.end())
            throw Error("ordering is not a permutation of distinct variable names");
    }
    auto src_index = [&](const std::string& name) {
        const auto it = std::lower_bound(s.sources.begin(), s.sources.end(), name);
        return static_cast<std::size_t>(it - s.sources.begin());
    };
    s.targets.reserve(m);
    for (std::size_t k = 0; k < m; ++k) s.targets.push_back("y" + std::to_string(k));
    s.forward.assign(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t j = 0; j < m; ++j) s.forward[0][j] = 1;  // y0 = sum of all sources
    for (std::size_t k = 1; k < m; ++k) {
        s.forward[k][src_index(order[k])] = 1;
        s.forward[k][src_index(order[k - 1])] = -1;
    }
    s.inverse = exact::invert_matrix(s.forward);
    return s;
}

MultiPoly change_vars(const MultiPoly& p, const LinearSubstitution& s) {
    const std::size_t m = s.sources.size();
    // combined universe: sources first, then targets
    std::vector<std::string> combined = s.sources;
    combined.insert(combined.end(), s.targets.begin(), s.targets.end());
    const VarList cvars = make_vars(std::move(combined));

    std::vector<int> embed(p.n_vars());
    for (int i = 0; i < p.n_vars(); ++i) {
        const auto it = std::find(s.sources.begin(), s.sources.end(), (*p.vars())[i]);
        if (it == s.sources.end() && p.depends_on(i))
            throw Error("polynomial variable " + (*p.vars())[i] + " not in the substitution");
        embed[i] = it == s.sources.end() ? -1 : static_cast<int>(it - s.sources.begin());
    }
    MultiPoly work = p.mapped_vars(cvars, embed);

    for (std::size_t i = 0; i < m; ++i) {
        if (!work.depends_on(static_cast<int>(i))) continue;
        MultiPoly image(cvars);
        ExpKey k;
        for (std::size_t j = 0; j < m; ++j) {
            if (s.inverse[i][j] == 0) continue;
            k = ExpKey{};
            k.set(static_cast<int>(m + j), 1);
            image.add_term(k, s.inverse[i][j]);
        }
        work = work.substituted(static_cast<int>(i), image);
    }

    const VarList yvars = make_vars(s.targets);
    std::vector<int> project(cvars->size(), -1);
    for (std::size_t j = 0; j < m; ++j) project[m + j] = static_cast<int>(j);
    return work.mapped_vars(yvars, project);
}

std::string to_string(Ordering o) { return o == Ordering::thm1 ? "thm1" : "zhangma"; }

Ordering parse_ordering(const std::string& s) {
    if (s == "thm1") return Ordering::thm1;
    if (s == "zhangma") return Ordering::zhangma;
    throw ParseError("unknown ordering: " + s);
}

const std::vector<std::string>& ordering_directions(Ordering o) {
    static const std::vector<std::string> thm1 = {"t21", "t31", "t41", "t32", "t42", "t12",
                                                  "t43", "t13", "t23", "t14", "t24", "t34"};
    static const std::vector<std::string> zhangma = {"t13", "t23", "t21", "t24", "t14", "t34",
                                                     "t31", "t32", "t12", "t42", "t41", "t43"};
    return o == Ordering::thm1 ? thm1 : zhangma;
}

namespace {

Certificate make_certificate(Ordering ordering, const std::string& name, const MultiPoly& py) {
    Certificate c;
    c.ordering = to_string(ordering);
    c.direction_order = ordering_directions(ordering);
    c.polynomial = name;
    c.y0_free = !py.depends_on(py.var_index("y0"));
    const auto census = py.census();
    c.n_pos = census.n_pos;
    c.n_neg = census.n_neg;
    c.n_zero = census.n_zero;
    c.uniform_sign = census.uniform_sign;
    c.n_monomials = census.n_monomials;
    return c;
}

/// Monomials violating the expectation (minority sign, or y0-bearing), capped.
std::vector<std::string> offenders(const MultiPoly& py, bool expect_uniform, int expected_sign,
                                   bool expect_y0_free) {
    std::vector<std::string> out;
    constexpr std::size_t cap = 10;
    const int y0 = py.var_index("y0");
    for (const auto& t : py.canonical_terms()) {
        const int sgn = t.coeff > 0 ? 1 : -1;
        const bool bad_sign = expect_uniform && expected_sign != 0 && sgn != expected_sign;
        const bool bad_y0 = expect_y0_free && y0 >= 0 && t.exponents[y0] > 0;
        if (bad_sign || bad_y0) {
            out.push_back(py.term_to_string(t));
            if (out.size() >= cap) break;
        }
    }
    return out;
}

}  // namespace

std::vector<Certificate> certify(Ordering ordering) {
    const LinearSubstitution sub = build_substitution(ordering_directions(ordering));
    const MultiPoly as4 = sym_as4();
    const MultiPoly b4 = sym_b4();
    const MultiPoly as4y = change_vars(as4, sub);
    const MultiPoly b4y = change_vars(b4, sub);
    const MultiPoly deltay = as4y - b4y;

    Certificate cas = make_certificate(ordering, "AS4", as4y);
    Certificate cb = make_certificate(ordering, "B4", b4y);
    Certificate cd = make_certificate(ordering, "delta4", deltay);

    // Expected pattern. The common-sign criterion (rather than a literal
    // "positive"/"negative") absorbs the bracket-orientation convention; the
    // inequalities D >= 1 and D > 0 only need sign agreement.
    const bool common = cas.uniform_sign != 0 && cas.uniform_sign == cb.uniform_sign;
    const bool delta_expect_uniform = ordering == Ordering::thm1;

    cas.verdict = (cas.y0_free && common) ? "pass" : "fail";
    cb.verdict = (cb.y0_free && common) ? "pass" : "fail";
    if (delta_expect_uniform)
        cd.verdict = (cd.y0_free && cd.uniform_sign == cas.uniform_sign && common) ? "pass" : "fail";
    else
        cd.verdict = (cd.y0_free && cd.uniform_sign == 0) ? "pass" : "fail";

    if (cas.verdict == "fail")
        cas.offending_monomials = offenders(as4y, true, cb.uniform_sign, true);
    if (cb.verdict == "fail")
        cb.offending_monomials = offenders(b4y, true, cas.uniform_sign, true);
    if (cd.verdict == "fail")
        cd.offending_monomials = offenders(deltay, delta_expect_uniform, cas.uniform_sign, true);

    return {cas, cb, cd};
}

void ensure_certificates(const std::vector<Certificate>& certs) {
    for (const auto& c : certs) {
        if (c.verdict == "pass") continue;
        std::string msg = "certificate " + c.ordering + "/" + c.polynomial +
                          " failed (pos=" + std::to_string(c.n_pos) +
                          ", neg=" + std::to_string(c.n_neg) +
                          ", y0_free=" + (c.y0_free ? "true" : "false") + ")";
        if (!c.offending_monomials.empty()) {
            msg += "; offending monomials:";
            for (const auto& m : c.offending_monomials) msg += " " + m;
        }
        throw CertificateFailed(msg);
    }
}

}  // namespace ashyp::sym
