#include "ashyp/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace ashyp::sym {

VarList make_vars(std::vector<std::string> names) {
    if (names.size() > static_cast<std::size_t>(ExpKey::kMaxVars))
        throw Error("variable universe exceeds " + std::to_string(ExpKey::kMaxVars));
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

MultiPoly::MultiPoly(VarList vars) : vars_(std::move(vars)) {
    if (!vars_) throw Error("null variable list");
}

MultiPoly MultiPoly::constant(VarList vars, Rational c) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_.emplace(ExpKey{}, std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(VarList vars, std::string_view name) {
    MultiPoly probe(vars);
    const int idx = probe.var_index(name);
    if (idx < 0) throw Error("unknown variable: " + std::string(name));
    return variable(std::move(vars), idx);
}

MultiPoly MultiPoly::variable(VarList vars, int index) {
    MultiPoly p(std::move(vars));
    ExpKey k;
    k.set(index, 1);
    p.terms_.emplace(k, Rational(1));
    return p;
}

int MultiPoly::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_->size(); ++i)
        if ((*vars_)[i] == name) return static_cast<int>(i);
    return -1;
}

int MultiPoly::total_degree() const {
    int deg = 0;
    for (const auto& [k, c] : terms_) {
        int d = 0;
        for (int i = 0; i < n_vars(); ++i) d += static_cast<int>(k.get(i));
        deg = std::max(deg, d);
    }
    return deg;
}

unsigned MultiPoly::degree_in(int var) const {
    unsigned deg = 0;
    for (const auto& [k, c] : terms_) deg = std::max(deg, k.get(var));
    return deg;
}

void MultiPoly::add_term(const ExpKey& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

static void check_same_vars(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars() != b.vars() && *a.vars() != *b.vars())
        throw Error("operands live on different variable lists");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_vars(*this, o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_vars(*this, o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_vars(*this, o);
    MultiPoly r(vars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) r.add_term(ka.plus(kb), ca * cb);
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(vars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [k, coeff] : terms_) r.terms_.emplace(k, coeff * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = constant(vars_, 1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (vars_ != o.vars_ && *vars_ != *o.vars_) return false;
    return terms_ == o.terms_;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
    if (point.size() != vars_->size()) throw Error("evaluation point has wrong arity");
    // power tables per variable, up to the max exponent actually used
    std::vector<std::vector<Rational>> pw(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        const unsigned d = degree_in(static_cast<int>(i));
        pw[i].resize(d + 1);
        pw[i][0] = 1;
        for (unsigned e = 1; e <= d; ++e) pw[i][e] = pw[i][e - 1] * point[i];
    }
    Rational sum = 0;
    for (const auto& [k, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            const unsigned e = k.get(static_cast<int>(i));
            if (e > 0) term *= pw[i][e];
        }
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::substituted(int var, const MultiPoly& image) const {
    check_same_vars(*this, image);
    const unsigned dmax = degree_in(var);
    if (dmax == 0) return *this;
    // split off the substituted variable, then recombine against image powers
    std::vector<MultiPoly> by_degree(dmax + 1, MultiPoly(vars_));
    for (const auto& [k, c] : terms_) {
        const unsigned d = k.get(var);
        ExpKey rest = k;
        rest.set(var, 0);
        by_degree[d].add_term(rest, c);
    }
    MultiPoly result = by_degree[0];
    MultiPoly power = constant(vars_, 1);
    for (unsigned d = 1; d <= dmax; ++d) {
        power = power * image;
        if (!by_degree[d].is_zero()) result += by_degree[d] * power;
    }
    return result;
}

MultiPoly MultiPoly::mapped_vars(VarList target, std::span<const int> index_map) const {
    if (index_map.size() != vars_->size()) throw Error("index map has wrong arity");
    MultiPoly r(std::move(target));
    for (const auto& [k, c] : terms_) {
        ExpKey nk;
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            const unsigned e = k.get(static_cast<int>(i));
            if (e == 0) continue;
            if (index_map[i] < 0)
                throw Error("variable " + (*vars_)[i] + " has no image in the target list");
            nk.set(index_map[i], e);
        }
        r.add_term(nk, c);
    }
    return r;
}

std::vector<MultiPoly::Term> MultiPoly::canonical_terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    const int nv = n_vars();
    for (const auto& [k, c] : terms_) {
        Term t;
        t.exponents.resize(nv);
        for (int i = 0; i < nv; ++i) t.exponents[i] = k.get(i);
        t.coeff = c;
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
        unsigned da = 0, db = 0;
        for (unsigned e : a.exponents) da += e;
        for (unsigned e : b.exponents) db += e;
        if (da != db) return da > db;
        return a.exponents > b.exponents;  // lex, leading term first
    });
    return out;
}

std::string MultiPoly::term_to_string(const Term& t) const {
    std::ostringstream os;
    os << exact::to_fraction_string(t.coeff);
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
        if (t.exponents[i] == 0) continue;
        os << "*" << (*vars_)[i];
        if (t.exponents[i] > 1) os << "^" << t.exponents[i];
    }
    return os.str();
}

MultiPoly::Census MultiPoly::census() const {
    Census c;
    for (const auto& [k, coeff] : terms_) {
        if (coeff > 0)
            ++c.n_pos;
        else
            ++c.n_neg;
    }
    c.n_monomials = terms_.size();
    if (c.n_monomials == 0)
        c.uniform_sign = 0;
    else if (c.n_neg == 0)
        c.uniform_sign = 1;
    else if (c.n_pos == 0)
        c.uniform_sign = -1;
    else
        c.uniform_sign = 0;
    return c;
}

}  // namespace ashyp::sym
