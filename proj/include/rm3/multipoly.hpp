#ifndef RM3_MULTIPOLY_HPP_
#define RM3_MULTIPOLY_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "rm3/errors.hpp"
#include "rm3/rational.hpp"

namespace rm3 {

using ExpVec = std::vector<uint32_t>;

inline uint64_t total_degree(const ExpVec& e) {
    return std::accumulate(e.begin(), e.end(), uint64_t{0});
}

// Graded lexicographic order: lower total degree first, ties broken
// lexicographically with earlier variables more significant.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        uint64_t da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        for (size_t i = 0; i < a.size() && i < b.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return a.size() < b.size();
    }
};

/// Sparse multivariate polynomial with exact rational coefficients over an
/// ordered variable list. No zero terms are stored; equality is term-set
/// equality. Arithmetic requires identical variable lists, except that a
/// constant polynomial combines with any list.
class MultiPoly {
  public:
    using TermMap = std::map<ExpVec, Rational, GradedLexLess>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    MultiPoly(std::vector<std::string> vars, const Rational& c) : vars_(std::move(vars)) {
        if (!c.is_zero()) terms_[ExpVec(vars_.size(), 0)] = c;
    }

    static MultiPoly constant(std::vector<std::string> vars, const Rational& c) {
        return MultiPoly(std::move(vars), c);
    }

    static MultiPoly variable(std::vector<std::string> vars, const std::string& name) {
        MultiPoly p(std::move(vars));
        auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
        if (it == p.vars_.end()) throw input_error("unknown variable '" + name + "'");
        ExpVec e(p.vars_.size(), 0);
        e[static_cast<size_t>(it - p.vars_.begin())] = 1;
        p.terms_[e] = Rational(1);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw input_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    size_t var_index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw input_error("variable '" + name + "' not in list");
        return static_cast<size_t>(it - vars_.begin());
    }
    bool has_var(const std::string& name) const {
        return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
    }

    int64_t degree(size_t vi) const {
        int64_t d = -1;
        for (const auto& [e, c] : terms_) d = std::max<int64_t>(d, e[vi]);
        return d;  // -1 for the zero polynomial
    }
    int64_t degree(const std::string& name) const { return degree(var_index(name)); }
    int64_t total_deg() const {
        int64_t d = -1;
        for (const auto& [e, c] : terms_) d = std::max<int64_t>(d, static_cast<int64_t>(total_degree(e)));
        return d;
    }

    void add_term(const ExpVec& e, const Rational& c) {
        if (e.size() != vars_.size()) throw input_error("exponent vector length mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Leading term in graded-lex order.
    std::pair<ExpVec, Rational> leading_term() const {
        if (terms_.empty()) throw input_error("leading term of zero polynomial");
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }
    Rational leading_coeff() const { return leading_term().second; }

    MultiPoly operator-() const {
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        auto [a, b] = unify(*this, o);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        auto [a, b] = unify(*this, o);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        auto [a, b] = unify(*this, o);
        MultiPoly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    MultiPoly operator*(const Rational& c) const {
        MultiPoly r(vars_);
        if (c.is_zero()) return r;
        for (const auto& [e, cc] : terms_) r.terms_[e] = cc * c;
        return r;
    }
    MultiPoly operator/(const Rational& c) const { return *this * c.inv(); }

    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    bool operator==(const MultiPoly& o) const {
        if (vars_ == o.vars_) return terms_ == o.terms_;
        if (is_constant() && o.is_constant()) return constant_value() == o.constant_value();
        auto [a, b] = unify(*this, o);
        return a.terms_ == b.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(uint64_t e) const {
        MultiPoly r(vars_, Rational(1)), b(*this);
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /// Coefficient of v^k as a polynomial over the same variable list
    /// (with exponent of v zeroed).
    MultiPoly coeff_of(size_t vi, uint32_t k) const {
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[vi] == k) {
                ExpVec e2(e);
                e2[vi] = 0;
                r.add_term(e2, c);
            }
        }
        return r;
    }

    /// Exact substitution of rationals for a subset of variables; the result
    /// is over the remaining variables (possibly none).
    MultiPoly specialize(const std::vector<std::pair<std::string, Rational>>& bindings) const {
        std::vector<int> bound(vars_.size(), -1);
        for (size_t bi = 0; bi < bindings.size(); ++bi) bound[var_index(bindings[bi].first)] = static_cast<int>(bi);
        std::vector<std::string> rest;
        std::vector<size_t> keep;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (bound[i] < 0) {
                keep.push_back(i);
                rest.push_back(vars_[i]);
            }
        MultiPoly r(rest);
        for (const auto& [e, c] : terms_) {
            Rational cc = c;
            for (size_t i = 0; i < vars_.size(); ++i)
                if (bound[i] >= 0 && e[i] > 0) cc *= bindings[static_cast<size_t>(bound[i])].second.pow(e[i]);
            ExpVec e2(keep.size());
            for (size_t j = 0; j < keep.size(); ++j) e2[j] = e[keep[j]];
            r.add_term(e2, cc);
        }
        return r;
    }

    Rational evaluate(const std::vector<std::pair<std::string, Rational>>& bindings) const {
        return specialize(bindings).constant_value();
    }

    /// Substitutes a polynomial for one variable; the result is over the
    /// union variable list (value's variables joined to the remaining ones).
    MultiPoly substitute(const std::string& name, const MultiPoly& value) const {
        size_t vi = var_index(name);
        std::vector<std::string> out_vars;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (i != vi) out_vars.push_back(vars_[i]);
        for (const auto& v : value.vars())
            if (std::find(out_vars.begin(), out_vars.end(), v) == out_vars.end()) out_vars.push_back(v);
        MultiPoly val = value.lift_to(out_vars);
        // Horner over descending powers of the substituted variable.
        int64_t d = degree(vi);
        if (d < 0) return MultiPoly(out_vars);
        MultiPoly acc(out_vars);
        for (int64_t k = d; k >= 0; --k) {
            if (k != d) acc = acc * val;
            MultiPoly ck = coeff_of(vi, static_cast<uint32_t>(k)).drop_var(vi).lift_to(out_vars);
            acc += ck;
        }
        return acc;
    }

    /// Reinterprets over a superset variable list (order may differ).
    MultiPoly lift_to(const std::vector<std::string>& new_vars) const {
        std::vector<size_t> pos(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
            if (it == new_vars.end()) {
                if (degree(i) > 0) throw input_error("lift drops live variable '" + vars_[i] + "'");
                pos[i] = SIZE_MAX;
            } else {
                pos[i] = static_cast<size_t>(it - new_vars.begin());
            }
        }
        MultiPoly r(new_vars);
        for (const auto& [e, c] : terms_) {
            ExpVec e2(new_vars.size(), 0);
            for (size_t i = 0; i < vars_.size(); ++i)
                if (e[i] > 0) e2[pos[i]] = e[i];
            r.add_term(e2, c);
        }
        return r;
    }

    MultiPoly drop_var(size_t vi) const {
        if (degree(vi) > 0) throw input_error("dropping live variable");
        std::vector<std::string> rest;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (i != vi) rest.push_back(vars_[i]);
        MultiPoly r(rest);
        for (const auto& [e, c] : terms_) {
            ExpVec e2;
            e2.reserve(rest.size());
            for (size_t i = 0; i < vars_.size(); ++i)
                if (i != vi) e2.push_back(e[i]);
            r.add_term(e2, c);
        }
        return r;
    }

    /// Rational content: gcd(numerators)/lcm(denominators), with the sign of
    /// the leading coefficient. Zero for the zero polynomial.
    Rational content() const {
        if (terms_.empty()) return Rational(0);
        Rational g(0);
        for (const auto& [e, c] : terms_) g = rm3::gcd(g, c);
        if (leading_coeff().sign() < 0) g = -g;
        return g;
    }

    MultiPoly primitive_part() const {
        if (is_zero()) return *this;
        return *this / content();
    }

    friend std::pair<MultiPoly, MultiPoly> unify(const MultiPoly& a, const MultiPoly& b) {
        if (a.vars_ == b.vars_) return {a, b};
        if (a.is_constant()) return {MultiPoly(b.vars_, a.constant_value()), b};
        if (b.is_constant()) return {a, MultiPoly(a.vars_, b.constant_value())};
        throw input_error("mismatched variable lists");
    }

  private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Exact multivariate division; throws if the division is not exact.
inline MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw input_error("exact division by zero polynomial");
    auto [f0, d] = unify(a, b);
    MultiPoly f = f0;
    MultiPoly q(f.vars());
    auto [eb, cb] = d.leading_term();
    while (!f.is_zero()) {
        auto [ef, cf] = f.leading_term();
        ExpVec eq(ef.size());
        for (size_t i = 0; i < ef.size(); ++i) {
            if (ef[i] < eb[i]) throw input_error("inexact polynomial division");
            eq[i] = ef[i] - eb[i];
        }
        Rational cq = cf / cb;
        MultiPoly t(f.vars());
        t.add_term(eq, cq);
        q += t;
        f -= t * d;
    }
    return q;
}

namespace detail {

// lc(b)^(deg a - deg b + 1) * a = q*b + prem; returns prem w.r.t. variable vi.
inline MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, size_t vi) {
    int64_t db = b.degree(vi);
    MultiPoly lcb = b.coeff_of(vi, static_cast<uint32_t>(db));
    MultiPoly r = a;
    int64_t e = a.degree(vi) - db + 1;
    MultiPoly v = MultiPoly::variable(a.vars(), a.vars()[vi]);
    while (!r.is_zero() && r.degree(vi) >= db) {
        int64_t dr = r.degree(vi);
        MultiPoly lcr = r.coeff_of(vi, static_cast<uint32_t>(dr));
        r = r * lcb - lcr * v.pow(static_cast<uint64_t>(dr - db)) * b;
        --e;
    }
    for (; e > 0; --e) r = r * lcb;
    return r;
}

// gcd over Q in variable vi of primitive inputs, via the subresultant PRS.
inline MultiPoly prs_gcd_primitive(MultiPoly a, MultiPoly b, size_t vi,
                                   MultiPoly (*content_in)(const MultiPoly&, size_t),
                                   const MultiPoly& one) {
    if (a.degree(vi) < b.degree(vi)) std::swap(a, b);
    MultiPoly g = one, h = one;
    while (true) {
        int64_t delta = a.degree(vi) - b.degree(vi);
        MultiPoly r = pseudo_rem(a, b, vi);
        if (r.is_zero()) break;
        if (r.degree(vi) == 0) return one;
        a = b;
        MultiPoly div = g;
        for (int64_t i = 0; i < delta; ++i) div = div * h;
        b = exact_div(r, div);
        g = a.coeff_of(vi, static_cast<uint32_t>(a.degree(vi)));
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            MultiPoly num = one;
            for (int64_t i = 0; i < delta; ++i) num = num * g;
            MultiPoly den = one;
            for (int64_t i = 0; i + 1 < delta; ++i) den = den * h;
            h = exact_div(num, den);
        }
    }
    // b is a gcd up to content in vi; strip it.
    MultiPoly c = content_in(b, vi);
    return exact_div(b, c);
}

}  // namespace detail

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

namespace detail {
// Content of f with respect to variable vi: gcd of its v-coefficients.
inline MultiPoly content_in(const MultiPoly& f, size_t vi) {
    MultiPoly c(f.vars());
    int64_t d = f.degree(vi);
    for (int64_t k = d; k >= 0; --k) {
        MultiPoly ck = f.coeff_of(vi, static_cast<uint32_t>(k));
        if (ck.is_zero()) continue;
        c = poly_gcd(c, ck);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}
}  // namespace detail

/// GCD normalized to content 1 and positive leading coefficient;
/// poly_gcd(0,0) = 0.
inline MultiPoly poly_gcd(const MultiPoly& a0, const MultiPoly& b0) {
    auto [a, b] = unify(a0, b0);
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return MultiPoly(a.vars(), Rational(1));

    // Main variable: last variable live in either operand.
    size_t vi = 0;
    bool found = false;
    for (size_t i = a.vars().size(); i-- > 0;) {
        if (a.degree(i) > 0 || b.degree(i) > 0) {
            vi = i;
            found = true;
            break;
        }
    }
    if (!found) return MultiPoly(a.vars(), Rational(1));

    if (a.degree(vi) == 0 || b.degree(vi) == 0) {
        // One operand is free of the main variable: gcd divides the other's
        // content in vi.
        MultiPoly ca = a.degree(vi) == 0 ? a : detail::content_in(a, vi);
        MultiPoly cb = b.degree(vi) == 0 ? b : detail::content_in(b, vi);
        return poly_gcd(ca, cb);
    }

    MultiPoly ca = detail::content_in(a, vi);
    MultiPoly cb = detail::content_in(b, vi);
    MultiPoly cg = poly_gcd(ca, cb);
    MultiPoly pa = exact_div(a, ca);
    MultiPoly pb = exact_div(b, cb);
    MultiPoly one(a.vars(), Rational(1));
    MultiPoly g = detail::prs_gcd_primitive(pa, pb, vi, &detail::content_in, one);
    MultiPoly r = g * cg;
    return r.primitive_part();
}

/// Three-way arithmetic entry point matching the library's operation table.
enum class PolyOp { add, sub, mul };
inline MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
    }
    throw input_error("bad op");
}

}  // namespace rm3

#endif  // RM3_MULTIPOLY_HPP_
