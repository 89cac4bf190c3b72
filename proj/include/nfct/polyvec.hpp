#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nfct/errors.hpp"
#include "nfct/matrix.hpp"
#include "nfct/rational.hpp"

namespace nfct {

/// Multi-index of exponents, one per variable.
using Exponents = std::vector<int>;

inline int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Term order: total degree ascending, then exponent vectors lexicographically
/// descending. Within one graded slice this is plain descending lex.
struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const int da = degree_of(a), db = degree_of(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

/// Label of one basis term x^alpha e_i of a graded slice.
struct TermIndex {
    size_t component = 0; // 0-based; rendered and serialized 1-based
    Exponents exponents;

    int degree() const { return degree_of(exponents); }

    friend bool operator==(const TermIndex& a, const TermIndex& b) {
        return a.component == b.component && a.exponents == b.exponents;
    }
    friend bool operator<(const TermIndex& a, const TermIndex& b) {
        if (a.component != b.component) return a.component < b.component;
        return TermOrder{}(a.exponents, b.exponents);
    }
};

/// Scalar polynomial in n variables with exact coefficients. Not necessarily
/// homogeneous; the graded types below maintain homogeneity on top of it.
class Poly {
public:
    explicit Poly(size_t n) : n_(n) {}

    static Poly constant(size_t n, const Rational& c) {
        Poly p(n);
        p.add_term(Exponents(n, 0), c);
        return p;
    }

    static Poly variable(size_t n, size_t j) {
        Poly p(n);
        Exponents e(n, 0);
        e[j] = 1;
        p.add_term(e, 1);
        return p;
    }

    static Poly monomial(size_t n, Exponents e, const Rational& c) {
        Poly p(n);
        p.add_term(std::move(e), c);
        return p;
    }

    size_t nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }

    /// Highest term degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
        return d;
    }

    /// Lowest term degree; only meaningful for nonzero polynomials.
    int low_degree() const {
        if (terms_.empty()) return -1;
        return degree_of(terms_.begin()->first); // map is ordered by degree first
    }

    bool is_homogeneous(int k) const {
        for (const auto& [e, c] : terms_)
            if (degree_of(e) != k) return false;
        return true;
    }

    const std::map<Exponents, Rational, TermOrder>& terms() const { return terms_; }

    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(Exponents e, const Rational& c) {
        if (e.size() != n_) throw DimensionMismatch("exponent list length != variable count");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(std::move(e), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [e, c] : terms_) c *= s;
        }
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator-(Poly a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend Poly operator*(Poly a, const Rational& s) { a *= s; return a; }
    friend Poly operator*(const Rational& s, Poly a) { a *= s; return a; }

    friend Poly operator*(const Poly& a, const Poly& b) { return mul_trunc(a, b, -1); }

    /// Product with every term above max_deg discarded (max_deg < 0: keep all).
    friend Poly mul_trunc(const Poly& a, const Poly& b, int max_deg) {
        a.check_vars(b);
        Poly r(a.n_);
        for (const auto& [ea, ca] : a.terms_) {
            const int da = degree_of(ea);
            if (max_deg >= 0 && da > max_deg) continue;
            for (const auto& [eb, cb] : b.terms_) {
                if (max_deg >= 0 && da + degree_of(eb) > max_deg) continue;
                Exponents e(a.n_);
                for (size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }

    Poly derivative(size_t var) const {
        Poly r(n_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d = e;
            d[var] -= 1;
            r.add_term(std::move(d), c * Rational(e[var]));
        }
        return r;
    }

    Poly truncated(int max_deg) const {
        Poly r(n_);
        for (const auto& [e, c] : terms_)
            if (degree_of(e) <= max_deg) r.add_term(e, c);
        return r;
    }

    Poly graded_part(int k) const {
        Poly r(n_);
        for (const auto& [e, c] : terms_)
            if (degree_of(e) == k) r.add_term(e, c);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void check_vars(const Poly& o) const {
        if (n_ != o.n_) throw DimensionMismatch("polynomials over different variable counts");
    }

    size_t n_;
    std::map<Exponents, Rational, TermOrder> terms_;
};

/// Substitute x_j -> repl[j] into p, truncating every product at max_deg
/// (max_deg < 0: no truncation). Powers of each replacement are cached.
inline Poly substitute(const Poly& p, const std::vector<Poly>& repl, int max_deg) {
    const size_t n = p.nvars();
    if (repl.size() != n) throw DimensionMismatch("substitute: replacement count != variable count");
    std::vector<std::vector<Poly>> powers(n);
    auto power = [&](size_t j, int e) -> const Poly& {
        auto& cache = powers[j];
        if (cache.empty()) cache.push_back(Poly::constant(repl[j].nvars(), 1));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(mul_trunc(cache.back(), repl[j], max_deg));
        return cache[static_cast<size_t>(e)];
    };
    const size_t out_vars = n == 0 ? 0 : repl[0].nvars();
    Poly result(out_vars);
    for (const auto& [e, c] : p.terms()) {
        Poly acc = Poly::constant(out_vars, c);
        for (size_t j = 0; j < n && !acc.is_zero(); ++j)
            if (e[j] > 0) acc = mul_trunc(acc, power(j, e[j]), max_deg);
        result += acc;
    }
    return result;
}

/// Homogeneous polynomial vector field of one fixed degree: an element of the
/// graded slice P_V^k.
class HomogeneousVF {
public:
    HomogeneousVF(size_t n, int degree) : n_(n), degree_(degree), comps_(n, Poly(n)) {
        if (n == 0) throw DimensionMismatch("vector field needs at least one variable");
        if (degree < 0) throw DegreeError("vector field degree must be nonnegative");
    }

    static HomogeneousVF from_components(std::vector<Poly> comps, int degree) {
        if (comps.empty()) throw DimensionMismatch("vector field needs at least one variable");
        HomogeneousVF f(comps.size(), degree);
        for (size_t i = 0; i < comps.size(); ++i) {
            if (comps[i].nvars() != comps.size())
                throw DimensionMismatch("component variable count != component count");
            if (!comps[i].is_homogeneous(degree))
                throw SliceMismatch("component is not homogeneous of the slice degree");
            f.comps_[i] = std::move(comps[i]);
        }
        return f;
    }

    /// The linear field x -> Lx.
    static HomogeneousVF linear(const RatMatrix& m) {
        if (!m.is_square()) throw DimensionMismatch("linear part must be square");
        HomogeneousVF f(m.rows(), 1);
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) {
                if (m(i, j).is_zero()) continue;
                Exponents e(m.rows(), 0);
                e[j] = 1;
                f.comps_[i].add_term(std::move(e), m(i, j));
            }
        return f;
    }

    size_t nvars() const { return n_; }
    int degree() const { return degree_; }
    const Poly& component(size_t i) const { return comps_[i]; }
    const std::vector<Poly>& components() const { return comps_; }

    bool is_zero() const {
        return std::all_of(comps_.begin(), comps_.end(), [](const Poly& p) { return p.is_zero(); });
    }

    void add_term(const TermIndex& t, const Rational& c) { add_term(t.component, t.exponents, c); }

    void add_term(size_t component, Exponents e, const Rational& c) {
        if (component >= n_) throw DimensionMismatch("component index out of range");
        if (degree_of(e) != degree_) throw SliceMismatch("term degree != slice degree");
        comps_[component].add_term(std::move(e), c);
    }

    Rational coefficient(const TermIndex& t) const {
        if (t.component >= n_) throw DimensionMismatch("component index out of range");
        return comps_[t.component].coefficient(t.exponents);
    }

    HomogeneousVF& operator+=(const HomogeneousVF& o) {
        check_slice(o);
        for (size_t i = 0; i < n_; ++i) comps_[i] += o.comps_[i];
        return *this;
    }
    HomogeneousVF& operator-=(const HomogeneousVF& o) {
        check_slice(o);
        for (size_t i = 0; i < n_; ++i) comps_[i] -= o.comps_[i];
        return *this;
    }
    HomogeneousVF& operator*=(const Rational& s) {
        for (auto& p : comps_) p *= s;
        return *this;
    }
    friend HomogeneousVF operator+(HomogeneousVF a, const HomogeneousVF& b) { a += b; return a; }
    friend HomogeneousVF operator-(HomogeneousVF a, const HomogeneousVF& b) { a -= b; return a; }
    friend HomogeneousVF operator*(const Rational& s, HomogeneousVF a) { a *= s; return a; }
    friend HomogeneousVF operator-(HomogeneousVF a) {
        for (auto& p : a.comps_) p = -p;
        return a;
    }

    friend bool operator==(const HomogeneousVF& a, const HomogeneousVF& b) {
        return a.n_ == b.n_ && a.degree_ == b.degree_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const HomogeneousVF& a, const HomogeneousVF& b) { return !(a == b); }

private:
    void check_slice(const HomogeneousVF& o) const {
        if (n_ != o.n_ || degree_ != o.degree_) throw SliceMismatch("vector fields live in different slices");
    }

    size_t n_;
    int degree_;
    std::vector<Poly> comps_;
};

/// Jet of a vector field: graded parts for degrees 1..max_degree, all higher
/// terms truncated away. Constant parts are rejected; every germ fixes 0.
class TruncatedVF {
public:
    TruncatedVF(size_t n, int max_degree) : n_(n), max_degree_(max_degree) {
        if (n == 0) throw DimensionMismatch("vector field needs at least one variable");
        if (max_degree < 1) throw DegreeError("truncation degree must be at least 1");
    }

    static TruncatedVF from_linear(const RatMatrix& m, int max_degree) {
        TruncatedVF f(m.rows(), max_degree);
        f.set_part(HomogeneousVF::linear(m));
        return f;
    }

    static TruncatedVF from_components(size_t n, const std::vector<Poly>& comps, int max_degree) {
        TruncatedVF f(n, max_degree);
        if (comps.size() != n) throw DimensionMismatch("component count mismatch");
        for (size_t i = 0; i < n; ++i)
            for (const auto& [e, c] : comps[i].terms()) {
                const int d = degree_of(e);
                if (d == 0) throw NonzeroConstant("vector field has a constant term");
                if (d > max_degree) continue; // truncated eagerly
                f.ensure_part(d).add_term(i, e, c);
            }
        f.prune();
        return f;
    }

    size_t nvars() const { return n_; }
    int max_degree() const { return max_degree_; }
    const std::map<int, HomogeneousVF>& parts() const { return parts_; }

    HomogeneousVF part(int k) const {
        if (k < 1) throw DegreeError("graded parts start at degree 1");
        auto it = parts_.find(k);
        return it == parts_.end() ? HomogeneousVF(n_, k) : it->second;
    }

    void set_part(const HomogeneousVF& p) {
        check_part(p);
        if (p.is_zero())
            parts_.erase(p.degree());
        else
            parts_.insert_or_assign(p.degree(), p);
    }

    void add_part(const HomogeneousVF& p) {
        check_part(p);
        if (p.is_zero()) return;
        auto it = parts_.find(p.degree());
        if (it == parts_.end()) {
            parts_.emplace(p.degree(), p);
        } else {
            it->second += p;
            if (it->second.is_zero()) parts_.erase(it);
        }
    }

    void add_term(size_t component, Exponents e, const Rational& c) {
        const int d = degree_of(e);
        if (d == 0) throw NonzeroConstant("vector field has a constant term");
        if (d < 1 || d > max_degree_) throw DegreeError("term degree outside 1..max_degree");
        ensure_part(d).add_term(component, std::move(e), c);
        prune();
    }

    /// Matrix of the degree-1 part (zero matrix when absent).
    RatMatrix linear_matrix() const {
        RatMatrix m(n_, n_);
        auto it = parts_.find(1);
        if (it == parts_.end()) return m;
        for (size_t i = 0; i < n_; ++i)
            for (const auto& [e, c] : it->second.component(i).terms())
                for (size_t j = 0; j < n_; ++j)
                    if (e[j] == 1) m(i, j) = c;
        return m;
    }

    /// Components assembled across all degrees.
    std::vector<Poly> components() const {
        std::vector<Poly> comps(n_, Poly(n_));
        for (const auto& [d, p] : parts_)
            for (size_t i = 0; i < n_; ++i) comps[i] += p.component(i);
        return comps;
    }

    /// The k-jet: parts above k dropped, truncation degree k.
    TruncatedVF truncated_to(int k) const {
        TruncatedVF f(n_, k);
        for (const auto& [d, p] : parts_)
            if (d <= k) f.parts_.emplace(d, p);
        return f;
    }

    /// Same field viewed with truncation degree N (parts above N dropped).
    TruncatedVF with_max_degree(int N) const { return truncated_to(N); }

    bool is_zero() const { return parts_.empty(); }

    friend bool operator==(const TruncatedVF& a, const TruncatedVF& b) {
        return a.n_ == b.n_ && a.max_degree_ == b.max_degree_ && a.parts_ == b.parts_;
    }
    friend bool operator!=(const TruncatedVF& a, const TruncatedVF& b) { return !(a == b); }

private:
    void check_part(const HomogeneousVF& p) const {
        if (p.nvars() != n_) throw DimensionMismatch("part variable count mismatch");
        if (p.degree() == 0) throw NonzeroConstant("vector field has a constant part");
        if (p.degree() < 1 || p.degree() > max_degree_) throw DegreeError("part degree outside 1..max_degree");
    }

    HomogeneousVF& ensure_part(int d) {
        auto it = parts_.find(d);
        if (it == parts_.end()) it = parts_.emplace(d, HomogeneousVF(n_, d)).first;
        return it->second;
    }

    void prune() {
        for (auto it = parts_.begin(); it != parts_.end();)
            it = it->second.is_zero() ? parts_.erase(it) : std::next(it);
    }

    size_t n_;
    int max_degree_;
    std::map<int, HomogeneousVF> parts_;
};

/// Ordered monomial basis of the slice P_V^k: component index ascending, then
/// exponent vectors in descending lex order. Length n * C(n+k-1, k).
class SliceBasis {
public:
    SliceBasis(size_t n, int degree) : n_(n), degree_(degree) {
        if (n < 1) throw DimensionMismatch("slice basis needs at least one variable");
        if (degree < 0) throw DegreeError("slice degree must be nonnegative");
        std::vector<Exponents> exps;
        Exponents cur(n, 0);
        enumerate(0, degree, cur, exps);
        terms_.reserve(n * exps.size());
        for (size_t comp = 0; comp < n; ++comp)
            for (const auto& e : exps) terms_.push_back(TermIndex{comp, e});
        for (size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], i);
    }

    size_t n() const { return n_; }
    int degree() const { return degree_; }
    size_t size() const { return terms_.size(); }
    const std::vector<TermIndex>& terms() const { return terms_; }
    const TermIndex& term(size_t i) const { return terms_[i]; }

    size_t index_of(const TermIndex& t) const {
        auto it = index_.find(t);
        if (it == index_.end()) throw SliceMismatch("term does not belong to this slice");
        return it->second;
    }

private:
    void enumerate(size_t pos, int remaining, Exponents& cur, std::vector<Exponents>& out) const {
        if (pos + 1 == n_) {
            cur[pos] = remaining;
            out.push_back(cur);
            cur[pos] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[pos] = e;
            enumerate(pos + 1, remaining - e, cur, out);
        }
        cur[pos] = 0;
    }

    size_t n_;
    int degree_;
    std::vector<TermIndex> terms_;
    std::map<TermIndex, size_t> index_;
};

inline SliceBasis slice_basis(size_t n, int k) { return {n, k}; }

inline std::vector<Rational> to_coords(const HomogeneousVF& p, const SliceBasis& b) {
    if (p.nvars() != b.n() || p.degree() != b.degree())
        throw SliceMismatch("vector field does not live in the given slice");
    std::vector<Rational> v(b.size());
    for (size_t i = 0; i < p.nvars(); ++i)
        for (const auto& [e, c] : p.component(i).terms()) v[b.index_of(TermIndex{i, e})] = c;
    return v;
}

inline HomogeneousVF from_coords(const std::vector<Rational>& v, const SliceBasis& b) {
    if (v.size() != b.size()) throw SliceMismatch("coordinate count != slice dimension");
    HomogeneousVF p(b.n(), b.degree());
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) p.add_term(b.term(i), v[i]);
    return p;
}

/// Jacobian as an n x n grid of scalar polynomials, entry (i,j) = d p_i / d x_j.
inline std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& comps) {
    const size_t n = comps.size();
    std::vector<std::vector<Poly>> jac(n, std::vector<Poly>(n, Poly(n)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) jac[i][j] = comps[i].derivative(j);
    return jac;
}

inline std::vector<std::vector<Poly>> jacobian(const HomogeneousVF& p) {
    if (p.degree() < 1) throw DegreeError("jacobian needs degree >= 1");
    return jacobian(p.components());
}

/// Degree-d graded component of Ad_h(xi) = (d xi) h - (d h) xi. With xi of
/// degree l only the part h_m with m = d - l + 1 contributes.
inline HomogeneousVF ad_apply(const TruncatedVF& h, const HomogeneousVF& xi, int out_degree) {
    if (h.nvars() != xi.nvars()) throw DimensionMismatch("ad_apply: variable counts differ");
    if (xi.degree() < 1) throw DegreeError("ad_apply: xi must have degree >= 1");
    if (out_degree < 1) throw DegreeError("ad_apply: output degree must be >= 1");
    const size_t n = h.nvars();
    HomogeneousVF result(n, out_degree);
    const int m = out_degree - xi.degree() + 1;
    if (m < 1 || m > h.max_degree()) return result;
    const HomogeneousVF hm = h.part(m);
    if (hm.is_zero()) return result;
    const auto jac_xi = jacobian(xi);
    const auto jac_hm = jacobian(hm);
    std::vector<Poly> comps(n, Poly(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            comps[i] += jac_xi[i][j] * hm.component(j);
            comps[i] -= jac_hm[i][j] * xi.component(j);
        }
    return HomogeneousVF::from_components(std::move(comps), out_degree);
}

/// The near-identity coordinate change I + xi viewed as a map jet.
inline TruncatedVF near_identity_map(const TruncatedVF& xi_tilde, int N) {
    TruncatedVF g = xi_tilde.with_max_degree(N);
    HomogeneousVF lin = g.part(1);
    if (!lin.is_zero()) throw DegreeError("perturbation must have parts of degree >= 2 only");
    g.set_part(HomogeneousVF::linear(RatMatrix::identity(g.nvars())));
    return g;
}

inline TruncatedVF identity_map(size_t n, int N) {
    return TruncatedVF::from_linear(RatMatrix::identity(n), N);
}

/// Graded parts of f(g(y)) up to degree N, computed exactly.
inline TruncatedVF compose_truncate(const TruncatedVF& f, const TruncatedVF& g, int N) {
    if (f.nvars() != g.nvars()) throw DimensionMismatch("compose: variable counts differ");
    if (N < 1) throw DegreeError("compose: truncation degree must be >= 1");
    const std::vector<Poly> gc = g.components();
    std::vector<Poly> out;
    out.reserve(f.nvars());
    for (const Poly& fi : f.components()) out.push_back(substitute(fi, gc, N));
    return TruncatedVF::from_components(f.nvars(), out, N);
}

/// Conjugation of the field h by the change of coordinates x = (I + xi)(y):
///   g(y) = (d(I + xi))_y^{-1} h((I + xi)(y)),
/// truncated at degree N. The inverse Jacobian is the finite Neumann series
/// I - D + D^2 - ... with D = (d xi)_y, which terminates under truncation
/// because every entry of D has degree >= 1.
inline TruncatedVF conjugate_by(const TruncatedVF& h, const TruncatedVF& xi_tilde, int N) {
    if (h.nvars() != xi_tilde.nvars()) throw DimensionMismatch("conjugate: variable counts differ");
    if (!xi_tilde.parts().empty() && xi_tilde.parts().begin()->first < 2)
        throw DegreeError("coordinate changes are perturbations of the identity: parts of degree >= 2 only");
    const size_t n = h.nvars();
    const TruncatedVF g = near_identity_map(xi_tilde, N);
    const std::vector<Poly> u = compose_truncate(h.with_max_degree(N), g, N).components();

    const auto d = jacobian(xi_tilde.with_max_degree(N).components());
    // Neumann series for (I + D)^{-1}, entries truncated at N-1: they only
    // ever multiply components of u, and u has no constant terms.
    std::vector<std::vector<Poly>> series(n, std::vector<Poly>(n, Poly(n)));
    for (size_t i = 0; i < n; ++i) series[i][i] = Poly::constant(n, 1);
    std::vector<std::vector<Poly>> power = d;
    int sign = -1;
    for (;;) {
        bool all_zero = true;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Poly t = power[i][j].truncated(N - 1);
                if (t.is_zero()) continue;
                all_zero = false;
                series[i][j] += sign > 0 ? t : -t;
            }
        if (all_zero) break;
        std::vector<std::vector<Poly>> next(n, std::vector<Poly>(n, Poly(n)));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k) next[i][j] += mul_trunc(power[i][k], d[k][j], N - 1);
        power = std::move(next);
        sign = -sign;
    }

    std::vector<Poly> out(n, Poly(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i] += mul_trunc(series[i][j], u[j], N);
    return TruncatedVF::from_components(n, out, N);
}

/// Field after the change of coordinates x = y + xi_k(y), truncated at N.
/// Parts of degree < k are untouched; the degree-k part becomes
/// h_k - Ad_L^k(xi_k).
inline TruncatedVF pushforward(const TruncatedVF& h, const HomogeneousVF& xi_k, int N) {
    const int k = xi_k.degree();
    if (k < 2) throw DegreeError("pushforward: change of coordinates must have degree >= 2");
    if (k > N) throw DegreeError("pushforward: change degree exceeds truncation degree");
    TruncatedVF xi(xi_k.nvars(), N);
    xi.set_part(xi_k);
    return conjugate_by(h, xi, N);
}

// --- rendering ------------------------------------------------------------

inline std::string render_monomial(const Exponents& e) {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        if (!first) os << "*";
        os << "x" << (j + 1);
        if (e[j] > 1) os << "^" << e[j];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

inline std::string render_term(const Rational& c, const Exponents& e, size_t component) {
    const std::string mono = render_monomial(e);
    std::ostringstream os;
    if (mono == "1") {
        os << (c.is_integer() && c.sign() > 0 ? c.str() : "(" + c.str() + ")");
    } else if (c.is_one()) {
        os << mono;
    } else if (c == Rational(-1)) {
        os << "-" << mono;
    } else {
        const bool parens = c.sign() < 0 || !c.is_integer();
        os << (parens ? "(" + c.str() + ")" : c.str()) << "*" << mono;
    }
    os << " e_" << (component + 1);
    return os.str();
}

/// Terms in canonical order (component ascending, descending lex), joined by " + ".
inline std::string render(const HomogeneousVF& p) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < p.nvars(); ++i)
        for (const auto& [e, c] : p.component(i).terms()) {
            if (!first) os << " + ";
            os << render_term(c, e, i);
            first = false;
        }
    return first ? "0" : os.str();
}

/// Parts in ascending degree, each in canonical order.
inline std::string render(const TruncatedVF& f) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, p] : f.parts()) {
        if (p.is_zero()) continue;
        if (!first) os << " + ";
        os << render(p);
        first = false;
    }
    return first ? "0" : os.str();
}

} // namespace nfct
