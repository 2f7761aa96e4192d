#ifndef LAXKIT_POLYNOMIAL_HPP
#define LAXKIT_POLYNOMIAL_HPP

#include <laxkit/matrix.hpp>

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace laxkit {

/// Exact multivariate polynomial in a fixed number of variables. Terms are
/// kept in a sorted map keyed by exponent vectors; zero coefficients are
/// pruned eagerly so is_zero and equality are structural.
class Poly {
public:
    using Exponents = std::vector<unsigned>;

    Poly() : nvars_(0) {}
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Scalar& c) {
        Poly p(nvars);
        if (!c.is_zero()) p.terms_[Exponents(nvars, 0)] = c;
        return p;
    }
    static Poly var(std::size_t nvars, std::size_t i) {
        Poly p(nvars);
        Exponents e(nvars, 0);
        e[i] = 1;
        p.terms_[e] = Scalar::one();
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t degree() const {
        std::size_t d = 0;
        for (const auto& [e, c] : terms_) {
            std::size_t t = 0;
            for (unsigned x : e) t += x;
            if (t > d) d = t;
        }
        return d;
    }
    const std::map<Exponents, Scalar>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Scalar& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[e] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    Poly operator-() const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    Poly operator*(const Poly& o) const {
        Poly r(nvars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exponents e = e1;
                for (std::size_t i = 0; i < nvars_; ++i) e[i] += e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    Poly operator*(const Scalar& s) const {
        Poly r(nvars_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
        return r;
    }
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative(std::size_t i) const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents d = e;
            d[i] -= 1;
            r.add_term(d, c * Scalar(static_cast<long>(e[i])));
        }
        return r;
    }

    Scalar eval(const std::vector<Scalar>& x) const {
        Scalar acc = Scalar(0);
        for (const auto& [e, c] : terms_) {
            Scalar t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned p = 0; p < e[i]; ++p) t *= x[i];
            acc += t;
        }
        return acc;
    }

    double eval_double(const std::vector<double>& x) const {
        double acc = 0.0;
        for (const auto& [e, c] : terms_) {
            double t = c.to_double();
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned p = 0; p < e[i]; ++p) t *= x[i];
            acc += t;
        }
        return acc;
    }

    /// Substitute variables by polynomials (all of the same variable count).
    Poly substitute(const std::vector<Poly>& sub) const {
        if (sub.size() != nvars_) throw std::invalid_argument("substitution arity mismatch");
        std::size_t m = sub.empty() ? 0 : sub[0].nvars();
        Poly r(m);
        for (const auto& [e, c] : terms_) {
            Poly t = Poly::constant(m, c);
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned p = 0; p < e[i]; ++p) t = t * sub[i];
            r = r + t;
        }
        return r;
    }

    /// f(Ax) for a square matrix A acting on the variable vector.
    Poly compose_linear(const Mat& A) const {
        std::vector<Poly> sub;
        for (std::size_t i = 0; i < nvars_; ++i) {
            Poly li(A.cols());
            for (std::size_t j = 0; j < A.cols(); ++j)
                if (!A(i, j).is_zero()) li.add_term(unit_exp(A.cols(), j), A(i, j));
            sub.push_back(std::move(li));
        }
        return substitute(sub);
    }

private:
    static Exponents unit_exp(std::size_t n, std::size_t j) {
        Exponents e(n, 0);
        e[j] = 1;
        return e;
    }

    std::size_t nvars_;
    std::map<Exponents, Scalar> terms_;
};

/// All monomial exponent vectors in n variables of total degree <= d, in a
/// deterministic order (degree first, then lexicographic).
inline std::vector<Poly::Exponents> monomials_up_to(std::size_t n, std::size_t d) {
    std::vector<Poly::Exponents> out;
    Poly::Exponents cur(n, 0);
    // iterate by total degree
    for (std::size_t deg = 0; deg <= d; ++deg) {
        // enumerate compositions of deg into n parts, lexicographically
        std::vector<unsigned> e(n, 0);
        std::size_t rem = deg;
        // recursive enumeration via explicit stack
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                                std::size_t left) {
            if (pos + 1 == n) {
                e[pos] = static_cast<unsigned>(left);
                out.push_back(e);
                return;
            }
            for (std::size_t v = 0; v <= left; ++v) {
                e[pos] = static_cast<unsigned>(v);
                rec(pos + 1, left - v);
            }
        };
        if (n == 0) {
            if (deg == 0) out.push_back({});
            continue;
        }
        rec(0, rem);
    }
    return out;
}

/// Coefficient vector of p in the monomials_up_to basis; throws if p has a
/// term outside that basis.
inline Mat poly_to_coeffs(const Poly& p, const std::vector<Poly::Exponents>& basis) {
    Mat v(basis.size(), 1);
    std::map<Poly::Exponents, std::size_t> where;
    for (std::size_t i = 0; i < basis.size(); ++i) where[basis[i]] = i;
    for (const auto& [e, c] : p.terms()) {
        auto it = where.find(e);
        if (it == where.end()) throw std::invalid_argument("polynomial exceeds basis degree");
        v(it->second, 0) = c;
    }
    return v;
}

inline Poly coeffs_to_poly(std::size_t nvars, const Mat& v,
                           const std::vector<Poly::Exponents>& basis) {
    Poly p(nvars);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!v(i, 0).is_zero()) p.add_term(basis[i], v(i, 0));
    return p;
}

} // namespace laxkit

#endif
