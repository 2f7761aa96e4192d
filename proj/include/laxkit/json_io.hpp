#ifndef LAXKIT_JSON_IO_HPP
#define LAXKIT_JSON_IO_HPP

#include <laxkit/laxsim.hpp>
#include <laxkit/postlie.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace laxkit {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Scalars and matrices
// ---------------------------------------------------------------------------

inline json scalar_to_json(const Scalar& s) { return to_string(s); }

inline Scalar scalar_from_json(const json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    throw std::invalid_argument("scalar must be a string or integer");
}

inline json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Mat mat_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw std::invalid_argument("matrix must be an array of rows");
    std::size_t r = j.size(), c = j[0].size();
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (j[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t k = 0; k < c; ++k) m(i, k) = scalar_from_json(j[i][k]);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Lie algebras
// ---------------------------------------------------------------------------

inline json algebra_to_json(const LieAlgebra& L) {
    std::size_t n = L.dim();
    bool complex_field = false;
    json brackets = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            json terms = json::array();
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = L.c(i, j, k);
                if (c.is_zero()) continue;
                if (!(c.im == 0)) complex_field = true;
                terms.push_back(json::array({k, scalar_to_json(c)}));
            }
            if (!terms.empty()) brackets.push_back(json::array({i, j, terms}));
        }
    return json{{"name", L.name()},
                {"dim", n},
                {"field", complex_field ? "Q_i" : "Q"},
                {"brackets", brackets}};
}

inline LieAlgebra algebra_from_json(const json& j) {
    std::string name = j.value("name", "anonymous");
    std::size_t n = j.at("dim").get<std::size_t>();
    LieAlgebra L(name, n);
    for (const auto& entry : j.value("brackets", json::array())) {
        std::size_t i = entry.at(0).get<std::size_t>();
        std::size_t jj = entry.at(1).get<std::size_t>();
        if (i >= n || jj >= n) throw std::invalid_argument("bracket index out of range");
        for (const auto& term : entry.at(2)) {
            std::size_t k = term.at(0).get<std::size_t>();
            if (k >= n) throw std::invalid_argument("bracket target out of range");
            L.set_bracket(i, jj, k, scalar_from_json(term.at(1)));
        }
    }
    if (!L.is_antisymmetric()) throw std::invalid_argument("bracket table not antisymmetric");
    return L;
}

// ---------------------------------------------------------------------------
// PostLie algebras and trialgebras
// ---------------------------------------------------------------------------

namespace detail {

inline json table_to_json(std::size_t n, const std::function<Scalar(std::size_t, std::size_t,
                                                                    std::size_t)>& get) {
    json out = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            json terms = json::array();
            for (std::size_t k = 0; k < n; ++k)
                if (!get(i, j, k).is_zero())
                    terms.push_back(json::array({k, scalar_to_json(get(i, j, k))}));
            if (!terms.empty()) out.push_back(json::array({i, j, terms}));
        }
    return out;
}

inline void table_from_json(const json& j, std::size_t n,
                            const std::function<void(std::size_t, std::size_t, std::size_t,
                                                     const Scalar&)>& set) {
    for (const auto& entry : j) {
        std::size_t a = entry.at(0).get<std::size_t>();
        std::size_t b = entry.at(1).get<std::size_t>();
        if (a >= n || b >= n) throw std::invalid_argument("table index out of range");
        for (const auto& term : entry.at(2)) {
            std::size_t k = term.at(0).get<std::size_t>();
            if (k >= n) throw std::invalid_argument("table target out of range");
            set(a, b, k, scalar_from_json(term.at(1)));
        }
    }
}

} // namespace detail

inline json postlie_to_json(const PostLieAlgebra& P) {
    std::size_t n = P.dim();
    return json{{"dim", n},
                {"bracket", detail::table_to_json(
                                n, [&](auto i, auto j, auto k) { return P.br(i, j, k); })},
                {"circ", detail::table_to_json(
                             n, [&](auto i, auto j, auto k) { return P.ci(i, j, k); })}};
}

inline PostLieAlgebra postlie_from_json(const json& j) {
    std::size_t n = j.at("dim").get<std::size_t>();
    PostLieAlgebra P(n);
    detail::table_from_json(j.value("bracket", json::array()), n,
                            [&](auto a, auto b, auto k, const Scalar& s) { P.set_br(a, b, k, s); });
    detail::table_from_json(j.value("circ", json::array()), n,
                            [&](auto a, auto b, auto k, const Scalar& s) { P.set_ci(a, b, k, s); });
    return P;
}

inline json trialgebra_to_json(const DendriformTrialgebra& T) {
    std::size_t n = T.dim();
    return json{{"dim", n},
                {"prec", detail::table_to_json(
                             n, [&](auto i, auto j, auto k) { return T.prec(i, j, k); })},
                {"succ", detail::table_to_json(
                             n, [&](auto i, auto j, auto k) { return T.succ(i, j, k); })},
                {"dot", detail::table_to_json(
                            n, [&](auto i, auto j, auto k) { return T.dot(i, j, k); })}};
}

inline DendriformTrialgebra trialgebra_from_json(const json& j) {
    std::size_t n = j.at("dim").get<std::size_t>();
    DendriformTrialgebra T(n);
    detail::table_from_json(j.value("prec", json::array()), n,
                            [&](auto a, auto b, auto k, const Scalar& s) { T.set_prec(a, b, k, s); });
    detail::table_from_json(j.value("succ", json::array()), n,
                            [&](auto a, auto b, auto k, const Scalar& s) { T.set_succ(a, b, k, s); });
    detail::table_from_json(j.value("dot", json::array()), n,
                            [&](auto a, auto b, auto k, const Scalar& s) { T.set_dot(a, b, k, s); });
    return T;
}

// ---------------------------------------------------------------------------
// Trajectories and residual summaries
// ---------------------------------------------------------------------------

inline json trajectory_to_json(const Trajectory& tr, const json& drift) {
    return json{{"times", tr.times},
                {"states", tr.states},
                {"L", tr.L_values},
                {"h", tr.h},
                {"method", tr.method},
                {"drift", drift}};
}

} // namespace laxkit

#endif
