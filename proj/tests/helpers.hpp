#pragma once
#include <functional>

#include <random>
#include <utility>
#include <vector>

#include "maslovkit/matrix.hpp"

namespace mk = maslovkit;

// Polynomial in one spatial variable from (exponent, coefficient) pairs.
inline mk::LaurentPolynomial px(const mk::RingDescriptor& r, std::vector<std::pair<int, int64_t>> terms) {
    std::vector<std::pair<mk::Exponent, int64_t>> t;
    for (auto [e, c] : terms) t.push_back({{e}, c});
    return mk::LaurentPolynomial::from_terms(r, t);
}

inline mk::LaurentPolynomial cst(const mk::RingDescriptor& r, int64_t c) { return mk::LaurentPolynomial(r, c); }

inline mk::LaurentPolynomial xpow(const mk::RingDescriptor& r, int e) { return px(r, {{e, 1}}); }

// Random element with spatial exponents in [lo, lo + spread] (d <= 1, no T).
inline mk::LaurentPolynomial random_poly(const mk::RingDescriptor& r, std::mt19937& rng, int spread, double density = 0.6) {
    std::uniform_int_distribution<int> off(-spread, 0);
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int64_t> coeff(1, r.p() - 1);
    mk::LaurentPolynomial f(r);
    if (r.spatial_vars() == 0) {
        if (u(rng) < density) f = cst(r, coeff(rng));
        return f;
    }
    const int lo = off(rng);
    for (int e = lo; e <= lo + spread; ++e)
        if (u(rng) < density) f += px(r, {{e, coeff(rng)}});
    return f;
}

inline mk::RingMatrix random_matrix(const mk::RingDescriptor& r, std::mt19937& rng, std::size_t rows, std::size_t cols,
                                    int spread, double density = 0.6) {
    mk::RingMatrix m(r, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_poly(r, rng, spread, density);
    return m;
}

// Random +hermitian N x N form: A + dagger(A).
inline mk::RingMatrix random_hermitian(const mk::RingDescriptor& r, std::mt19937& rng, std::size_t n, int spread) {
    auto a = random_matrix(r, rng, n, n, spread, 0.5);
    return a + a.dagger();
}

// Random invertible matrix: a product of transvections and a monomial diagonal.
inline mk::RingMatrix random_unimodular(const mk::RingDescriptor& r, std::mt19937& rng, std::size_t n, int spread,
                                        int steps = 4) {
    auto m = mk::RingMatrix::identity(r, n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> e(-1, 1);
    std::uniform_int_distribution<int64_t> c(1, r.p() - 1);
    for (int s = 0; s < steps && n > 1; ++s) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        auto t = mk::RingMatrix::identity(r, n);
        t(i, j) = random_poly(r, rng, spread);
        m = m * t;
    }
    auto d = mk::RingMatrix::identity(r, n);
    for (std::size_t i = 0; i < n; ++i) {
        d(i, i) = r.spatial_vars() ? px(r, {{e(rng), c(rng)}}) : cst(r, c(rng));
    }
    return m * d;
}
