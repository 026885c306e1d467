#pragma once

#include <optional>

#include "maslovkit/matrix.hpp"

namespace maslovkit {

/// U·G·V = D with U, V invertible and D diagonal, d_1 | d_2 | ..., each
/// nonzero d_i monic with lowest exponent 0.
struct SmithDecomposition {
    RingMatrix U;
    RingMatrix D;
    RingMatrix V;
    std::size_t rank = 0;

    /// Invariant factors d_1..d_rank.
    std::vector<LaurentPolynomial> invariant_factors() const;
};

/// Only F_p and F_p[x, x^-1]; anything else raises UnsupportedRing.
SmithDecomposition smith_normal_form(const RingMatrix& g);

/// Columns generate {v : G v = 0}; zero columns when the kernel is trivial.
RingMatrix kernel_basis(const RingMatrix& g);

/// Some x with G x = v, if v lies in the column span of G.
std::optional<RingMatrix> solve_in_span(const RingMatrix& g, const RingMatrix& v);
std::optional<RingMatrix> solve_in_span(const SmithDecomposition& snf, const RingMatrix& v);

/// Rank over the fraction field.
std::size_t matrix_rank(const RingMatrix& g);

}  // namespace maslovkit
