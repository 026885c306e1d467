#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "maslovkit/ring.hpp"

namespace maslovkit {

/// Dense rectangular matrix over a Laurent ring. Zero-sized dimensions are
/// allowed so that empty kernels and empty Sturm blocks have a value.
class RingMatrix {
public:
    RingMatrix(RingDescriptor ring, std::size_t rows, std::size_t cols);

    static RingMatrix identity(const RingDescriptor& ring, std::size_t n);
    static RingMatrix scalar(const RingDescriptor& ring, std::size_t n, const LaurentPolynomial& c);
    static RingMatrix from_rows(const RingDescriptor& ring, const std::vector<std::vector<LaurentPolynomial>>& rows);
    static RingMatrix from_ints(const RingDescriptor& ring, const std::vector<std::vector<int64_t>>& rows);
    /// Column vector.
    static RingMatrix column(const RingDescriptor& ring, const std::vector<LaurentPolynomial>& entries);

    const RingDescriptor& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const LaurentPolynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    LaurentPolynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const LaurentPolynomial& at(std::size_t i, std::size_t j) const;

    RingMatrix operator+(const RingMatrix& o) const;
    RingMatrix operator-(const RingMatrix& o) const;
    RingMatrix operator*(const RingMatrix& o) const;
    RingMatrix operator-() const;
    RingMatrix scaled(const LaurentPolynomial& c) const;
    bool operator==(const RingMatrix& o) const;

    RingMatrix transpose() const;
    /// Transpose with entrywise involution.
    RingMatrix dagger() const;
    RingMatrix eval_T(const Fp& t) const;
    /// Same entries viewed in the ring extended by T (identity if T is present).
    RingMatrix lift_to_T() const;
    bool is_zero() const;

    RingMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const RingMatrix& b);
    RingMatrix column_at(std::size_t j) const { return block(0, j, rows_, 1); }
    RingMatrix drop_zero_columns() const;

    static RingMatrix hstack(const RingMatrix& a, const RingMatrix& b);
    static RingMatrix vstack(const RingMatrix& a, const RingMatrix& b);
    static RingMatrix block_diag(const RingMatrix& a, const RingMatrix& b);
    /// [[a, b], [c, d]] from equally partitioned blocks.
    static RingMatrix blocks(const RingMatrix& a, const RingMatrix& b, const RingMatrix& c, const RingMatrix& d);

    /// Determinant by the division-free Berkowitz algorithm (any ring).
    LaurentPolynomial determinant() const;
    /// Coefficients c_0 = 1, c_1, ..., c_n of det(λI - A) = Σ c_k λ^(n-k).
    std::vector<LaurentPolynomial> characteristic_coefficients() const;
    /// Inverse when the determinant is a unit, NotAUnit otherwise.
    RingMatrix inverse() const;

    std::string to_string() const;

private:
    void require_same_shape(const RingMatrix& o, const char* what) const;

    RingDescriptor ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<LaurentPolynomial> entries_;
};

/// Square matrix whose determinant is a unit of the ring (a nonzero monomial).
bool is_unit_matrix(const RingMatrix& a);

/// Rank over F_p by Gaussian elimination; the ring must be F_p itself.
std::size_t field_rank(const RingMatrix& a);

}  // namespace maslovkit
