#include "maslovkit/matrix.hpp"

#include <sstream>

namespace maslovkit {

RingMatrix::RingMatrix(RingDescriptor ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, LaurentPolynomial(ring_)) {}

RingMatrix RingMatrix::identity(const RingDescriptor& ring, std::size_t n) {
    return scalar(ring, n, LaurentPolynomial(ring, 1));
}

RingMatrix RingMatrix::scalar(const RingDescriptor& ring, std::size_t n, const LaurentPolynomial& c) {
    RingMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

RingMatrix RingMatrix::from_rows(const RingDescriptor& ring, const std::vector<std::vector<LaurentPolynomial>>& rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr ? rows.front().size() : 0;
    RingMatrix m(ring, nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) fail(ErrorCode::ShapeError, "ragged matrix rows");
        for (std::size_t j = 0; j < nc; ++j) {
            require_same_ring(ring, rows[i][j].ring(), "matrix entry");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

RingMatrix RingMatrix::from_ints(const RingDescriptor& ring, const std::vector<std::vector<int64_t>>& rows) {
    std::vector<std::vector<LaurentPolynomial>> polys;
    for (const auto& row : rows) {
        auto& out = polys.emplace_back();
        for (int64_t v : row) out.emplace_back(ring, v);
    }
    return from_rows(ring, polys);
}

RingMatrix RingMatrix::column(const RingDescriptor& ring, const std::vector<LaurentPolynomial>& entries) {
    RingMatrix m(ring, entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        require_same_ring(ring, entries[i].ring(), "vector entry");
        m(i, 0) = entries[i];
    }
    return m;
}

const LaurentPolynomial& RingMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) fail(ErrorCode::ShapeError, "matrix index out of range");
    return (*this)(i, j);
}

void RingMatrix::require_same_shape(const RingMatrix& o, const char* what) const {
    require_same_ring(ring_, o.ring_, what);
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        fail(ErrorCode::ShapeError, std::string(what) + ": shape mismatch");
    }
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
    require_same_shape(o, "matrix addition");
    RingMatrix r = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += o.entries_[k];
    return r;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
    require_same_shape(o, "matrix subtraction");
    RingMatrix r = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= o.entries_[k];
    return r;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
    if (!(ring_ == o.ring_)) fail(ErrorCode::ShapeError, "matrix product over different rings");
    if (cols_ != o.rows_) {
        fail(ErrorCode::ShapeError, "matrix product: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                        " times " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    }
    RingMatrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const auto& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const auto& b = o(k, j);
                if (!b.is_zero()) r(i, j) += a * b;
            }
        }
    }
    return r;
}

RingMatrix RingMatrix::operator-() const {
    RingMatrix r = *this;
    for (auto& e : r.entries_) e = -e;
    return r;
}

RingMatrix RingMatrix::scaled(const LaurentPolynomial& c) const {
    RingMatrix r = *this;
    for (auto& e : r.entries_) e = c * e;
    return r;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix r(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

RingMatrix RingMatrix::dagger() const {
    RingMatrix r(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).involute();
    return r;
}

RingMatrix RingMatrix::eval_T(const Fp& t) const {
    RingMatrix r(ring_.without_T(), rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k].eval_T(t);
    return r;
}

RingMatrix RingMatrix::lift_to_T() const {
    if (ring_.has_T()) return *this;
    RingMatrix r(ring_.with_T(), rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        for (const auto& [e, c] : entries_[k].terms()) {
            Exponent et = e;
            et.push_back(0);
            r.entries_[k] += LaurentPolynomial::monomial(r.ring_, std::move(et), c);
        }
    }
    return r;
}

bool RingMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

RingMatrix RingMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) fail(ErrorCode::ShapeError, "block out of range");
    RingMatrix r(ring_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
}

void RingMatrix::set_block(std::size_t r0, std::size_t c0, const RingMatrix& b) {
    require_same_ring(ring_, b.ring_, "set_block");
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) fail(ErrorCode::ShapeError, "block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

RingMatrix RingMatrix::drop_zero_columns() const {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < cols_; ++j) {
        for (std::size_t i = 0; i < rows_; ++i) {
            if (!(*this)(i, j).is_zero()) {
                keep.push_back(j);
                break;
            }
        }
    }
    RingMatrix r(ring_, rows_, keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k)
        for (std::size_t i = 0; i < rows_; ++i) r(i, k) = (*this)(i, keep[k]);
    return r;
}

RingMatrix RingMatrix::hstack(const RingMatrix& a, const RingMatrix& b) {
    require_same_ring(a.ring_, b.ring_, "hstack");
    if (a.rows_ != b.rows_) fail(ErrorCode::ShapeError, "hstack: row counts differ");
    RingMatrix r(a.ring_, a.rows_, a.cols_ + b.cols_);
    r.set_block(0, 0, a);
    r.set_block(0, a.cols_, b);
    return r;
}

RingMatrix RingMatrix::vstack(const RingMatrix& a, const RingMatrix& b) {
    require_same_ring(a.ring_, b.ring_, "vstack");
    if (a.cols_ != b.cols_) fail(ErrorCode::ShapeError, "vstack: column counts differ");
    RingMatrix r(a.ring_, a.rows_ + b.rows_, a.cols_);
    r.set_block(0, 0, a);
    r.set_block(a.rows_, 0, b);
    return r;
}

RingMatrix RingMatrix::block_diag(const RingMatrix& a, const RingMatrix& b) {
    require_same_ring(a.ring_, b.ring_, "block_diag");
    RingMatrix r(a.ring_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    r.set_block(0, 0, a);
    r.set_block(a.rows_, a.cols_, b);
    return r;
}

RingMatrix RingMatrix::blocks(const RingMatrix& a, const RingMatrix& b, const RingMatrix& c, const RingMatrix& d) {
    return vstack(hstack(a, b), hstack(c, d));
}

std::vector<LaurentPolynomial> RingMatrix::characteristic_coefficients() const {
    if (!is_square()) fail(ErrorCode::ShapeError, "characteristic polynomial of a non-square matrix");
    const std::size_t n = rows_;
    const LaurentPolynomial zero(ring_);
    // Berkowitz: the characteristic vector of the leading (r+1)x(r+1) block is
    // T_r times that of the leading r x r block, where T_r is a Toeplitz
    // matrix built from a_rr, R A_r^k C.
    std::vector<LaurentPolynomial> coeffs{LaurentPolynomial(ring_, 1)};
    for (std::size_t r = 0; r < n; ++r) {
        // Column C = A[0..r-1][r], row R = A[r][0..r-1], leading block A_r.
        std::vector<LaurentPolynomial> toeplitz;  // first column: 1, -a_rr, -R C, -R A C, ...
        toeplitz.emplace_back(ring_, 1);
        toeplitz.push_back(-(*this)(r, r));
        std::vector<LaurentPolynomial> vec(r, zero);
        for (std::size_t i = 0; i < r; ++i) vec[i] = (*this)(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            LaurentPolynomial rc = zero;
            for (std::size_t i = 0; i < r; ++i) rc += (*this)(r, i) * vec[i];
            toeplitz.push_back(-rc);
            std::vector<LaurentPolynomial> next(r, zero);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    if (!(*this)(i, j).is_zero() && !vec[j].is_zero()) next[i] += (*this)(i, j) * vec[j];
            vec = std::move(next);
        }
        std::vector<LaurentPolynomial> out(r + 2, zero);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) out[i] += toeplitz[i - j] * coeffs[j];
        coeffs = std::move(out);
    }
    return coeffs;
}

LaurentPolynomial RingMatrix::determinant() const {
    auto c = characteristic_coefficients();
    const std::size_t n = rows_;
    return n % 2 == 0 ? c[n] : -c[n];
}

RingMatrix RingMatrix::inverse() const {
    if (!is_square()) fail(ErrorCode::ShapeError, "inverse of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return *this;
    auto c = characteristic_coefficients();
    const LaurentPolynomial& cn = c[n];
    if (!cn.is_unit()) fail(ErrorCode::NotAUnit, "matrix determinant " + cn.to_string() + " is not a unit");
    // Cayley-Hamilton: A (A^{n-1} + c_1 A^{n-2} + ... + c_{n-1}) = -c_n I.
    RingMatrix acc = RingMatrix::identity(ring_, n);
    for (std::size_t k = 1; k < n; ++k) {
        acc = *this * acc + RingMatrix::scalar(ring_, n, c[k]);
    }
    return acc.scaled(-cn.unit_inverse());
}

std::string RingMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

bool is_unit_matrix(const RingMatrix& a) {
    if (!a.is_square()) fail(ErrorCode::ShapeError, "is_unit_matrix needs a square matrix");
    if (a.rows() == 0) return true;
    return a.determinant().is_unit();
}

std::size_t field_rank(const RingMatrix& a) {
    const RingDescriptor& ring = a.ring();
    if (ring.spatial_vars() != 0 || ring.has_T()) {
        fail(ErrorCode::UnsupportedRing, "field_rank needs F_p, got " + ring.to_string());
    }
    const int64_t p = ring.p();
    std::vector<std::vector<Fp>> m;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto& row = m.emplace_back();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).constant_value());
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        const Fp inv = m[rank][c].inv();
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][c].is_zero()) continue;
            const Fp f = m[i][c] * inv;
            for (std::size_t j = c; j < a.cols(); ++j) m[i][j] = m[i][j] - f * m[rank][j];
        }
        ++rank;
    }
    (void)p;
    return rank;
}

}  // namespace maslovkit
