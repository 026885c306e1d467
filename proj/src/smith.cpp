#include "maslovkit/smith.hpp"

#include <utility>

namespace maslovkit {

namespace {

void require_smith_ring(const RingDescriptor& ring) {
    if (ring.has_T()) fail(ErrorCode::UnsupportedRing, "Smith normal form with loop parameter T");
    if (ring.spatial_vars() > 1) {
        fail(ErrorCode::UnsupportedRing, "Smith normal form needs d <= 1, got " + ring.to_string());
    }
}

struct Work {
    RingMatrix a, u, v;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    }
    // row_i += f * row_j
    void add_row(std::size_t i, std::size_t j, const LaurentPolynomial& f) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!a(j, c).is_zero()) a(i, c) += f * a(j, c);
        for (std::size_t c = 0; c < u.cols(); ++c)
            if (!u(j, c).is_zero()) u(i, c) += f * u(j, c);
    }
    // col_i += f * col_j
    void add_col(std::size_t i, std::size_t j, const LaurentPolynomial& f) {
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (!a(r, j).is_zero()) a(r, i) += a(r, j) * f;
        for (std::size_t r = 0; r < v.rows(); ++r)
            if (!v(r, j).is_zero()) v(r, i) += v(r, j) * f;
    }
    void scale_row(std::size_t i, const LaurentPolynomial& unit) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = unit * a(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = unit * u(i, c);
    }
};

}  // namespace

std::vector<LaurentPolynomial> SmithDecomposition::invariant_factors() const {
    std::vector<LaurentPolynomial> out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
}

SmithDecomposition smith_normal_form(const RingMatrix& g) {
    const RingDescriptor& ring = g.ring();
    require_smith_ring(ring);
    const std::size_t m = g.rows(), n = g.cols();
    Work w{g, RingMatrix::identity(ring, m), RingMatrix::identity(ring, n)};
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        for (;;) {
            // Least spread pivot over the trailing block; ties to lowest row then column.
            std::size_t pi = m, pj = n;
            int32_t best = -1;
            for (std::size_t i = t; i < m; ++i) {
                for (std::size_t j = t; j < n; ++j) {
                    const int32_t s = w.a(i, j).spread();
                    if (s >= 0 && (best < 0 || s < best)) {
                        best = s;
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (best < 0) break;
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            const LaurentPolynomial piv = w.a(t, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.a(i, t).is_zero()) continue;
                auto [q, r] = LaurentPolynomial::divmod(w.a(i, t), piv);
                w.add_row(i, t, -q);
                if (!r.is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.a(t, j).is_zero()) continue;
                auto [q, r] = LaurentPolynomial::divmod(w.a(t, j), piv);
                w.add_col(j, t, -q);
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;
            // Row and column are clear; enforce divisibility on the rest.
            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (!piv.divides(w.a(i, j))) {
                        w.add_row(t, i, LaurentPolynomial(ring, 1));
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible) break;
        }
        if (w.a(t, t).is_zero()) break;
        auto [monic, unit] = w.a(t, t).normalized();
        w.scale_row(t, unit.unit_inverse());
    }
    return SmithDecomposition{std::move(w.u), std::move(w.a), std::move(w.v), t};
}

RingMatrix kernel_basis(const RingMatrix& g) {
    auto snf = smith_normal_form(g);
    return snf.V.block(0, snf.rank, g.cols(), g.cols() - snf.rank);
}

std::optional<RingMatrix> solve_in_span(const SmithDecomposition& snf, const RingMatrix& v) {
    if (v.cols() != 1 || v.rows() != snf.U.cols()) fail(ErrorCode::ShapeError, "solve_in_span: bad vector shape");
    const RingMatrix w = snf.U * v;
    RingMatrix y(v.ring(), snf.V.rows(), 1);
    for (std::size_t i = 0; i < w.rows(); ++i) {
        if (i < snf.rank) {
            auto [q, r] = LaurentPolynomial::divmod(w(i, 0), snf.D(i, i));
            if (!r.is_zero()) return std::nullopt;
            y(i, 0) = q;
        } else if (!w(i, 0).is_zero()) {
            return std::nullopt;
        }
    }
    return snf.V * y;
}

std::optional<RingMatrix> solve_in_span(const RingMatrix& g, const RingMatrix& v) {
    return solve_in_span(smith_normal_form(g), v);
}

std::size_t matrix_rank(const RingMatrix& g) { return smith_normal_form(g).rank; }

}  // namespace maslovkit
