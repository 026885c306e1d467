#include "maslovkit/forms.hpp"

namespace maslovkit {

HermitianForm::HermitianForm(RingMatrix matrix, int sign) : matrix_(std::move(matrix)), sign_(sign) {
    if (sign != 1 && sign != -1) fail(ErrorCode::FormError, "form sign must be +1 or -1");
    if (!matrix_.is_square()) fail(ErrorCode::ShapeError, "form matrix must be square");
}

bool HermitianForm::is_nondegenerate() const { return is_unit_matrix(matrix_); }

HermitianForm HermitianForm::inverse() const {
    if (!is_nondegenerate()) fail(ErrorCode::DegenerateForm, "inverse of a degenerate form");
    return HermitianForm(matrix_.inverse(), sign_);
}

HermitianForm HermitianForm::congruent(const RingMatrix& a) const {
    return HermitianForm(a.dagger() * matrix_ * a, sign_);
}

bool check_hermitian(const HermitianForm& f) {
    const RingMatrix& m = f.matrix();
    return f.sign() == 1 ? m.dagger() == m : m.dagger() == -m;
}

void require_plus_hermitian(const HermitianForm& f, const char* what) {
    if (f.sign() != 1 || !check_hermitian(f)) {
        fail(ErrorCode::FormError, std::string(what) + ": form is not +hermitian");
    }
}

HermitianForm direct_sum(const HermitianForm& a, const HermitianForm& b) {
    if (a.sign() != b.sign()) fail(ErrorCode::FormError, "direct sum of forms with different signs");
    return HermitianForm(RingMatrix::block_diag(a.matrix(), b.matrix()), a.sign());
}

HermitianForm hyperbolic_form(std::size_t n, int sign, const RingDescriptor& ring) {
    RingMatrix m(ring, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, n + i) = LaurentPolynomial(ring, 1);
        m(n + i, i) = LaurentPolynomial(ring, sign);
    }
    return HermitianForm(std::move(m), sign);
}

HermitianForm diagonal_form(int64_t p, const std::vector<int64_t>& entries) {
    RingDescriptor ring(p);
    RingMatrix m(ring, entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = LaurentPolynomial(ring, entries[i]);
    return HermitianForm(std::move(m), 1);
}

namespace {

void require_field_form(const HermitianForm& f, const char* what) {
    if (f.ring().spatial_vars() != 0 || f.ring().has_T()) {
        fail(ErrorCode::UnsupportedRing, std::string(what) + " is only decided over F_p, got " + f.ring().to_string());
    }
    require_plus_hermitian(f, what);
}

}  // namespace

std::vector<Fp> diagonalize(const HermitianForm& f) {
    require_field_form(f, "diagonalize");
    const int64_t p = f.ring().p();
    const std::size_t n = f.dim();
    std::vector<std::vector<Fp>> b(n, std::vector<Fp>(n, Fp(0, p)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i][j] = f.matrix()(i, j).constant_value();

    std::vector<Fp> out;
    // b holds the Gram matrix on the current complement, indices k..n-1.
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i) {
            if (!b[i][i].is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv == n) {
            // All self-pairings vanish: e_i -> e_i + e_j for the first nonzero b_ij.
            for (std::size_t i = k; i < n && piv == n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (!b[i][j].is_zero()) {
                        for (std::size_t c = k; c < n; ++c) b[i][c] = b[i][c] + b[j][c];
                        for (std::size_t r = k; r < n; ++r) b[r][i] = b[r][i] + b[r][j];
                        piv = i;
                        break;
                    }
                }
            }
            if (piv == n) fail(ErrorCode::DegenerateForm, "form is degenerate");
        }
        std::swap(b[k], b[piv]);
        for (auto& row : b) std::swap(row[k], row[piv]);
        const Fp inv = b[k][k].inv();
        for (std::size_t i = k + 1; i < n; ++i) {
            const Fp f_i = b[i][k] * inv;
            if (f_i.is_zero()) continue;
            for (std::size_t c = k; c < n; ++c) b[i][c] = b[i][c] - f_i * b[k][c];
            for (std::size_t r = k; r < n; ++r) b[r][i] = b[r][i] - f_i * b[r][k];
        }
        out.push_back(b[k][k]);
    }
    return out;
}

std::string WittClass::to_string() const {
    const int i = index();
    if (p % 4 == 3) return std::to_string(i);
    static const char* names[] = {"0", "<1>", "<t>", "<1>+<t>"};
    return names[i];
}

int WittClass::index() const noexcept {
    if (p % 4 == 3) return rank_parity + 2 * disc_class;
    if (rank_parity == 0) return disc_class == 0 ? 0 : 3;
    return disc_class == 0 ? 1 : 2;
}

WittClass WittClass::from_string(int64_t p, const std::string& s) {
    for (int rp = 0; rp < 2; ++rp) {
        for (int dc = 0; dc < 2; ++dc) {
            WittClass c{p, rp, dc};
            if (c.to_string() == s) return c;
        }
    }
    fail(ErrorCode::ParseError, "unknown Witt class '" + s + "' for p = " + std::to_string(p));
}

WittClass witt_zero(int64_t p) {
    Fp(0, p);
    return WittClass{p, 0, 0};
}

WittClass witt_of(const Fp& a) { return WittClass{a.modulus(), 1, is_square(a) ? 0 : 1}; }

WittClass witt_class(const HermitianForm& f) {
    require_field_form(f, "witt_class");
    const int64_t p = f.ring().p();
    const std::size_t n = f.dim();
    const Fp det = f.matrix().determinant().constant_value();
    if (det.is_zero()) fail(ErrorCode::DegenerateForm, "form is degenerate");
    const Fp signed_det = ((n * (n - 1) / 2) % 2 == 0) ? det : -det;
    return WittClass{p, static_cast<int>(n % 2), is_square(signed_det) ? 0 : 1};
}

namespace {

void same_p(const WittClass& a, const WittClass& b) {
    if (a.p != b.p) fail(ErrorCode::RingMismatch, "Witt classes over different fields");
}

WittClass from_z4(int64_t p, int idx) {
    idx = ((idx % 4) + 4) % 4;
    return WittClass{p, idx & 1, idx >> 1};
}

}  // namespace

WittClass witt_add(const WittClass& a, const WittClass& b) {
    same_p(a, b);
    if (a.p % 4 == 3) return from_z4(a.p, a.index() + b.index());
    return WittClass{a.p, a.rank_parity ^ b.rank_parity, a.disc_class ^ b.disc_class};
}

WittClass witt_neg(const WittClass& a) {
    if (a.p % 4 == 3) return from_z4(a.p, -a.index());
    return a;
}

WittClass witt_sub(const WittClass& a, const WittClass& b) { return witt_add(a, witt_neg(b)); }

bool in_fundamental_ideal(const WittClass& c) noexcept { return c.rank_parity == 0; }

FormInvariants form_invariants(const HermitianForm& f) {
    return FormInvariants{static_cast<int>(f.dim() % 2), f.matrix().determinant()};
}

WittClass triple_delta(const FormTriple& t) {
    require_same_ring(t.q0.ring(), t.q1.ring(), "form triple");
    if (t.q0.dim() != t.q1.dim()) fail(ErrorCode::ShapeError, "form triple: forms of different dimension");
    return witt_sub(witt_class(t.q0), witt_class(t.q1));
}

}  // namespace maslovkit
