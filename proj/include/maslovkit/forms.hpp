#pragma once

#include <string>
#include <vector>

#include "maslovkit/matrix.hpp"

namespace maslovkit {

/// ±hermitian form given by its Gram matrix: dagger(matrix) = sign * matrix.
/// Construction does not verify the symmetry; see check_hermitian.
class HermitianForm {
public:
    HermitianForm(RingMatrix matrix, int sign = 1);

    const RingMatrix& matrix() const noexcept { return matrix_; }
    int sign() const noexcept { return sign_; }
    const RingDescriptor& ring() const noexcept { return matrix_.ring(); }
    std::size_t dim() const noexcept { return matrix_.rows(); }

    HermitianForm operator-() const { return HermitianForm(-matrix_, sign_); }
    bool operator==(const HermitianForm& o) const { return sign_ == o.sign_ && matrix_ == o.matrix_; }

    /// Nondegenerate means the adjoint map is an isomorphism: det is a unit.
    bool is_nondegenerate() const;
    /// Gram matrix of the dual form; NotAUnit when degenerate.
    HermitianForm inverse() const;
    HermitianForm eval_T(const Fp& t) const { return HermitianForm(matrix_.eval_T(t), sign_); }
    /// dagger(a) * F * a.
    HermitianForm congruent(const RingMatrix& a) const;

private:
    RingMatrix matrix_;
    int sign_;
};

bool check_hermitian(const HermitianForm& f);
/// FormError unless f is +hermitian.
void require_plus_hermitian(const HermitianForm& f, const char* what);

HermitianForm direct_sum(const HermitianForm& a, const HermitianForm& b);
/// λ± on L ⊕ L* with L of rank n.
HermitianForm hyperbolic_form(std::size_t n, int sign, const RingDescriptor& ring);
/// Diagonal form <a_1, ..., a_n> over F_p.
HermitianForm diagonal_form(int64_t p, const std::vector<int64_t>& entries);

/// Diagonal entries of a congruent diagonal form (d = 0, symmetric, nondegenerate).
std::vector<Fp> diagonalize(const HermitianForm& f);

/// Element of W+(F_p): dimension parity and the square class of the signed
/// discriminant (-1)^(n(n-1)/2) det. The group is Z/2+Z/2 for p = 1 mod 4 and
/// Z/4 with index rank_parity + 2 disc_class for p = 3 mod 4.
struct WittClass {
    int64_t p = 3;
    int rank_parity = 0;
    int disc_class = 0;

    bool is_zero() const noexcept { return rank_parity == 0 && disc_class == 0; }
    bool operator==(const WittClass& o) const noexcept {
        return p == o.p && rank_parity == o.rank_parity && disc_class == o.disc_class;
    }
    /// "0", "<1>", "<t>", "<1>+<t>" (p = 1 mod 4) or "0".."3" (p = 3 mod 4).
    std::string to_string() const;
    static WittClass from_string(int64_t p, const std::string& s);
    /// Position in the canonical enumeration 0..3 used by to_string.
    int index() const noexcept;
};

WittClass witt_zero(int64_t p);
/// Class of the one-dimensional form <a>.
WittClass witt_of(const Fp& a);
WittClass witt_class(const HermitianForm& f);
WittClass witt_add(const WittClass& a, const WittClass& b);
WittClass witt_neg(const WittClass& a);
WittClass witt_sub(const WittClass& a, const WittClass& b);
bool in_fundamental_ideal(const WittClass& c) noexcept;

/// Invariants that make sense over any F_p^d: dimension parity and determinant.
struct FormInvariants {
    int rank_parity;
    LaurentPolynomial determinant;
};
FormInvariants form_invariants(const HermitianForm& f);

/// [L; q0, q1] with q0, q1 nondegenerate on the same free module.
struct FormTriple {
    HermitianForm q0;
    HermitianForm q1;
};
WittClass triple_delta(const FormTriple& t);

}  // namespace maslovkit
