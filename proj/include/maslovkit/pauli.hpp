#pragma once

#include <vector>

#include "maslovkit/forms.hpp"
#include "maslovkit/smith.hpp"

namespace maslovkit {

/// H^-(L) = L ⊕ L* with L free of rank N; coordinates are X block then Z block.
class PauliModule {
public:
    PauliModule(RingDescriptor ring, std::size_t n);

    const RingDescriptor& ring() const noexcept { return ring_; }
    std::size_t N() const noexcept { return n_; }
    std::size_t dim() const noexcept { return 2 * n_; }
    bool operator==(const PauliModule& o) const noexcept { return ring_ == o.ring_ && n_ == o.n_; }

    /// λ⁻ = (0 1; -1 0) in N x N blocks.
    RingMatrix lambda() const;

private:
    RingDescriptor ring_;
    std::size_t n_;
};

/// Submodule given by generator columns (2N x k).
class StabilizerModule {
public:
    StabilizerModule(PauliModule ambient, RingMatrix generators);

    const PauliModule& ambient() const noexcept { return ambient_; }
    const RingMatrix& generators() const noexcept { return generators_; }

private:
    PauliModule ambient_;
    RingMatrix generators_;
};

/// L = span of the X basis vectors.
StabilizerModule standard_lagrangian(const PauliModule& ambient);
/// L* = span of the Z basis vectors.
StabilizerModule dual_lagrangian(const PauliModule& ambient);

/// A 2N x 2N matrix M with dagger(M) λ⁻ M = λ⁻, checked on construction.
class CliffordUnitary {
public:
    CliffordUnitary(PauliModule ambient, RingMatrix matrix);

    const PauliModule& ambient() const noexcept { return ambient_; }
    const RingMatrix& matrix() const noexcept { return matrix_; }

    CliffordUnitary operator*(const CliffordUnitary& o) const;
    CliffordUnitary inverse() const;
    CliffordUnitary eval_T(const Fp& t) const;

    static CliffordUnitary identity(const PauliModule& ambient);

private:
    PauliModule ambient_;
    RingMatrix matrix_;
};

bool is_lambda_unitary(const RingMatrix& m);

/// dagger(v) λ⁻ w for column vectors v, w of length 2N.
LaurentPolynomial pairing(const RingMatrix& v, const RingMatrix& w);
/// Exponent of ω in the commutator of the Pauli operators of v and w.
Fp commutation_phase(const RingMatrix& v, const RingMatrix& w);

bool is_isotropic(const StabilizerModule& s);
bool is_coisotropic(const StabilizerModule& s);
bool is_direct_summand(const StabilizerModule& s);
bool is_lagrangian(const StabilizerModule& s);

struct LagrangianReport {
    bool isotropic;
    bool coisotropic;
    bool summand;
    bool lagrangian;
};
LagrangianReport lagrangian_report(const StabilizerModule& s);

/// Column spans agree (d <= 1).
bool same_span(const StabilizerModule& a, const StabilizerModule& b);
bool is_transversal(const StabilizerModule& a, const StabilizerModule& b);

enum class Elementary { E0, E1 };
/// E0(q) = (1 0; q 1), E1(q) = (1 q; 0 1) for q +hermitian.
CliffordUnitary elementary_unitary(Elementary which, const HermitianForm& q);
/// diag(a, dagger(a)^-1).
CliffordUnitary hyperbolic_unitary(const RingMatrix& a);

/// u G with zero columns dropped.
StabilizerModule apply(const CliffordUnitary& u, const StabilizerModule& s);

/// Six block matrices whose product is diag(a, a^-1). They are plain matrices,
/// λ⁻-unitary only when a is hermitian.
std::vector<RingMatrix> diag_identity_decomposition(const RingMatrix& a);

struct CircuitElement {
    enum class Kind { E0, E1, H };
    Kind kind;
    RingMatrix payload;  // a form for E0/E1, an invertible matrix for H
};
using Circuit = std::vector<CircuitElement>;

CliffordUnitary circuit_element_unitary(const CircuitElement& e);
/// The first element acts first: U = U_k ... U_1.
CliffordUnitary circuit_unitary(const PauliModule& ambient, const Circuit& c);
StabilizerModule apply_circuit(const Circuit& c, const StabilizerModule& s);

}  // namespace maslovkit
