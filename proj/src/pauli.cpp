#include "maslovkit/pauli.hpp"

namespace maslovkit {

PauliModule::PauliModule(RingDescriptor ring, std::size_t n) : ring_(std::move(ring)), n_(n) {
    if (n == 0) fail(ErrorCode::ShapeError, "Pauli module needs N >= 1");
}

RingMatrix PauliModule::lambda() const { return hyperbolic_form(n_, -1, ring_).matrix(); }

StabilizerModule::StabilizerModule(PauliModule ambient, RingMatrix generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)) {
    require_same_ring(ambient_.ring(), generators_.ring(), "stabilizer generators");
    if (generators_.rows() != ambient_.dim()) {
        fail(ErrorCode::ShapeError, "stabilizer generators need " + std::to_string(ambient_.dim()) + " rows, got " +
                                        std::to_string(generators_.rows()));
    }
}

StabilizerModule standard_lagrangian(const PauliModule& a) {
    RingMatrix g(a.ring(), a.dim(), a.N());
    g.set_block(0, 0, RingMatrix::identity(a.ring(), a.N()));
    return StabilizerModule(a, g);
}

StabilizerModule dual_lagrangian(const PauliModule& a) {
    RingMatrix g(a.ring(), a.dim(), a.N());
    g.set_block(a.N(), 0, RingMatrix::identity(a.ring(), a.N()));
    return StabilizerModule(a, g);
}

bool is_lambda_unitary(const RingMatrix& m) {
    if (!m.is_square() || m.rows() % 2 != 0 || m.rows() == 0) return false;
    const RingMatrix lam = hyperbolic_form(m.rows() / 2, -1, m.ring()).matrix();
    return m.dagger() * lam * m == lam;
}

CliffordUnitary::CliffordUnitary(PauliModule ambient, RingMatrix matrix)
    : ambient_(std::move(ambient)), matrix_(std::move(matrix)) {
    require_same_ring(ambient_.ring(), matrix_.ring(), "unitary matrix");
    if (matrix_.rows() != ambient_.dim() || matrix_.cols() != ambient_.dim()) {
        fail(ErrorCode::ShapeError, "unitary must be " + std::to_string(ambient_.dim()) + "x" +
                                        std::to_string(ambient_.dim()));
    }
    if (!is_lambda_unitary(matrix_)) fail(ErrorCode::FormError, "matrix does not preserve λ⁻");
}

CliffordUnitary CliffordUnitary::operator*(const CliffordUnitary& o) const {
    if (!(ambient_ == o.ambient_)) fail(ErrorCode::ShapeError, "unitaries on different Pauli modules");
    return CliffordUnitary(ambient_, matrix_ * o.matrix_);
}

CliffordUnitary CliffordUnitary::inverse() const {
    // M^-1 = λ⁻^-1 dagger(M) λ⁻ = -λ⁻ dagger(M) λ⁻.
    const RingMatrix lam = ambient_.lambda();
    return CliffordUnitary(ambient_, -(lam * matrix_.dagger() * lam));
}

CliffordUnitary CliffordUnitary::eval_T(const Fp& t) const {
    return CliffordUnitary(PauliModule(ambient_.ring().without_T(), ambient_.N()), matrix_.eval_T(t));
}

CliffordUnitary CliffordUnitary::identity(const PauliModule& ambient) {
    return CliffordUnitary(ambient, RingMatrix::identity(ambient.ring(), ambient.dim()));
}

LaurentPolynomial pairing(const RingMatrix& v, const RingMatrix& w) {
    if (v.cols() != 1 || w.cols() != 1 || v.rows() != w.rows() || v.rows() % 2 != 0 || v.rows() == 0) {
        fail(ErrorCode::ShapeError, "pairing needs two column vectors of the same even length");
    }
    const RingMatrix lam = hyperbolic_form(v.rows() / 2, -1, v.ring()).matrix();
    return (v.dagger() * lam * w)(0, 0);
}

Fp commutation_phase(const RingMatrix& v, const RingMatrix& w) { return pairing(v, w).augment(); }

namespace {

RingMatrix gram(const StabilizerModule& s) {
    const RingMatrix& g = s.generators();
    return g.dagger() * s.ambient().lambda() * g;
}

// Every column of b lies in the span of a.
bool span_contains(const SmithDecomposition& snf_a, const RingMatrix& b) {
    for (std::size_t j = 0; j < b.cols(); ++j)
        if (!solve_in_span(snf_a, b.column_at(j))) return false;
    return true;
}

}  // namespace

bool is_isotropic(const StabilizerModule& s) { return gram(s).is_zero(); }

bool is_coisotropic(const StabilizerModule& s) {
    const RingMatrix& g = s.generators();
    const RingMatrix perp = kernel_basis(g.dagger() * s.ambient().lambda());
    return span_contains(smith_normal_form(g), perp);
}

bool is_direct_summand(const StabilizerModule& s) {
    const auto snf = smith_normal_form(s.generators());
    for (const auto& d : snf.invariant_factors())
        if (!d.is_one()) return false;
    return true;
}

LagrangianReport lagrangian_report(const StabilizerModule& s) {
    LagrangianReport r{};
    r.isotropic = is_isotropic(s);
    r.coisotropic = is_coisotropic(s);
    const auto snf = smith_normal_form(s.generators());
    r.summand = true;
    for (const auto& d : snf.invariant_factors())
        if (!d.is_one()) r.summand = false;
    r.lagrangian = r.isotropic && r.coisotropic && r.summand && snf.rank == s.ambient().N();
    return r;
}

bool is_lagrangian(const StabilizerModule& s) { return lagrangian_report(s).lagrangian; }

bool same_span(const StabilizerModule& a, const StabilizerModule& b) {
    if (!(a.ambient() == b.ambient())) return false;
    return span_contains(smith_normal_form(a.generators()), b.generators()) &&
           span_contains(smith_normal_form(b.generators()), a.generators());
}

bool is_transversal(const StabilizerModule& a, const StabilizerModule& b) {
    if (!(a.ambient() == b.ambient())) fail(ErrorCode::ShapeError, "transversality across different Pauli modules");
    const auto snf = smith_normal_form(RingMatrix::hstack(a.generators(), b.generators()));
    if (snf.rank != a.ambient().dim()) return false;
    for (const auto& d : snf.invariant_factors())
        if (!d.is_one()) return false;
    return true;
}

CliffordUnitary elementary_unitary(Elementary which, const HermitianForm& q) {
    require_plus_hermitian(q, which == Elementary::E0 ? "E0" : "E1");
    const std::size_t n = q.dim();
    if (n == 0) fail(ErrorCode::ShapeError, "elementary unitary of an empty form");
    const RingDescriptor& r = q.ring();
    const RingMatrix id = RingMatrix::identity(r, n);
    const RingMatrix zero(r, n, n);
    const RingMatrix m = which == Elementary::E0 ? RingMatrix::blocks(id, zero, q.matrix(), id)
                                                 : RingMatrix::blocks(id, q.matrix(), zero, id);
    return CliffordUnitary(PauliModule(r, n), m);
}

CliffordUnitary hyperbolic_unitary(const RingMatrix& a) {
    if (!a.is_square() || a.rows() == 0) fail(ErrorCode::ShapeError, "hyperbolic unitary needs a square matrix");
    if (!is_unit_matrix(a)) fail(ErrorCode::NotAUnit, "hyperbolic unitary of a non-invertible matrix");
    return CliffordUnitary(PauliModule(a.ring(), a.rows()), RingMatrix::block_diag(a, a.dagger().inverse()));
}

StabilizerModule apply(const CliffordUnitary& u, const StabilizerModule& s) {
    if (!(u.ambient() == s.ambient())) fail(ErrorCode::ShapeError, "unitary and module on different Pauli modules");
    return StabilizerModule(s.ambient(), (u.matrix() * s.generators()).drop_zero_columns());
}

std::vector<RingMatrix> diag_identity_decomposition(const RingMatrix& a) {
    if (!a.is_square() || a.rows() == 0) fail(ErrorCode::ShapeError, "decomposition needs a square matrix");
    const RingDescriptor& r = a.ring();
    const std::size_t n = a.rows();
    const RingMatrix id = RingMatrix::identity(r, n);
    const RingMatrix zero(r, n, n);
    const RingMatrix ainv = a.inverse();
    auto upper = [&](const RingMatrix& b) { return RingMatrix::blocks(id, b, zero, id); };
    auto lower = [&](const RingMatrix& b) { return RingMatrix::blocks(id, zero, b, id); };
    return {upper(a), lower(-ainv), upper(a), lower(id), upper(-id), lower(id)};
}

CliffordUnitary circuit_element_unitary(const CircuitElement& e) {
    switch (e.kind) {
        case CircuitElement::Kind::E0: return elementary_unitary(Elementary::E0, HermitianForm(e.payload, 1));
        case CircuitElement::Kind::E1: return elementary_unitary(Elementary::E1, HermitianForm(e.payload, 1));
        case CircuitElement::Kind::H: return hyperbolic_unitary(e.payload);
    }
    fail(ErrorCode::InternalInvariantViolation, "unknown circuit element");
}

CliffordUnitary circuit_unitary(const PauliModule& ambient, const Circuit& c) {
    CliffordUnitary u = CliffordUnitary::identity(ambient);
    for (const auto& e : c) u = circuit_element_unitary(e) * u;
    return u;
}

StabilizerModule apply_circuit(const Circuit& c, const StabilizerModule& s) {
    return apply(circuit_unitary(s.ambient(), c), s);
}

}  // namespace maslovkit
