#include "maslovkit/sturm.hpp"

#include <algorithm>

namespace maslovkit {

namespace {

bool even(int k) { return k % 2 == 0; }

RingMatrix zero_form(const RingDescriptor& r, std::size_t n) { return RingMatrix(r, n, n); }

// λ⁻ with N x N blocks, the matrix of σ.
RingMatrix sigma(const RingDescriptor& r, std::size_t n) { return hyperbolic_form(n, -1, r).matrix(); }

}  // namespace

SturmSequence::SturmSequence(RingDescriptor ring, std::size_t n, std::vector<RingMatrix> forms, int start)
    : ring_(std::move(ring)), n_(n), forms_(std::move(forms)), start_(start) {
    if (n_ == 0) fail(ErrorCode::ShapeError, "Sturm sequence needs N >= 1");
    for (std::size_t i = 0; i < forms_.size(); ++i) {
        const RingMatrix& q = forms_[i];
        require_same_ring(ring_, q.ring(), "Sturm sequence form");
        if (q.rows() != n_ || q.cols() != n_) {
            fail(ErrorCode::ShapeError, "Sturm form " + std::to_string(start_ + static_cast<int>(i)) + " is not " +
                                            std::to_string(n_) + "x" + std::to_string(n_));
        }
        if (!(q.dagger() == q)) {
            fail(ErrorCode::FormError, "Sturm form " + std::to_string(start_ + static_cast<int>(i)) + " is not +hermitian");
        }
    }
}

SturmSequence SturmSequence::eval_T(const Fp& t) const {
    std::vector<RingMatrix> out;
    for (const auto& q : forms_) out.push_back(q.eval_T(t));
    return SturmSequence(ring_.without_T(), n_, std::move(out), start_);
}

SturmSequence SturmSequence::prefix(std::size_t count) const {
    count = std::min(count, forms_.size());
    return SturmSequence(ring_, n_, std::vector<RingMatrix>(forms_.begin(), forms_.begin() + count), start_);
}

SturmSequence SturmSequence::with_zero_forms(std::size_t count) const {
    std::vector<RingMatrix> out = forms_;
    for (std::size_t i = 0; i < count; ++i) out.push_back(zero_form(ring_, n_));
    return SturmSequence(ring_, n_, std::move(out), start_);
}

SturmSequence SturmSequence::padded_even() const {
    // Type (m, m+2n) has an odd number of forms.
    return forms_.size() % 2 == 1 ? *this : with_zero_forms(1);
}

CliffordUnitary sturm_unitary(const SturmSequence& seq) {
    const PauliModule ambient(seq.ring(), seq.N());
    RingMatrix m = RingMatrix::identity(seq.ring(), ambient.dim());
    const RingMatrix id = RingMatrix::identity(seq.ring(), seq.N());
    const RingMatrix zero = zero_form(seq.ring(), seq.N());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const RingMatrix& q = seq.forms()[i];
        const int k = seq.start() + static_cast<int>(i);
        m = m * (even(k) ? RingMatrix::blocks(id, zero, q, id) : RingMatrix::blocks(id, q, zero, id));
    }
    return CliffordUnitary(ambient, std::move(m));
}

HermitianForm sturm_tridiagonal(const SturmSequence& seq) {
    const std::size_t n = seq.N(), len = seq.size();
    RingMatrix s(seq.ring(), n * len, n * len);
    const RingMatrix id = RingMatrix::identity(seq.ring(), n);
    for (std::size_t i = 0; i < len; ++i) {
        const int k = seq.start() + static_cast<int>(i);
        s.set_block(i * n, i * n, even(k) ? seq.forms()[i] : -seq.forms()[i]);
        if (i + 1 < len) {
            s.set_block(i * n, (i + 1) * n, id);
            s.set_block((i + 1) * n, i * n, id);
        }
    }
    return HermitianForm(std::move(s), 1);
}

TransversalWitness transversal_witness(const SturmSequence& seq) {
    if (seq.start() != 0 || seq.size() % 2 != 1) {
        fail(ErrorCode::ShapeError, "transversal witness needs a sequence of type (0, 2n)");
    }
    if (seq.ring().has_T()) fail(ErrorCode::DomainError, "evaluate T before building a transversal witness");
    const RingDescriptor& r = seq.ring();
    const std::size_t n = seq.N();
    const CliffordUnitary e = sturm_unitary(seq);
    if (seq.size() == 1) {
        const PauliModule h(r, n);
        return TransversalWitness{apply(e, standard_lagrangian(h)), dual_lagrangian(h), HermitianForm(RingMatrix(r, 0, 0))};
    }
    const std::size_t big = (seq.size() - 1) * n;  // rank of L_{0,2n-1}
    const PauliModule h(r, big);
    const RingMatrix lcols = e.matrix().block(0, 0, 2 * n, n);

    RingMatrix target(r, 2 * big, big);
    target.set_block(0, 0, lcols.block(0, 0, n, n));
    target.set_block(big, 0, lcols.block(n, 0, n, n));
    target.set_block(n, n, RingMatrix::identity(r, big - n));

    HermitianForm s = sturm_tridiagonal(seq.prefix(seq.size() - 1));
    RingMatrix graph = RingMatrix::vstack(RingMatrix::identity(r, big), s.matrix());
    return TransversalWitness{StabilizerModule(h, std::move(target)), StabilizerModule(h, std::move(graph)), std::move(s)};
}

LagrangianLoop validate_loop(const SturmSequence& seq) {
    if (seq.start() != 0) fail(ErrorCode::NotALoop, "a loop is a Sturm sequence starting at index 0");
    SturmSequence padded = seq.padded_even();
    const std::size_t n = seq.N();
    const int64_t p = seq.ring().p();
    for (int64_t t : {0, 1}) {
        const RingMatrix m = sturm_unitary(padded.eval_T(Fp(t, p))).matrix();
        if (!m.block(n, 0, n, n).is_zero()) {
            fail(ErrorCode::NotALoop, "E(q)(" + std::to_string(t) + ") does not fix the Lagrangian L");
        }
    }
    return LagrangianLoop(std::move(padded));
}

LagrangianLoop loop_from_pair(const HermitianForm& q0, const HermitianForm& q1) {
    require_plus_hermitian(q0, "loop_from_pair q0");
    require_plus_hermitian(q1, "loop_from_pair q1");
    require_same_ring(q0.ring(), q1.ring(), "loop_from_pair");
    if (q0.ring().has_T()) fail(ErrorCode::DomainError, "loop_from_pair takes T-free forms");
    if (q0.dim() != q1.dim() || q0.dim() == 0) fail(ErrorCode::ShapeError, "loop_from_pair: forms of different rank");
    if (!q0.is_nondegenerate() || !q1.is_nondegenerate()) fail(ErrorCode::DegenerateForm, "loop_from_pair needs nondegenerate forms");

    const RingDescriptor rt = q0.ring().with_T();
    const std::size_t n = q0.dim();
    const LaurentPolynomial T = LaurentPolynomial::loop_parameter(rt);
    const LaurentPolynomial one(rt, 1);
    const RingMatrix a0 = q0.matrix().lift_to_T(), a1 = q1.matrix().lift_to_T();
    const RingMatrix i0 = q0.matrix().inverse().lift_to_T(), i1 = q1.matrix().inverse().lift_to_T();
    const RingMatrix id = RingMatrix::identity(rt, n);
    std::vector<RingMatrix> forms{
        a0.scaled(one - T) + a1.scaled(T),
        i0.scaled(T - one) - i1.scaled(T),
        id,
        -id,
        id,
    };
    return validate_loop(SturmSequence(rt, n, std::move(forms)));
}

LagrangianLoop pad_loop(const LagrangianLoop& loop, std::size_t k) {
    return validate_loop(loop.sequence().with_zero_forms(2 * k));
}

LagrangianLoop direct_sum(const LagrangianLoop& a, const LagrangianLoop& b) {
    SturmSequence sa = a.sequence(), sb = b.sequence();
    if (sa.ring().p() != sb.ring().p() || sa.ring().spatial_vars() != sb.ring().spatial_vars()) {
        fail(ErrorCode::RingMismatch, "direct sum of loops over different rings");
    }
    const RingDescriptor r = (sa.ring().has_T() || sb.ring().has_T()) ? sa.ring().with_T() : sa.ring();
    auto to_ring = [&](const SturmSequence& s) {
        if (s.ring() == r) return s;
        std::vector<RingMatrix> forms;
        for (const auto& q : s.forms()) forms.push_back(q.lift_to_T());
        return SturmSequence(r, s.N(), std::move(forms), s.start());
    };
    sa = to_ring(sa);
    sb = to_ring(sb);
    if (sa.size() < sb.size()) sa = sa.with_zero_forms(sb.size() - sa.size());
    if (sb.size() < sa.size()) sb = sb.with_zero_forms(sa.size() - sb.size());
    std::vector<RingMatrix> forms;
    for (std::size_t i = 0; i < sa.size(); ++i) forms.push_back(RingMatrix::block_diag(sa.forms()[i], sb.forms()[i]));
    return validate_loop(SturmSequence(r, sa.N() + sb.N(), std::move(forms)));
}

LagrangianLoop constant_loop(const RingDescriptor& ring, std::size_t n) {
    return validate_loop(SturmSequence(ring, n, {RingMatrix(ring, n, n)}));
}

MaslovResult maslov_index(const LagrangianLoop& loop) {
    const SturmSequence& seq = loop.sequence();
    const int64_t p = seq.ring().p();
    const HermitianForm s = sturm_tridiagonal(seq.prefix(seq.size() - 1));
    const HermitianForm s0 = s.eval_T(Fp(0, p)), s1 = s.eval_T(Fp(1, p));
    if (!s0.is_nondegenerate() || !s1.is_nondegenerate()) {
        fail(ErrorCode::InternalInvariantViolation, "endpoint form S(0) or S(1) is degenerate for a validated loop");
    }
    HermitianForm form = direct_sum(s1, -s0.inverse());
    std::optional<WittClass> witt;
    if (form.ring().spatial_vars() == 0) witt = witt_class(form);
    FormInvariants inv = form_invariants(form);
    return MaslovResult{std::move(form), witt, std::move(inv)};
}

RingMatrix two_term_step(int k, const RingMatrix& q) {
    const RingDescriptor& r = q.ring();
    const std::size_t n = q.rows();
    const RingMatrix id = RingMatrix::identity(r, n), zero(r, n, n);
    const RingMatrix s = sigma(r, n);
    if (even(k)) {
        // σ_{k-1} = σ, σ_k = 1, sign -1.
        return -(s * RingMatrix::blocks(id, zero, q, id));
    }
    // σ_{k-1} = 1, σ_k^-1 = σ^-1 = -σ, sign +1.
    return RingMatrix::blocks(id, q, zero, id) * (-s);
}

RingMatrix three_term_step(int k, const RingMatrix& q) {
    const RingDescriptor& r = q.ring();
    const std::size_t n = q.rows();
    const RingMatrix id = RingMatrix::identity(r, n), zero(r, n, n);
    // x_{k-1} = -(-1)^k q x_k - x_{k+1}
    return RingMatrix::blocks(even(k) ? -q : q, -id, id, zero);
}

bool three_term_consistent(const SturmSequence& seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const int k = seq.start() + static_cast<int>(i);
        if (!(two_term_step(k, seq.forms()[i]) == three_term_step(k, seq.forms()[i]))) return false;
    }
    return true;
}

RingMatrix trivmas_homotopy(const HermitianForm& q, const Fp& t) {
    require_plus_hermitian(q, "trivmas_homotopy");
    if (!q.is_nondegenerate()) fail(ErrorCode::DegenerateForm, "trivmas_homotopy needs a nondegenerate form");
    const RingDescriptor& r = q.ring();
    const std::size_t n = q.dim();
    const RingMatrix id = RingMatrix::identity(r, n), zero(r, n, n);
    const LaurentPolynomial tt(r, t);
    const LaurentPolynomial half_t(r, t / Fp(2, r.p()));
    const RingMatrix upper = RingMatrix::blocks(id, q.matrix().inverse().scaled(tt), zero, id);
    const RingMatrix lower = RingMatrix::blocks(id, zero, q.matrix().scaled(-half_t), id);
    return upper * lower;
}

RingMatrix lambda_flip_homotopy(const RingDescriptor& ring, const Fp& t, std::size_t n) {
    if (t.modulus() != ring.p()) fail(ErrorCode::RingMismatch, "homotopy parameter from a different field");
    if (n == 0) fail(ErrorCode::ShapeError, "lambda_flip_homotopy needs N >= 1");
    const RingMatrix id = RingMatrix::identity(ring, n), zero(ring, n, n);
    auto scal = [&](const Fp& c) { return id.scaled(LaurentPolynomial(ring, c)); };
    auto e0 = [&](const Fp& c) { return RingMatrix::blocks(id, zero, scal(c), id); };
    auto e1 = [&](const Fp& c) { return RingMatrix::blocks(id, scal(c), zero, id); };
    const Fp half = t / Fp(2, ring.p());
    return e0(half) * e1(-t) * e0(t) * e1(-half);
}

}  // namespace maslovkit
