#pragma once

#include <optional>
#include <vector>

#include "maslovkit/pauli.hpp"

namespace maslovkit {

/// +hermitian forms (q_m, ..., q_n), each N x N; q_k lives on L for even k
/// and on L* for odd k. The ring may carry the loop parameter T.
class SturmSequence {
public:
    SturmSequence(RingDescriptor ring, std::size_t n, std::vector<RingMatrix> forms, int start = 0);

    const RingDescriptor& ring() const noexcept { return ring_; }
    std::size_t N() const noexcept { return n_; }
    int start() const noexcept { return start_; }
    /// Index of the last form (start - 1 when empty).
    int end() const noexcept { return start_ + static_cast<int>(forms_.size()) - 1; }
    const std::vector<RingMatrix>& forms() const noexcept { return forms_; }
    std::size_t size() const noexcept { return forms_.size(); }

    SturmSequence eval_T(const Fp& t) const;
    /// The first count forms.
    SturmSequence prefix(std::size_t count) const;
    /// Appends zero forms until the type is (start, start + 2n).
    SturmSequence padded_even() const;
    SturmSequence with_zero_forms(std::size_t count) const;

private:
    RingDescriptor ring_;
    std::size_t n_;
    std::vector<RingMatrix> forms_;
    int start_;
};

/// E(q) = E_m(q_m) ... E_n(q_n) with E_k = E0 for even k, E1 for odd k.
CliffordUnitary sturm_unitary(const SturmSequence& seq);
/// Block tridiagonal form on ⊕ L_k: diagonal (-1)^k q_k, identity off the diagonal.
HermitianForm sturm_tridiagonal(const SturmSequence& seq);

struct TransversalWitness {
    StabilizerModule target;   // E(q)·L ⊕ L_{1,2n-1}
    StabilizerModule witness;  // graph of S(q') over L_{0,2n-1}
    HermitianForm form;        // S(q')
};
/// For a T-free sequence of type (0, 2n). For n = 0 the witness is L*.
TransversalWitness transversal_witness(const SturmSequence& seq);

/// A Sturm sequence of type (0, 2n) whose unitary fixes L at T = 0 and T = 1.
class LagrangianLoop {
public:
    const SturmSequence& sequence() const noexcept { return seq_; }
    std::size_t N() const noexcept { return seq_.N(); }

private:
    explicit LagrangianLoop(SturmSequence seq) : seq_(std::move(seq)) {}
    SturmSequence seq_;
    friend LagrangianLoop validate_loop(const SturmSequence& seq);
};

/// Pads odd types with a zero form; NotALoop unless E(q)(t)·L = L at t = 0, 1.
LagrangianLoop validate_loop(const SturmSequence& seq);

/// Loop through L based on the pair (q0, q1): Sturm sequence
/// ((1-T)q0 + T q1, (T-1)q0^-1 - T q1^-1, 1, -1, 1).
LagrangianLoop loop_from_pair(const HermitianForm& q0, const HermitianForm& q1);

/// Appends 2k zero forms.
LagrangianLoop pad_loop(const LagrangianLoop& loop, std::size_t k);
/// Block direct sum; the shorter sequence is padded with zero forms.
LagrangianLoop direct_sum(const LagrangianLoop& a, const LagrangianLoop& b);
/// Constant loop at L of rank N.
LagrangianLoop constant_loop(const RingDescriptor& ring, std::size_t n);

struct MaslovResult {
    HermitianForm form;              // S(1) ⊕ -S(0)^-1
    std::optional<WittClass> witt;   // only over F_p
    FormInvariants invariants;
};
MaslovResult maslov_index(const LagrangianLoop& loop);

/// Maps (x_k, x_{k+1}) to (x_{k-1}, x_k): (-1)^(k-1) σ_{k-1} E_k(q) σ_k^-1.
RingMatrix two_term_step(int k, const RingMatrix& q);
/// The same map read off x_{k-1} + (-1)^k q x_k + x_{k+1} = 0.
RingMatrix three_term_step(int k, const RingMatrix& q);
/// Both descriptions agree for every form of the sequence.
bool three_term_consistent(const SturmSequence& seq);

/// e(t) = (1 t q^-1; 0 1)(1 0; -t q/2 1); dagger(e(1)) (q ⊕ -q^-1) e(1) = λ⁺.
RingMatrix trivmas_homotopy(const HermitianForm& q, const Fp& t);
/// e(t) = E0(t/2) E1(-t) E0(t) E1(-t/2) with scalar blocks on L ⊕ L;
/// dagger(e(1)) λ⁺ e(1) = -λ⁺.
RingMatrix lambda_flip_homotopy(const RingDescriptor& ring, const Fp& t, std::size_t n);

}  // namespace maslovkit
