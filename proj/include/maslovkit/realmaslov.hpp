#pragma once

// Maslov index of loops T -> [P(T) : P'(T)] in the real projective line,
// through the Sturm remainder sequence of (P, P').

#include <vector>

#include <Eigen/Dense>

namespace maslovkit {

/// Real polynomial, lowest degree first. Leading coefficients below
/// 1e-9 relative to the largest one are trimmed.
class RealPolynomial {
public:
    explicit RealPolynomial(std::vector<double> coefficients);

    const std::vector<double>& coefficients() const noexcept { return c_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    double operator()(double t) const;
    RealPolynomial derivative() const;
    double scale() const;

private:
    std::vector<double> c_;
};

/// f_0 = P, f_1 = P', f_{i-1} = q_i f_i - f_{i+1}, ending at the constant
/// f_m = terminal with f_{m+1} = 0, so that
/// (P, P')^T = M(q_1) ... M(q_m) (terminal, 0)^T with M(q) = (q -1; 1 0).
struct ResidueSequence {
    std::vector<RealPolynomial> quotients;
    double terminal = 0;
};

/// DegenerateInput for deg P < 1 or a repeated root.
ResidueSequence sturm_residues(const RealPolynomial& p);

/// m x m tridiagonal: q_i(t) on the diagonal, -1 beside it.
Eigen::MatrixXd residue_signature_form(const ResidueSequence& seq, double t);

/// Number of positive minus negative eigenvalues after diagonal equilibration;
/// DegenerateInput when an eigenvalue falls inside 1e-7 times the spectral norm.
int signature(const Eigen::MatrixXd& s);

/// max(|P(t) - x(t)|, |P'(t) - y(t)|) / max(|P(t)|, |P'(t)|, 1) where
/// (x, y) is the companion product applied to (terminal, 0).
double linearization_residual(const RealPolynomial& p, const ResidueSequence& seq, double t);

/// ½ (sign S(1) - sign S(0)). EndpointRoot if P(0) or P(1) vanishes.
int real_maslov(const RealPolynomial& p);

/// 4u^3 - 6u^2 + 1 with u = T + 1/sqrt(2); its loop has degree one.
RealPolynomial cubic_example_polynomial();

}  // namespace maslovkit
