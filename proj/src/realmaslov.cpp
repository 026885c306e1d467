#include "maslovkit/realmaslov.hpp"

#include <algorithm>
#include <cmath>

#include "maslovkit/errors.hpp"

namespace maslovkit {

namespace {

constexpr double kZeroTol = 1e-9;
constexpr double kGuardBand = 1e-7;

// f = q g + r by long division.
std::pair<RealPolynomial, RealPolynomial> divide(const RealPolynomial& f, const RealPolynomial& g) {
    std::vector<double> r = f.coefficients();
    const auto& gc = g.coefficients();
    const int dg = g.degree();
    const int df = f.degree();
    if (df < dg) return {RealPolynomial({}), f};
    std::vector<double> q(df - dg + 1, 0.0);
    for (int k = df - dg; k >= 0; --k) {
        const double c = r[k + dg] / gc[dg];
        q[k] = c;
        for (int j = 0; j <= dg; ++j) r[k + j] -= c * gc[j];
        r[k + dg] = 0.0;
    }
    r.resize(dg);
    // Cancellation noise relative to the dividend is treated as zero.
    const double tol = kZeroTol * f.scale();
    for (auto& v : r)
        if (std::abs(v) <= tol) v = 0.0;
    return {RealPolynomial(std::move(q)), RealPolynomial(std::move(r))};
}

}  // namespace

RealPolynomial::RealPolynomial(std::vector<double> coefficients) : c_(std::move(coefficients)) {
    double big = 0;
    for (double v : c_) {
        if (!std::isfinite(v)) fail(ErrorCode::DomainError, "polynomial coefficient is not finite");
        big = std::max(big, std::abs(v));
    }
    while (!c_.empty() && std::abs(c_.back()) <= kZeroTol * big) c_.pop_back();
}

double RealPolynomial::operator()(double t) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

RealPolynomial RealPolynomial::derivative() const {
    std::vector<double> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(static_cast<double>(k) * c_[k]);
    return RealPolynomial(std::move(d));
}

double RealPolynomial::scale() const {
    double big = 0;
    for (double v : c_) big = std::max(big, std::abs(v));
    return big;
}

ResidueSequence sturm_residues(const RealPolynomial& p) {
    if (p.degree() < 1) fail(ErrorCode::DegenerateInput, "need a polynomial of degree >= 1");
    ResidueSequence seq;
    RealPolynomial prev = p, cur = p.derivative();
    for (;;) {
        auto [q, r] = divide(prev, cur);
        seq.quotients.push_back(q);
        if (r.is_zero()) break;
        // f_{i+1} = -remainder
        std::vector<double> next = r.coefficients();
        for (auto& v : next) v = -v;
        prev = std::move(cur);
        cur = RealPolynomial(std::move(next));
    }
    if (cur.degree() != 0) fail(ErrorCode::DegenerateInput, "polynomial has a repeated root");
    seq.terminal = cur.coefficients()[0];
    return seq;
}

Eigen::MatrixXd residue_signature_form(const ResidueSequence& seq, double t) {
    const auto m = static_cast<Eigen::Index>(seq.quotients.size());
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        s(i, i) = seq.quotients[i](t);
        if (i + 1 < m) s(i, i + 1) = s(i + 1, i) = -1.0;
    }
    return s;
}

int signature(const Eigen::MatrixXd& s) {
    if (s.rows() == 0) return 0;
    // Symmetric Ruiz scaling D S D with D positive diagonal: a congruence, so
    // the signature is unchanged, but unnormalized residues no longer produce
    // eigenvalues many orders of magnitude apart.
    Eigen::MatrixXd b = s;
    for (int it = 0; it < 40; ++it) {
        Eigen::VectorXd r = b.cwiseAbs().rowwise().maxCoeff();
        if (r.minCoeff() == 0.0) break;
        if ((r.array() - 1.0).abs().maxCoeff() < 1e-3) break;
        r = r.cwiseSqrt().cwiseInverse();
        b = r.asDiagonal() * b * r.asDiagonal();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) fail(ErrorCode::InternalInvariantViolation, "eigenvalue solver failed");
    const auto& ev = solver.eigenvalues();
    const double norm = ev.cwiseAbs().maxCoeff();
    int sig = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (std::abs(ev[i]) < kGuardBand * norm || norm == 0.0) {
            fail(ErrorCode::DegenerateInput, "signature form is numerically degenerate");
        }
        sig += ev[i] > 0 ? 1 : -1;
    }
    return sig;
}

double linearization_residual(const RealPolynomial& p, const ResidueSequence& seq, double t) {
    double x = seq.terminal, y = 0.0;
    for (auto it = seq.quotients.rbegin(); it != seq.quotients.rend(); ++it) {
        const double nx = (*it)(t) * x - y;
        y = x;
        x = nx;
    }
    const double pv = p(t), dv = p.derivative()(t);
    const double denom = std::max({std::abs(pv), std::abs(dv), 1.0});
    return std::max(std::abs(pv - x), std::abs(dv - y)) / denom;
}

int real_maslov(const RealPolynomial& p) {
    if (p.degree() < 1) fail(ErrorCode::DegenerateInput, "need a polynomial of degree >= 1");
    const double tol = kZeroTol * p.scale();
    if (std::abs(p(0.0)) <= tol || std::abs(p(1.0)) <= tol) {
        fail(ErrorCode::EndpointRoot, "P vanishes at an endpoint of [0, 1]");
    }
    const ResidueSequence seq = sturm_residues(p);
    const int diff = signature(residue_signature_form(seq, 1.0)) - signature(residue_signature_form(seq, 0.0));
    if (diff % 2 != 0) fail(ErrorCode::InternalInvariantViolation, "odd signature of S(1) ⊕ -S(0)");
    return diff / 2;
}

RealPolynomial cubic_example_polynomial() {
    // 4(T+s)^3 - 6(T+s)^2 + 1 expanded in T with s = 1/sqrt(2).
    const double s = 1.0 / std::sqrt(2.0);
    return RealPolynomial({4 * s * s * s - 6 * s * s + 1, 12 * s * s - 12 * s, 12 * s - 6, 4});
}

}  // namespace maslovkit
