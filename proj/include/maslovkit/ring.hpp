#pragma once

// Exact arithmetic over F_p (p an odd prime) and over the Laurent rings
// F_p[x_1^±, ..., x_d^±], optionally extended by a loop parameter T with
// trivial involution and non-negative exponents.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "maslovkit/errors.hpp"

namespace maslovkit {

bool is_prime(int64_t n) noexcept;

/// Residue class modulo an odd prime.
class Fp {
public:
    Fp(int64_t value, int64_t p);

    int64_t value() const noexcept { return value_; }
    int64_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return value_ == 0; }

    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp operator-() const { return Fp(p_ - value_, p_); }
    Fp inv() const;
    Fp pow(int64_t e) const;

    bool operator==(const Fp& o) const noexcept { return value_ == o.value_ && p_ == o.p_; }

private:
    struct Unchecked {};
    Fp(int64_t value, int64_t p, Unchecked) : value_(value), p_(p) {}
    void same_modulus(const Fp& o) const;

    int64_t value_;
    int64_t p_;
};

/// Euler criterion. Zero has no square class and is rejected.
bool is_square(const Fp& a);

/// Least positive quadratic non-residue; the canonical θ.
Fp least_non_residue(int64_t p);

/// Describes F_p[x_1^±..x_d^±] or F_p[x_1^±..x_d^±][T].
class RingDescriptor {
public:
    explicit RingDescriptor(int64_t p, int spatial_vars = 0, bool has_T = false,
                            std::vector<std::string> var_names = {});

    int64_t p() const noexcept { return p_; }
    int spatial_vars() const noexcept { return d_; }
    bool has_T() const noexcept { return has_T_; }
    /// Length of an exponent tuple: d spatial exponents, then T if present.
    std::size_t arity() const noexcept { return static_cast<std::size_t>(d_) + (has_T_ ? 1 : 0); }
    const std::vector<std::string>& var_names() const noexcept { return *names_; }

    RingDescriptor with_T() const;
    RingDescriptor without_T() const;

    /// Variable names are cosmetic; rings compare by (p, d, T).
    bool operator==(const RingDescriptor& o) const noexcept {
        return p_ == o.p_ && d_ == o.d_ && has_T_ == o.has_T_;
    }

    std::string to_string() const;

private:
    int64_t p_;
    int d_;
    bool has_T_;
    std::shared_ptr<const std::vector<std::string>> names_;
};

void require_same_ring(const RingDescriptor& a, const RingDescriptor& b, const char* what);

using Exponent = std::vector<int32_t>;

/// Sparse Laurent polynomial; zero coefficients are never stored, so equality
/// of values is equality of term maps.
class LaurentPolynomial {
public:
    using TermMap = std::map<Exponent, int64_t>;

    explicit LaurentPolynomial(RingDescriptor ring);
    LaurentPolynomial(RingDescriptor ring, int64_t constant);
    LaurentPolynomial(RingDescriptor ring, const Fp& constant);

    static LaurentPolynomial monomial(const RingDescriptor& ring, Exponent e, int64_t coeff);
    /// x_i for 0 <= i < d.
    static LaurentPolynomial variable(const RingDescriptor& ring, int i);
    static LaurentPolynomial loop_parameter(const RingDescriptor& ring);
    static LaurentPolynomial from_terms(const RingDescriptor& ring,
                                        const std::vector<std::pair<Exponent, int64_t>>& terms);

    const RingDescriptor& ring() const noexcept { return ring_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Coefficient at exponent e (zero if absent).
    int64_t coeff(const Exponent& e) const;
    /// True iff the polynomial has exponent zero in every variable.
    bool is_constant() const;
    /// Constant value; DomainError if not constant.
    Fp constant_value() const;
    /// c * x^k with c != 0 and no T dependence: the units of the Laurent ring.
    bool is_unit() const;
    bool is_one() const;

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    LaurentPolynomial scaled(const Fp& c) const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    bool operator==(const LaurentPolynomial& o) const {
        return ring_ == o.ring_ && terms_ == o.terms_;
    }

    /// x_i -> x_i^-1 for every spatial variable; T and coefficients fixed.
    LaurentPolynomial involute() const;
    /// Coefficient of the all-zero exponent; DomainError if the ring has T.
    Fp augment() const;
    /// Substitutes T := t, landing in the ring without T.
    LaurentPolynomial eval_T(const Fp& t) const;
    /// Inverse of a unit (monomial); NotAUnit otherwise.
    LaurentPolynomial unit_inverse() const;
    /// Largest T exponent (0 when T absent or polynomial zero).
    int32_t T_degree() const;

    // Euclidean structure of F_p and F_p[x, x^-1] (d <= 1, no T).

    /// max exponent - min exponent; 0 for nonzero constants, -1 for zero.
    int32_t spread() const;
    /// Monic associate with lowest exponent 0, and the unit u with *this = u * associate.
    std::pair<LaurentPolynomial, LaurentPolynomial> normalized() const;
    /// Division with remainder; spread(remainder) < spread(divisor) or remainder = 0.
    static std::pair<LaurentPolynomial, LaurentPolynomial> divmod(const LaurentPolynomial& f,
                                                                  const LaurentPolynomial& g);
    bool divides(const LaurentPolynomial& f) const;

    std::string to_string() const;

private:
    void add_term(const Exponent& e, int64_t c);
    void require_euclidean(const char* what) const;

    RingDescriptor ring_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& f);

}  // namespace maslovkit
