#include "maslovkit/ring.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace maslovkit {

const char* code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::ShapeError: return "ShapeError";
        case ErrorCode::UnsupportedRing: return "UnsupportedRing";
        case ErrorCode::DegenerateForm: return "DegenerateForm";
        case ErrorCode::FormError: return "FormError";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::NotALoop: return "NotALoop";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::EndpointRoot: return "EndpointRoot";
        case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool is_prime(int64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (int64_t k = 3; k <= n / k; k += 2) {
        if (n % k == 0) return false;
    }
    return true;
}

namespace {

void require_odd_prime(int64_t p) {
    thread_local int64_t last_ok = 0;
    if (p == last_ok) return;
    if (p == 2) fail(ErrorCode::DomainError, "p = 2 is not supported: 2 must be invertible");
    if (!is_prime(p)) fail(ErrorCode::DomainError, "modulus " + std::to_string(p) + " is not an odd prime");
    last_ok = p;
}

int64_t reduce(int64_t v, int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

int64_t mulmod(int64_t a, int64_t b, int64_t p) {
    return static_cast<int64_t>((static_cast<__int128>(a) * b) % p);
}

int64_t powmod(int64_t a, int64_t e, int64_t p) {
    int64_t r = 1;
    a = reduce(a, p);
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

int64_t invmod(int64_t a, int64_t p) {
    if (reduce(a, p) == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(p));
    return powmod(a, p - 2, p);
}

}  // namespace

// ---------------------------------------------------------------------------
// Fp

Fp::Fp(int64_t value, int64_t p) : value_(0), p_(p) {
    require_odd_prime(p);
    value_ = reduce(value, p);
}

void Fp::same_modulus(const Fp& o) const {
    if (p_ != o.p_) {
        fail(ErrorCode::RingMismatch,
             "modulus mismatch: " + std::to_string(p_) + " vs " + std::to_string(o.p_));
    }
}

Fp Fp::operator+(const Fp& o) const {
    same_modulus(o);
    int64_t s = value_ + o.value_;
    return Fp(s >= p_ ? s - p_ : s, p_, Unchecked{});
}

Fp Fp::operator-(const Fp& o) const {
    same_modulus(o);
    int64_t s = value_ - o.value_;
    return Fp(s < 0 ? s + p_ : s, p_, Unchecked{});
}

Fp Fp::operator*(const Fp& o) const {
    same_modulus(o);
    return Fp(mulmod(value_, o.value_, p_), p_, Unchecked{});
}

Fp Fp::inv() const { return Fp(invmod(value_, p_), p_, Unchecked{}); }

Fp Fp::pow(int64_t e) const {
    if (e < 0) return inv().pow(-e);
    return Fp(powmod(value_, e, p_), p_, Unchecked{});
}

bool is_square(const Fp& a) {
    if (a.is_zero()) fail(ErrorCode::DomainError, "square class of zero is undefined");
    return a.pow((a.modulus() - 1) / 2).value() == 1;
}

Fp least_non_residue(int64_t p) {
    require_odd_prime(p);
    for (int64_t c = 2; c < p; ++c) {
        Fp a(c, p);
        if (!is_square(a)) return a;
    }
    fail(ErrorCode::InternalInvariantViolation, "no quadratic non-residue found");
}

// ---------------------------------------------------------------------------
// RingDescriptor

RingDescriptor::RingDescriptor(int64_t p, int spatial_vars, bool has_T, std::vector<std::string> var_names)
    : p_(p), d_(spatial_vars), has_T_(has_T) {
    require_odd_prime(p);
    if (spatial_vars < 0) fail(ErrorCode::DomainError, "negative number of variables");
    if (var_names.empty()) {
        if (spatial_vars == 1) {
            var_names.push_back("x");
        } else {
            for (int i = 1; i <= spatial_vars; ++i) var_names.push_back("x" + std::to_string(i));
        }
    }
    if (static_cast<int>(var_names.size()) != spatial_vars) {
        fail(ErrorCode::ParseError, "variable name count does not match the number of variables");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(var_names));
}

RingDescriptor RingDescriptor::with_T() const { return RingDescriptor(p_, d_, true, *names_); }
RingDescriptor RingDescriptor::without_T() const { return RingDescriptor(p_, d_, false, *names_); }

std::string RingDescriptor::to_string() const {
    std::ostringstream os;
    os << "F_" << p_;
    if (d_ > 0) {
        os << "[";
        for (int i = 0; i < d_; ++i) {
            if (i) os << ",";
            os << (*names_)[i] << "^±";
        }
        os << "]";
    }
    if (has_T_) os << "[T]";
    return os.str();
}

void require_same_ring(const RingDescriptor& a, const RingDescriptor& b, const char* what) {
    if (!(a == b)) {
        fail(ErrorCode::RingMismatch, std::string(what) + ": " + a.to_string() + " vs " + b.to_string());
    }
}

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(RingDescriptor ring) : ring_(std::move(ring)) {}

LaurentPolynomial::LaurentPolynomial(RingDescriptor ring, int64_t constant) : ring_(std::move(ring)) {
    add_term(Exponent(ring_.arity(), 0), constant);
}

LaurentPolynomial::LaurentPolynomial(RingDescriptor ring, const Fp& constant) : ring_(std::move(ring)) {
    if (constant.modulus() != ring_.p()) fail(ErrorCode::RingMismatch, "constant from a different field");
    add_term(Exponent(ring_.arity(), 0), constant.value());
}

LaurentPolynomial LaurentPolynomial::monomial(const RingDescriptor& ring, Exponent e, int64_t coeff) {
    if (e.size() != ring.arity()) fail(ErrorCode::ShapeError, "exponent tuple has wrong length");
    if (ring.has_T() && e.back() < 0) fail(ErrorCode::DomainError, "negative power of T");
    LaurentPolynomial f(ring);
    f.add_term(e, coeff);
    return f;
}

LaurentPolynomial LaurentPolynomial::variable(const RingDescriptor& ring, int i) {
    if (i < 0 || i >= ring.spatial_vars()) fail(ErrorCode::DomainError, "variable index out of range");
    Exponent e(ring.arity(), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(ring, std::move(e), 1);
}

LaurentPolynomial LaurentPolynomial::loop_parameter(const RingDescriptor& ring) {
    if (!ring.has_T()) fail(ErrorCode::DomainError, "ring has no loop parameter T");
    Exponent e(ring.arity(), 0);
    e.back() = 1;
    return monomial(ring, std::move(e), 1);
}

LaurentPolynomial LaurentPolynomial::from_terms(const RingDescriptor& ring,
                                                const std::vector<std::pair<Exponent, int64_t>>& terms) {
    LaurentPolynomial f(ring);
    for (const auto& [e, c] : terms) f += monomial(ring, e, c);
    return f;
}

void LaurentPolynomial::add_term(const Exponent& e, int64_t c) {
    const int64_t p = ring_.p();
    c = reduce(c, p);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = reduce(it->second + c, p);
        if (it->second == 0) terms_.erase(it);
    }
}

int64_t LaurentPolynomial::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

bool LaurentPolynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int32_t v) { return v == 0; });
}

Fp LaurentPolynomial::constant_value() const {
    if (!is_constant()) fail(ErrorCode::DomainError, "polynomial " + to_string() + " is not constant");
    return Fp(terms_.empty() ? 0 : terms_.begin()->second, ring_.p());
}

bool LaurentPolynomial::is_unit() const {
    if (terms_.size() != 1) return false;
    return !ring_.has_T() || terms_.begin()->first.back() == 0;
}

bool LaurentPolynomial::is_one() const { return is_constant() && !is_zero() && terms_.begin()->second == 1; }

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    r += o;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    r -= o;
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    require_same_ring(ring_, o.ring_, "polynomial addition");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    require_same_ring(ring_, o.ring_, "polynomial subtraction");
    for (const auto& [e, c] : o.terms_) add_term(e, ring_.p() - c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    require_same_ring(ring_, o.ring_, "polynomial multiplication");
    LaurentPolynomial r(ring_);
    const int64_t p = ring_.p();
    Exponent e(ring_.arity());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, mulmod(ca, cb, p));
        }
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, ring_.p() - c);
    return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const Fp& c) const {
    if (c.modulus() != ring_.p()) fail(ErrorCode::RingMismatch, "scalar from a different field");
    LaurentPolynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, mulmod(v, c.value(), ring_.p()));
    return r;
}

LaurentPolynomial LaurentPolynomial::involute() const {
    LaurentPolynomial r(ring_);
    const auto d = static_cast<std::size_t>(ring_.spatial_vars());
    for (const auto& [key, c] : terms_) {
        Exponent e = key;
        for (std::size_t i = 0; i < d; ++i) e[i] = -e[i];
        r.terms_.emplace(std::move(e), c);
    }
    return r;
}

Fp LaurentPolynomial::augment() const {
    if (ring_.has_T()) fail(ErrorCode::DomainError, "augmentation needs T evaluated first");
    return Fp(coeff(Exponent(ring_.arity(), 0)), ring_.p());
}

LaurentPolynomial LaurentPolynomial::eval_T(const Fp& t) const {
    if (!ring_.has_T()) return *this;
    if (t.modulus() != ring_.p()) fail(ErrorCode::RingMismatch, "evaluation point from a different field");
    LaurentPolynomial r(ring_.without_T());
    for (const auto& [e, c] : terms_) {
        Exponent spatial(e.begin(), e.end() - 1);
        r.add_term(spatial, (Fp(c, ring_.p()) * t.pow(e.back())).value());
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::unit_inverse() const {
    if (!is_unit()) fail(ErrorCode::NotAUnit, to_string() + " is not a unit");
    Exponent e = terms_.begin()->first;
    const int64_t c = terms_.begin()->second;
    const auto d = static_cast<std::size_t>(ring_.spatial_vars());
    for (std::size_t i = 0; i < d; ++i) e[i] = -e[i];
    LaurentPolynomial r(ring_);
    r.terms_.emplace(std::move(e), invmod(c, ring_.p()));
    return r;
}

int32_t LaurentPolynomial::T_degree() const {
    if (!ring_.has_T()) return 0;
    int32_t deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e.back());
    return deg;
}

void LaurentPolynomial::require_euclidean(const char* what) const {
    if (ring_.spatial_vars() > 1 || ring_.has_T()) {
        fail(ErrorCode::UnsupportedRing,
             std::string(what) + " needs F_p or F_p[x,x^-1] without T, got " + ring_.to_string());
    }
}

int32_t LaurentPolynomial::spread() const {
    require_euclidean("spread");
    if (terms_.empty()) return -1;
    if (ring_.spatial_vars() == 0) return 0;
    return terms_.rbegin()->first[0] - terms_.begin()->first[0];
}

std::pair<LaurentPolynomial, LaurentPolynomial> LaurentPolynomial::normalized() const {
    require_euclidean("normalization");
    if (terms_.empty()) return {*this, LaurentPolynomial(ring_, 1)};
    const int64_t lead = terms_.rbegin()->second;
    Exponent low = terms_.begin()->first;
    LaurentPolynomial unit = monomial(ring_, low, lead);
    return {*this * unit.unit_inverse(), unit};
}

std::pair<LaurentPolynomial, LaurentPolynomial> LaurentPolynomial::divmod(const LaurentPolynomial& f,
                                                                          const LaurentPolynomial& g) {
    require_same_ring(f.ring_, g.ring_, "division");
    f.require_euclidean("division");
    if (g.is_zero()) fail(ErrorCode::DivisionByZero, "division by the zero polynomial");
    const RingDescriptor& ring = f.ring_;
    const int64_t p = ring.p();
    if (ring.spatial_vars() == 0) {
        return {f * g.unit_inverse(), LaurentPolynomial(ring)};
    }
    if (f.is_zero()) return {LaurentPolynomial(ring), LaurentPolynomial(ring)};

    auto [gn, gunit] = g.normalized();
    const int32_t gdeg = gn.terms_.rbegin()->first[0];
    const int32_t shift = f.terms_.begin()->first[0];

    // Dense long division of x^-shift f by the monic polynomial gn.
    const int32_t fdeg = f.terms_.rbegin()->first[0] - shift;
    std::vector<int64_t> rem(static_cast<std::size_t>(fdeg + 1), 0);
    for (const auto& [e, c] : f.terms_) rem[static_cast<std::size_t>(e[0] - shift)] = c;
    std::vector<int64_t> quot(static_cast<std::size_t>(std::max(fdeg - gdeg + 1, 0)), 0);
    for (int32_t k = fdeg; k >= gdeg; --k) {
        const int64_t c = rem[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k - gdeg)] = c;
        for (const auto& [e, gc] : gn.terms_) {
            auto& slot = rem[static_cast<std::size_t>(k - gdeg + e[0])];
            slot = reduce(slot - mulmod(c, gc, p), p);
        }
    }
    LaurentPolynomial q(ring), r(ring);
    for (std::size_t i = 0; i < quot.size(); ++i) q.add_term({static_cast<int32_t>(i) + shift}, quot[i]);
    for (std::size_t i = 0; i < rem.size(); ++i) r.add_term({static_cast<int32_t>(i) + shift}, rem[i]);
    return {q * gunit.unit_inverse(), r};
}

bool LaurentPolynomial::divides(const LaurentPolynomial& f) const {
    if (is_zero()) return f.is_zero();
    return divmod(f, *this).second.is_zero();
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const auto& names = ring_.var_names();
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            const std::string name = i < names.size() ? names[i] : std::string("T");
            factors.push_back(e[i] == 1 ? name : name + "^" + std::to_string(e[i]));
        }
        if (factors.empty()) {
            os << c;
            continue;
        }
        if (c != 1) os << c << "*";
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& f) { return os << f.to_string(); }

}  // namespace maslovkit
