#include "doctest.h"
#include "helpers.hpp"

using namespace maslovkit;

TEST_CASE("field arithmetic") {
    CHECK((Fp(3, 7) * Fp(5, 7)).value() == 1);
    CHECK(Fp(1, 5).inv().value() == 1);
    CHECK(Fp(3, 7).inv().value() == 5);
    CHECK(Fp(-1, 7).value() == 6);
    CHECK((-Fp(0, 3)).value() == 0);
    CHECK(Fp(2, 11).pow(10).value() == 1);
}

TEST_CASE("field errors") {
    auto code_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InternalInvariantViolation;
    };
    CHECK(code_of([] { Fp(0, 5).inv(); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([] { (void)(Fp(1, 5) + Fp(1, 7)); }) == ErrorCode::RingMismatch);
    CHECK(code_of([] { Fp(1, 2); }) == ErrorCode::DomainError);
    CHECK(code_of([] { Fp(1, 9); }) == ErrorCode::DomainError);
    CHECK(code_of([] { RingDescriptor(2); }) == ErrorCode::DomainError);
    CHECK(code_of([] { is_square(Fp(0, 5)); }) == ErrorCode::DomainError);
}

TEST_CASE("quadratic residues") {
    CHECK(is_square(Fp(1, 5)));
    CHECK(is_square(Fp(2, 7)));
    CHECK_FALSE(is_square(Fp(2, 5)));
    CHECK(least_non_residue(5).value() == 2);
    CHECK(least_non_residue(7).value() == 3);
    CHECK(least_non_residue(3).value() == 2);
    CHECK(least_non_residue(17).value() == 3);
}

TEST_CASE("square classes agree with enumeration and are multiplicative") {
    for (int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        std::vector<bool> sq(p, false);
        for (int64_t a = 1; a < p; ++a) sq[(a * a) % p] = true;
        for (int64_t a = 1; a < p; ++a) {
            CHECK(is_square(Fp(a, p)) == sq[a]);
            for (int64_t b = 1; b < p; ++b) {
                CHECK(is_square(Fp(a * b, p)) == (sq[a] == sq[b]));
            }
        }
        CHECK_FALSE(is_square(least_non_residue(p)));
        for (int64_t a = 1; a < least_non_residue(p).value(); ++a) CHECK(sq[a]);
    }
}

TEST_CASE("polynomial arithmetic") {
    RingDescriptor r(5, 1);
    auto x = xpow(r, 1);
    auto one = cst(r, 1);
    CHECK((x + one) * (x.involute() + one) == px(r, {{-1, 1}, {0, 2}, {1, 1}}));
    auto f = px(r, {{-3, 4}, {2, 1}});
    CHECK((f + (-f)).is_zero());
    CHECK((px(r, {{1, 2}}) * px(r, {{-1, 3}})).is_one());
    CHECK_THROWS_AS(x + xpow(RingDescriptor(7, 1), 1), Error);
}

TEST_CASE("involution") {
    RingDescriptor r(5, 1);
    CHECK(px(r, {{1, 1}, {2, 2}}).involute() == px(r, {{-1, 1}, {-2, 2}}));
    CHECK(cst(r, 3).involute() == cst(r, 3));
    RingDescriptor rt(5, 1, true);
    auto T = LaurentPolynomial::loop_parameter(rt);
    auto x = LaurentPolynomial::variable(rt, 0);
    CHECK((T * x).involute() == T * x.unit_inverse());
}

TEST_CASE("augmentation") {
    RingDescriptor r(5, 1);
    CHECK(px(r, {{0, 3}, {1, 2}, {-1, -1}}).augment().value() == 3);
    CHECK(LaurentPolynomial(r).augment().value() == 0);
    CHECK(px(r, {{1, 1}, {-1, 1}}).augment().value() == 0);
    RingDescriptor rt(5, 1, true);
    CHECK_THROWS_AS(LaurentPolynomial::loop_parameter(rt).augment(), Error);
}

TEST_CASE("evaluation of the loop parameter") {
    RingDescriptor rt(5, 1, true);
    auto T = LaurentPolynomial::loop_parameter(rt);
    auto x = LaurentPolynomial::variable(rt, 0);
    auto f = T * T + T * x + LaurentPolynomial(rt, 1);
    RingDescriptor r(5, 1);
    CHECK(f.eval_T(Fp(0, 5)) == cst(r, 1));
    CHECK(f.eval_T(Fp(1, 5)) == px(r, {{0, 2}, {1, 1}}));
    CHECK((x + LaurentPolynomial(rt, 3)).eval_T(Fp(4, 5)) == px(r, {{0, 3}, {1, 1}}));
    CHECK(f.T_degree() == 2);
}

TEST_CASE("multivariate rings") {
    RingDescriptor r(7, 2);
    auto x1 = LaurentPolynomial::variable(r, 0);
    auto x2 = LaurentPolynomial::variable(r, 1);
    auto m = x1 * x2.unit_inverse();
    CHECK(m.is_unit());
    CHECK(m.involute() == x2 * x1.unit_inverse());
    CHECK_FALSE((x1 + x2).is_unit());
    CHECK_THROWS_AS((x1 + x2).unit_inverse(), Error);
    CHECK_THROWS_AS((x1 + x2).spread(), Error);
}

TEST_CASE("involution and evaluation are ring homomorphisms") {
    std::mt19937 rng(11);
    RingDescriptor r(7, 1);
    for (int k = 0; k < 200; ++k) {
        auto f = random_poly(r, rng, 4), g = random_poly(r, rng, 4);
        CHECK(f.involute().involute() == f);
        CHECK(f.involute().augment() == f.augment());
        CHECK((f * g).involute() == f.involute() * g.involute());
        CHECK((f + g).involute() == f.involute() + g.involute());
    }
    RingDescriptor rt(7, 1, true);
    auto T = LaurentPolynomial::loop_parameter(rt);
    for (int k = 0; k < 100; ++k) {
        auto lift = [&](const LaurentPolynomial& a, const LaurentPolynomial& b) {
            LaurentPolynomial out(rt);
            for (auto& [e, c] : a.terms()) out += LaurentPolynomial::monomial(rt, {e[0], 0}, c);
            for (auto& [e, c] : b.terms()) out += LaurentPolynomial::monomial(rt, {e[0], 0}, c) * T;
            return out;
        };
        auto f = lift(random_poly(r, rng, 3), random_poly(r, rng, 3));
        auto g = lift(random_poly(r, rng, 3), random_poly(r, rng, 3));
        for (int64_t t = 0; t < 7; ++t) {
            CHECK((f * g).eval_T(Fp(t, 7)) == f.eval_T(Fp(t, 7)) * g.eval_T(Fp(t, 7)));
            CHECK((f + g).eval_T(Fp(t, 7)) == f.eval_T(Fp(t, 7)) + g.eval_T(Fp(t, 7)));
        }
    }
}

TEST_CASE("Euclidean division by spread") {
    std::mt19937 rng(5);
    for (int64_t p : {3, 5}) {
        RingDescriptor r(p, 1);
        for (int k = 0; k < 300; ++k) {
            auto f = random_poly(r, rng, 5), g = random_poly(r, rng, 3);
            if (g.is_zero()) continue;
            auto [q, rem] = LaurentPolynomial::divmod(f, g);
            CHECK(q * g + rem == f);
            CHECK(rem.spread() < g.spread());
        }
    }
    RingDescriptor r(3, 1);
    auto [monic, unit] = px(r, {{1, 1}, {0, -1}}).normalized();
    CHECK(monic == px(r, {{1, 1}, {0, 2}}));
    CHECK(unit.is_one());
    auto [m2, u2] = px(r, {{-2, 2}, {1, 2}}).normalized();
    CHECK(m2 == px(r, {{0, 1}, {3, 1}}));
    CHECK(u2 == px(r, {{-2, 2}}));
    CHECK(xpow(r, 3).divides(px(r, {{1, 1}, {5, 2}})));
}
