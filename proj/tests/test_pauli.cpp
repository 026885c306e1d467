#include "doctest.h"
#include "helpers.hpp"
#include "maslovkit/pauli.hpp"

using namespace maslovkit;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InternalInvariantViolation;
}

RingMatrix vec(const RingDescriptor& r, std::vector<LaurentPolynomial> v) { return RingMatrix::column(r, v); }

}  // namespace

TEST_CASE("pairing") {
    RingDescriptor r0(5);
    CHECK(pairing(vec(r0, {cst(r0, 1), cst(r0, 0)}), vec(r0, {cst(r0, 0), cst(r0, 1)})).is_one());
    RingDescriptor r(5, 1);
    auto c = vec(r, {px(r, {{1, 1}, {-1, 1}}), cst(r, 1)});
    CHECK(pairing(c, c).is_zero());
    CHECK(pairing(vec(r, {xpow(r, 1), cst(r, 0)}), vec(r, {cst(r, 0), xpow(r, 1)})).is_one());
    CHECK_THROWS_AS(pairing(c, vec(r, {cst(r, 1)})), Error);

    std::mt19937 rng(2);
    for (int k = 0; k < 100; ++k) {
        auto v = random_matrix(r, rng, 4, 1, 3), w = random_matrix(r, rng, 4, 1, 3);
        CHECK((pairing(v, w) + pairing(w, v).involute()).is_zero());
    }
}

TEST_CASE("commutation phase") {
    RingDescriptor r0(3);
    auto X = vec(r0, {cst(r0, 1), cst(r0, 0)});
    auto Z = vec(r0, {cst(r0, 0), cst(r0, 1)});
    CHECK(commutation_phase(X, Z).value() == 1);
    CHECK(commutation_phase(X, X).value() == 0);
    RingDescriptor r(3, 1);
    auto X0 = vec(r, {cst(r, 1), cst(r, 0)});
    auto Z1 = vec(r, {cst(r, 0), xpow(r, 1)});
    CHECK(commutation_phase(X0, Z1).value() == 0);
    CHECK(commutation_phase(X0, vec(r, {cst(r, 0), cst(r, 1)})).value() == 1);
    RingDescriptor rt(3, 1, true);
    auto XT = vec(rt, {LaurentPolynomial(rt, 1), LaurentPolynomial(rt, 0)});
    CHECK(code_of([&] { commutation_phase(XT, XT); }) == ErrorCode::DomainError);
}

TEST_CASE("isotropy and Lagrangians") {
    RingDescriptor r(5, 1);
    PauliModule h1(r, 1), h2(r, 2);
    CHECK(is_isotropic(standard_lagrangian(h2)));
    CHECK(is_lagrangian(standard_lagrangian(h2)));
    CHECK(is_lagrangian(dual_lagrangian(h2)));
    StabilizerModule cluster(h1, RingMatrix::from_rows(r, {{px(r, {{1, 1}, {-1, 1}})}, {cst(r, 1)}}));
    CHECK(is_isotropic(cluster));
    auto rep = lagrangian_report(cluster);
    CHECK(rep.isotropic);
    CHECK(rep.coisotropic);
    CHECK(rep.summand);
    CHECK(rep.lagrangian);
    StabilizerModule full(h1, RingMatrix::identity(r, 2));
    CHECK_FALSE(is_isotropic(full));
    CHECK_FALSE(is_lagrangian(full));

    StabilizerModule bad(h1, RingMatrix::from_rows(r, {{px(r, {{1, 1}, {0, -1}})}, {cst(r, 0)}}));
    auto b = lagrangian_report(bad);
    CHECK(b.isotropic);
    CHECK_FALSE(b.summand);
    CHECK_FALSE(b.coisotropic);
    CHECK_FALSE(b.lagrangian);

    StabilizerModule zero(h1, RingMatrix(r, 2, 1));
    CHECK_FALSE(is_lagrangian(zero));

    // Isotropic summand that is too small.
    StabilizerModule half(h2, RingMatrix::from_ints(r, {{1}, {0}, {0}, {0}}));
    auto hr = lagrangian_report(half);
    CHECK(hr.isotropic);
    CHECK(hr.summand);
    CHECK_FALSE(hr.coisotropic);
    CHECK_FALSE(hr.lagrangian);

    // Redundant generating set of L.
    StabilizerModule redundant(h1, RingMatrix::from_rows(r, {{xpow(r, 1), px(r, {{0, 1}, {1, 1}})}, {cst(r, 0), cst(r, 0)}}));
    CHECK(is_lagrangian(redundant));

    CHECK(code_of([&] { is_lagrangian(standard_lagrangian(PauliModule(RingDescriptor(5, 2), 1))); }) ==
          ErrorCode::UnsupportedRing);
    CHECK(is_isotropic(standard_lagrangian(PauliModule(RingDescriptor(5, 2), 1))));
}

TEST_CASE("Lagrangians over F_p") {
    RingDescriptor r(7);
    PauliModule h(r, 2);
    CHECK(is_lagrangian(standard_lagrangian(h)));
    StabilizerModule s(h, RingMatrix::from_ints(r, {{1, 0}, {0, 1}, {3, 2}, {2, 5}}));
    CHECK(is_lagrangian(s));
    StabilizerModule t(h, RingMatrix::from_ints(r, {{1, 0}, {0, 1}, {3, 2}, {1, 5}}));
    CHECK_FALSE(is_isotropic(t));
}

TEST_CASE("elementary unitaries") {
    RingDescriptor r(5, 1);
    auto q = px(r, {{1, 1}, {-1, 1}});
    auto e1 = elementary_unitary(Elementary::E1, HermitianForm(RingMatrix::from_rows(r, {{q}})));
    CHECK(e1.matrix() == RingMatrix::from_rows(r, {{cst(r, 1), q}, {cst(r, 0), cst(r, 1)}}));
    auto e0zero = elementary_unitary(Elementary::E0, HermitianForm(RingMatrix(r, 1, 1)));
    CHECK(e0zero.matrix() == RingMatrix::identity(r, 2));
    std::mt19937 rng(4);
    for (int k = 0; k < 20; ++k) {
        auto a = random_hermitian(r, rng, 2, 2), b = random_hermitian(r, rng, 2, 2);
        auto ea = elementary_unitary(Elementary::E0, HermitianForm(a));
        auto eb = elementary_unitary(Elementary::E0, HermitianForm(b));
        CHECK((ea * eb).matrix() == elementary_unitary(Elementary::E0, HermitianForm(a + b)).matrix());
        CHECK((ea * ea.inverse()).matrix() == RingMatrix::identity(r, 4));
    }
    CHECK(code_of([&] { elementary_unitary(Elementary::E0, HermitianForm(RingMatrix::from_rows(r, {{xpow(r, 1)}}))); }) ==
          ErrorCode::FormError);
    CHECK(code_of([&] { CliffordUnitary(PauliModule(r, 1), RingMatrix::from_ints(r, {{1, 1}, {1, 1}})); }) ==
          ErrorCode::FormError);
}

TEST_CASE("hyperbolic unitaries") {
    RingDescriptor r(5, 1);
    auto tr = hyperbolic_unitary(RingMatrix::from_rows(r, {{xpow(r, 1)}}));
    CHECK(tr.matrix() == RingMatrix::from_rows(r, {{xpow(r, 1), cst(r, 0)}, {cst(r, 0), xpow(r, 1)}}));
    CHECK(hyperbolic_unitary(RingMatrix::identity(r, 2)).matrix() == RingMatrix::identity(r, 4));
    RingDescriptor r5(5);
    CHECK(hyperbolic_unitary(RingMatrix::from_ints(r5, {{2}})).matrix() == RingMatrix::from_ints(r5, {{2, 0}, {0, 3}}));
    CHECK(code_of([&] { hyperbolic_unitary(RingMatrix::from_rows(r, {{px(r, {{0, 1}, {1, 1}})}})); }) ==
          ErrorCode::NotAUnit);
}

TEST_CASE("apply and the cluster circuit") {
    RingDescriptor r(5, 1);
    PauliModule h(r, 1);
    auto q = px(r, {{1, 1}, {-1, 1}});
    HermitianForm qf(RingMatrix::from_rows(r, {{q}}));
    auto cluster = StabilizerModule(h, RingMatrix::from_rows(r, {{q}, {cst(r, 1)}}));
    auto S = standard_lagrangian(h);
    CHECK(apply(CliffordUnitary::identity(h), S).generators() == S.generators());

    auto e0 = apply(elementary_unitary(Elementary::E0, qf), S);
    CHECK(e0.generators() == RingMatrix::from_rows(r, {{cst(r, 1)}, {q}}));

    auto e1 = apply(elementary_unitary(Elementary::E1, qf), dual_lagrangian(h));
    CHECK(e1.generators() == cluster.generators());
    CHECK(same_span(e1, cluster));
    // The upper-triangular matrix fixes L itself.
    CHECK(same_span(apply(elementary_unitary(Elementary::E1, qf), S), S));
    CHECK_FALSE(same_span(cluster, S));
}

TEST_CASE("module equality ignores generating sets") {
    RingDescriptor r(3, 1);
    PauliModule h(r, 2);
    auto L = standard_lagrangian(h);
    std::mt19937 rng(8);
    for (int k = 0; k < 20; ++k) {
        auto a = random_unimodular(r, rng, 2, 2);
        StabilizerModule m(h, L.generators() * a);
        CHECK(same_span(m, L));
        CHECK_FALSE(same_span(m, dual_lagrangian(h)));
    }
}

TEST_CASE("transversality") {
    RingDescriptor r(5, 1);
    PauliModule h(r, 2);
    CHECK(is_transversal(standard_lagrangian(h), dual_lagrangian(h)));
    CHECK_FALSE(is_transversal(standard_lagrangian(h), standard_lagrangian(h)));
    std::mt19937 rng(12);
    for (int k = 0; k < 10; ++k) {
        // The graph of q0 over L is transversal to L iff q0 is nondegenerate.
        RingMatrix q0 = random_unimodular(r, rng, 2, 1);
        q0 = q0.dagger() * RingMatrix::from_ints(r, {{1, 0}, {0, 2}}) * q0;
        auto graph = apply(elementary_unitary(Elementary::E0, HermitianForm(q0)), standard_lagrangian(h));
        CHECK(is_transversal(graph, standard_lagrangian(h)));
        CHECK(is_transversal(graph, dual_lagrangian(h)));
    }
    RingMatrix deg = RingMatrix::from_ints(r, {{1, 0}, {0, 0}});
    auto g = apply(elementary_unitary(Elementary::E0, HermitianForm(deg)), standard_lagrangian(h));
    CHECK_FALSE(is_transversal(g, standard_lagrangian(h)));
    RingMatrix xm1 = RingMatrix::from_rows(r, {{px(r, {{1, 1}, {0, -1}}), cst(r, 0)}, {cst(r, 0), cst(r, 1)}});
    xm1 = xm1 + xm1.dagger();
    auto g2 = apply(elementary_unitary(Elementary::E0, HermitianForm(xm1)), standard_lagrangian(h));
    CHECK_FALSE(is_transversal(g2, standard_lagrangian(h)));
}

TEST_CASE("diagonal identity decomposition") {
    auto product = [](const std::vector<RingMatrix>& fs) {
        RingMatrix m = fs.front();
        for (std::size_t i = 1; i < fs.size(); ++i) m = m * fs[i];
        return m;
    };
    RingDescriptor r(5, 1);
    CHECK(product(diag_identity_decomposition(RingMatrix::identity(r, 1))) == RingMatrix::identity(r, 2));
    auto fx = diag_identity_decomposition(RingMatrix::from_rows(r, {{xpow(r, 1)}}));
    CHECK(fx.size() == 6);
    CHECK(product(fx) == RingMatrix::from_rows(r, {{xpow(r, 1), cst(r, 0)}, {cst(r, 0), xpow(r, -1)}}));
    RingDescriptor r7(7);
    CHECK(product(diag_identity_decomposition(RingMatrix::from_ints(r7, {{2}}))) ==
          RingMatrix::from_ints(r7, {{2, 0}, {0, 4}}));
    std::mt19937 rng(19);
    for (int k = 0; k < 20; ++k) {
        auto a = random_unimodular(r, rng, 2, 2);
        CHECK(product(diag_identity_decomposition(a)) == RingMatrix::block_diag(a, a.inverse()));
    }
    CHECK(code_of([&] { diag_identity_decomposition(RingMatrix::from_rows(r, {{px(r, {{0, 1}, {1, 1}})}})); }) ==
          ErrorCode::NotAUnit);
}

TEST_CASE("unitaries preserve isotropy and Lagrangians") {
    std::mt19937 rng(29);
    for (auto r : {RingDescriptor(3, 1), RingDescriptor(5, 0)}) {
        for (std::size_t n : {1, 2}) {
            PauliModule h(r, n);
            for (int k = 0; k < 15; ++k) {
                Circuit c;
                for (int s = 0; s < 4; ++s) {
                    switch (rng() % 3) {
                        case 0: c.push_back({CircuitElement::Kind::E0, random_hermitian(r, rng, n, 2)}); break;
                        case 1: c.push_back({CircuitElement::Kind::E1, random_hermitian(r, rng, n, 2)}); break;
                        default: c.push_back({CircuitElement::Kind::H, random_unimodular(r, rng, n, 1)}); break;
                    }
                }
                auto u = circuit_unitary(h, c);
                CHECK(is_lambda_unitary(u.matrix()));
                CHECK(is_lagrangian(apply(u, standard_lagrangian(h))));
                StabilizerModule iso(h, standard_lagrangian(h).generators().block(0, 0, 2 * n, 1));
                auto moved = apply(u, iso);
                CHECK(is_isotropic(moved));
                CHECK(lagrangian_report(moved).lagrangian == (n == 1));
            }
        }
    }
}

TEST_CASE("circuit order") {
    RingDescriptor r(5, 1);
    PauliModule h(r, 1);
    auto q = px(r, {{1, 1}, {-1, 1}});
    auto id1 = RingMatrix::identity(r, 1);
    Circuit c{{CircuitElement::Kind::E0, id1}, {CircuitElement::Kind::E1, id1.scaled(q)}};
    auto u = circuit_unitary(h, c);
    auto expected = elementary_unitary(Elementary::E1, HermitianForm(id1.scaled(q))) *
                    elementary_unitary(Elementary::E0, HermitianForm(id1));
    CHECK(u.matrix() == expected.matrix());
}
