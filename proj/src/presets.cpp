#include "maslovkit/presets.hpp"

#include <functional>
#include <map>

namespace maslovkit::presets {

namespace {

const RingDescriptor& laurent5() {
    static const RingDescriptor r(5, 1, false, {"x"});
    return r;
}

LaurentPolynomial x_plus_inverse() {
    const auto& r = laurent5();
    return LaurentPolynomial::variable(r, 0) + LaurentPolynomial::variable(r, 0).unit_inverse();
}

RingMatrix one_by_one(const LaurentPolynomial& f) { return RingMatrix::from_rows(f.ring(), {{f}}); }

json::Json form_json(const HermitianForm& f, const RingDescriptor& r) {
    json::Json j;
    j["ring"] = json::encode(r);
    const json::Json body = json::encode(f);
    for (const auto& [k, v] : body.items()) j[k] = v;
    return j;
}

// Sample pairs (q0, q1) for the pair loop.
struct Pair {
    HermitianForm q0, q1;
};

std::map<std::string, Pair> pairs() {
    const RingDescriptor f5(5), f7(7);
    const auto& lr = laurent5();
    const auto x = LaurentPolynomial::variable(lr, 0);
    std::map<std::string, Pair> out;
    out.emplace("f5", Pair{diagonal_form(5, {1}), diagonal_form(5, {2})});
    out.emplace("f7", Pair{diagonal_form(7, {1, 1}), HermitianForm(RingMatrix::from_ints(f7, {{1, 2}, {2, 3}}))});
    out.emplace("laurent",
                Pair{HermitianForm(RingMatrix::identity(lr, 2)),
                     HermitianForm(RingMatrix::from_rows(lr, {{LaurentPolynomial(lr), x}, {x.unit_inverse(), LaurentPolynomial(lr)}}))});
    return out;
}

using Builder = std::function<json::Json()>;

const std::map<std::string, Builder>& table() {
    static const std::map<std::string, Builder> t = [] {
        std::map<std::string, Builder> m;
        m["cluster-module"] = [] { return json::encode(cluster_module()); };
        m["product-state-module"] = [] { return json::encode(product_state_module()); };
        m["product-state-z-module"] = [] { return json::encode(product_state_z_module()); };
        m["cluster-circuit"] = [] { return json::encode(cluster_circuit()); };
        m["cluster-circuit-z"] = [] { return json::encode(cluster_circuit_z()); };
        for (const auto& [name, pr] : pairs()) {
            const RingDescriptor r = pr.q0.matrix().ring();
            m["pair-" + name + "-q0"] = [q = pr.q0, r] { return form_json(q, r); };
            m["pair-" + name + "-q1"] = [q = pr.q1, r] { return form_json(q, r); };
            m["pair-" + name + "-loop"] = [pr] { return json::encode(loop_from_pair(pr.q0, pr.q1)); };
        }
        return m;
    }();
    return t;
}

}  // namespace

StabilizerModule cluster_module() {
    const auto& r = laurent5();
    return StabilizerModule(PauliModule(r, 1), RingMatrix::from_rows(r, {{x_plus_inverse()}, {LaurentPolynomial(r, 1)}}));
}

StabilizerModule product_state_module() { return standard_lagrangian(PauliModule(laurent5(), 1)); }

StabilizerModule product_state_z_module() { return dual_lagrangian(PauliModule(laurent5(), 1)); }

Circuit cluster_circuit() {
    const auto& r = laurent5();
    const auto c = [&](int64_t v) { return one_by_one(LaurentPolynomial(r, v)); };
    using K = CircuitElement::Kind;
    return {{K::E0, c(1)}, {K::E1, c(-1)}, {K::E0, c(1)}, {K::E1, one_by_one(x_plus_inverse())}};
}

Circuit cluster_circuit_z() { return {{CircuitElement::Kind::E1, one_by_one(x_plus_inverse())}}; }

std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : table()) out.push_back(k);
    return out;
}

std::optional<json::Json> lookup(const std::string& name) {
    auto it = table().find(name);
    if (it == table().end()) return std::nullopt;
    return it->second();
}

std::optional<RealPolynomial> real_polynomial(const std::string& name) {
    if (name == "paper-example") return cubic_example_polynomial();
    return std::nullopt;
}

}  // namespace maslovkit::presets
