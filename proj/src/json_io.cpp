#include "maslovkit/json_io.hpp"

namespace maslovkit::json {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) fail(ErrorCode::ParseError, msg);
}

const Json& field(const Json& j, const char* key) {
    require(j.is_object(), std::string("expected an object with key '") + key + "'");
    auto it = j.find(key);
    require(it != j.end(), std::string("missing key '") + key + "'");
    return *it;
}

int64_t as_int(const Json& j, const char* what) {
    require(j.is_number_integer(), std::string(what) + " must be an integer");
    return j.get<int64_t>();
}

std::size_t as_size(const Json& j, const char* what) {
    const int64_t v = as_int(j, what);
    require(v >= 0, std::string(what) + " must be non-negative");
    return static_cast<std::size_t>(v);
}

// A ring stated by the object itself ("ring", or p/vars/T of a polynomial).
std::optional<RingDescriptor> own_ring(const Json& j) {
    if (j.is_object() && j.contains("ring")) return decode_ring(j.at("ring"));
    return std::nullopt;
}

// First full polynomial object among matrix entries, if any.
std::optional<RingDescriptor> ring_from_entries(const Json& m) {
    if (!m.is_object() || !m.contains("entries") || !m.at("entries").is_array()) return std::nullopt;
    for (const auto& row : m.at("entries")) {
        if (!row.is_array()) continue;
        for (const auto& e : row)
            if (e.is_object()) return decode_ring(e);
    }
    return std::nullopt;
}

}  // namespace

Json encode(const RingDescriptor& r) {
    Json j;
    j["p"] = r.p();
    j["vars"] = r.var_names();
    j["T"] = r.has_T();
    return j;
}

Json encode(const LaurentPolynomial& f) {
    Json j = encode(f.ring());
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back(Json{{"e", e}, {"c", c}});
    j["terms"] = std::move(terms);
    return j;
}

Json encode(const RingMatrix& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(encode(m(i, k)));
        entries.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json encode(const HermitianForm& f) {
    Json j = encode(f.matrix());
    j["sign"] = f.sign();
    return j;
}

Json encode(const StabilizerModule& s) {
    return Json{{"N", s.ambient().N()}, {"ring", encode(s.ambient().ring())}, {"generators", encode(s.generators())}};
}

Json encode(const CliffordUnitary& u) { return Json{{"N", u.ambient().N()}, {"matrix", encode(u.matrix())}}; }

Json encode(const WittClass& c) { return Json{{"p", c.p}, {"class", c.to_string()}}; }

Json encode(const LagrangianLoop& loop) {
    const SturmSequence& s = loop.sequence();
    Json forms = Json::array();
    for (const auto& q : s.forms()) forms.push_back(encode(HermitianForm(q, 1)));
    return Json{{"N", s.N()}, {"ring", encode(s.ring())}, {"sturm", std::move(forms)}};
}

Json encode(const MaslovResult& m) {
    Json j;
    j["form"] = encode(m.form);
    j["witt"] = m.witt ? encode(*m.witt) : Json(nullptr);
    j["in_fundamental_ideal"] = m.witt ? Json(in_fundamental_ideal(*m.witt)) : Json(nullptr);
    j["rank_parity"] = m.invariants.rank_parity;
    j["determinant"] = encode(m.invariants.determinant);
    return j;
}

Json encode(const LagrangianReport& r) {
    return Json{{"isotropic", r.isotropic}, {"coisotropic", r.coisotropic}, {"summand", r.summand}, {"lagrangian", r.lagrangian}};
}

Json encode(const Circuit& c) {
    Json out = Json::array();
    for (const auto& e : c) {
        const char* kind = e.kind == CircuitElement::Kind::E0 ? "E0" : e.kind == CircuitElement::Kind::E1 ? "E1" : "H";
        out.push_back(Json{{"kind", kind},
                           {"payload", e.kind == CircuitElement::Kind::H ? encode(e.payload) : encode(HermitianForm(e.payload, 1))}});
    }
    return out;
}

RingDescriptor decode_ring(const Json& j) {
    return guarded("ring", [&] {
        const int64_t p = as_int(field(j, "p"), "p");
        std::vector<std::string> vars;
        if (j.contains("vars")) {
            require(j.at("vars").is_array(), "vars must be an array of names");
            for (const auto& v : j.at("vars")) {
                require(v.is_string(), "variable names must be strings");
                vars.push_back(v.get<std::string>());
            }
        }
        bool has_T = false;
        if (j.contains("T")) {
            require(j.at("T").is_boolean(), "T must be a boolean");
            has_T = j.at("T").get<bool>();
        }
        if (p == 2 || !is_prime(p)) fail(ErrorCode::UnsupportedRing, "p must be an odd prime, got " + std::to_string(p));
        return RingDescriptor(p, static_cast<int>(vars.size()), has_T, vars);
    });
}

LaurentPolynomial decode_poly(const Json& j, const std::optional<RingDescriptor>& ctx) {
    return guarded("polynomial", [&] {
        if (j.is_number_integer()) {
            require(ctx.has_value(), "bare integer entry without a ring context");
            return LaurentPolynomial(*ctx, j.get<int64_t>());
        }
        require(j.is_object(), "polynomial must be an object or an integer");
        const RingDescriptor r = decode_ring(j);
        if (ctx) require_same_ring(*ctx, r, "polynomial");
        std::vector<std::pair<Exponent, int64_t>> terms;
        for (const auto& t : field(j, "terms")) {
            Exponent e;
            for (const auto& v : field(t, "e")) {
                const int64_t x = as_int(v, "exponent");
                require(x >= INT32_MIN && x <= INT32_MAX, "exponent out of range");
                e.push_back(static_cast<int32_t>(x));
            }
            require(e.size() == r.arity(), "exponent has " + std::to_string(e.size()) + " entries, ring needs " +
                                               std::to_string(r.arity()));
            if (r.has_T()) require(e.back() >= 0, "T exponents must be non-negative");
            terms.emplace_back(std::move(e), as_int(field(t, "c"), "coefficient"));
        }
        return LaurentPolynomial::from_terms(ctx ? *ctx : r, terms);
    });
}

RingMatrix decode_matrix(const Json& j, const std::optional<RingDescriptor>& ctx) {
    return guarded("matrix", [&] {
        std::optional<RingDescriptor> r = ctx ? ctx : own_ring(j);
        if (!r) r = ring_from_entries(j);
        require(r.has_value(), "matrix has no ring: give \"ring\" or a polynomial entry");
        const std::size_t rows = as_size(field(j, "rows"), "rows"), cols = as_size(field(j, "cols"), "cols");
        const Json& entries = field(j, "entries");
        require(entries.is_array() && entries.size() == rows, "entries must have 'rows' rows");
        RingMatrix m(*r, rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            require(entries[i].is_array() && entries[i].size() == cols, "each row must have 'cols' entries");
            for (std::size_t k = 0; k < cols; ++k) m(i, k) = decode_poly(entries[i][k], r);
        }
        return m;
    });
}

HermitianForm decode_form(const Json& j, const std::optional<RingDescriptor>& ctx) {
    return guarded("form", [&] {
        int sign = 1;
        if (j.contains("sign")) sign = static_cast<int>(as_int(j.at("sign"), "sign"));
        require(sign == 1 || sign == -1, "sign must be 1 or -1");
        return HermitianForm(decode_matrix(j, ctx), sign);
    });
}

StabilizerModule decode_module(const Json& j) {
    return guarded("module", [&] {
        const RingDescriptor r = decode_ring(field(j, "ring"));
        const std::size_t n = as_size(field(j, "N"), "N");
        return StabilizerModule(PauliModule(r, n), decode_matrix(field(j, "generators"), r));
    });
}

LagrangianLoop decode_loop(const Json& j) {
    return guarded("loop", [&] {
        const RingDescriptor r = decode_ring(field(j, "ring"));
        const std::size_t n = as_size(field(j, "N"), "N");
        const Json& sturm = field(j, "sturm");
        require(sturm.is_array(), "sturm must be an array of forms");
        std::vector<RingMatrix> forms;
        for (const auto& f : sturm) {
            HermitianForm q = decode_form(f, r);
            require(q.sign() == 1, "Sturm forms must be +hermitian");
            forms.push_back(q.matrix());
        }
        return validate_loop(SturmSequence(r, n, std::move(forms)));
    });
}

Circuit decode_circuit(const Json& j, const std::optional<RingDescriptor>& ctx) {
    return guarded("circuit", [&] {
        const Json* list = &j;
        std::optional<RingDescriptor> r = ctx;
        if (j.is_object()) {
            if (j.contains("ring")) {
                const RingDescriptor own = decode_ring(j.at("ring"));
                if (r) require_same_ring(*r, own, "circuit");
                r = own;
            }
            list = &field(j, "elements");
        }
        require(list->is_array(), "circuit must be a list of elements");
        Circuit c;
        for (const auto& e : *list) {
            const std::string kind = field(e, "kind").get<std::string>();
            const Json& payload = field(e, "payload");
            if (kind == "E0" || kind == "E1") {
                HermitianForm q = decode_form(payload, r);
                require(q.sign() == 1, "elementary payload must be a +hermitian form");
                c.push_back({kind == "E0" ? CircuitElement::Kind::E0 : CircuitElement::Kind::E1, q.matrix()});
            } else if (kind == "H") {
                c.push_back({CircuitElement::Kind::H, decode_matrix(payload, r)});
            } else {
                fail(ErrorCode::ParseError, "unknown circuit element kind '" + kind + "'");
            }
        }
        return c;
    });
}

WittClass decode_witt(const Json& j) {
    return guarded("witt class", [&] {
        const int64_t p = as_int(field(j, "p"), "p");
        return WittClass::from_string(p, field(j, "class").get<std::string>());
    });
}

}  // namespace maslovkit::json
