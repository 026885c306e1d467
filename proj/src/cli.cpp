#include "maslovkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "maslovkit/presets.hpp"

namespace maslovkit::cli {

namespace {

using json::Json;

// Usage errors are reported with this code; they are not library errors.
constexpr const char* kUsage = "UsageError";
constexpr const char* kInternal = "InternalError";

Json parse_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorCode::ParseError, origin + ": " + e.what());
    }
}

// A file path, inline JSON or preset:NAME.
Json load_input(const std::string& src) {
    static const std::string prefix = "preset:";
    if (src.rfind(prefix, 0) == 0) {
        const std::string name = src.substr(prefix.size());
        if (auto j = presets::lookup(name)) return *j;
        std::string known;
        for (const auto& n : presets::names()) known += (known.empty() ? "" : ", ") + n;
        fail(ErrorCode::ParseError, "unknown preset '" + name + "' (known: " + known + ")");
    }
    const auto first = src.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (src[first] == '{' || src[first] == '[')) return parse_text(src, "inline JSON");
    std::ifstream in(src);
    if (!in) fail(ErrorCode::ParseError, "cannot read '" + src + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), src);
}

RealPolynomial parse_coefficients(const std::string& list) {
    std::vector<double> c;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
            fail(ErrorCode::ParseError, "bad coefficient '" + item + "' in --poly");
        c.push_back(v);
    }
    if (c.empty()) fail(ErrorCode::ParseError, "--poly needs at least one coefficient");
    return RealPolynomial(std::move(c));
}

// Text rendering ------------------------------------------------------------

struct Style {
    bool color;
    std::string bold(const std::string& s) const { return color ? "\x1b[1m" + s + "\x1b[0m" : s; }
};

bool is_poly(const Json& j) { return j.is_object() && j.contains("terms"); }
bool is_matrix(const Json& j) { return j.is_object() && j.contains("entries") && j.contains("rows"); }

std::string scalar_text(const Json& j) {
    if (j.is_null()) return "-";
    if (j.is_string()) return j.get<std::string>();
    if (is_poly(j)) return json::decode_poly(j).to_string();
    return j.dump();
}

void render(const Json& j, std::ostream& out, const Style& st, int indent);

void render_matrix(const Json& m, std::ostream& out, int indent) {
    const RingMatrix a = json::decode_matrix(m, m.contains("ring") ? std::optional(json::decode_ring(m.at("ring")))
                                                                     : std::nullopt);
    std::vector<std::vector<std::string>> cells(a.rows());
    std::vector<std::size_t> width(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            cells[i].push_back(a(i, k).to_string());
            width[k] = std::max(width[k], cells[i].back().size());
        }
    if (a.rows() == 0 || a.cols() == 0) {
        out << std::string(indent, ' ') << "(" << a.rows() << " x " << a.cols() << ")\n";
        return;
    }
    for (const auto& row : cells) {
        out << std::string(indent, ' ') << "[";
        for (std::size_t k = 0; k < row.size(); ++k)
            out << (k ? "  " : " ") << std::setw(static_cast<int>(width[k])) << row[k];
        out << " ]\n";
    }
}

bool inline_value(const Json& v) { return !(v.is_structured()) || is_poly(v); }

void render(const Json& j, std::ostream& out, const Style& st, int indent) {
    const std::string pad(indent, ' ');
    if (is_matrix(j)) {
        if (j.contains("sign")) out << pad << "sign: " << j.at("sign").dump() << "\n";
        render_matrix(j, out, indent);
    } else if (j.is_object() && !is_poly(j)) {
        for (const auto& [k, v] : j.items()) {
            if (inline_value(v)) {
                out << pad << st.bold(k) << ": " << scalar_text(v) << "\n";
            } else {
                out << pad << st.bold(k) << ":\n";
                render(v, out, st, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (inline_value(v)) {
                out << pad << "- " << scalar_text(v) << "\n";
            } else {
                out << pad << "-\n";
                render(v, out, st, indent + 2);
            }
        }
    } else {
        out << pad << scalar_text(j) << "\n";
    }
}

// lgroup table -------------------------------------------------------------

Json lgroup_table(std::optional<long long> p, std::optional<int> d) {
    // Groups depend on p only through p mod 4; 5 and 3 represent the classes.
    std::vector<std::pair<std::string, long long>> columns;
    if (p) {
        columns.emplace_back("p=" + std::to_string(*p), *p);
    } else {
        columns.emplace_back("p=1 mod 4", 5);
        columns.emplace_back("p=3 mod 4", 3);
    }
    const int lo = d ? *d : 0, hi = d ? *d : 4;
    Json t;
    t["p"] = p ? Json(*p) : Json(nullptr);
    t["columns"] = Json::array();
    for (const auto& c : columns) t["columns"].push_back(c.first);
    Json rows = Json::array();
    for (int dd = lo; dd <= hi; ++dd)
        for (int n = 0; n < 4; ++n) {
            Json row{{"n", n}, {"d", dd}};
            Json groups = Json::object();
            bool validated = true;
            for (const auto& [name, prime] : columns) {
                const LGroupResult r = lgroup(n, dd, prime);
                groups[name] = r.group.to_string();
                validated = validated && r.validated;
            }
            row["L"] = std::move(groups);
            row["validated"] = validated;
            rows.push_back(std::move(row));
        }
    t["rows"] = std::move(rows);
    Json loops = Json::array();
    for (int dd = lo; dd <= hi; ++dd) {
        Json row{{"d", dd}};
        Json ideal = Json::object(), classes = Json::object();
        for (const auto& [name, prime] : columns) {
            if (dd > 4) {
                ideal[name] = nullptr;
                classes[name] = nullptr;
            } else {
                ideal[name] = fundamental_ideal_group(dd, prime).to_string();
                classes[name] = classify_loops(dd, prime).to_string();
            }
        }
        row["I"] = std::move(ideal);
        row["loops"] = std::move(classes);
        row["validated"] = dd <= 4;
        loops.push_back(std::move(row));
    }
    t["loops"] = std::move(loops);
    return t;
}

void render_table(const std::vector<std::vector<std::string>>& cells, std::ostream& out, const Style& st) {
    std::vector<std::size_t> width;
    for (const auto& row : cells)
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (width.size() <= k) width.push_back(0);
            width[k] = std::max(width[k], row[k].size());
        }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::string line;
        for (std::size_t k = 0; k < cells[i].size(); ++k) {
            std::string cell = cells[i][k];
            if (k + 1 < cells[i].size()) cell += std::string(width[k] - cell.size() + 2, ' ');
            line += cell;
        }
        out << (i == 0 ? st.bold(line) : line) << "\n";
    }
}

void render_lgroup_table(const Json& t, std::ostream& out, const Style& st) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"n", "d"};
    for (const auto& c : t.at("columns")) head.push_back("L " + c.get<std::string>());
    head.push_back("validated");
    cells.push_back(head);
    for (const auto& r : t.at("rows")) {
        std::vector<std::string> row{r.at("n").dump(), r.at("d").dump()};
        for (const auto& [k, v] : r.at("L").items()) row.push_back(v.get<std::string>());
        row.push_back(r.at("validated").get<bool>() ? "yes" : "no");
        cells.push_back(row);
    }
    render_table(cells, out, st);
    out << "\n";
    cells.clear();
    head = {"d"};
    for (const auto& c : t.at("columns")) head.push_back("I " + c.get<std::string>());
    for (const auto& c : t.at("columns")) head.push_back("loops " + c.get<std::string>());
    cells.push_back(head);
    for (const auto& r : t.at("loops")) {
        std::vector<std::string> row{r.at("d").dump()};
        for (const auto& [k, v] : r.at("I").items()) row.push_back(scalar_text(v));
        for (const auto& [k, v] : r.at("loops").items()) row.push_back(scalar_text(v));
        cells.push_back(row);
    }
    render_table(cells, out, st);
}

// Error reporting ------------------------------------------------------------

int exit_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::UnsupportedRing:
            return 3;
        case ErrorCode::InternalInvariantViolation:
            return 1;
        default:
            return 2;
    }
}

void report(std::ostream& err, const std::string& code, const std::string& detail) {
    err << Json{{"error", code}, {"detail", detail}}.dump() << "\n";
}

}  // namespace

bool color_from_env(bool stdout_is_tty) {
    const char* v = std::getenv("MASLOVKIT_COLOR");
    if (v && std::string(v) == "never") return false;
    return stdout_is_tty;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& opts) {
    CLI::App app{"Clifford QCA loops: Witt classes, Maslov indices, Lagrangian checks"};
    app.name("maslovkit");
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::string form_in, loop_in, q0_in, q1_in, poly_in, preset_in, module_in, circuit_in;
    std::optional<long long> table_p;
    std::optional<int> table_d;

    auto* witt = app.add_subcommand("witt", "Witt classes of forms over F_p")->require_subcommand(1);
    auto* witt_classify = witt->add_subcommand("classify", "Witt class of a nondegenerate form");
    witt_classify->add_option("--form", form_in, "Form JSON (file, inline or preset:NAME)")->required();

    auto* maslov = app.add_subcommand("maslov", "Maslov indices")->require_subcommand(1);
    auto* maslov_compute = maslov->add_subcommand("compute", "Maslov index of a loop");
    maslov_compute->add_option("--loop", loop_in, "Loop JSON")->required();
    auto* maslov_pair = maslov->add_subcommand("pair", "Loop built from a pair of forms and its Maslov index");
    maslov_pair->add_option("--q0", q0_in, "Form at T = 0")->required();
    maslov_pair->add_option("--q1", q1_in, "Form at T = 1")->required();
    auto* maslov_real = maslov->add_subcommand("real", "Maslov index of a real polynomial loop");
    auto* poly_opt = maslov_real->add_option("--poly", poly_in, "Coefficients c0,c1,... lowest degree first");
    auto* preset_opt = maslov_real->add_option("--preset", preset_in, "Named polynomial")
                           ->check(CLI::IsMember({"paper-example"}));
    poly_opt->excludes(preset_opt);
    maslov_real->require_option(1);

    auto* lag = app.add_subcommand("lagrangian", "Stabilizer module checks")->require_subcommand(1);
    auto* lag_check = lag->add_subcommand("check", "Isotropy, coisotropy, direct summand, Lagrangian");
    lag_check->add_option("--module", module_in, "Module JSON")->required();

    auto* qca = app.add_subcommand("qca", "Clifford circuits")->require_subcommand(1);
    auto* qca_apply = qca->add_subcommand("apply", "Image of a module under a circuit");
    qca_apply->add_option("--circuit", circuit_in, "Circuit JSON")->required();
    qca_apply->add_option("--module", module_in, "Module JSON")->required();

    auto* lg = app.add_subcommand("lgroup", "L-groups and loop classification")->require_subcommand(1);
    auto* lg_table = lg->add_subcommand("table", "Classification table");
    lg_table->add_option("--p", table_p, "Odd prime (default: one column per class mod 4)");
    lg_table->add_option("--d", table_d, "Single dimension (default: 0..4)")->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        report(err, kUsage, e.what());
        return 2;
    }

    const Style style{opts.color && format == "text"};
    try {
        Json result;
        bool table = false;
        if (witt_classify->parsed()) {
            const Json j = load_input(form_in);
            result = json::encode(witt_class(json::decode_form(j)));
        } else if (maslov_compute->parsed()) {
            result = json::encode(maslov_index(json::decode_loop(load_input(loop_in))));
        } else if (maslov_pair->parsed()) {
            const HermitianForm q0 = json::decode_form(load_input(q0_in));
            const HermitianForm q1 = json::decode_form(load_input(q1_in), q0.matrix().ring());
            const LagrangianLoop loop = loop_from_pair(q0, q1);
            result = Json{{"loop", json::encode(loop)}, {"maslov", json::encode(maslov_index(loop))}};
        } else if (maslov_real->parsed()) {
            const RealPolynomial p = preset_opt->count() ? *presets::real_polynomial(preset_in) : parse_coefficients(poly_in);
            result = real_maslov(p);
        } else if (lag_check->parsed()) {
            result = json::encode(lagrangian_report(json::decode_module(load_input(module_in))));
        } else if (qca_apply->parsed()) {
            const StabilizerModule s = json::decode_module(load_input(module_in));
            const Circuit c = json::decode_circuit(load_input(circuit_in), s.ambient().ring());
            result = json::encode(apply_circuit(c, s));
        } else if (lg_table->parsed()) {
            result = lgroup_table(table_p, table_d);
            table = true;
        }
        if (format == "json") {
            out << result.dump(2) << "\n";
        } else if (table) {
            render_lgroup_table(result, out, style);
        } else {
            render(result, out, style, 0);
        }
        return 0;
    } catch (const Error& e) {
        report(err, code_name(e.code()), e.what());
        return exit_code(e.code());
    } catch (const std::exception& e) {
        report(err, kInternal, e.what());
        return 1;
    }
}

}  // namespace maslovkit::cli
