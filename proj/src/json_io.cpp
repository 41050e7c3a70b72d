#include "hyperspec/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "hyperspec/errors.hpp"

namespace hyperspec {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

long integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<long>();
}

const Json& array(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    return j;
}

double real_number(const Json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
    return j.get<double>();
}

std::string rational_string(const Rational& q) { return q.get_str(); }

Rational exact_part(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    return Rational(j.get<long>());
}

bool exact_part_ok(const Json& j) { return j.is_string() || j.is_number_integer(); }

Scalar scalar_from_json(const Json& v) {
    if (exact_part_ok(v)) return Scalar(exact_part(v));
    if (v.is_number_float()) return Scalar(v.get<double>());
    if (v.is_array() && v.size() == 2) {
        if (exact_part_ok(v[0]) && exact_part_ok(v[1])) return Scalar(exact_part(v[0]), exact_part(v[1]));
        return Scalar(std::complex<double>(real_number(v[0], "entry value"), real_number(v[1], "entry value")));
    }
    throw ParseError("entry value must be \"p/q\", a number, or a [re, im] pair");
}

Json scalar_to_json(const Scalar& s) {
    if (s.is_exact()) {
        const auto& g = s.exact();
        if (g.is_real()) return rational_string(g.re);
        return Json::array({rational_string(g.re), rational_string(g.im)});
    }
    const auto c = s.to_complex();
    return Json::array({c.real(), c.imag()});
}

Json complex_to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("complex number must be [re, im]");
    return {real_number(j[0], "real part"), real_number(j[1], "imaginary part")};
}

Json vertices_to_json(const std::vector<Index>& v) {
    Json out = Json::array();
    for (Index i : v) out.push_back(i + 1);
    return out;
}

int checked_order(const Json& j) {
    const long n = integer(field(j, "n"), "n");
    if (n < 1) throw ParseError("n must be at least 1");
    return static_cast<int>(n);
}

int checked_arity(const Json& j) {
    const long r = integer(field(j, "r"), "r");
    if (r < 2) throw ParseError("r must be at least 2");
    return static_cast<int>(r);
}

Index vertex_from_json(const Json& j, int n) {
    const long v = integer(j, "vertex index");
    if (v < 1 || v > n) throw ParseError("vertex index " + std::to_string(v) + " outside 1.." + std::to_string(n));
    return static_cast<Index>(v - 1);
}

void write(const Json& j, std::string& out) {
    switch (j.type()) {
        case Json::value_t::null:
            out += "null";
            break;
        case Json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            break;
        case Json::value_t::number_integer:
            out += std::to_string(j.get<std::int64_t>());
            break;
        case Json::value_t::number_unsigned:
            out += std::to_string(j.get<std::uint64_t>());
            break;
        case Json::value_t::number_float: {
            const double d = j.get<double>();
            if (!std::isfinite(d)) {
                out += "null";
                break;
            }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", d);
            out += buf;
            break;
        }
        case Json::value_t::string:
            out += j.dump();
            break;
        case Json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& item : j) {
                if (!first) out += ',';
                first = false;
                write(item, out);
            }
            out += ']';
            break;
        }
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                out += Json(key).dump();
                out += ':';
                write(value, out);
            }
            out += '}';
            break;
        }
        default:
            throw Error("cannot serialize JSON value");
    }
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
}

std::string dump(const Json& j) {
    std::string out;
    write(j, out);
    return out;
}

Json to_json(const CubicalTensor& a) {
    Json entries = Json::array();
    for (std::size_t e = 0; e < a.size(); ++e) {
        Json idx = Json::array();
        for (Index i : a.index(e)) idx.push_back(i + 1);
        entries.push_back({{"i", idx}, {"v", scalar_to_json(a.value(e))}});
    }
    return {{"r", a.arity()}, {"n", a.order()}, {"entries", entries}};
}

CubicalTensor tensor_from_json(const Json& j) {
    return guarded([&] {
        const int r = checked_arity(j);
        const int n = checked_order(j);
        std::vector<TensorEntry> entries;
        for (const auto& item : array(field(j, "entries"), "entries")) {
            const Json& idx = array(field(item, "i"), "entry index");
            if (idx.size() != static_cast<std::size_t>(r))
                throw ParseError("entry index has " + std::to_string(idx.size()) + " components, expected " +
                                 std::to_string(r));
            TensorEntry entry;
            for (const auto& v : idx) entry.index.push_back(vertex_from_json(v, n));
            entry.value = scalar_from_json(field(item, "v"));
            entries.push_back(std::move(entry));
        }
        return CubicalTensor(r, n, std::move(entries));
    });
}

Json to_json(const Hypergraph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back(vertices_to_json(e));
    return {{"r", g.uniformity()}, {"n", g.order()}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const Json& j) {
    return guarded([&] {
        const int r = checked_arity(j);
        const int n = checked_order(j);
        std::vector<Edge> edges;
        for (const auto& item : array(field(j, "edges"), "edges")) {
            Edge e;
            for (const auto& v : array(item, "edge")) e.push_back(vertex_from_json(v, n));
            if (e.size() != static_cast<std::size_t>(r))
                throw ParseError("edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(r));
            for (std::size_t i = 1; i < e.size(); ++i)
                if (e[i - 1] >= e[i]) throw ParseError("edge vertices must be strictly increasing");
            edges.push_back(std::move(e));
        }
        return Hypergraph(r, n, std::move(edges));
    });
}

Instance instance_from_json(const Json& j) {
    if (j.is_object() && j.contains("edges")) return hypergraph_from_json(j);
    if (j.is_object() && j.contains("entries")) return tensor_from_json(j);
    throw ParseError("input is neither a tensor (\"entries\") nor a hypergraph (\"edges\")");
}

CubicalTensor as_tensor(const Instance& in) {
    if (const auto* g = std::get_if<Hypergraph>(&in)) return adjacency_tensor(*g);
    return std::get<CubicalTensor>(in);
}

SupportSystem as_support(const Instance& in) {
    return std::visit([](const auto& x) { return support_system(x); }, in);
}

Json to_json(const OddColoring& phi) { return {{"kind", "odd-coloring"}, {"r", phi.r}, {"phi", phi.phi}}; }

Json to_json(const OddTransversal& x) { return {{"kind", "odd-transversal"}, {"X", vertices_to_json(x.vertices)}}; }

Json to_json(const Certificate& c) {
    return std::visit([](const auto& cert) { return to_json(cert); }, c);
}

Certificate certificate_from_json(const Json& j) {
    return guarded([&]() -> Certificate {
        const Json& kind = field(j, "kind");
        if (kind == "odd-coloring") {
            const long r = integer(field(j, "r"), "r");
            std::vector<long> phi;
            for (const auto& v : array(field(j, "phi"), "phi")) phi.push_back(integer(v, "color"));
            if (r < 2) throw ParseError("coloring modulus must be at least 2");
            return make_odd_coloring(static_cast<int>(r), phi);
        }
        if (kind == "odd-transversal") {
            std::vector<Index> vertices;
            for (const auto& v : array(field(j, "X"), "X")) {
                const long i = integer(v, "vertex");
                if (i < 1) throw ParseError("transversal vertices are 1-based");
                vertices.push_back(static_cast<Index>(i - 1));
            }
            return make_odd_transversal(std::move(vertices));
        }
        throw ParseError("certificate kind must be \"odd-coloring\" or \"odd-transversal\"");
    });
}

Json to_json(const EigenPair& p) {
    Json x = Json::array();
    for (const auto& z : p.x) x.push_back(complex_to_json(z));
    return {{"lambda", complex_to_json(p.lambda)},
            {"x", x},
            {"residual", p.residual},
            {"kind", p.kind == EigenKind::H ? "H" : "general"}};
}

EigenPair eigenpair_from_json(const Json& j) {
    return guarded([&] {
        EigenPair p;
        p.lambda = complex_from_json(field(j, "lambda"));
        for (const auto& z : array(field(j, "x"), "x")) p.x.push_back(complex_from_json(z));
        if (j.contains("residual")) p.residual = real_number(j.at("residual"), "residual");
        if (j.contains("kind")) {
            const Json& kind = j.at("kind");
            if (kind == "H") {
                p.kind = EigenKind::H;
            } else if (kind != "general") {
                throw ParseError("eigenpair kind must be \"general\" or \"H\"");
            }
        }
        return p;
    });
}

Json to_json(const UniPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(rational_string(c));
    return {{"degree", p.degree()}, {"coeffs", coeffs}};
}

UniPoly unipoly_from_json(const Json& j) {
    return guarded([&] {
        std::vector<Rational> coeffs;
        for (const auto& c : array(field(j, "coeffs"), "coeffs")) {
            if (!exact_part_ok(c)) throw ParseError("coefficients must be \"p/q\" strings or integers");
            coeffs.push_back(exact_part(c));
        }
        UniPoly p(std::move(coeffs));
        if (j.contains("degree") && integer(j.at("degree"), "degree") != p.degree())
            throw ParseError("stated degree does not match the coefficients");
        return p;
    });
}

Json to_json(const ColoringOutcome& out, const SupportSystem& s) {
    Json j = {{"feasible", out.feasible()}, {"r", s.r}};
    if (out.coloring) j["certificate"] = to_json(*out.coloring);
    if (out.infeasibility) {
        Json rows = Json::array();
        for (const auto& [row, weight] : out.infeasibility->combination)
            rows.push_back({{"pattern", vertices_to_json(s.patterns[row])}, {"weight", weight}});
        j["infeasibility"] = {{"modulus", out.infeasibility->modulus},
                              {"prime_power", out.infeasibility->prime_power},
                              {"combination", rows}};
    }
    return j;
}

Json to_json(const TransversalOutcome& out, const SupportSystem& s) {
    Json j = {{"feasible", out.feasible()}};
    if (out.transversal) j["certificate"] = to_json(*out.transversal);
    if (out.infeasibility) {
        Json rows = Json::array();
        for (std::size_t row : out.infeasibility->rows) rows.push_back(vertices_to_json(s.patterns[row]));
        j["infeasibility"] = {{"rows", rows}};
    }
    return j;
}

Json to_json(const SymmetryReport& report) {
    Json pairs = Json::array();
    for (const auto& w : report.witness_pairs)
        pairs.push_back({{"vertices", vertices_to_json(w.vertices)},
                         {"perron", to_json(w.perron)},
                         {"negated", to_json(w.negated)}});
    Json j = {{"symmetric", report.symmetric},
              {"branch", to_string(report.branch)},
              {"certificate", report.certificate ? to_json(*report.certificate) : Json(nullptr)},
              {"witness_pairs", pairs}};
    if (!report.failed_component.empty()) j["failed_component"] = vertices_to_json(report.failed_component);
    if (report.infeasibility) {
        Json rows = Json::array();
        for (const auto& [row, weight] : report.infeasibility->combination)
            rows.push_back({{"equation", row}, {"weight", weight}});
        j["infeasibility"] = {{"modulus", report.infeasibility->modulus},
                              {"prime_power", report.infeasibility->prime_power},
                              {"combination", rows}};
    }
    return j;
}

Json to_json(const ProductReport& report) {
    Json factors = Json::array();
    for (const auto& f : report.factors)
        factors.push_back(
            {{"vertices", vertices_to_json(f.vertices)}, {"charpoly", to_json(f.charpoly)}, {"exponent", f.exponent}});
    return {{"equal", report.equal},
            {"direct", to_json(report.direct)},
            {"product", to_json(report.product)},
            {"factors", factors}};
}

Json to_json(const IsolatedVertexReport& report) {
    Json roots = Json::array();
    for (const auto& row : report.roots)
        roots.push_back({{"factor", to_json(row.factor)},
                         {"before", row.before},
                         {"after", row.after},
                         {"product_rule", row.product_rule},
                         {"power_rule", row.power_rule}});
    return {{"r", report.arity},
            {"n", report.order},
            {"before", to_json(report.before)},
            {"after", to_json(report.after)},
            {"zero", {{"before", report.zero_before},
                      {"after", report.zero_after},
                      {"product_rule", report.zero_product_rule},
                      {"power_rule", report.zero_power_rule}}},
            {"roots", roots},
            {"matches_product_rule", report.matches_product_rule},
            {"matches_power_rule", report.matches_power_rule}};
}

}  // namespace hyperspec
