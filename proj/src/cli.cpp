#include "hyperspec/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hyperspec/charpoly.hpp"
#include "hyperspec/errors.hpp"
#include "hyperspec/fixtures.hpp"
#include "hyperspec/json_io.hpp"
#include "hyperspec/kernels.hpp"
#include "hyperspec/parity.hpp"
#include "hyperspec/spectra.hpp"

namespace hyperspec::cli {

namespace {

struct Options {
    std::string input = "-";
    std::string output;
    std::string format = "json";
    double tol = PowerOptions{}.tol;
    long max_iter = PowerOptions{}.max_iter;
    int max_k = 0;
    std::string certificate;
    std::string eigenpair;
    std::string witness;
    std::string family;
    std::string name;
    int k = 1;
    int size_a = 0;
    int size_b = 0;
    int size_c = 0;
    int r = 0;
    int n = 0;
};

class Session {
public:
    Session(const Options& o, std::istream& in, std::ostream& out) : o_(o), in_(in), out_(out) {}

    std::string read(const std::string& path) const {
        if (path == "-") {
            std::stringstream ss;
            ss << in_.rdbuf();
            return ss.str();
        }
        std::ifstream f(path);
        if (!f) throw ParseError("cannot open " + path);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }

    Json read_json(const std::string& path) const { return parse_json(read(path)); }

    Instance instance() const { return instance_from_json(read_json(o_.input)); }

    void emit(const Json& j) const {
        const std::string text = dump(j) + "\n";
        if (o_.output.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(o_.output);
        if (!f) throw ParseError("cannot write " + o_.output);
        f << text;
    }

    PowerOptions power() const {
        PowerOptions p;
        p.tol = o_.tol;
        p.max_iter = o_.max_iter;
        return p;
    }

private:
    const Options& o_;
    std::istream& in_;
    std::ostream& out_;
};

Json rho(const Session& s) {
    const auto result = spectral_radius_power(as_tensor(s.instance()), s.power());
    Json j = to_json(result.pair);
    j["lower"] = result.lower;
    j["upper"] = result.upper;
    j["iterations"] = result.iterations;
    j["shift"] = result.shift;
    return j;
}

Json coloring(const Session& s) {
    const auto system = as_support(s.instance());
    return to_json(odd_coloring(system), system);
}

Json transversal(const Session& s, const Options& o) {
    const auto in = s.instance();
    const auto system = as_support(in);
    Json j = to_json(odd_transversal(system), system);
    if (o.max_k > 0) {
        const auto* g = std::get_if<Hypergraph>(&in);
        if (!g) throw PreconditionError("--max-k needs hypergraph input");
        const auto chi = chromatic_number(*g, o.max_k);
        j["chromatic_number"] = chi.chromatic_number ? Json(*chi.chromatic_number) : Json(nullptr);
        if (chi.chromatic_number) j["weak_coloring"] = chi.coloring;
    }
    return j;
}

Json convert(const Session& s, const Options& o) {
    if (o.certificate.empty()) throw ParseError("convert-certificate needs --certificate");
    const auto system = as_support(s.instance());
    const Certificate cert = certificate_from_json(s.read_json(o.certificate));
    if (!std::visit([&](const auto& c) { return verify_certificate(system, c); }, cert))
        throw CertificateError("the given certificate does not verify against the input");
    Certificate converted;
    if (const auto* phi = std::get_if<OddColoring>(&cert)) {
        converted = coloring_to_transversal(*phi);
    } else {
        const int r = o.r > 0 ? o.r : system.r;
        converted = transversal_to_coloring(std::get<OddTransversal>(cert), r, system.n);
    }
    const bool ok = std::visit([&](const auto& c) { return verify_certificate(system, c); }, converted);
    return {{"certificate", to_json(converted)}, {"verified", ok}};
}

Json charpoly(const Session& s) {
    const UniPoly p = characteristic_polynomial(as_tensor(s.instance()));
    Json j = to_json(p);
    j["spectrum_symmetric"] = is_spectrum_symmetric_poly(p);
    return j;
}

Json verify_pair(const Session& s, const Options& o) {
    if (o.eigenpair.empty()) throw ParseError("verify-eigenpair needs --eigenpair");
    const auto a = as_tensor(s.instance());
    const EigenPair claimed = eigenpair_from_json(s.read_json(o.eigenpair));
    if (claimed.x.size() != static_cast<std::size_t>(a.order()))
        throw DimensionError("eigenvector length differs from the tensor order");
    const EigenPair p = certify_eigenpair(a, claimed.lambda, claimed.x, claimed.kind);
    return {{"residual", p.residual}, {"tol", o.tol}, {"verified", p.residual <= o.tol},
            {"kind", p.kind == EigenKind::H ? "H" : "general"}};
}

Json generate(const Options& o) {
    GeneratedGraph gen{Hypergraph(2, 1), OddColoring{}, {}};
    if (o.family == "prop4") {
        gen = two_part_counterexample(o.k, o.size_a > 0 ? o.size_a : 4 * o.k, o.size_b > 0 ? o.size_b : 4 * o.k);
    } else if (o.family == "prop5") {
        gen = three_part_counterexample(o.k, o.size_a > 0 ? o.size_a : 6 * o.k, o.size_b > 0 ? o.size_b : 6 * o.k,
                                        o.size_c > 0 ? o.size_c : 4 * o.k);
    } else if (o.family == "edge") {
        if (o.r < 2) throw ParseError("gen edge needs --r >= 2");
        return to_json(single_edge(o.r, o.n > 0 ? o.n : o.r));
    } else {
        throw ParseError("unknown family \"" + o.family + "\" (prop4, prop5, edge)");
    }
    if (!o.witness.empty()) {
        std::ofstream f(o.witness);
        if (!f) throw ParseError("cannot write " + o.witness);
        f << dump(to_json(gen.witness)) << "\n";
    }
    return to_json(gen.graph);
}

Json fixture(const Options& o) {
    std::string name = o.name;
    if (name == "edge-r") {
        if (o.r < 2) throw ParseError("fixture edge-r needs --r >= 2");
        name = "edge-" + std::to_string(o.r);
    }
    const Instance in = fixtures::by_name(name);
    return std::visit([](const auto& x) { return to_json(x); }, in);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Spectra, parity certificates and characteristic polynomials of cubical tensors and uniform hypergraphs",
                 "hyperspec"};
    app.require_subcommand(1, 1);

    auto input = [&](CLI::App* c) {
        c->add_option("--input,-i", o.input, "Tensor or hypergraph JSON (- for stdin)");
    };
    auto common = [&](CLI::App* c) {
        c->add_option("--output,-o", o.output, "Write JSON here instead of stdout");
        c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json"}));
    };
    auto numeric = [&](CLI::App* c) {
        c->add_option("--tol", o.tol, "Bracket tolerance")->check(CLI::PositiveNumber);
        c->add_option("--max-iter", o.max_iter, "Iteration limit")->check(CLI::PositiveNumber);
    };

    auto* rho_cmd = app.add_subcommand("rho", "Spectral radius and Perron vector by power iteration");
    input(rho_cmd);
    common(rho_cmd);
    numeric(rho_cmd);
    auto* col_cmd = app.add_subcommand("odd-coloring", "Solve for an odd-coloring over Z_r");
    input(col_cmd);
    common(col_cmd);
    auto* tr_cmd = app.add_subcommand("odd-transversal", "Solve for an odd transversal over GF(2)");
    input(tr_cmd);
    common(tr_cmd);
    tr_cmd->add_option("--max-k", o.max_k, "Also report the chromatic number up to this bound")
        ->check(CLI::PositiveNumber);
    auto* conv_cmd = app.add_subcommand("convert-certificate", "Turn a transversal into a coloring or back");
    input(conv_cmd);
    common(conv_cmd);
    conv_cmd->add_option("--certificate", o.certificate, "Certificate JSON")->required();
    conv_cmd->add_option("--r", o.r, "Target modulus for transversal to coloring");
    auto* sym_cmd = app.add_subcommand("check-symmetric", "Decide spectrum symmetry with witnesses");
    input(sym_cmd);
    common(sym_cmd);
    numeric(sym_cmd);
    auto* cp_cmd = app.add_subcommand("charpoly", "Exact characteristic polynomial");
    input(cp_cmd);
    common(cp_cmd);
    auto* ver_cmd = app.add_subcommand("verify-eigenpair", "Residual of a claimed eigenpair");
    input(ver_cmd);
    common(ver_cmd);
    ver_cmd->add_option("--eigenpair", o.eigenpair, "EigenPair JSON")->required();
    ver_cmd->add_option("--tol", o.tol, "Acceptance threshold for the residual")->check(CLI::NonNegativeNumber);
    auto* prod_cmd = app.add_subcommand("verify-product", "Compare a charpoly with its component product");
    input(prod_cmd);
    common(prod_cmd);
    auto* gen_cmd = app.add_subcommand("gen", "Generate a hypergraph family");
    common(gen_cmd);
    gen_cmd->add_option("family", o.family, "prop4, prop5 or edge")->required();
    gen_cmd->add_option("--k", o.k, "Uniformity is 4k")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--size-a", o.size_a, "Size of part A");
    gen_cmd->add_option("--size-b", o.size_b, "Size of part B");
    gen_cmd->add_option("--size-c", o.size_c, "Size of part C");
    gen_cmd->add_option("--r", o.r, "Edge size for the edge family");
    gen_cmd->add_option("--n", o.n, "Order for the edge family");
    gen_cmd->add_option("--witness", o.witness, "Write the construction's odd-coloring here");
    auto* fix_cmd = app.add_subcommand("fixture", "Emit a named example tensor or hypergraph");
    common(fix_cmd);
    fix_cmd->add_option("name", o.name, "h2, a1, a2, order6, prop4-k1, prop5-k1, edge-r, edge-<r>")->required();
    fix_cmd->add_option("--r", o.r, "Edge size for edge-r");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    const Session session(o, in, out);
    try {
        Json result;
        if (rho_cmd->parsed()) result = rho(session);
        else if (col_cmd->parsed()) result = coloring(session);
        else if (tr_cmd->parsed()) result = transversal(session, o);
        else if (conv_cmd->parsed()) result = convert(session, o);
        else if (sym_cmd->parsed()) result = to_json(check_symmetric_spectrum_certified(as_tensor(session.instance()), session.power()));
        else if (cp_cmd->parsed()) result = charpoly(session);
        else if (ver_cmd->parsed()) result = verify_pair(session, o);
        else if (prod_cmd->parsed()) result = to_json(verify_component_product(as_tensor(session.instance())));
        else if (gen_cmd->parsed()) result = generate(o);
        else result = fixture(o);
        session.emit(result);
        return kOk;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return kPrecondition;
    } catch (const ConvergenceError& e) {
        err << "no convergence: " << e.what() << " after " << e.iterations() << " iterations, bracket ["
            << e.lower() << ", " << e.upper() << "]\n";
        return kNoConvergence;
    } catch (const SearchBudgetExceeded& e) {
        err << "search budget exceeded: " << e.what() << "\n";
        return kNoConvergence;
    } catch (const DegenerateResultantError& e) {
        err << "degenerate resultant: " << e.what() << "\n";
        return kNoConvergence;
    }
}

}  // namespace hyperspec::cli
