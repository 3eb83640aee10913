#include "netid/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "netid/errors.hpp"
#include "netid/identities.hpp"
#include "netid/random_graph.hpp"

namespace netid::cli {

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValueError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// parse, then canonicalize: every computation downstream assumes an
// optimal vertex set, and optimalize is the identity on optimal graphs
MetrizedGraph load_graph(const std::string& path) {
    return optimalize(parse_edge_list(read_file(path)));
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ValueError("cannot open output file '" + path + "'");
    out << content;
    if (!out)
        throw ValueError("failed writing output file '" + path + "'");
}

std::string matrix_tsv(const Eigen::MatrixXd& m) {
    std::string out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j)
                out += '\t';
            out += format_double(m(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string matrix_json(const Eigen::MatrixXd& m) {
    std::string out = "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (i)
            out += ',';
        out += '[';
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j)
                out += ',';
            out += format_double(m(i, j));
        }
        out += ']';
    }
    out += "]\n";
    return out;
}

std::string render_matrix(const Eigen::MatrixXd& m, const std::string& format) {
    return format == "json" ? matrix_json(m) : matrix_tsv(m);
}

std::string report_tsv(const IdentityReport& report) {
    std::string out = "#name\tk\ts\tlhs\trhs\tresidual\tpass\n";
    for (const IdentityCheck& c : report.checks) {
        out += to_string(c.name) + '\t' + std::to_string(c.k) + '\t' + (c.source ? *c.source : "-") +
               '\t' + format_double(c.lhs) + '\t' + format_double(c.rhs) + '\t' +
               format_double(c.residual) + '\t' + (c.pass ? "true" : "false") + '\n';
    }
    out += std::string("#pass\t") + (report.pass ? "true" : "false") + '\n';
    return out;
}

double default_tolerance() {
    if (const char* env = std::getenv("NETID_TOL")) {
        char* end = nullptr;
        double tol = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(tol > 0.0))
            throw ValueError("NETID_TOL must be a positive number, got '" + std::string(env) + "'");
        return tol;
    }
    return 1e-8;
}

std::optional<int> resolve_source(const MetrizedGraph& g, const std::string& source) {
    if (source == "all")
        return std::nullopt;
    return g.index_of(source);
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"resistive network toolkit: Laplacian pseudoinverse, resistances, voltages,\n"
                 "equilibrium measures, transition kernels, and Foster-type identity checks",
                 "netid"};
    app.require_subcommand(1);

    std::string input, output, format = "tsv", source = "all";
    double tolerance = 1e-8;
    int kmax = 10, kstep = 1, perturb_edge = -1;
    double perturb_factor = 1.01;
    bool show_literal = false;
    std::vector<std::string> pair, triple;
    std::int64_t walks = 1000000;
    std::uint64_t seed = 0;
    int gen_n = 0;
    double edge_prob = 0.2, min_length = 0.1, max_length = 10.0;

    auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
        if (needs_input)
            cmd->add_option("--input,-i", input, "edge-list file")->required();
        cmd->add_option("--output,-o", output, "output path (default stdout)");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"tsv", "json"}));
    };

    CLI::App* check = app.add_subcommand("check", "certify all identities on a graph");
    add_common(check);
    check->add_option("--tolerance", tolerance, "pass threshold: |lhs-rhs| <= tol*max(1,|rhs|)");
    check->add_option("--max-k", kmax, "largest step count k")->check(CLI::PositiveNumber);
    check->add_option("--source", source, "source vertex id, or 'all'");
    check->add_flag("--show-literal", show_literal,
                    "also print the order-restricted low-order sums to stderr (diagnostic)");
    check->add_option("--perturb-lhs-edge", perturb_edge,
                      "negative control: perturb this edge (0-based index) in the voltage-side "
                      "inputs only");
    check->add_option("--perturb-lhs-factor", perturb_factor,
                      "length factor for --perturb-lhs-edge");

    CLI::App* resistance = app.add_subcommand("resistance", "effective resistance matrix or pair");
    add_common(resistance);
    resistance->add_option("--pair", pair, "two vertex ids; print r(a,b) only")->expected(2);

    CLI::App* volt_cmd = app.add_subcommand("voltage", "three-point voltage j_p(q,s)");
    add_common(volt_cmd);
    volt_cmd->add_option("--triple", triple, "base p, then q and s")->expected(3)->required();

    CLI::App* lap_cmd = app.add_subcommand("laplacian", "discrete Laplacian matrix");
    add_common(lap_cmd);

    CLI::App* pinv_cmd = app.add_subcommand("pinv", "Moore-Penrose pseudoinverse of the Laplacian");
    add_common(pinv_cmd);

    CLI::App* equil = app.add_subcommand("equilibrium", "equilibrium measure rows");
    add_common(equil);
    equil->add_option("--source", source, "base vertex id, or 'all' for one row per vertex");

    CLI::App* kernel_cmd = app.add_subcommand("kernel", "k-step transition probability matrix");
    add_common(kernel_cmd);
    kernel_cmd->add_option("--k", kstep, "step count")->check(CLI::PositiveNumber);

    CLI::App* walk = app.add_subcommand("walk", "Monte-Carlo k-step frequency vector");
    add_common(walk);
    walk->add_option("--source", source, "start vertex id")->required();
    walk->add_option("--k", kstep, "step count")->check(CLI::PositiveNumber);
    walk->add_option("--walks", walks, "number of independent walks")->check(CLI::PositiveNumber);
    walk->add_option("--seed", seed, "RNG seed");

    CLI::App* gen = app.add_subcommand("gen", "generate a random connected simple graph");
    add_common(gen, /*needs_input=*/false);
    gen->add_option("--n", gen_n, "vertex count")->required()->check(CLI::Range(2, 1 << 20));
    gen->add_option("--edge-prob", edge_prob, "extra-edge probability")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--min-length", min_length, "smallest edge length");
    gen->add_option("--max-length", max_length, "largest edge length");
    gen->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!check->count("--tolerance"))
            tolerance = default_tolerance();

        if (gen->parsed()) {
            MetrizedGraph g = generate_random_graph(gen_n, edge_prob, min_length, max_length, seed);
            write_output(output, g.serialize());
            return 0;
        }

        MetrizedGraph g = load_graph(input);

        if (check->parsed()) {
            std::optional<int> s = resolve_source(g, source);
            IdentityReport report;
            IdentitySuite suite = [&]() {
                if (perturb_edge < 0)
                    return IdentitySuite(g, tolerance);
                MetrizedGraph parsed = parse_edge_list(read_file(input));
                if (perturb_edge >= parsed.edge_count())
                    throw ValueError("--perturb-lhs-edge out of range (graph has " +
                                     std::to_string(parsed.edge_count()) + " edges)");
                std::vector<Edge> edges = parsed.edges();
                edges[perturb_edge].length *= perturb_factor;
                MetrizedGraph perturbed =
                    optimalize(MetrizedGraph(parsed.vertices(), std::move(edges)));
                return IdentitySuite(g, perturbed, tolerance);
            }();
            if (suite.pinv().condition_warning())
                std::cerr << "warning: L + J/n condition estimate "
                          << format_double(suite.pinv().condition_estimate()) << " exceeds 1e12\n";
            report = suite.full_report(s, kmax);
            if (show_literal) {
                std::vector<int> sources;
                if (s)
                    sources.push_back(*s);
                else
                    for (int v = 0; v < g.vertex_count(); ++v) sources.push_back(v);
                for (int v : sources)
                    for (int order = 1; order <= 4; ++order)
                        std::cerr << "literal low_order_" << order << " s=" << g.vertex_name(v)
                                  << ": " << format_double(suite.low_order_literal(v, order))
                                  << '\n';
            }
            bool json = check->count("--format") == 0 || format == "json";
            write_output(output, json ? report_to_json(report) + "\n" : report_tsv(report));
            return report.pass ? 0 : 1;
        }

        if (resistance->parsed()) {
            ResistanceMatrix r = resistance_matrix(pseudo_inverse(laplacian(g)));
            if (!pair.empty()) {
                double value = r(g.index_of(pair[0]), g.index_of(pair[1]));
                write_output(output, format_double(value) + "\n");
            } else {
                write_output(output, render_matrix(r.matrix(), format));
            }
            return 0;
        }

        if (volt_cmd->parsed()) {
            PseudoInverse lp = pseudo_inverse(laplacian(g));
            double value = voltage(lp, g.index_of(triple[0]), g.index_of(triple[1]),
                                   g.index_of(triple[2]));
            write_output(output, format_double(value) + "\n");
            return 0;
        }

        if (lap_cmd->parsed()) {
            write_output(output, render_matrix(laplacian(g).matrix(), format));
            return 0;
        }

        if (pinv_cmd->parsed()) {
            PseudoInverse lp = pseudo_inverse(laplacian(g));
            if (lp.condition_warning())
                std::cerr << "warning: L + J/n condition estimate "
                          << format_double(lp.condition_estimate()) << " exceeds 1e12\n";
            write_output(output, render_matrix(lp.matrix(), format));
            return 0;
        }

        if (equil->parsed()) {
            DiscreteLaplacian lap = laplacian(g);
            std::optional<int> s = resolve_source(g, source);
            if (s) {
                EquilibriumMeasure nu = equilibrium_measure(lap, *s);
                if (nu.min_off_base() < -1e-12)
                    std::cerr << "warning: equilibrium measure has negative off-base entries\n";
                write_output(output, render_matrix(nu.values.transpose(), format));
            } else {
                write_output(output, render_matrix(EquilibriumTable(lap).matrix(), format));
            }
            return 0;
        }

        if (kernel_cmd->parsed()) {
            TransitionKernel kern = transition_matrix(conductance_profile(g));
            write_output(output, render_matrix(kern.kstep(kstep), format));
            return 0;
        }

        if (walk->parsed()) {
            Eigen::VectorXd freq =
                simulate_kstep_frequencies(g, g.index_of(source), kstep, walks, seed);
            write_output(output, render_matrix(freq.transpose(), format));
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "netid: error: " << e.what() << '\n';
        return 2;
    }
    return 2;  // unreachable: a subcommand is required
}

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("netid");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace netid::cli
