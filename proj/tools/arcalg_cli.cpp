// Command line front end: enumerate blocks, multiply elements, emit the
// graded matrices as CSV, print module data, render diagrams and run the
// verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "arcalg/arcalg.hpp"

namespace {

using namespace arcalg;

int run(int argc, char** argv) {
    CLI::App app{"arc algebra toolbox: blocks of weights, oriented circle diagrams, "
                 "surgery products and graded representation data"};
    app.require_subcommand(1);

    std::string block_str, x_str, y_str, mu_str, lambda_str, out_file, diagram_str, element_str;
    std::string suite = "all", algebra_kind = "K";
    bool truncate = false, via_closure = false;
    int max_vertices = 5;
    long long samples = 10000;
    std::uint64_t seed = VerifyOptions{}.seed;

    auto* cmd_enumerate = app.add_subcommand("enumerate", "list the members of a block");
    cmd_enumerate->add_option("--block", block_str, "any weight of the block")->required();

    auto* cmd_multiply = app.add_subcommand("multiply", "multiply two elements");
    cmd_multiply->add_option("--block", block_str, "any weight of the block")->required();
    cmd_multiply->add_option("--x", x_str, "left element")->required();
    cmd_multiply->add_option("--y", y_str, "right element")->required();
    cmd_multiply->add_flag("--via-closure", via_closure,
                           "use the quotient-of-closures route instead of direct surgery");

    auto* cmd_basis = app.add_subcommand("basis", "list the diagram basis of K or H");
    cmd_basis->add_option("--block", block_str)->required();
    cmd_basis->add_option("--algebra", algebra_kind, "K (default) or H")
        ->check(CLI::IsMember({"K", "H"}));

    auto* cmd_cartan = app.add_subcommand("cartan", "emit the q-Cartan matrix as CSV");
    cmd_cartan->add_option("--block", block_str)->required();
    cmd_cartan->add_option("--out", out_file, "write to a file instead of stdout");

    auto* cmd_decomp = app.add_subcommand("decomp", "emit the q-decomposition matrix as CSV");
    cmd_decomp->add_option("--block", block_str)->required();
    cmd_decomp->add_option("--out", out_file, "write to a file instead of stdout");

    auto* cmd_cellmod = app.add_subcommand("cellmod", "print a cell module");
    cmd_cellmod->add_option("--block", block_str)->required();
    cmd_cellmod->add_option("--mu", mu_str, "the labelling weight")->required();
    cmd_cellmod->add_flag("--truncate", truncate, "also report the truncation to H");

    auto* cmd_filtration = app.add_subcommand("filtration", "print the cell filtration of a projective");
    cmd_filtration->add_option("--block", block_str)->required();
    cmd_filtration->add_option("--lambda", lambda_str, "the labelling weight")->required();
    cmd_filtration->add_flag("--truncate", truncate, "also report the truncation to H");

    auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
    cmd_verify->add_option("--suite", suite, "grading|assoc|oracle|triangular|cellularity|symmetric|counts|all")
        ->check(CLI::IsMember({"grading", "assoc", "oracle", "triangular", "cellularity",
                               "symmetric", "counts", "all"}));
    cmd_verify->add_option("--max-vertices", max_vertices, "bound on the number line length (default 5)");
    cmd_verify->add_option("--samples", samples, "random triples for the sampled checks (default 10000)");
    cmd_verify->add_option("--seed", seed, "seed for the sampled checks");

    auto* cmd_render = app.add_subcommand("render", "pretty-print a diagram or element");
    auto* opt_d = cmd_render->add_option("--diagram", diagram_str, "basis diagram in arcs|weight|arcs form");
    auto* opt_e = cmd_render->add_option("--element", element_str, "element in +k·(...) form");
    cmd_render->require_option(1);
    (void)opt_d;
    (void)opt_e;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // help exits cleanly, usage errors with 2
    }

    if (cmd_enumerate->parsed()) {
        for (const Weight& w : Block(Weight::parse(block_str)).members())
            std::cout << w.str() << "\n";
        return 0;
    }

    if (cmd_multiply->parsed()) {
        Block block(Weight::parse(block_str));
        Element x = Element::parse(x_str), y = Element::parse(y_str);
        for (const auto& [d, c] : x) {
            (void)c;
            if (!block.contains(d.weight())) throw BlockMismatch("--x is not over the given block");
        }
        for (const auto& [d, c] : y) {
            (void)c;
            if (!block.contains(d.weight())) throw BlockMismatch("--y is not over the given block");
        }
        std::cout << multiply(x, y, via_closure ? Route::via_closure : Route::generalized).str()
                  << "\n";
        return 0;
    }

    if (cmd_basis->parsed()) {
        Block block(Weight::parse(block_str));
        auto basis = algebra_kind == "H" ? basis_H(block) : basis_K(block);
        for (const BasisDiagram& d : basis)
            std::cout << d.str() << "  degree " << d.degree() << "\n";
        std::cout << "# dim " << algebra_kind << " = " << basis.size() << "\n";
        return 0;
    }

    if (cmd_cartan->parsed() || cmd_decomp->parsed()) {
        Block block(Weight::parse(block_str));
        std::string csv =
            cmd_cartan->parsed() ? cartan_matrix(block).csv() : decomposition_matrix(block).csv();
        if (out_file.empty()) {
            std::cout << csv;
        } else {
            std::ofstream f(out_file, std::ios::binary);
            if (!f) throw Error("cannot open output file " + out_file);
            f << csv;
        }
        return 0;
    }

    if (cmd_cellmod->parsed()) {
        Block block(Weight::parse(block_str));
        Weight mu = Weight::parse(mu_str);
        CellModule V = cell_module(block, mu);
        std::cout << "cell module V(" << mu.str() << ") over the block of "
                  << block.representative().str() << "\n";
        std::cout << "graded dimension " << V.graded_dim().str() << "\n";
        for (const auto& v : V.basis)
            std::cout << "  vector (" << v.lambda.str() << " -> " << mu.str() << ")  degree "
                      << v.degree << "\n";
        auto layers = V.layers();
        for (std::size_t j = 0; j < layers.size(); ++j) {
            std::cout << "layer " << j << ":";
            for (const Weight& w : layers[j]) std::cout << " L(" << w.str() << ")<" << j << ">";
            std::cout << "\n";
        }
        if (truncate)
            std::cout << "truncation to H: graded dimension "
                      << truncated_cell_graded_dim(block, mu).str() << "\n";
        return 0;
    }

    if (cmd_filtration->parsed()) {
        Block block(Weight::parse(block_str));
        Weight lam = Weight::parse(lambda_str);
        Filtration f = projective_filtration(block, lam);
        std::cout << "cell filtration of P(" << lam.str() << ") over the block of "
                  << block.representative().str() << " (bottom layer first)\n";
        for (const auto& [mu, shift] : f.layers)
            std::cout << "  V(" << mu.str() << ") shifted by " << shift << "\n";
        std::cout << "graded dimension P = " << graded_dim_projective(block, lam).str() << "\n";
        if (truncate)
            std::cout << "truncation to H: graded dimension "
                      << truncated_projective_graded_dim(block, lam).str()
                      << (truncated_simple_nonzero(block, lam) ? "  (simple head survives)"
                                                               : "  (simple head dies)")
                      << "\n";
        return 0;
    }

    if (cmd_render->parsed()) {
        if (!diagram_str.empty())
            std::cout << render_ascii(BasisDiagram::parse(diagram_str));
        else
            std::cout << render_ascii(Element::parse(element_str));
        return 0;
    }

    if (cmd_verify->parsed()) {
        VerifyOptions opt;
        opt.max_vertices = max_vertices;
        opt.samples = samples;
        opt.seed = seed;
        std::cout << "seed " << opt.seed << "\n";
        bool all_ok = true;
        auto names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
        for (const std::string& name : names) {
            auto t0 = std::chrono::steady_clock::now();
            SuiteResult res = run_suite(name, opt);
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            std::cout << (res.ok ? "[PASS] " : "[FAIL] ") << res.name << "  (" << res.checks
                      << " checks, " << ms << " ms)\n";
            for (const std::string& f : res.failures) std::cout << "       " << f << "\n";
            all_ok = all_ok && res.ok;
        }
        return all_ok ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const arcalg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const arcalg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
