// dpb — a command-line workbench for double brackets on polynomial algebras.
//
// Exit codes for `check`: 0 = double Poisson, 1 = double bracket but not
// Poisson, 2 = not a double bracket.  `standardize` mirrors this with
// 0 = standard, 1 = exotic, 2 = inconsistent, and `classify-rt` with
// 0 = Poisson, 1 = not Poisson.  All commands exit 64 on I/O, parse or
// usage errors.

#include "dpb/classify.hpp"
#include "dpb/exprio.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 64;

dpb::CoeffRing ring_from(const std::string& flag_value) {
    std::string name = flag_value;
    if (name.empty()) {
        const char* env = std::getenv("DPB_RING");
        name = env && *env ? env : "Z";
    }
    return dpb::CoeffRing::parse(name);
}

void print_check_report(const dpb::GenTable& table, const dpb::PoissonReport& r, bool machine) {
    if (machine) {
        std::cout << "check ring=" << table.sig().ring.name() << " d=" << table.num_gens()
                  << " n=" << table.arity() << " mder=" << (r.multiderivation.passed ? "ok" : "fail")
                  << " sgn=" << (r.sgn_equivariance.passed ? "ok" : "fail")
                  << " jacobiator=" << (r.jacobiator_vanishes ? "zero" : "nonzero") << " status="
                  << (r.is_double_poisson
                          ? "poisson"
                          : (r.is_double_bracket ? "not-poisson" : "not-bracket"))
                  << "\n";
        return;
    }
    std::cout << "ring = " << table.sig().ring.name() << ", d = " << table.num_gens()
              << ", n = " << table.arity() << "\n";
    std::cout << "multiderivation: " << (r.multiderivation.passed ? "pass" : "FAIL") << "\n";
    if (!r.multiderivation.passed && r.multiderivation.witness)
        std::cout << "  " << r.multiderivation.witness->describe() << "\n";
    std::cout << "sgn-equivariance: " << (r.sgn_equivariance.passed ? "pass" : "FAIL") << "\n";
    if (!r.sgn_equivariance.passed && r.sgn_equivariance.witness)
        std::cout << "  " << r.sgn_equivariance.witness->describe() << "\n";
    std::cout << "double bracket: " << (r.is_double_bracket ? "yes" : "no") << "\n";
    std::cout << "jacobiator: " << (r.jacobiator_vanishes ? "vanishes" : "nonzero") << "\n";
    if (r.jacobiator_witness) {
        const auto& [tuple, value] = *r.jacobiator_witness;
        std::cout << "  jac(";
        for (std::size_t i = 0; i < tuple.size(); ++i)
            std::cout << (i ? "," : "") << tuple[i];
        std::cout << ") = " << value.str() << "\n";
    }
    std::cout << "double Poisson: " << (r.is_double_poisson ? "yes" : "no") << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Exact double brackets, multi-derivations and double Poisson structures on "
                 "R[t1..td]"};
    app.require_subcommand(1);

    // ---- check
    std::string check_file;
    bool check_machine = false;
    CLI::App* check = app.add_subcommand("check", "Decide whether a bracket file is a double "
                                                  "Poisson bracket");
    check->add_option("file", check_file, "bracket table file")->required();
    check->add_flag("--machine", check_machine, "single-line machine-readable output");

    // ---- eval
    std::string eval_file;
    std::vector<std::string> eval_args;
    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a bracket on polynomial arguments");
    eval_cmd->add_option("file", eval_file, "bracket table file")->required();
    eval_cmd->add_option("expr", eval_args, "one expression per bracket slot")->required();

    // ---- standardize
    std::string std_file;
    bool std_machine = false;
    CLI::App* stdz = app.add_subcommand("standardize",
                                        "Decide whether a table is a standard multi-derivation");
    stdz->add_option("file", std_file, "bracket table file")->required();
    stdz->add_flag("--machine", std_machine, "single-line machine-readable output");

    // ---- jacobiator
    std::string jac_file;
    std::vector<std::string> jac_args;
    CLI::App* jac = app.add_subcommand("jacobiator", "Jacobiator of a binary bracket");
    jac->add_option("file", jac_file, "bracket table file")->required();
    jac->add_option("expr", jac_args, "three argument expressions (omit for the full table)")
        ->expected(0, 3);

    // ---- jmap
    std::string jmap_ring, jmap_expr;
    int jmap_d = 1;
    CLI::App* jmap = app.add_subcommand("jmap", "Closed-form Jacobiator of the standard bracket "
                                                "of an antisymmetric element");
    jmap->add_option("--ring", jmap_ring, "coefficient ring: Z, Q or Zmod:<m>");
    jmap->add_option("-d,--gens", jmap_d, "number of generators")->required();
    jmap->add_option("expr", jmap_expr, "antisymmetric arity-2 expression")->required();

    // ---- classify-rt
    std::string rt_ring;
    long rt_lambda = 0, rt_mu = 0, rt_nu = 0;
    bool rt_machine = false;
    CLI::App* rt = app.add_subcommand("classify-rt", "Poisson verdict for the R[t] bracket "
                                                     "family (lambda, mu, nu)");
    rt->add_option("--ring", rt_ring, "coefficient ring: Z, Q or Zmod:<m>");
    rt->add_option("--lambda", rt_lambda, "coefficient of t(x)1 - 1(x)t")->required();
    rt->add_option("--mu", rt_mu, "coefficient of t^2(x)1 - 1(x)t^2")->required();
    rt->add_option("--nu", rt_nu, "coefficient of t^2(x)t - t(x)t^2")->required();
    rt->add_flag("--machine", rt_machine, "single-line machine-readable output");

    // ---- scan
    std::string scan_ring;
    int scan_d = 2, scan_N = -1, scan_H = 1;
    std::uint64_t scan_seed = 1;
    std::size_t scan_samples = 10000;
    bool scan_exhaustive = false, scan_machine = false, scan_rt = false;
    CLI::App* scan = app.add_subcommand("scan", "Kernel scan over antisymmetric elements, or "
                                                "(--rt) the homogeneous R[t] scan");
    scan->add_option("--ring", scan_ring, "coefficient ring: Z, Q or Zmod:<m>");
    scan->add_option("-d,--gens", scan_d, "number of generators (kernel scan)");
    scan->add_option("-N,--max-degree", scan_N,
                     "total degree bound (default 2, or 7 with --rt)");
    scan->add_option("-H,--height", scan_H, "coefficient height bound (kernel scan)");
    scan->add_option("--seed", scan_seed, "seed for sampled scans");
    scan->add_option("--samples", scan_samples, "sample count when not exhaustive");
    scan->add_flag("--exhaustive", scan_exhaustive, "force full enumeration");
    scan->add_flag("--rt", scan_rt, "scan homogeneous antisymmetric brackets on R[t]");
    scan->add_flag("--machine", scan_machine, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (check->parsed()) {
        dpb::GenTable table = dpb::load_bracket_file(check_file);
        if (table.arity() != 2)
            throw std::invalid_argument("check needs an arity-2 bracket (file has n = " +
                                        std::to_string(table.arity()) + ")");
        dpb::PoissonReport r = dpb::check_double_poisson(table);
        print_check_report(table, r, check_machine);
        return r.is_double_poisson ? 0 : (r.is_double_bracket ? 1 : 2);
    }

    if (eval_cmd->parsed()) {
        dpb::GenTable table = dpb::load_bracket_file(eval_file);
        if (static_cast<int>(eval_args.size()) != table.arity())
            throw std::invalid_argument("eval needs exactly " + std::to_string(table.arity()) +
                                        " argument expressions");
        std::vector<dpb::TensorPoly> args;
        for (const std::string& text : eval_args)
            args.push_back(dpb::parse_tpoly(text, table.sig(), 1));
        std::cout << dpb::evaluate(table, args).str() << "\n";
        return 0;
    }

    if (stdz->parsed()) {
        dpb::GenTable table = dpb::load_bracket_file(std_file);
        dpb::StandardizeResult r = dpb::standardize(table);
        switch (r.status) {
            case dpb::StandardizeStatus::Standard:
                std::cout << (std_machine ? "standardize status=standard theta="
                                          : "standard: theta = ")
                          << r.theta->str() << "\n";
                return 0;
            case dpb::StandardizeStatus::Exotic:
                std::cout << (std_machine ? "standardize status=exotic" : "exotic") << "\n";
                return 1;
            case dpb::StandardizeStatus::Inconsistent:
                std::cout << (std_machine ? "standardize status=inconsistent" : "inconsistent")
                          << "\n";
                return 2;
        }
    }

    if (jac->parsed()) {
        dpb::GenTable table = dpb::load_bracket_file(jac_file);
        if (table.arity() != 2)
            throw std::invalid_argument("jacobiator needs an arity-2 bracket");
        if (jac_args.empty()) {
            dpb::GenTable jt = dpb::jacobiator_table(table);
            for (const auto& tuple : dpb::GenTable::all_tuples(table.num_gens(), 3)) {
                std::cout << "jac(";
                for (std::size_t i = 0; i < tuple.size(); ++i)
                    std::cout << (i ? "," : "") << tuple[i];
                std::cout << ") = " << jt.at(tuple).str() << "\n";
            }
            return 0;
        }
        if (jac_args.size() != 3)
            throw std::invalid_argument("jacobiator takes zero or three expressions");
        std::vector<dpb::TensorPoly> args;
        for (const std::string& text : jac_args)
            args.push_back(dpb::parse_tpoly(text, table.sig(), 1));
        std::cout << dpb::jacobiator(table, args[0], args[1], args[2]).str() << "\n";
        return 0;
    }

    if (jmap->parsed()) {
        dpb::AlgebraSig sig{ring_from(jmap_ring), jmap_d};
        dpb::TensorPoly psi = dpb::parse_tpoly(jmap_expr, sig, 2);
        std::cout << dpb::standard_jacobiator(psi).str() << "\n";
        return 0;
    }

    if (rt->parsed()) {
        dpb::RtFamily family = dpb::make_rt_family(ring_from(rt_ring), rt_lambda, rt_mu, rt_nu);
        bool poisson = dpb::rt_is_poisson(family);
        dpb::GenTable table = dpb::rt_family_table(family);
        if (rt_machine) {
            std::cout << "classify-rt ring=" << family.ring.name() << " lambda=" << rt_lambda
                      << " mu=" << rt_mu << " nu=" << rt_nu
                      << " poisson=" << (poisson ? "yes" : "no") << "\n";
        } else {
            std::cout << "{{t,t}} = " << table.at({1, 1}).str() << "\n";
            std::cout << "poisson: " << (poisson ? "yes" : "no") << "\n";
        }
        return poisson ? 0 : 1;
    }

    if (scan->parsed()) {
        if (scan_rt) {
            auto entries = dpb::rt_homogeneous_scan(scan_N > 0 ? scan_N : 7,
                                                    ring_from(scan_ring));
            for (const auto& e : entries) {
                std::cout << "rt-scan N=" << e.degree << " splits=[";
                for (std::size_t i = 0; i < e.splits.size(); ++i)
                    std::cout << (i ? "," : "") << e.splits[i];
                std::cout << "] coeffs=[";
                for (std::size_t i = 0; i < e.coeffs.size(); ++i)
                    std::cout << (i ? "," : "") << e.coeffs[i];
                std::cout << "] poisson=" << (e.poisson ? "yes" : "no") << "\n";
            }
            return 0;
        }
        dpb::ScanParams params;
        params.num_gens = scan_d;
        params.max_degree = scan_N > 0 ? scan_N : 2;
        params.height = scan_H;
        params.ring = ring_from(scan_ring);
        params.seed = scan_seed;
        params.num_samples = scan_samples;
        params.mode = scan_exhaustive ? dpb::ScanMode::Exhaustive : dpb::ScanMode::Auto;
        dpb::ScanReport r = dpb::kernel_scan(params);
        if (scan_machine) {
            std::cout << "scan d=" << params.num_gens << " N=" << params.max_degree
                      << " H=" << params.height << " ring=" << params.ring.name()
                      << " seed=" << params.seed << " exhaustive=" << (r.exhaustive ? 1 : 0)
                      << " basis=" << r.basis_size << " candidates=" << r.total_candidates
                      << " checked=" << r.num_checked << " square_ok=" << r.num_square_ok
                      << " kernel=" << r.kernel_elements.size()
                      << " square_fail=" << r.square_check_failures.size() << "\n";
        } else {
            std::cout << "scan over d = " << params.num_gens << ", total degree <= "
                      << params.max_degree << ", height <= " << params.height << ", ring "
                      << params.ring.name() << "\n";
            std::cout << "mode: " << (r.exhaustive
                                          ? "exhaustive"
                                          : "sampled (seed " + std::to_string(params.seed) +
                                                ", " + std::to_string(params.num_samples) +
                                                " samples)")
                      << "\n";
            std::cout << "basis size: " << r.basis_size << ", candidates: " << r.total_candidates
                      << ", checked: " << r.num_checked << "\n";
            std::cout << "squaring-injective ring: " << (r.squaring_injective ? "yes" : "no")
                      << "\n";
            std::cout << "kernel elements: " << r.kernel_elements.size() << "\n";
            std::cout << "leading-square law: " << r.num_square_ok << " ok, "
                      << r.square_check_failures.size() << " violations\n";
        }
        for (const auto& psi : r.kernel_elements) std::cout << "kernel: " << psi.str() << "\n";
        for (const auto& psi : r.square_check_failures)
            std::cout << "square-fail: " << psi.str() << "\n";
        return r.kernel_elements.empty() ? 0 : 1;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dpb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
