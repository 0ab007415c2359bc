// prcode: power residue codes, Jacobi polynomials, harmonic weight
// enumerators, and the designs supported by unions of conjugate shells.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prc/arith.hpp"
#include "prc/designs.hpp"
#include "prc/errors.hpp"
#include "prc/groups.hpp"
#include "prc/harmonics.hpp"
#include "prc/io.hpp"
#include "prc/jacobi.hpp"
#include "prc/prcode.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
    std::uint64_t p = 0, m = 0, q = 0;
    int ell = -1;
    std::pair<int, int> ell_range{-1, -1};
    int t = 2;
    unsigned threads = 1;
    std::uint64_t cap = prc::DEFAULT_ENUM_CAP;
    std::string format = "text";
    std::string output;
    std::string rep_of;
};

prc::EnumOptions enum_options(const RunConfig& cfg) {
    prc::EnumOptions opts;
    opts.cap = cfg.cap;
    opts.threads = cfg.threads;
    return opts;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw prc::Error("cannot open output file: " + cfg.output);
    out << text;
}

std::uint64_t parse_pair_mask(const std::string& s, std::uint64_t p) {
    std::istringstream in(s);
    std::uint64_t a = 0, b = 0;
    char comma = 0;
    if (!(in >> a >> comma >> b) || comma != ',' || a >= p || b >= p || a == b)
        throw CLI::ValidationError("--rep-of expects two distinct points a,b below p");
    return (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
}

std::string poly_string(const prc::Poly& g) {
    std::ostringstream out;
    for (std::size_t i = 0; i < g.c.size(); ++i) {
        if (i) out << ' ';
        out << g.c[i];
    }
    return out.str();
}

std::string points_string(std::uint64_t mask) {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < 64; ++i)
        if (mask >> i & 1) {
            if (!first) out << ' ';
            out << i;
            first = false;
        }
    return out.str();
}

int run_cosets(const RunConfig& cfg) {
    auto cosets = prc::residue_cosets(cfg.p, cfg.m);
    if (cfg.format == "json") {
        json j;
        for (const auto& c : cosets.cosets) j["cosets"].push_back(c);
        emit(cfg, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < cosets.cosets.size(); ++i) {
        out << "A_" << i << ":";
        for (auto a : cosets.cosets[i]) out << ' ' << a;
        out << '\n';
    }
    emit(cfg, out.str());
    return 0;
}

int run_genpoly(const RunConfig& cfg) {
    auto g = prc::generator_polynomial(cfg.p, cfg.m, cfg.q);
    if (cfg.format == "json") {
        emit(cfg, json{{"p", cfg.p}, {"m", cfg.m}, {"q", cfg.q}, {"coefficients", g.c}}.dump(2) +
                      "\n");
        return 0;
    }
    emit(cfg, poly_string(g) + "\n");
    return 0;
}

int run_code_info(const RunConfig& cfg) {
    auto C = prc::build_code(cfg.p, cfg.m, cfg.q);
    std::uint64_t d = prc::multiplicative_order(cfg.q, cfg.p);
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < C.code.rows.size(); ++i) size *= cfg.q;
    if (cfg.format == "json") {
        emit(cfg, json{{"n", C.code.n},
                       {"q", cfg.q},
                       {"k", C.code.rows.size()},
                       {"codewords", size},
                       {"extension_degree", d},
                       {"generator", C.generator.c}}
                          .dump(2) +
                      "\n");
        return 0;
    }
    std::ostringstream out;
    out << "length " << C.code.n << " over F_" << cfg.q << ", dimension " << C.code.rows.size()
        << ", " << size << " codewords\n";
    out << "splitting field degree " << d << "\n";
    out << "generator " << poly_string(C.generator) << "\n";
    emit(cfg, out.str());
    return 0;
}

int run_weights(const RunConfig& cfg) {
    auto C = prc::build_code(cfg.p, cfg.m, cfg.q);
    auto A = prc::weight_distribution(C.code, enum_options(cfg));
    if (cfg.format == "json") {
        emit(cfg, json{{"weights", A}}.dump(2) + "\n");
        return 0;
    }
    std::ostringstream out;
    bool csv = cfg.format == "csv";
    if (csv) out << "w,A_w\n";
    for (std::size_t w = 0; w < A.size(); ++w)
        if (A[w]) out << w << (csv ? "," : " ") << A[w] << '\n';
    emit(cfg, out.str());
    return 0;
}

int run_shells(const RunConfig& cfg) {
    if (cfg.ell < 0) throw CLI::ValidationError("shells requires --ell");
    auto C = prc::build_code(cfg.p, cfg.m, cfg.q);
    auto B = prc::shell(C.code, cfg.ell, enum_options(cfg));
    emit(cfg, prc::format_blocks(B));
    return 0;
}

int run_design_check(const RunConfig& cfg) {
    if (cfg.ell < 0) throw CLI::ValidationError("design-check requires --ell");
    prc::ShellsUnionContext ctx(cfg.p, cfg.m, cfg.q, enum_options(cfg));
    auto B = ctx.shells_union(cfg.ell);
    auto rep = prc::check_design(B, cfg.t);
    if (cfg.format == "json") {
        json j{{"ell", cfg.ell},       {"t", cfg.t},
               {"empty", rep.empty},   {"is_design", rep.is_design},
               {"blocks", rep.block_count}};
        if (rep.is_design) j["lambda"] = rep.lambda;
        if (!rep.is_design && !rep.empty) j["witness"] = points_string(rep.witness);
        emit(cfg, j.dump(2) + "\n");
    } else if (rep.empty) {
        emit(cfg, "empty; vacuously consistent\n");
    } else if (rep.is_design) {
        std::ostringstream out;
        out << cfg.t << "-(" << cfg.p << ", " << cfg.ell << ", " << rep.lambda << ") design, "
            << rep.block_count << " blocks\n";
        emit(cfg, out.str());
    } else {
        std::ostringstream out;
        out << "not a " << cfg.t << "-design: counts range " << rep.min_count << ".."
            << rep.max_count << ", minimal subset {" << points_string(rep.witness) << "}\n";
        emit(cfg, out.str());
    }
    return rep.empty || rep.is_design ? 0 : 1;
}

int run_jacobi(const RunConfig& cfg, bool conjugate_sum) {
    if (cfg.rep_of.empty()) throw CLI::ValidationError("requires --rep-of a,b");
    std::uint64_t T = parse_pair_mask(cfg.rep_of, cfg.p);
    auto C = prc::build_code(cfg.p, cfg.m, cfg.q);
    prc::JacobiPolynomial J;
    if (conjugate_sum) {
        auto sigma = prc::conjugating_permutation(cfg.p, cfg.m);
        J = prc::jacobi_conjugate_sum(C.code, sigma, static_cast<int>(cfg.m), T,
                                      enum_options(cfg));
    } else {
        J = prc::jacobi(C.code, T, enum_options(cfg));
    }
    emit(cfg, cfg.format == "json" ? prc::format_jacobi_json(J) : prc::format_jacobi_text(J));
    return 0;
}

int run_harmonic_basis(const RunConfig& cfg) {
    auto [H, G] = prc::affine_group(cfg.p, cfg.m);
    auto basis = prc::invariant_harmonic_basis(H, cfg.t);
    std::ostringstream out;
    out << "dimension " << basis.dimension() << "\n";
    for (const auto& f : basis.functions) out << prc::format_subset_function(f) << "\n";
    emit(cfg, out.str());
    return 0;
}

int run_hwe(const RunConfig& cfg, const std::string& function_file) {
    auto C = prc::build_code(cfg.p, cfg.m, cfg.q);
    std::vector<prc::SubsetFunction> fns;
    if (!function_file.empty()) {
        std::ifstream in(function_file);
        if (!in) throw prc::Error("cannot open function file: " + function_file);
        std::stringstream buf;
        buf << in.rdbuf();
        fns.push_back(prc::parse_subset_function(buf.str(), static_cast<int>(cfg.p)));
    } else {
        auto [H, G] = prc::affine_group(cfg.p, cfg.m);
        auto basis = prc::invariant_harmonic_basis(H, cfg.t);
        fns = basis.functions;
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < fns.size(); ++i) {
        auto e = prc::harmonic_weight_enumerator(C.code, fns[i], enum_options(cfg));
        out << "# function " << i << "\n" << prc::format_enumerator(e);
    }
    emit(cfg, out.str());
    return 0;
}

int run_verify_theorem(const RunConfig& cfg) {
    auto opts = enum_options(cfg);
    auto C = prc::build_code(cfg.p, cfg.m, cfg.q);
    auto sigma = prc::conjugating_permutation(cfg.p, cfg.m);
    auto [H, G] = prc::affine_group(cfg.p, cfg.m);
    int s = static_cast<int>(cfg.m);
    std::ostringstream out;
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok) {
        out << (ok ? "pass" : "FAIL") << "  " << name << "\n";
        all_ok = all_ok && ok;
    };

    auto ind = prc::independence_check(C.code, sigma, s, cfg.t, opts);
    report("Jacobi conjugate sum independent of T (" +
               std::to_string(ind.subsets_checked) + " subsets)",
           ind.independent);

    auto basis = prc::invariant_harmonic_basis(H, cfg.t);
    auto van = prc::conjugate_vanishing_check(C.code, sigma, s, basis, opts);
    report("conjugate harmonic enumerator sums vanish (basis dimension " +
               std::to_string(basis.dimension()) + ")",
           van.all_zero);

    // invariance of the code under the index-m affine subgroup, sampled rows
    prc::CodeMembership membership(C.code);
    bool invariant = true;
    std::uint64_t g = prc::smallest_primitive_root(cfg.p);
    std::uint64_t gm = prc::pow_mod(g, cfg.m, cfg.p);
    std::vector<prc::Permutation> gens{prc::shift_permutation(static_cast<int>(cfg.p)),
                                       prc::multiplier_permutation(cfg.p, gm)};
    for (const auto& pi : gens)
        for (const auto& row : prc::permute_code(C.code, pi).rows)
            invariant = invariant && membership.contains(row);
    report("shift and residue multipliers preserve the code", invariant);

    report("index-m subgroup is normal", prc::is_normal(H, G));
    report("full affine group transitive on pairs",
           prc::orbits_on_ksubsets(G, 2).orbits.size() == 1);
    auto orbits = prc::orbits_on_ksubsets(H, 2);
    bool sizes_ok = orbits.orbits.size() == cfg.m;
    for (const auto& orb : orbits.orbits)
        sizes_ok = sizes_ok && orb.size() == orbits.orbits.front().size();
    report("index-m subgroup has m equal pair orbits", sizes_ok);

    emit(cfg, out.str());
    return all_ok ? 0 : 1;
}

int run_reproduce(const RunConfig& cfg_in, const std::string& target) {
    RunConfig cfg = cfg_in;
    std::ostringstream out;
    if (target == "table1" || target == "table2") {
        bool first = target == "table1";
        cfg.p = first ? 31 : 13;
        cfg.m = 3;
        cfg.q = first ? 2 : 5;
        int lo = first ? 5 : 4, hi = first ? 26 : 12;
        std::cerr << "enumerating shells of the " << cfg.m << " conjugates (p=" << cfg.p
                  << ", q=" << cfg.q << ")\n";
        auto rows = prc::reproduce_table(cfg.p, cfg.m, cfg.q, lo, hi, cfg.t, enum_options(cfg));
        if (cfg.format == "json") {
            json j = json::array();
            for (const auto& r : rows)
                j.push_back({{"ell", r.ell},
                             {"empty", r.empty_shell},
                             {"is_design", r.is_design},
                             {"lambda", r.lambda},
                             {"blocks", r.blocks}});
            emit(cfg, j.dump(2) + "\n");
        } else {
            out << "ell,lambda,blocks,is_design\n";
            for (const auto& r : rows)
                out << r.ell << ',' << (r.empty_shell ? std::string("empty")
                                                      : std::to_string(r.lambda))
                    << ',' << r.blocks << ',' << (r.is_design ? 1 : 0) << '\n';
            emit(cfg, out.str());
        }
        bool ok = true;
        for (const auto& r : rows) ok = ok && (r.empty_shell || r.is_design);
        return ok ? 0 : 1;
    }
    if (target == "example51" || target == "example52") {
        bool first = target == "example51";
        cfg.p = first ? 31 : 13;
        cfg.m = 3;
        cfg.q = first ? 2 : 5;
        auto opts = enum_options(cfg);
        auto C = prc::build_code(cfg.p, cfg.m, cfg.q);
        auto [H, G] = prc::affine_group(cfg.p, cfg.m);
        auto orbits = prc::orbits_on_ksubsets(H, 2);
        std::cerr << "enumerating " << orbits.orbits.size() << " orbit representatives\n";
        prc::PairIncidenceTables tables(C.code, opts);
        for (std::size_t i = 0; i < orbits.orbits.size(); ++i) {
            std::uint64_t T = orbits.orbits[i].front();
            out << "# J_{C,T} for T = {" << points_string(T) << "}\n";
            out << prc::format_jacobi_text(tables.jacobi_of(T));
        }
        auto basis = prc::invariant_harmonic_basis(H, 2);
        out << "# invariant harmonic basis dimension " << basis.dimension() << "\n";
        for (const auto& f : basis.functions) {
            auto e = prc::harmonic_weight_enumerator(C.code, f, opts);
            out << "# enumerator\n" << prc::format_enumerator(e);
        }
        auto sigma = prc::conjugating_permutation(cfg.p, cfg.m);
        auto van =
            prc::conjugate_vanishing_check(C.code, sigma, static_cast<int>(cfg.m), basis, opts);
        out << "# conjugate enumerator sums vanish: " << (van.all_zero ? "yes" : "NO") << "\n";
        emit(cfg, out.str());
        return van.all_zero ? 0 : 1;
    }
    throw CLI::ValidationError("unknown reproduce target: " + target);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"power residue codes, Jacobi polynomials, and shell designs"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string function_file;
    std::string reproduce_target;

    auto add_instance = [&cfg](CLI::App* cmd, bool need_q) {
        cmd->add_option("--p", cfg.p, "prime length")->required();
        cmd->add_option("--m", cfg.m, "power residue index")->required();
        auto* q = cmd->add_option("--q", cfg.q, "field size (prime)");
        if (need_q) q->required();
    };
    auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("--t", cfg.t, "design strength / subset size")->capture_default_str();
        cmd->add_option("--threads", cfg.threads, "worker count")->capture_default_str();
        cmd->add_option("--cap", cfg.cap, "enumeration size cap")
            ->envname("PRCODE_ENUM_CAP")
            ->capture_default_str();
        cmd->add_option("--format", cfg.format, "text | json | csv")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        cmd->add_option("--output", cfg.output, "write report to file");
    };

    auto* cosets = app.add_subcommand("cosets", "power residue cosets mod p");
    add_instance(cosets, false);
    add_common(cosets);

    auto* genpoly = app.add_subcommand("genpoly", "generator polynomial of the code");
    add_instance(genpoly, true);
    add_common(genpoly);

    auto* info = app.add_subcommand("code-info", "dimension, size, splitting field");
    add_instance(info, true);
    add_common(info);

    auto* weights = app.add_subcommand("weights", "weight distribution");
    add_instance(weights, true);
    add_common(weights);

    auto* shells = app.add_subcommand("shells", "support multiset of one shell");
    add_instance(shells, true);
    shells->add_option("--ell", cfg.ell, "codeword weight")->required();
    add_common(shells);

    auto* design = app.add_subcommand("design-check", "verify the union of conjugate shells");
    add_instance(design, true);
    design->add_option("--ell", cfg.ell, "codeword weight")->required();
    add_common(design);

    auto* jac = app.add_subcommand("jacobi", "Jacobi polynomial of one orbit representative");
    add_instance(jac, true);
    jac->add_option("--rep-of", cfg.rep_of, "pair a,b selecting the orbit")->required();
    add_common(jac);

    auto* jacsum = app.add_subcommand("jacobi-sum", "conjugate Jacobi sum");
    add_instance(jacsum, true);
    jacsum->add_option("--rep-of", cfg.rep_of, "pair a,b selecting the orbit")->required();
    add_common(jacsum);

    auto* hbasis = app.add_subcommand("harmonic-basis", "invariant harmonic functions");
    add_instance(hbasis, false);
    add_common(hbasis);

    auto* hwe = app.add_subcommand("hwe", "harmonic weight enumerators");
    add_instance(hwe, true);
    hwe->add_option("--function", function_file, "subset function file (default: basis)");
    add_common(hwe);

    auto* verify = app.add_subcommand("verify-theorem", "full verification suite");
    add_instance(verify, true);
    add_common(verify);

    auto* repro = app.add_subcommand("reproduce", "table1 | table2 | example51 | example52");
    repro->add_option("target", reproduce_target, "what to reproduce")->required();
    add_common(repro);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(cosets)) return run_cosets(cfg);
        if (app.got_subcommand(genpoly)) return run_genpoly(cfg);
        if (app.got_subcommand(info)) return run_code_info(cfg);
        if (app.got_subcommand(weights)) return run_weights(cfg);
        if (app.got_subcommand(shells)) return run_shells(cfg);
        if (app.got_subcommand(design)) return run_design_check(cfg);
        if (app.got_subcommand(jac)) return run_jacobi(cfg, false);
        if (app.got_subcommand(jacsum)) return run_jacobi(cfg, true);
        if (app.got_subcommand(hbasis)) return run_harmonic_basis(cfg);
        if (app.got_subcommand(hwe)) return run_hwe(cfg, function_file);
        if (app.got_subcommand(verify)) return run_verify_theorem(cfg);
        if (app.got_subcommand(repro)) return run_reproduce(cfg, reproduce_target);
    } catch (const prc::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const prc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
