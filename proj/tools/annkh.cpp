// Command line interface: batch computation and verification for annular
// link diagrams in the slice-word format.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "annkh/check.hpp"
#include "annkh/floer.hpp"
#include "annkh/homology.hpp"
#include "annkh/invariants.hpp"
#include "annkh/json_io.hpp"
#include "annkh/khcomplex.hpp"
#include "annkh/laurent.hpp"
#include "annkh/rt.hpp"
#include "annkh/tangle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kCrossingGuardrail = 24;

struct Options {
    std::string file;
    bool reduced = false;
    bool as_json = false;
    bool force = false;
    bool negative_control = false;
    int max_page = 0;
    unsigned threads = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

annkh::TangleDiagram load(const Options& opt) {
    annkh::TangleDiagram d = annkh::load_diagram(read_file(opt.file));
    int n = annkh::build_graph(d).n_crossings();
    if (n > kCrossingGuardrail && !opt.force)
        throw std::runtime_error("diagram has " + std::to_string(n) + " crossings (2^" +
                                 std::to_string(n) +
                                 " cube vertices); pass --force to proceed anyway");
    return d;
}

void print_json(const annkh::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_homology(const Options& opt) {
    annkh::TangleDiagram d = load(opt);
    annkh::GradedComplexF2 c = annkh::build_complex(d, opt.reduced, {opt.threads});
    annkh::DimsIJ dims = annkh::homology_dims_ij(c);
    if (opt.as_json) {
        print_json({{"command", opt.reduced ? "homology-reduced" : "homology"},
                    {"dims", annkh::dims_to_json(dims)},
                    {"total", annkh::total_dim(dims)}});
    } else {
        for (const auto& [key, dim] : dims)
            std::cout << "i=" << key.first << " j=" << key.second << " dim=" << dim << "\n";
        std::cout << "total " << annkh::total_dim(dims) << "\n";
    }
    return kExitOk;
}

int cmd_annular(const Options& opt) {
    annkh::TangleDiagram d = load(opt);
    annkh::GradedComplexF2 c =
        annkh::annular_part(annkh::build_complex(d, opt.reduced, {opt.threads}));
    annkh::DimsIJK dims = annkh::homology_dims_ijk(c);
    if (opt.as_json) {
        print_json({{"command", opt.reduced ? "annular-reduced" : "annular"},
                    {"dims", annkh::dims_to_json(dims)},
                    {"total", annkh::total_dim(dims)}});
    } else {
        for (const auto& [key, dim] : dims) {
            auto [i, j, k] = key;
            std::cout << "i=" << i << " j=" << j << " k=" << k << " dim=" << dim << "\n";
        }
        std::cout << "total " << annkh::total_dim(dims) << "\n";
    }
    return kExitOk;
}

int cmd_sj(const Options& opt) {
    annkh::TangleDiagram d = load(opt);
    annkh::LaurentQT sj = annkh::sj_statesum(d, opt.threads);
    annkh::ZForm zf = annkh::to_zform(sj);
    annkh::SkeinForm sk = annkh::to_skein_form(zf);
    annkh::LaurentQT jones = sj.substitute_t_one();
    if (opt.as_json) {
        print_json({{"command", "sj"},
                    {"sj", annkh::poly_to_json(sj)},
                    {"zform", annkh::zform_to_json(zf)},
                    {"skein", annkh::skein_to_json(sk)},
                    {"jones", annkh::poly_to_json(jones)}});
    } else {
        std::cout << sj.str() << " | " << zf.str() << " | " << sk.str() << "\n";
        std::cout << "t=1: " << jones.str() << "\n";
    }
    return kExitOk;
}

int cmd_jones(const Options& opt) {
    annkh::TangleDiagram d = load(opt);
    annkh::LaurentQT j = annkh::jones(d, opt.threads);
    if (opt.as_json)
        print_json({{"command", "jones"}, {"jones", annkh::poly_to_json(j)}});
    else
        std::cout << j.str() << "\n";
    return kExitOk;
}

int cmd_ss(const Options& opt) {
    annkh::TangleDiagram d = load(opt);
    annkh::GradedComplexF2 c = annkh::build_complex(d, false, {opt.threads});
    std::vector<annkh::PageTable> pages = annkh::spectral_pages(c, opt.max_page);
    if (opt.as_json) {
        print_json({{"command", "ss"}, {"pages", annkh::pages_to_json(pages)}});
    } else {
        for (const auto& p : pages) {
            std::cout << "page " << p.r << (p.is_infinity ? " (stable)" : "") << ": total "
                      << p.total() << "\n";
            for (const auto& [key, dim] : p.dims) {
                auto [k, i, j] = key;
                std::cout << "  k=" << k << " i=" << i << " j=" << j << " dim=" << dim << "\n";
            }
        }
    }
    return kExitOk;
}

int cmd_rt(const Options& opt) {
    annkh::TangleDiagram t = load(opt);
    annkh::BlockMatrixQ m = annkh::rt_matrix(t, opt.threads);
    annkh::LaurentQT trq = annkh::quantum_trace(m);
    annkh::LaurentQT sjt = annkh::sj_via_trace(t, opt.threads);
    if (opt.as_json) {
        print_json({{"command", "rt"},
                    {"m", m.m},
                    {"blocks", annkh::blocks_to_json(m)},
                    {"quantum_trace", annkh::poly_to_json(trq)},
                    {"sj_via_trace", annkh::poly_to_json(sjt)}});
    } else {
        for (const auto& [lambda, block] : m.blocks) {
            auto basis = annkh::weight_basis(m.m, lambda);
            std::cout << "weight " << lambda << " basis:";
            for (const auto& a : basis) std::cout << ' ' << a.str();
            std::cout << "\n";
            for (const auto& row : block) {
                std::cout << "  [";
                for (std::size_t i = 0; i < row.size(); ++i)
                    std::cout << (i ? ", " : " ") << row[i].str();
                std::cout << " ]\n";
            }
        }
        std::cout << "tr_q = " << trq.str() << "\n";
        std::cout << "SJ(trace) = " << sjt.str() << "\n";
    }
    return kExitOk;
}

int cmd_check(const Options& opt) {
    annkh::TangleDiagram d = load(opt);
    annkh::CheckOptions copts;
    copts.threads = opt.threads;
    copts.negative_control = opt.negative_control;
    std::vector<annkh::CheckResult> results = annkh::run_full_check(d, copts);
    if (opt.as_json) {
        print_json({{"command", "check"},
                    {"checks", annkh::checks_to_json(results)},
                    {"ok", annkh::all_passed(results)}});
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
            if (!r.pass && !r.detail.empty()) std::cout << ": " << r.detail;
            std::cout << "\n";
        }
        std::cout << (annkh::all_passed(results) ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return annkh::all_passed(results) ? kExitOk : kExitCheckFailed;
}

int cmd_parse(const Options& opt) {
    annkh::TangleDiagram d = load(opt);
    if (opt.as_json)
        print_json(annkh::diagram_to_json(d));
    else
        std::cout << annkh::serialize(d);
    return kExitOk;
}

int cmd_dump(const Options& opt) {
    annkh::TangleDiagram d = load(opt);
    annkh::GradedComplexF2 c = annkh::build_complex(d, opt.reduced, {opt.threads});
    std::cout << "generators:\n";
    for (std::size_t t = 0; t < c.gens.size(); ++t)
        for (std::size_t idx = 0; idx < c.gens[t].size(); ++idx) {
            const annkh::Generator& g = c.gens[t][idx];
            std::cout << t << ':' << idx << " i=" << g.i << " j=" << g.j << " k=" << g.k
                      << " I=" << g.res.str() << " eps=" << g.eps_mask << "\n";
        }
    std::cout << "differential:\n";
    for (std::size_t t = 0; t < c.diffs.size(); ++t)
        for (const auto& [row, col] : c.diffs[t].entries) {
            const annkh::Generator& g = c.gens[t][static_cast<std::size_t>(col)];
            std::cout << g.i << ' ' << g.j << ' ' << g.k << ' ' << row << ' ' << col << "\n";
        }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"annular Khovanov homology, state sums, and tangle invariants"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool takes_reduced = false, bool takes_max_page = false) {
        sub->add_option("file", opt.file, "diagram file (slice-word text or JSON)")->required();
        sub->add_flag("--json", opt.as_json, "emit JSON instead of text");
        sub->add_option("--threads", opt.threads, "worker threads (default: all cores)");
        sub->add_flag("--force", opt.force, "allow more than 24 crossings");
        if (takes_reduced) sub->add_flag("--reduced", opt.reduced, "reduced homology (needs marked=)");
        if (takes_max_page) sub->add_option("--max-page", opt.max_page, "limit listed pages");
    };

    auto* homology = app.add_subcommand("homology", "Khovanov homology dimensions over F2");
    add_common(homology, true);
    auto* annular = app.add_subcommand("annular", "triply graded annular homology dimensions");
    add_common(annular, true);
    auto* sj = app.add_subcommand("sj", "graded Euler characteristic with z and skein forms");
    add_common(sj);
    auto* jones = app.add_subcommand("jones", "Jones polynomial (t = 1 specialization)");
    add_common(jones);
    auto* ss = app.add_subcommand("ss", "spectral sequence pages of the k-filtration");
    add_common(ss, false, true);
    auto* rt = app.add_subcommand("rt", "weight blocks and traces of the tangle invariant");
    add_common(rt);
    auto* check = app.add_subcommand("check", "run the full verification suite");
    add_common(check);
    check->add_flag("--negative-control", opt.negative_control,
                    "corrupt one matrix entry; the run must then report a failure");
    auto* parse = app.add_subcommand("parse", "validate and reprint a diagram");
    add_common(parse);
    auto* dump = app.add_subcommand("dump", "generator table and differential entries");
    add_common(dump, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (homology->parsed()) return cmd_homology(opt);
        if (annular->parsed()) return cmd_annular(opt);
        if (sj->parsed()) return cmd_sj(opt);
        if (jones->parsed()) return cmd_jones(opt);
        if (ss->parsed()) return cmd_ss(opt);
        if (rt->parsed()) return cmd_rt(opt);
        if (check->parsed()) return cmd_check(opt);
        if (parse->parsed()) return cmd_parse(opt);
        if (dump->parsed()) return cmd_dump(opt);
    } catch (const annkh::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const annkh::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
