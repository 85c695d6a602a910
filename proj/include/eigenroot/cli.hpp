// Command line surface. Exit codes: 0 success, 2 parse/validation error,
// 3 numerical failure (no convergence, continuation stall, pole proximity),
// 4 lemma fleet failure.
#ifndef EIGENROOT_CLI_HPP
#define EIGENROOT_CLI_HPP

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eigenroot/curve.hpp"
#include "eigenroot/emit.hpp"
#include "eigenroot/fleet.hpp"
#include "eigenroot/run_record.hpp"

namespace eigenroot {

namespace cli_detail {

inline long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

inline OperatorClassification classify_or_throw(const DifferentialOperator& t) {
    const OperatorClassification cls = classify(t);
    if (cls.kind == OperatorKind::invalid) throw ValidationError(cls.reason);
    return cls;
}

inline std::string classification_line(const OperatorClassification& cls) {
    std::string a = "{";
    for (int j : cls.A) a += (a.size() > 1 ? "," : "") + std::to_string(j);
    a += "}";
    return "kind=degenerate j0=" + std::to_string(cls.j0) + " d=" + fraction_string(cls.d) +
           " A=" + a + " jm=" + std::to_string(cls.jm);
}

inline void apply_config_floor(const std::map<std::string, std::string>& cfg) {
    auto it = cfg.find("precision_bits");
    if (it != cfg.end()) set_runtime_precision_floor(std::stol(it->second));
}

} // namespace cli_detail

inline int cli_run(int argc, const char* const* argv) {
    CLI::App app{"eigenpolynomial root growth toolkit"};
    app.require_subcommand(1);

    std::string op_text;
    std::string config_path;
    std::string csv_path, json_path, svg_path;
    long n = 0, n_from = 0, n_to = 0, step = 1;
    int digits = 12;
    int seeds = 10;
    unsigned threads = 0;
    bool print_coeffs = false;
    bool want_discriminant = false;
    std::vector<std::string> point_texts;

    auto* c_classify = app.add_subcommand("classify", "classify an operator");
    c_classify->add_option("--op", op_text, "operator text")->required();

    auto* c_eigen = app.add_subcommand("eigen", "exact monic eigenpolynomial");
    c_eigen->add_option("--op", op_text)->required();
    c_eigen->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    c_eigen->add_flag("--print-coeffs", print_coeffs);

    auto* c_roots = app.add_subcommand("roots", "certified roots of p_n");
    c_roots->add_option("--op", op_text)->required();
    c_roots->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    c_roots->add_option("--digits", digits);

    auto* c_scan = app.add_subcommand("scan", "sweep r_n and r_n/n^d over a degree range");
    c_scan->add_option("--op", op_text)->required();
    c_scan->add_option("--n-from", n_from)->required()->check(CLI::PositiveNumber);
    c_scan->add_option("--n-to", n_to)->required()->check(CLI::PositiveNumber);
    c_scan->add_option("--step", step)->check(CLI::PositiveNumber);
    c_scan->add_option("--digits", digits);
    c_scan->add_option("--csv", csv_path);
    c_scan->add_option("--json", json_path);
    c_scan->add_option("--threads", threads);

    auto* c_measure = app.add_subcommand("measure", "scaled empirical root measure");
    c_measure->add_option("--op", op_text)->required();
    c_measure->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    c_measure->add_option("--svg", svg_path);
    c_measure->add_option("--csv", csv_path);
    c_measure->add_option("--digits", digits);

    auto* c_lemmas = app.add_subcommand("lemmas", "run the max-norm lemma fleet");
    c_lemmas->add_option("--seeds", seeds)->check(CLI::PositiveNumber);
    c_lemmas->add_option("--config", config_path);
    c_lemmas->add_option("--csv", csv_path);
    c_lemmas->add_option("--threads", threads);

    auto* c_curve = app.add_subcommand("curve", "limiting Cauchy-transform curve");
    c_curve->add_option("--op", op_text)->required();
    c_curve->add_flag("--discriminant", want_discriminant);
    c_curve->add_option("--sample", point_texts, "complex sample points, e.g. 3 or 2+2i");

    auto* c_resid = app.add_subcommand("cauchy-residual",
                                       "empirical residual of the limiting equation");
    c_resid->add_option("--op", op_text)->required();
    c_resid->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    c_resid->add_option("--points", point_texts);
    c_resid->add_option("--digits", digits);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const long t_start = cli_detail::now_ms();
    try {
        if (c_classify->parsed()) {
            const DifferentialOperator t = parse_operator(op_text);
            const OperatorClassification cls = classify(t);
            if (cls.kind == OperatorKind::invalid) {
                std::cout << "kind=invalid reason: " << cls.reason << "\n";
                return 2;
            }
            if (cls.kind == OperatorKind::non_degenerate) {
                std::cout << "kind=non-degenerate (order " << t.order() << ")\n";
                return 0;
            }
            std::cout << cli_detail::classification_line(cls) << "\n";
            return 0;
        }

        if (c_eigen->parsed()) {
            const DifferentialOperator t = parse_operator(op_text);
            cli_detail::classify_or_throw(t);
            const EigenPair pair = eigenpolynomial(t, n);
            std::cout << "n = " << pair.n << "\n";
            std::cout << "lambda = " << fraction_string(pair.lambda) << "\n";
            if (print_coeffs) {
                std::string line;
                for (const auto& c : pair.p.coefficients())
                    line += (line.empty() ? "" : " ") + fraction_string(c);
                std::cout << "coeffs = " << line << "\n";
            }
            return 0;
        }

        if (c_roots->parsed()) {
            const DifferentialOperator t = parse_operator(op_text);
            cli_detail::classify_or_throw(t);
            const EigenPair pair = eigenpolynomial(t, n);
            RootOptions ro;
            ro.target_digits = digits;
            const RootSet rs = find_roots(pair.p, ro);
            for (const auto& root : rs.roots)
                std::cout << to_string(root, digits + 2) << "\n";
            std::cout << "r_n = " << to_string(rs.r, digits) << "\n";
            std::cout << "residual_bound = " << to_string(rs.residual_bound, 3) << "\n";
            std::cout << "precision_bits = " << rs.precision_used << "\n";
            return 0;
        }

        if (c_scan->parsed()) {
            const DifferentialOperator t = parse_operator(op_text);
            const OperatorClassification cls = cli_detail::classify_or_throw(t);
            if (cls.kind != OperatorKind::degenerate)
                throw ValidationError("scan needs a degenerate exactly-solvable operator");
            ScanOptions so;
            so.target_digits = digits;
            so.threads = threads;
            const auto records = scan(t, n_from, n_to, step, so);
            std::cout << "n,r,ratio,collision\n";
            for (const auto& rec : records) {
                if (rec.status == ScanStatus::ok)
                    std::cout << rec.n << "," << to_string(rec.r, 10) << ","
                              << to_string(rec.ratio, 10) << ",0\n";
                else if (rec.status == ScanStatus::collision)
                    std::cout << rec.n << ",,,1\n";
                else
                    std::cout << rec.n << ",,,0\n";
            }
            if (!csv_path.empty()) write_file_atomic(csv_path, render_scan_csv(records));
            if (!json_path.empty()) {
                RunRecord rec = make_run_record("scan", op_text, cls);
                rec.parameters = {{"n_from", std::to_string(n_from)},
                                  {"n_to", std::to_string(n_to)},
                                  {"step", std::to_string(step)},
                                  {"digits", std::to_string(digits)}};
                for (const auto& r : records) {
                    Json one;
                    one["n"] = r.n;
                    one["status"] = r.status == ScanStatus::ok
                                        ? "ok"
                                        : (r.status == ScanStatus::collision ? "collision"
                                                                             : "no_convergence");
                    if (r.status == ScanStatus::ok) {
                        one["r"] = to_string(r.r);
                        one["ratio"] = to_string(r.ratio);
                        one["precision_bits"] = r.precision_used;
                    }
                    if (r.status == ScanStatus::collision) one["collided_with"] = r.collided_with;
                    rec.results.push_back(one);
                }
                rec.timing_ms = cli_detail::now_ms() - t_start;
                write_file_atomic(json_path, to_json(rec).dump(2) + "\n");
            }
            return 0;
        }

        if (c_measure->parsed()) {
            const DifferentialOperator t = parse_operator(op_text);
            cli_detail::classify_or_throw(t);
            const EmpiricalMeasure m = scaled_measure(t, n, digits);
            BigFloat support(0L, 64);
            for (const auto& atom : m.atoms) support = max(support, abs(atom));
            std::cout << "atoms = " << m.atoms.size() << "\n";
            std::cout << "max|atom| = " << to_string(support, 10) << "\n";
            if (!svg_path.empty()) emit_svg(m, print_operator(t), svg_path);
            if (!csv_path.empty()) write_file_atomic(csv_path, render_measure_csv(m));
            return 0;
        }

        if (c_lemmas->parsed()) {
            if (!config_path.empty()) {
                const auto cfg = read_config_file(config_path);
                cli_detail::apply_config_floor(cfg);
                auto it = cfg.find("seeds");
                if (it != cfg.end() && c_lemmas->count("--seeds") == 0)
                    seeds = std::stoi(it->second);
                it = cfg.find("threads");
                if (it != cfg.end() && c_lemmas->count("--threads") == 0)
                    threads = static_cast<unsigned>(std::stoul(it->second));
            }
            FleetOptions fo;
            fo.seeds = seeds;
            fo.threads = threads;
            const FleetOutcome outcome = run_lemma_fleet(fo);
            if (!csv_path.empty()) write_file_atomic(csv_path, render_lemma_csv(outcome.reports));
            std::cout << "checks = " << outcome.reports.size() << "\n";
            std::cout << "failures = " << outcome.failures << "\n";
            if (!outcome.all_hold) {
                for (const auto& rep : outcome.reports)
                    if (!rep.holds)
                        std::cout << "FAIL " << rep.lemma << " n=" << rep.n
                                  << " A=" << to_string(rep.A, 4) << " j=" << rep.j
                                  << " seed=" << rep.seed << " (" << rep.violation << ")\n";
                return 4;
            }
            return 0;
        }

        if (c_curve->parsed()) {
            const DifferentialOperator t = parse_operator(op_text);
            cli_detail::classify_or_throw(t);
            const CurveSpec curve = curve_from_operator(t);
            Json out;
            out["curve"]["j0"] = curve.j0;
            out["curve"]["lead"] = fraction_string(curve.lead);
            out["curve"]["terms"] = Json::array();
            for (const auto& term : curve.terms)
                out["curve"]["terms"].push_back(
                    {{"j", term.j}, {"q", fraction_string(term.q)}, {"z_power", term.z_power}});
            if (want_discriminant || !point_texts.empty()) {
                const BranchTracker tracker(curve);
                if (want_discriminant) {
                    const DiscriminantLocus locus = discriminant_locus(curve);
                    out["resultant_degree"] = locus.resultant_degree;
                    out["discriminant"] = Json::array();
                    for (const auto& p : locus.points)
                        out["discriminant"].push_back(
                            {{"re", to_string(p.real(), 17)}, {"im", to_string(p.imag(), 17)}});
                    out["degenerations"] = Json::array();
                    for (const auto& p : locus.degenerations)
                        out["degenerations"].push_back(
                            {{"re", to_string(p.real(), 17)}, {"im", to_string(p.imag(), 17)}});
                }
                out["branch_samples"] = Json::array();
                for (const auto& text : point_texts) {
                    const Complex z = parse_complex(text, 256);
                    const BranchValue bv = tracker.at(z);
                    out["branch_samples"].push_back({{"z", text},
                                                     {"y_re", to_string(bv.y.real(), 17)},
                                                     {"y_im", to_string(bv.y.imag(), 17)},
                                                     {"residual", to_string(bv.residual, 3)}});
                }
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (c_resid->parsed()) {
            const DifferentialOperator t = parse_operator(op_text);
            cli_detail::classify_or_throw(t);
            std::vector<Complex> points;
            if (point_texts.empty())
                points = {Complex(3.0, 0.0, 256), Complex(2.0, 2.0, 256), Complex(-1.0, -3.0, 256)};
            else
                for (const auto& text : point_texts) points.push_back(parse_complex(text, 256));
            const auto residuals = conjecture_residual(t, n, points, digits);
            for (std::size_t i = 0; i < residuals.size(); ++i) {
                const std::string z_text =
                    i < point_texts.size() ? point_texts[i] : to_string(points[i], 6);
                std::cout << "z = " << z_text << "  residual = " << to_string(residuals[i], 8)
                          << "\n";
            }
            return 0;
        }
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: invalid operator: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SpectralCollision& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ContinuationStall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NearDiscriminant& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const PoleProximity& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

inline int cli_dispatch(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("eigenroot");
    for (const auto& a : args) argv.push_back(a.c_str());
    return cli_run(static_cast<int>(argv.size()), argv.data());
}

} // namespace eigenroot

#endif
