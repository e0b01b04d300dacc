#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "polyidp/errors.hpp"
#include "polyidp/parallel.hpp"
#include "polyidp/tableau.hpp"
#include "polyidp/verify.hpp"

namespace polyidp {

namespace {

struct Options {
    std::string polytope;
    std::string tableau;
    std::string shapes;
    std::string point;
    std::string lambda, mu;
    std::string out;
    int t = 1;
    int t_max = 0;
    bool raw = false;
    bool certificates = false;
    bool timings = false;
    ExploreConfig explore;
    std::string filter = "all";
    std::string mode = "both";
};

SchurSum load_polytope(const std::string& path) { return parse_schur_sum(load_json_file(path)); }

std::pair<Partition, Partition> load_pair(const Options& o) {
    if (!o.polytope.empty()) {
        const auto s = load_polytope(o.polytope);
        if (s.generators.size() != 2) throw ParseError("expected exactly two generators in " + o.polytope);
        return {s.generators[0], s.generators[1]};
    }
    if (o.lambda.empty() || o.mu.empty()) throw ParseError("give --polytope or both --lambda and --mu");
    return {parse_partition(parse_json_text(o.lambda)), parse_partition(parse_json_text(o.mu))};
}

std::vector<int> dilations(const Options& o) {
    std::vector<int> ts;
    if (o.t_max > 0) {
        for (int t = 1; t <= o.t_max; ++t) ts.push_back(t);
    } else {
        ts.push_back(o.t);
    }
    return ts;
}

// One report per dilation folded into one document; entries are tagged with t.
Report merge(std::vector<Report> parts, Json instance) {
    Report rep;
    rep.kind = parts.front().kind;
    rep.instance = std::move(instance);
    rep.stats["per_t"] = Json::array();
    for (auto& p : parts) {
        const int t = p.instance["t"].get<int>();
        for (auto& c : p.counterexamples) {
            c["t"] = t;
            rep.counterexamples.push_back(std::move(c));
        }
        for (auto& w : p.witnesses) {
            w["t"] = t;
            rep.witnesses.push_back(std::move(w));
        }
        Json s = p.stats;
        s["t"] = t;
        rep.stats["per_t"].push_back(std::move(s));
        rep.millis += p.millis;
    }
    if (parts.size() == 1) {
        rep.instance = parts.front().instance;
        rep.stats = parts.front().stats;
        for (auto& c : rep.counterexamples) c.erase("t");
        for (auto& w : rep.witnesses) w.erase("t");
    }
    rep.finalize();
    return rep;
}

Report run_mlp(const Options& o, bool two_pm) {
    const auto s = load_polytope(o.polytope);
    check_envelope(s.ambient, s.generators);
    const auto p = SymmetricPolytope::from_generators(s.generators, s.ambient);
    const auto m = mlp(p);

    Report rep;
    rep.kind = two_pm ? ReportKind::TwoPM : ReportKind::MLP;
    rep.instance = to_json(s);
    rep.stats["mlp"] = partitions_to_json(m, s.ambient);
    rep.stats["lattice_points"] = lattice_points(p).size();
    if (o.certificates) {
        for (const auto& q : m) {
            const auto cert = p.certify(q.padded(s.ambient));
            Json terms = Json::array();
            for (const auto& [v, w] : cert->terms) terms.push_back({{"vertex", to_json(v)}, {"weight", w.get_str()}});
            rep.witnesses.push_back({{"partition", to_json(q, s.ambient)}, {"certificate", terms}});
        }
    }
    if (two_pm) {
        rep.stats["is_2pm"] = m.size() == 2;
        if (m.size() != 2) {
            std::vector<Partition> gens = s.generators;
            for (const auto& q : m) {
                if (std::find(gens.begin(), gens.end(), q) == gens.end())
                    rep.counterexamples.push_back({{"type", "extra-mlp"}, {"partition", to_json(q, s.ambient)}});
            }
            if (rep.counterexamples.empty())
                rep.counterexamples.push_back({{"type", "mlp-size"}, {"size", m.size()}});
        }
    }
    rep.finalize();
    return rep;
}

Report run_snp(const Options& o) {
    const auto s = load_polytope(o.polytope);
    check_envelope(s.ambient, s.generators);
    const SchurSum sum =
        o.raw ? s : SchurSum(mlp(SymmetricPolytope::from_generators(s.generators, s.ambient)), s.ambient);
    std::vector<Report> parts;
    for (int t : dilations(o)) parts.push_back(check_snp(sum, t, o.certificates));
    Json inst = to_json(sum);
    inst["t_max"] = dilations(o).back();
    auto rep = merge(std::move(parts), inst);
    rep.instance["source"] = o.raw ? "raw" : "mlp";
    return rep;
}

Report run_idp(const Options& o) {
    const auto s = load_polytope(o.polytope);
    const auto p = SymmetricPolytope::from_generators(s.generators, s.ambient);
    std::vector<Report> parts;
    for (int t : dilations(o)) parts.push_back(check_idp(p, t, o.certificates));
    Json inst = to_json(s);
    inst["t_max"] = dilations(o).back();
    return merge(std::move(parts), inst);
}

Report run_decompose(const Options& o) {
    Report rep;
    rep.kind = ReportKind::Decompose;
    if (!o.tableau.empty()) {
        const auto tab = parse_tableau(load_json_file(o.tableau));
        const auto shapes = parse_partition_list(parse_json_text(o.shapes));
        rep.instance["tableau"] = to_json(tab);
        rep.instance["shapes"] = Json::array();
        for (const auto& sh : shapes) rep.instance["shapes"].push_back(to_json(sh));
        for (const auto& piece : decompose_tableau(tab, shapes)) rep.witnesses.push_back(to_json(piece));
    } else {
        const auto s = load_polytope(o.polytope);
        check_envelope(s.ambient, s.generators);
        const auto x = parse_point(parse_json_text(o.point));
        if (x.dim() != s.ambient) throw ParseError("point has " + std::to_string(x.dim()) + " coordinates, expected " +
                                                   std::to_string(s.ambient));
        const SchurSum sum(mlp(SymmetricPolytope::from_generators(s.generators, s.ambient)), s.ambient);
        rep.instance = to_json(sum);
        rep.instance["t"] = o.t;
        rep.instance["point"] = to_json(x);
        if (const auto pieces = decompose_point(sum, o.t, x))
            rep.witnesses.push_back({{"pieces", points_to_json(*pieces)}});
        else
            rep.counterexamples.push_back({{"type", "no-dominating-summand"}, {"point", to_json(x)}});
    }
    rep.finalize();
    return rep;
}

Report run_explore(Options o) {
    o.explore.filter = parse_filter(o.filter);
    o.explore.mode = parse_mode(o.mode);
    o.explore.validate();
    return explore_conjecture(o.explore);
}

int emit(const Report& rep, const Options& o, std::ostream& out, std::ostream& err) {
    const std::string text = rep.to_json(o.timings).dump(2) + "\n";
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f || !(f << text)) {
            err << "error: cannot write " << o.out << "\n";
            return 2;
        }
    }
    return rep.passed() ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Symmetric lattice polytopes, Schur supports and integer decomposition"};
    app.name("polyidp");
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--out", o.out, "Write the report here instead of stdout");
    app.add_flag("--timings", o.timings, "Include millis in the report");
    app.add_flag("--certificates", o.certificates, "Attach per-point witnesses");

    const auto polytope_opt = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--polytope", o.polytope, "Polytope JSON {\"n\":..,\"generators\":[..]}")
                        ->check(CLI::ExistingFile);
        if (required) opt->required();
        return opt;
    };
    const auto dilation_opts = [&](CLI::App* sub) {
        auto* t = sub->add_option("--t", o.t, "Dilation")->check(CLI::Range(1, 64));
        auto* tm = sub->add_option("--t-max", o.t_max, "Check every dilation 1..T")->check(CLI::Range(1, 64));
        t->excludes(tm);
    };

    auto* mlp_cmd = app.add_subcommand("mlp", "Maximal lattice partitions of P");
    polytope_opt(mlp_cmd, true);
    auto* pm_cmd = app.add_subcommand("check-2pm", "Fail unless MLP(P) has exactly two elements");
    polytope_opt(pm_cmd, true);

    auto* snp_cmd = app.add_subcommand("snp", "Saturation of ts for s built from MLP(P)");
    polytope_opt(snp_cmd, true);
    dilation_opts(snp_cmd);
    snp_cmd->add_flag("--raw", o.raw, "Use the generator list instead of MLP(P)");

    auto* idp_cmd = app.add_subcommand("idp", "Integer decomposition of tP");
    polytope_opt(idp_cmd, true);
    dilation_opts(idp_cmd);

    auto* dec_cmd = app.add_subcommand("decompose", "Split a tableau by shapes, or a point of tP into t pieces");
    auto* tab_opt = dec_cmd->add_option("--tableau", o.tableau, "Tableau JSON")->check(CLI::ExistingFile);
    auto* shapes_opt = dec_cmd->add_option("--shapes", o.shapes, "JSON list of shapes");
    auto* dec_poly = polytope_opt(dec_cmd, false);
    auto* point_opt = dec_cmd->add_option("--point", o.point, "JSON lattice point");
    dec_cmd->add_option("--t", o.t, "Dilation")->check(CLI::Range(1, 64));
    tab_opt->needs(shapes_opt)->excludes(dec_poly);
    shapes_opt->needs(tab_opt);
    dec_poly->needs(point_opt);
    point_opt->needs(dec_poly);

    auto* l41_cmd = app.add_subcommand("lemma41", "Difference-one test and gamma witness for a pair");
    auto* mat_cmd = app.add_subcommand("matrix", "Determinant and inverse identities for a pair");
    for (auto* sub : {l41_cmd, mat_cmd}) {
        polytope_opt(sub, false);
        sub->add_option("--lambda", o.lambda, "First partition as JSON");
        sub->add_option("--mu", o.mu, "Second partition as JSON");
    }

    auto* exp_cmd = app.add_subcommand("explore", "Sweep small instances for saturation counterexamples");
    exp_cmd->add_option("--n", o.explore.n, "Ambient dimension")->capture_default_str();
    exp_cmd->add_option("--k", o.explore.k, "Generators per instance")->capture_default_str();
    exp_cmd->add_option("--max-part", o.explore.max_part, "Largest part")->capture_default_str();
    exp_cmd->add_option("--t-max", o.explore.max_t, "Largest dilation")->capture_default_str();
    exp_cmd->add_option("--filter", o.filter, "all, 2pm-only or same-size-only")
        ->check(CLI::IsMember({"all", "2pm-only", "same-size-only"}))
        ->capture_default_str();
    exp_cmd->add_option("--mode", o.mode, "mlp, raw or both")->check(CLI::IsMember({"mlp", "raw", "both"}))
        ->capture_default_str();
    exp_cmd->add_option("--seed", o.explore.seed, "Sampling seed")->capture_default_str();
    exp_cmd->add_option("--samples", o.explore.samples, "Sample count, 0 for exhaustive")->capture_default_str();
    exp_cmd->add_flag("--stop-on-first", o.explore.stop_on_first, "Stop at the first failing instance");

    std::vector<const char*> argv{"polyidp"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (dec_cmd->parsed() && o.tableau.empty() && o.polytope.empty()) {
        err << "error: decompose needs --tableau with --shapes, or --polytope with --point\n";
        return 2;
    }

    apply_thread_limit();
    try {
        Report rep;
        if (mlp_cmd->parsed()) rep = run_mlp(o, false);
        else if (pm_cmd->parsed()) rep = run_mlp(o, true);
        else if (snp_cmd->parsed()) rep = run_snp(o);
        else if (idp_cmd->parsed()) rep = run_idp(o);
        else if (dec_cmd->parsed()) rep = run_decompose(o);
        else if (l41_cmd->parsed()) {
            const auto [lam, mu] = load_pair(o);
            rep = lemma41_check(lam, mu);
        } else if (mat_cmd->parsed()) {
            const auto [lam, mu] = load_pair(o);
            rep = matrix_identities(lam, mu);
        } else {
            rep = run_explore(o);
        }
        return emit(rep, o, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace polyidp
