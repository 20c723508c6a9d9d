#include "listcol/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "listcol/choosability.hpp"
#include "listcol/errors.hpp"
#include "listcol/exact.hpp"
#include "listcol/io.hpp"
#include "listcol/reductions.hpp"
#include "listcol/solvers.hpp"
#include "listcol/structure.hpp"

namespace listcol {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot write '" + path + "'");
    out << text;
}

std::vector<int> parse_int_csv(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

std::vector<std::string> parse_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

void emit(const RunReport& rep, bool json, std::ostream& out) {
    if (json) out << rep.to_json() << "\n";
    else out << rep.to_text();
}

// Builders that consume a bare graph measure equivalence against the
// uniform {1,2,3} assignment; normalize the seed the same way on verify.
Instance normalized_seed(const std::string& construction, const Instance& seed) {
    if (construction == "3reg-case1" || construction == "pendant-precolour" ||
        construction == "pendant-clique")
        return Instance(seed.graph(),
                        ListAssignment::uniform(seed.graph().vertex_count(), {1, 2, 3}));
    return seed;
}

GadgetSpec load_gadget(const std::string& synth, const std::string& file, int gu, int gv,
                       bool minimize) {
    if (!synth.empty()) {
        if (synth == "3reg-t1") return synthetic_gadget_3reg(1);
        if (synth == "3reg-t2") return synthetic_gadget_3reg(2);
        if (synth == "4reg-t1") return synthetic_gadget_4reg(1);
        if (synth == "4reg-t2") return synthetic_gadget_4reg(2);
        if (synth == "4reg-t3") return synthetic_gadget_4reg(3);
        if (synth == "toy") return synthetic_gadget_toy();
        if (synth == "k4") return make_gadget(k4_counterexample(), {0, 1});
        throw InputError("unknown synthetic gadget '" + synth + "'");
    }
    if (file.empty())
        throw InputError("reduce: this builder needs --gadget-synth or --gadget");
    Instance f = parse_instance(read_file(file));
    if (gu < 0 || gv < 0) throw InputError("reduce: --gu/--gv designate the removed edge");
    auto pair = CounterexamplePair::verified(f.graph(), f.lists());
    if (minimize) {
        pair = minimize_counterexample(std::move(pair));
        // Removing vertices renumbers; endpoints must be given for the
        // minimal graph in that case.
    }
    return make_gadget(pair, {gu, gv});
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact list-colouring toolkit"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit the report as JSON");

    // solve
    auto* solve = app.add_subcommand("solve", "solve a list-colouring instance");
    std::string solve_file, method = "auto";
    solve->add_option("file", solve_file)->required();
    solve->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "exact", "2list", "deg2", "gallai", "deglist",
                               "precol"}));

    // classify
    auto* classify = app.add_subcommand("classify", "detect features and cite the route");
    std::string classify_file;
    classify->add_option("file", classify_file)->required();

    // choosable
    auto* choosable = app.add_subcommand("choosable", "decide ell-choosability");
    std::string choose_file, family;
    std::string family_params;
    int ell = 0;
    std::uint64_t budget = 0;
    choosable->add_option("file", choose_file);
    choosable->add_option("--family", family, "named graph family instead of a file");
    choosable->add_option("--params", family_params, "family parameters, comma-separated");
    choosable->add_option("--ell", ell)->required();
    choosable->add_option("--budget", budget, "assignment budget (0 = unlimited)");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "build a hardness-gadget instance");
    std::string builder, seed_file, out_file, cert_file, gadget_file, gadget_synth;
    int p = 7, r = 3, k = 4, gu = -1, gv = -1;
    bool minimize = false;
    reduce->add_option("builder", builder)
        ->required()
        ->check(CLI::IsMember({"girth-lift", "3reg-case1", "3reg-case2", "4reg",
                               "butterfly-safe", "pendant-precolour", "pendant-clique",
                               "3p1"}));
    reduce->add_option("seed", seed_file)->required();
    reduce->add_option("-o,--out", out_file)->required();
    reduce->add_option("--cert", cert_file, "certificate path (default: <out>.cert)");
    reduce->add_option("--p", p, "girth bound for girth-lift");
    reduce->add_option("--r", r, "cycle-length parameter");
    reduce->add_option("--k", k, "palette parameter for the pendant builders");
    reduce->add_option("--gadget", gadget_file, "counterexample pair file (F with lists)");
    reduce->add_option("--gu", gu, "removed-edge endpoint u in the gadget file");
    reduce->add_option("--gv", gv, "removed-edge endpoint v in the gadget file");
    reduce->add_option("--gadget-synth", gadget_synth,
                       "canned gadget: 3reg-t1 3reg-t2 4reg-t1 4reg-t2 4reg-t3 toy k4");
    reduce->add_flag("--minimize", minimize, "minimize the gadget pair first");

    // verify
    auto* verify = app.add_subcommand("verify", "check a reduction output");
    std::string v_seed, v_out, v_cert;
    std::uint64_t v_budget = 50'000'000;
    verify->add_option("seed", v_seed)->required();
    verify->add_option("out", v_out)->required();
    verify->add_option("cert", v_cert)->required();
    verify->add_option("--budget", v_budget, "oracle node budget");

    // check
    auto* check = app.add_subcommand("check", "structural report");
    std::string check_file, patterns = "c4,c5,triangle,butterfly";
    check->add_option("file", check_file)->required();
    check->add_option("--patterns", patterns, "comma-separated pattern names");

    // gen
    auto* gen = app.add_subcommand("gen", "emit a named-family instance");
    std::string gen_family, gen_params, gen_lists, gen_out;
    int gen_k = 0;
    gen->add_option("--family", gen_family)->required();
    gen->add_option("--params", gen_params);
    gen->add_option("--lists", gen_lists, "uniform list, comma-separated colours");
    gen->add_option("--k", gen_k, "palette (lists default to 1..k)");
    gen->add_option("-o,--out", gen_out, "output path (default: stdout)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 64;
    }

    Timer timer;

    if (*solve) {
        Instance inst = parse_instance(read_file(solve_file));
        RunReport rep;
        rep.command = "solve";
        SolveResult res;
        std::string classification;
        if (method == "auto") {
            auto [report, r2] = classify_and_solve(inst);
            classification = report.classification;
            res = std::move(r2);
        } else if (method == "exact") {
            res = solve_exact(inst);
        } else if (method == "2list") {
            res = solve_2list(inst);
        } else if (method == "deg2") {
            res = solve_max_degree2(inst);
        } else if (method == "gallai") {
            res = solve_gallai_tree(inst);
        } else if (method == "deglist") {
            res = solve_degree_lists(inst);
        } else { // precol
            if (!inst.precolouring())
                throw InputError("--method precol needs an instance with p lines");
            res = solve_precolouring_extension(inst.graph(), *inst.precolouring(),
                                               inst.precolouring()->palette());
        }
        rep.verdict = res.feasible ? "feasible" : "infeasible";
        rep.extras.push_back({"method", res.method});
        if (!classification.empty()) rep.extras.push_back({"classification", classification});
        if (res.stats.fallback_used) rep.extras.push_back({"fallback", "true"});
        rep.extras.push_back({"time-ms", std::to_string(timer.ms())});
        if (res.colouring) {
            if (!check_colouring(inst, *res.colouring))
                throw InternalError("solver returned an invalid colouring");
            rep.colouring = res.colouring->colour;
        }
        emit(rep, json, out);
        return 0;
    }

    if (*classify) {
        Instance inst = parse_instance(read_file(classify_file));
        auto [report, res] = classify_and_solve(inst);
        RunReport rep;
        rep.command = "classify";
        rep.verdict = res.feasible ? "feasible" : "infeasible";
        rep.extras.push_back({"classification", report.classification});
        rep.extras.push_back({"method", report.method});
        rep.extras.push_back({"max-list-size", std::to_string(report.max_list_size)});
        rep.extras.push_back(
            {"regular", report.lists_regular ? std::to_string(report.regularity) : "no"});
        rep.extras.push_back({"max-degree", std::to_string(report.max_degree)});
        rep.extras.push_back({"bipartite", report.bipartite ? "yes" : "no"});
        if (inst.graph().vertex_count() <= 2048)
            rep.extras.push_back({"planar", is_planar(inst.graph()) ? "yes" : "no"});
        rep.extras.push_back(
            {"gallai-components", report.all_components_gallai ? "yes" : "no"});
        rep.extras.push_back({"time-ms", std::to_string(timer.ms())});
        emit(rep, json, out);
        return 0;
    }

    if (*choosable) {
        Graph g;
        std::string what;
        if (!family.empty()) {
            g = named_graph(family, parse_int_csv(family_params));
            what = family + "(" + family_params + ")";
        } else if (!choose_file.empty()) {
            g = parse_instance(read_file(choose_file)).graph();
            what = choose_file;
        } else {
            throw InputError("choosable needs a file or --family");
        }
        auto res = is_choosable(g, ell, budget);
        RunReport rep;
        rep.command = "choosable";
        rep.extras.push_back({"graph", what});
        rep.extras.push_back({"ell", std::to_string(ell)});
        rep.extras.push_back({"assignments-tested", std::to_string(res.assignments_tested)});
        rep.extras.push_back({"time-ms", std::to_string(timer.ms())});
        switch (res.verdict) {
        case ChoosabilityResult::Verdict::choosable:
            rep.verdict = "choosable";
            break;
        case ChoosabilityResult::Verdict::not_choosable: {
            rep.verdict = "not-choosable";
            std::ostringstream w;
            for (int v = 0; v < res.witness->vertex_count(); ++v) {
                w << v << ":{";
                const auto& l = res.witness->list(v);
                for (std::size_t i = 0; i < l.size(); ++i) w << (i ? "," : "") << l[i];
                w << "} ";
            }
            rep.extras.push_back({"witness", w.str()});
            break;
        }
        case ChoosabilityResult::Verdict::budget_exceeded:
            rep.verdict = "budget-exceeded";
            emit(rep, json, out);
            return 4;
        }
        emit(rep, json, out);
        return 0;
    }

    if (*reduce) {
        Instance seed = parse_instance(read_file(seed_file));
        BuiltInstance built;
        if (builder == "girth-lift") {
            built = build_girth_lift(seed, p);
        } else if (builder == "3reg-case1") {
            auto gadget = gadget_synth.empty() && gadget_file.empty()
                              ? make_gadget(k4_counterexample(), {0, 1})
                              : load_gadget(gadget_synth, gadget_file, gu, gv, minimize);
            built = build_3reg_case1(seed.graph(), gadget, r);
        } else if (builder == "3reg-case2") {
            auto gadget = load_gadget(gadget_synth, gadget_file, gu, gv, minimize);
            built = build_3reg_case2(seed, gadget, r);
        } else if (builder == "4reg") {
            auto gadget = load_gadget(gadget_synth, gadget_file, gu, gv, minimize);
            built = build_4reg_instance(seed, gadget, r);
        } else if (builder == "butterfly-safe") {
            auto gadget = gadget_synth.empty() && gadget_file.empty()
                              ? synthetic_gadget_toy()
                              : load_gadget(gadget_synth, gadget_file, gu, gv, minimize);
            built = build_butterfly_safe(seed, gadget, std::max(r, 5));
        } else if (builder == "pendant-precolour") {
            built = build_pendant_precolour(seed.graph(), k);
        } else if (builder == "pendant-clique") {
            built = build_pendant_clique(seed.graph(), k);
        } else { // 3p1
            built = build_3p1_instance(seed);
        }
        write_file(out_file, write_instance(built.instance));
        std::string cpath = cert_file.empty() ? out_file + ".cert" : cert_file;
        write_file(cpath, write_certificate(built.certificate));
        RunReport rep;
        rep.command = "reduce";
        rep.verdict = "built";
        rep.extras.push_back({"construction", built.certificate.construction});
        rep.extras.push_back(
            {"out-vertices", std::to_string(built.instance.graph().vertex_count())});
        rep.extras.push_back({"out", out_file});
        rep.extras.push_back({"cert", cpath});
        rep.extras.push_back({"time-ms", std::to_string(timer.ms())});
        emit(rep, json, out);
        return 0;
    }

    if (*verify) {
        Instance seed = parse_instance(read_file(v_seed));
        Instance outp = parse_instance(read_file(v_out));
        ReductionCertificate cert = parse_certificate(read_file(v_cert));
        auto report = verify_reduction(normalized_seed(cert.construction, seed), outp, cert,
                                       v_budget);
        RunReport rep;
        rep.command = "verify";
        bool unverified = report.equivalence == VerifyReport::Equivalence::unverified;
        rep.verdict = unverified ? "unverified" : (report.passed() ? "pass" : "fail");
        rep.extras.push_back({"digest", report.digest_ok ? "ok" : "mismatch"});
        rep.extras.push_back(
            {"equivalence", report.equivalence == VerifyReport::Equivalence::match
                                ? "match"
                                : (unverified ? "unverified" : "mismatch")});
        if (!unverified) {
            rep.extras.push_back({"seed-feasible", report.seed_feasible ? "yes" : "no"});
            rep.extras.push_back({"out-feasible", report.out_feasible ? "yes" : "no"});
        }
        for (const auto& [desc, ok] : report.claim_results)
            rep.extras.push_back({"claim " + desc, ok ? "pass" : "FAIL"});
        rep.extras.push_back({"time-ms", std::to_string(timer.ms())});
        emit(rep, json, out);
        if (unverified) return 4;
        return 0;
    }

    if (*check) {
        Instance inst = parse_instance(read_file(check_file));
        auto report = structure_report(inst.graph(), parse_csv(patterns));
        RunReport rep;
        rep.command = "check";
        rep.verdict = "ok";
        rep.extras.push_back({"max-degree", std::to_string(report.max_degree)});
        rep.extras.push_back(
            {"girth", report.girth ? std::to_string(*report.girth) : "infinity"});
        rep.extras.push_back({"bipartite", report.bipartite ? "yes" : "no"});
        rep.extras.push_back({"planar", report.planar ? "yes" : "no"});
        rep.extras.push_back({"two-connected", report.two_connected ? "yes" : "no"});
        rep.extras.push_back(
            {"intersecting-triangles", report.intersecting_triangles ? "yes" : "no"});
        for (const auto& [pat, present] : report.forbidden)
            rep.extras.push_back({"subgraph " + pat, present ? "present" : "absent"});
        rep.extras.push_back({"time-ms", std::to_string(timer.ms())});
        emit(rep, json, out);
        return 0;
    }

    if (*gen) {
        Graph g = named_graph(gen_family, parse_int_csv(gen_params));
        ListAssignment lists;
        Instance inst;
        if (!gen_lists.empty()) {
            inst = Instance(g, ListAssignment::uniform(g.vertex_count(),
                                                       parse_int_csv(gen_lists)));
        } else if (gen_k > 0) {
            ColourList pal;
            for (int c = 1; c <= gen_k; ++c) pal.push_back(c);
            inst = Instance(g, ListAssignment::uniform(g.vertex_count(), pal));
        } else {
            throw InputError("gen needs --lists or --k");
        }
        std::string text = write_instance(inst);
        if (gen_out.empty()) out << text;
        else write_file(gen_out, text);
        return 0;
    }

    return 64;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run(args, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 65;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::ios_base::failure& e) {
        err << "io error: " << e.what() << "\n";
        return 66;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 70;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 70;
    }
}

} // namespace listcol
