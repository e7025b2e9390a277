#include "goi/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "goi/json_io.hpp"
#include "goi/proof_text.hpp"

namespace goi {

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ProofPtr load_proof(const std::string& path) {
    ProofPtr p = parse_proof(slurp(path));
    check_proof(p);
    return assign_eigenweights(p);
}

ReductionMode mode_of(const std::string& name) {
    if (name == "raw") return mode_raw();
    if (name == "cplus") return mode_cplus();
    if (name == "cplustimes") return mode_cplustimes_all();
    throw CLI::ValidationError("--mode", "unknown mode " + name);
}

struct Common {
    std::string file;
    std::string format = "text";
    std::string mode = "cplustimes";
    int bound = 1024;
    bool trace = false;
    int cap_switchings = 1 << 16;
    int cap_linkings = 12;
};

void emit(std::ostream& out, const std::string& format, const Json& j,
          const std::string& text) {
    if (format == "json")
        out << j.dump(2) << "\n";
    else
        out << text;
}

std::string render_matrix_text(const FMatrix& m) { return m.str(); }
std::string render_matrix_text(const LMatrix& m) { return m.str(); }

}  // namespace

int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"MALL proof workbench: nets, interaction matrices, execution, equations"};
    app.require_subcommand(1);

    Common c;
    auto add_common = [&](CLI::App* sub, bool with_mode = true) {
        sub->add_option("file", c.file, "proof file (.mall) or - for stdin")->required();
        sub->add_option("--format", c.format, "text|json")->check(CLI::IsMember({"text", "json"}));
        if (with_mode)
            sub->add_option("--mode", c.mode, "raw|cplus|cplustimes|paired");
        sub->add_option("--bound", c.bound, "power iteration bound");
        sub->add_flag("--trace", c.trace, "include the power trace");
        sub->add_option("--cap-switchings", c.cap_switchings, "switching enumeration cap");
        sub->add_option("--cap-linkings", c.cap_linkings, "subset enumeration cap");
        return sub;
    };

    auto* cmd_check = add_common(app.add_subcommand("check", "parse and check a proof"), false);
    auto* cmd_net = add_common(
        app.add_subcommand("net", "translate and check the correctness criteria"), false);
    auto* cmd_interp = add_common(app.add_subcommand("interpret", "interaction matrix"), false);
    auto* cmd_measure = add_common(app.add_subcommand("measure", "measure matrix"), false);
    auto* cmd_exec = add_common(app.add_subcommand("exec", "quasi-execution"));
    auto* cmd_nilp = add_common(app.add_subcommand("nilp", "nilpotency index"));
    bool paired = false;
    cmd_nilp->add_flag("--paired", paired, "paired nilpotency (default)");
    auto* cmd_norm =
        add_common(app.add_subcommand("normalize", "cut elimination trace"), false);
    auto* cmd_inv = add_common(app.add_subcommand("invariance", "execution invariance"), false);
    bool autonomous = false;
    cmd_inv->add_flag("--autonomous", autonomous, "solution-based invariance");
    auto* cmd_eq = add_common(app.add_subcommand("eq", "autonomous equational system"), false);
    auto* cmd_solve = add_common(app.add_subcommand("solve", "construct a solution"), false);

    try {
        std::vector<const char*> argv;
        argv.push_back("goi");
        for (auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_check->parsed()) {
            ProofPtr p = load_proof(c.file);
            Json j;
            j["version"] = kToolVersion;
            j["sequent"] = p->seq.str();
            j["proof"] = proof_json(p);
            emit(out, c.format, j, p->seq.str() + "\n");
            return 0;
        }
        if (cmd_net->parsed()) {
            LinkingSet ls;
            if (c.file.size() > 5 && c.file.substr(c.file.size() - 5) == ".json") {
                ls = linking_set_from_json(Json::parse(slurp(c.file)));
            } else {
                ls = translate(load_proof(c.file));
            }
            NetCaps caps;
            caps.switchings = c.cap_switchings;
            caps.linkings = c.cap_linkings;
            NetReport rep = check_net(ls, caps);
            Json j = net_report_json(rep);
            j["version"] = kToolVersion;
            std::string text;
            text += std::string("P0 ") + (rep.p0.pass ? "pass" : "FAIL") + "\n";
            text += std::string("P1 ") + (rep.p1.pass ? "pass" : "FAIL") + "\n";
            text += std::string("P2 ") + (rep.p2.pass ? "pass" : "FAIL") + "\n";
            text += std::string("P3 ") + (rep.p3.pass ? "pass" : "FAIL") + "\n";
            if (!rep.wellformed) {
                text += "malformed linkings:\n";
                for (const auto& w : rep.structure) text += "  " + w + "\n";
            }
            for (const auto* cr : {&rep.p0, &rep.p1, &rep.p2, &rep.p3})
                for (const auto& w : cr->witnesses) text += "  witness: " + w + "\n";
            emit(out, c.format, j, text);
            return rep.pass() ? 0 : 1;
        }
        if (cmd_interp->parsed()) {
            ProofPtr p = load_proof(c.file);
            FMatrix m = interpret(p);
            Json j = fmatrix_json(m);
            j["version"] = kToolVersion;
            emit(out, c.format, j, render_matrix_text(m));
            return 0;
        }
        if (cmd_measure->parsed()) {
            ProofPtr p = load_proof(c.file);
            LMatrix m = measure(p);
            Json j = lmatrix_json(m);
            j["version"] = kToolVersion;
            emit(out, c.format, j, render_matrix_text(m));
            return 0;
        }
        if (cmd_exec->parsed()) {
            if (c.mode == "paired")
                throw CLI::ValidationError("--mode", "exec runs in a scalar mode; see nilp");
            ProofPtr p = load_proof(c.file);
            ExecReport rep =
                qExec(interpret(p), cut_pairs(p->seq), mode_of(c.mode), c.bound, c.trace);
            Json j = exec_report_json(rep);
            j["version"] = kToolVersion;
            std::string text = rep.divergent
                                   ? "divergent within bound " + std::to_string(rep.bound) + "\n"
                                   : "n0 = " + std::to_string(rep.n0) + "\n" +
                                         render_matrix_text(rep.result);
            emit(out, c.format, j, text);
            return rep.divergent ? 1 : 0;
        }
        if (cmd_nilp->parsed()) {
            ProofPtr p = load_proof(c.file);
            NilpotencyReport rep;
            if (paired || c.mode == "paired")
                rep = pair_nilpotency(interpret(p), measure(p), cut_pairs(p->seq), c.bound);
            else
                rep = slice_nilpotency(interpret(p), cut_pairs(p->seq), c.bound);
            Json j = nilpotency_json(rep);
            j["version"] = kToolVersion;
            std::string text = rep.divergent
                                   ? "divergent within bound " + std::to_string(rep.bound) + "\n"
                                   : "n = " + std::to_string(rep.index) + "\n";
            emit(out, c.format, j, text);
            return rep.divergent ? 1 : 0;
        }
        if (cmd_norm->parsed()) {
            ProofPtr p = load_proof(c.file);
            ReductionTrace t = normalize(p, RewriteOptions{.step_bound = c.bound});
            Json j = trace_json(t);
            j["version"] = kToolVersion;
            std::string text;
            for (std::size_t i = 0; i < t.steps.size(); ++i)
                text += step_kind_name(t.steps[i].kind) + " -> " + t.proofs[i]->seq.str() +
                        "\n";
            text += "normal form: " + print_proof(t.result()) + "\n";
            emit(out, c.format, j, text);
            return 0;
        }
        if (cmd_inv->parsed()) {
            ProofPtr p = load_proof(c.file);
            ReductionTrace t = normalize(p);
            InvarianceReport rep = autonomous ? verify_invariance_autonomous(t, c.bound)
                                              : verify_invariance_external(t, c.bound);
            Json j = invariance_json(rep);
            j["version"] = kToolVersion;
            j["steps"] = t.steps.size();
            std::string text = rep.pass ? "invariance holds over " +
                                              std::to_string(t.steps.size()) + " steps\n"
                                        : "invariance FAILED\n";
            for (const auto& f : rep.failures) text += "  " + f + "\n";
            emit(out, c.format, j, text);
            return rep.pass ? 0 : 1;
        }
        if (cmd_eq->parsed()) {
            ProofPtr p = load_proof(c.file);
            EqSystem sys = eq_system(p);
            Json j = eq_system_json(sys);
            j["version"] = kToolVersion;
            std::string text;
            for (const auto& eq : sys.equations) text += eq.str() + "\n";
            emit(out, c.format, j, text);
            return 0;
        }
        if (cmd_solve->parsed()) {
            ProofPtr p = load_proof(c.file);
            Solution sol = solve(p);
            auto bad = check_solution(eq_system(p), sol.hom);
            Json j = solution_json(sol);
            j["version"] = kToolVersion;
            j["valid"] = !bad.has_value();
            if (bad) j["failing"] = bad->str();
            std::string text = sol.hom.str() + "\n" +
                               (bad ? "INVALID: " + bad->str() + "\n" : "valid\n");
            emit(out, c.format, j, text);
            return bad ? 1 : 0;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace goi
