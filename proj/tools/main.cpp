#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "sl3qt/verify.hpp"

using namespace sl3qt;

namespace {

enum Exit { ok = 0, failure = 1, input_error = 2 };

StatePair parse_state(const std::string& s) {
    int a = 0, b = 0;
    char comma = 0;
    std::istringstream in(s);
    if (!(in >> a >> comma >> b) || comma != ',' || a < 1 || a > 3 || b < 1 || b > 3 || !in.eof())
        throw InputError("bad state '" + s + "', expected e1,e2 with entries in {1,2,3}");
    return {a, b};
}

std::vector<StatePair> states_for(const std::string& flag) {
    if (flag.empty()) return all_states();
    return {parse_state(flag)};
}

std::string state_tag(StatePair st) { return "(" + std::to_string(st.eps1) + "," + std::to_string(st.eps2) + ")"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact SL3 quantum trace and quantum cluster mutation computations"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string render_flag = "canonical";
    app.add_option("--render", render_flag, "canonical or latex-like")
        ->check(CLI::IsMember({"canonical", "latex-like"}));

    std::string seed_file, surface_file, web_file, arc, state, relation;
    std::string data_dir = SL3QT_DATA_DIR, golden_dir = SL3QT_GOLDEN_DIR;
    std::vector<std::string> nodes;
    bool omega_one = false, regenerate = false, check = false;
    int samples = 100;

    auto* mutate = app.add_subcommand("mutate", "mutate a seed at the given nodes in turn");
    mutate->add_option("seed", seed_file)->required();
    mutate->add_option("nodes", nodes)->required();

    auto* trace = app.add_subcommand("trace", "quantum trace values of webs");
    trace->add_option("surface", surface_file)->required();
    trace->add_option("webs", web_file)->required();
    trace->add_option("--state", state, "e1,e2 (default: all nine)");
    trace->add_flag("--omega-one", omega_one, "print the classical value at omega = 1");

    auto* flip = app.add_subcommand("flip-check", "compare trace values across a diagonal flip");
    flip->add_option("surface", surface_file)->required();
    flip->add_option("arc", arc)->required();
    flip->add_option("webs", web_file)->required();
    flip->add_option("--state", state, "e1,e2 (default: all nine)");

    auto* cons = app.add_subcommand("consistency", "check a mutation relation on a seed");
    cons->add_option("seed", seed_file)->required();
    cons->add_option("relation", relation, "involution:v | square:v,w | pentagon:v,w | (v w ...)")->required();

    auto* all = app.add_subcommand("verify-all", "run every verification suite");
    all->add_option("--data", data_dir);
    all->add_option("--golden", golden_dir);
    all->add_option("--samples", samples, "random samples per randomized check")->check(CLI::PositiveNumber);

    auto* tables = app.add_subcommand("tables", "Step 1' exponent tables and trace renderings of the six webs");
    tables->add_option("--data", data_dir);
    tables->add_option("--golden", golden_dir);
    auto* chk = tables->add_flag("--check", check, "compare with the golden files");
    tables->add_flag("--regenerate", regenerate, "overwrite the golden files")->excludes(chk);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }
    RenderStyle style = render_flag == "canonical" ? RenderStyle::canonical : RenderStyle::latex_like;

    try {
        if (*mutate) {
            Seed s = Seed::parse(read_file(seed_file));
            for (auto& v : nodes) s = mutate_quiver(s, v);
            std::cout << s.render();
            return ok;
        }
        if (*trace) {
            Triangulation T = Triangulation::parse(read_file(surface_file));
            Seed s = build_quiver(T);
            for (auto& w : parse_webs(T, read_file(web_file))) {
                if (w.closed) {
                    LaurentPoly v = loop_trace(T, s, w);
                    std::cout << w.id << ": " << render(s, omega_one ? classicalize(v) : v, style) << "\n";
                    continue;
                }
                for (auto st : states_for(state)) {
                    LaurentPoly v = edge_trace(T, s, w, st);
                    std::cout << w.id << " " << state_tag(st) << ": "
                              << render(s, omega_one ? classicalize(v) : v, style) << "\n";
                }
            }
            return ok;
        }
        if (*flip) {
            Triangulation T = Triangulation::parse(read_file(surface_file));
            Quadrilateral Q = make_quadrilateral(T, parse_webs(T, read_file(web_file)), arc);
            bool pass = true;
            for (std::size_t c = 0; c < Q.webs.size(); ++c) {
                if (Q.webs[c].closed) throw InputError("flip-check takes webs with endpoints");
                TableData t = step1_table(Q, Q.webs[c]);
                std::cout << "step 1' exponents for " << Q.webs[c].id << "\n" << render_table(int(c + 1), Q.s, t);
                for (auto st : states_for(state)) {
                    auto lau = is_laurent(step1_image(Q, edge_trace(Q.T, Q.s, Q.webs[c], st)));
                    FlipCheck fc = flip_check(Q, c, st, style);
                    std::cout << fc.report << "  step 1' image Laurent: " << (lau ? "yes" : "no") << "\n";
                    pass = pass && fc.ok && lau;
                }
            }
            std::cout << (pass ? "ALL PASS" : "FAILURES") << "\n";
            return pass ? ok : failure;
        }
        if (*cons) {
            Seed s = Seed::parse(read_file(seed_file));
            RelationReport r = check_relation(s, relation);
            std::cout << "relation " << relation << ": seeds " << (r.seeds_ok ? "ok" : "differ") << ", images "
                      << (r.images_ok ? "ok" : "differ") << "\n";
            for (auto& m : r.mismatches) std::cout << "  " << m << "\n";
            std::cout << (r.ok() ? "PASS" : "FAIL") << "\n";
            return r.ok() ? ok : failure;
        }
        if (*all) {
            SuiteOptions opt{data_dir, golden_dir, samples};
            bool pass = true;
            for (auto& r : verify_suite(opt)) {
                std::cout << (r.pass ? "PASS" : "FAIL") << " [" << r.criterion << "] " << r.name;
                if (!r.detail.empty()) std::cout << " -- " << r.detail;
                std::cout << "\n";
                pass = pass && r.pass;
            }
            return pass ? ok : failure;
        }
        if (*tables) {
            Quadrilateral Q = load_quadrilateral(data_dir);
            std::vector<std::pair<std::string, std::string>> files;
            for (int c = 1; c <= int(Q.webs.size()); ++c)
                files.push_back({"table_case" + std::to_string(c) + ".txt",
                                 render_table(c, Q.s, step1_table(Q, Q.webs[c - 1]))});
            files.push_back({"traces.txt", render_all_traces(Q)});
            if (regenerate) {
                for (auto& [name, text] : files) {
                    std::ofstream(std::filesystem::path(golden_dir) / name) << text;
                    std::cout << "wrote " << name << "\n";
                }
                return ok;
            }
            if (!check) {
                for (auto& [name, text] : files) std::cout << "== " << name << "\n" << text;
                return ok;
            }
            bool pass = true;
            for (auto& [name, text] : files) {
                std::string want = read_file((std::filesystem::path(golden_dir) / name).string());
                bool same = want == text;
                std::cout << (same ? "PASS " : "FAIL ") << name << "\n";
                if (!same) std::cout << "--- golden\n" << want << "+++ computed\n" << text;
                pass = pass && same;
            }
            return pass ? ok : failure;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failure;
    }
    return ok;
}
