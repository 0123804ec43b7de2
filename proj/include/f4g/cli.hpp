#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "certificate.hpp"
#include "enumerate.hpp"
#include "io.hpp"
#include "minor.hpp"
#include "named.hpp"
#include "obstructions.hpp"

namespace f4g {

struct CommandResult {
    int code = 0;
    std::string out;
    std::string err;
};

// Exit codes: 0 property holds or containment found, 1 property fails or
// nothing found, 2 bad input.
enum ExitCode { exit_holds = 0, exit_fails = 1, exit_input = 2 };

namespace detail {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline FramedFourGraph load_graph(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return to_graph(parse_diagram(text));
    } catch (const ParseError& e) {
        throw InputError(path + ":" + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline FramedFourGraph load_pattern(const std::string& name) {
    try {
        return named_graph(name);
    } catch (const std::invalid_argument&) {
    }
    std::ifstream probe(name);
    if (!probe) throw InputError("unknown pattern '" + name + "'");
    return load_graph(name);
}

inline std::string join(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
    return s;
}

inline std::string steps_text(const std::vector<MinorStep>& steps) {
    if (steps.empty()) return "none";
    std::string s;
    for (const auto& st : steps) {
        if (!s.empty()) s += "; ";
        if (const auto* c = std::get_if<SmoothingChoice>(&st))
            s += "smooth " + std::to_string(c->vertex) + " " + to_string(c->pairing);
        else
            s += "delete_component " + std::to_string(std::get<DeleteComponent>(st).index);
    }
    return s;
}

inline void print_components(std::ostream& os, const std::vector<ComponentVerdict>& comps, const char* first, const char* second) {
    for (const auto& cv : comps) {
        os << "component [" << join(cv.vertices) << "] transitions " << transitions_string(cv.circuit.transitions) << "\n";
        if (cv.split)
            os << "  " << first << ": " << join(to_host(cv.split->first, cv.vertices)) << "\n  " << second << ": "
               << join(to_host(cv.split->second, cv.vertices)) << "\n";
        if (cv.obstruction) {
            os << "  obstruction " << to_string(cv.obstruction->kind) << " chords " << join(to_host(cv.obstruction->chords, cv.vertices)) << "\n";
            if (cv.obstruction->minor) os << "  steps: " << steps_text(cv.obstruction->minor->steps) << "\n";
        }
    }
}

}  // namespace detail

// Runs one command line (without the program name).
inline CommandResult run_command(const std::vector<std::string>& args) {
    CommandResult result;
    std::ostringstream out, err;

    CLI::App app{"Framed 4-graphs: planarity and RP^2 checkerboard embeddability", "f4g"};
    app.require_subcommand(1);
    bool json = false, quiet = false;
    app.add_flag("--json", json, "Print a JSON certificate");
    app.add_flag("--quiet", quiet, "Print nothing; report through the exit code");

    std::string property, file, pattern;
    bool multi = false, verify = false;
    int chords = 0;

    auto* check = app.add_subcommand("check", "Decide planarity or RP^2 checkerboard embeddability");
    check->add_option("property", property, "planar or rp2")->required()->check(CLI::IsMember({"planar", "rp2"}));
    check->add_option("file", file, "Diagram file")->required();
    check->add_flag("--multi", multi, "Allow at most one non-planar component in total");

    auto* circuit = app.add_subcommand("circuit", "Print a rotating circuit and its chord diagram per component");
    circuit->add_option("file", file, "Diagram file")->required();

    auto* minor = app.add_subcommand("minor", "Search for a minor");
    minor->add_option("file", file, "Diagram file")->required();
    minor->add_option("--pattern", pattern, "gamma, delta, gamma1, odd_gon(k) or a diagram file")->required();

    auto* sminor = app.add_subcommand("sminor", "Search for an s-minor");
    sminor->add_option("file", file, "Diagram file")->required();
    sminor->add_option("--pattern", pattern, "gamma, delta, gamma1, odd_gon(k) or a diagram file")->required();

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate framed chord diagrams");
    enumerate->add_option("--chords", chords, "Largest number of chords")->required()->check(CLI::Range(0, 7));
    enumerate->add_flag("--verify", verify, "Cross-check the deciders against the minor oracles");

    for (auto* sub : {check, circuit, minor, sminor, enumerate}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        result.code = app.exit(e, out, err) == 0 ? exit_holds : exit_input;
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    auto emit = [&](const Json& doc, const std::string& text) {
        if (quiet) return;
        if (json)
            out << doc.dump(2) << "\n";
        else
            out << text;
    };

    try {
        if (check->parsed()) {
            const FramedFourGraph g = detail::load_graph(file);
            std::ostringstream text;
            if (property == "planar") {
                const PlanarityVerdict v = is_planar(g);
                text << "planar: " << (v.planar ? "yes" : "no") << "\n";
                detail::print_components(text, v.components, "side 1", "side 2");
                emit(planarity_certificate(g, v), text.str());
                result.code = v.planar ? exit_holds : exit_fails;
            } else {
                const Rp2Verdict v = rp2_checkerboard_embeddable(g, {true, multi});
                text << "rp2: " << (v.embeddable ? "yes" : "no") << "\n";
                if (v.multiple_nonplanar) text << "more than one component is non-planar\n";
                detail::print_components(text, v.components, "d1", "d2");
                emit(rp2_certificate(g, v), text.str());
                result.code = v.embeddable ? exit_holds : exit_fails;
            }
        } else if (circuit->parsed()) {
            const FramedFourGraph g = detail::load_graph(file);
            const Json doc = circuit_document(g);
            std::ostringstream text;
            for (const auto& c : doc["witness"]["components"]) {
                text << "component [" << detail::join(c["vertices"].get<std::vector<int>>()) << "] transitions "
                     << c["transitions"].get<std::string>() << "\n  passages:";
                for (const auto& p : c["passages"]) text << " " << p[0] << ":" << p[1] << ">" << p[2];
                text << "\n  word: " << detail::join(c["diagram"]["word"].get<std::vector<int>>())
                     << "\n  framings: " << detail::join(c["diagram"]["framings"].get<std::vector<int>>()) << "\n";
            }
            if (g.free_circles()) text << "free circles: " << g.free_circles() << "\n";
            emit(doc, text.str());
        } else if (minor->parsed()) {
            const FramedFourGraph g = detail::load_graph(file);
            const FramedFourGraph p = detail::load_pattern(pattern);
            const auto w = has_minor(g, p);
            std::string text = w ? "minor: found\nsteps: " + detail::steps_text(w->steps) + "\n" : "minor: not found\n";
            emit(minor_certificate(g, p, w), text);
            result.code = w ? exit_holds : exit_fails;
        } else if (sminor->parsed()) {
            const FramedFourGraph g = detail::load_graph(file);
            const FramedFourGraph p = detail::load_pattern(pattern);
            const auto w = has_s_minor(g, p);
            std::string text = "s-minor: not found\n";
            if (w) {
                std::vector<MinorStep> sm(w->smoothings.begin(), w->smoothings.end());
                text = "s-minor: found\nsmoothings: " + detail::steps_text(sm) + "\nkept edges: " + detail::join(w->kept_edges) +
                       "\ndeleted components: " + detail::join(w->deleted_components) + "\n";
            }
            emit(s_minor_certificate(g, p, w), text);
            result.code = w ? exit_holds : exit_fails;
        } else if (enumerate->parsed()) {
            std::ostringstream text;
            Json per = Json::array();
            for (int n = 0; n <= chords; ++n) {
                const DiagramCorpus c = enumerate_diagrams(n, n);
                text << n << " chords: " << c.labeled << " labeled, " << c.diagrams.size() << " distinct\n";
                per.push_back({{"chords", n}, {"labeled", c.labeled}, {"distinct", c.diagrams.size()}});
            }
            Json doc{{"question", "enumerate"}, {"max_chords", chords}, {"counts", per}};
            if (verify) {
                const VerifyReport r = verify_deciders(chords);
                text << "checked " << r.distinct << " diagrams (" << r.labeled << " labeled): " << r.disagreements() << " disagreements\n";
                if (r.first_disagreement) text << "first disagreement: " << *r.first_disagreement << "\n";
                doc["verdict"] = r.disagreements() == 0;
                doc["disagreements"] = r.disagreements();
                doc["planarity_disagreements"] = r.planarity_disagreements;
                doc["rp2_disagreements"] = r.rp2_disagreements;
                doc["first_disagreement"] = r.first_disagreement ? Json(*r.first_disagreement) : Json(nullptr);
                result.code = r.disagreements() == 0 ? exit_holds : exit_fails;
            }
            emit(doc, text.str());
        }
    } catch (const detail::InputError& e) {
        err << "f4g: " << e.what() << "\n";
        result.code = exit_input;
    } catch (const std::invalid_argument& e) {
        err << "f4g: " << e.what() << "\n";
        result.code = exit_input;
    } catch (const std::length_error& e) {
        err << "f4g: " << e.what() << "\n";
        result.code = exit_input;
    }
    result.out = out.str();
    result.err = err.str();
    return result;
}

}  // namespace f4g
