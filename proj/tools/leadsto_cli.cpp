// leadsto: analyze link diagrams and decide reachability of T(2,m) torus
// links and twist knots under crossing exchanges and smoothings.
//
// Exit codes:
//   0  success (validate: valid input; decide/oracle: answer yes; others: ok)
//   1  decide/oracle answered no
//   2  parse error (syntax, arc misuse)
//   3  rejected diagram (non-planar, unrealizable, disconnected/split)
//   4  undecided: crossing budget exceeded
//   64 usage error (bad flags, out-of-range parameters, unreadable input)
//   70 internal error

#include "leadsto/codes.hpp"
#include "leadsto/decide.hpp"
#include "leadsto/diagram.hpp"
#include "leadsto/invariants.hpp"
#include "leadsto/minors.hpp"
#include "leadsto/planegraph.hpp"
#include "leadsto/tait.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using nlohmann::json;
using namespace leadsto;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitParse = 2;
constexpr int kExitRejected = 3;
constexpr int kExitUndecided = 4;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct RunConfig {
    std::string input = "-"; // path, or "-" for stdin
    std::string family;      // "torus" | "twist"
    int m = 0;
    int budget = 10;
    std::string format; // "json" | "dot" | "text" (per-command default)
    bool verify = false;
    std::string target_pd;
};

struct CliError {
    int code;
    std::string message;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kExitUsage, "cannot read input file: " + path};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// A signed Gauss code starts with an O/U passage token; a PD code starts
// with X, PD[, or a bare O unknot token.
bool looks_like_gauss(const std::string& text) {
    bool comment = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (comment) {
            if (c == '\n') comment = false;
            continue;
        }
        if (c == '#') {
            comment = true;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == 'U') return true;
        if (c == 'O')
            return i + 1 < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i + 1]));
        return false;
    }
    return false;
}

int parse_error_exit(const ParseError& e) {
    switch (e.code()) {
    case ParseError::Code::Syntax:
    case ParseError::Code::ArcUse: return kExitParse;
    case ParseError::Code::NonPlanar:
    case ParseError::Code::Disconnected:
    case ParseError::Code::Unrealizable: return kExitRejected;
    }
    return kExitParse;
}

Diagram load_diagram(const RunConfig& cfg) {
    const std::string text = read_input(cfg.input);
    return looks_like_gauss(text) ? parse_gauss(text) : parse_pd(text);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- validate --------------------------------------------------------------

int cmd_validate(const RunConfig& cfg) {
    Diagram d = load_diagram(cfg);
    if (cfg.format == "json") {
        json j;
        j["arcs"] = d.arc_count;
        j["components"] = component_count(d);
        j["crossings"] = d.crossing_count();
        j["free_loops"] = d.free_loops;
        j["pd"] = serialize_pd(d);
        j["valid"] = true;
        j["writhe"] = self_writhe(d);
        emit(j);
    } else {
        std::cout << "valid: yes\n"
                  << "crossings: " << d.crossing_count() << "\n"
                  << "arcs: " << d.arc_count << "\n"
                  << "components: " << component_count(d) << "\n"
                  << "free-loops: " << d.free_loops << "\n"
                  << "self-writhe: " << self_writhe(d) << "\n"
                  << "pd: " << serialize_pd(d) << "\n";
    }
    return 0;
}

// ---- tait ------------------------------------------------------------------

json graph_report(const PlaneMultigraph& g) {
    json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    const std::string shape = recognize_target_shape(g);
    j["shape"] = shape.empty() ? json(nullptr) : json(shape);
    int nondegenerate = 0;
    for (const Block& b : blocks(g))
        if (!b.degenerate()) ++nondegenerate;
    j["blocks"] = static_cast<int>(blocks(g).size());
    j["nondegenerate_blocks"] = nondegenerate;
    j["two_connected"] = is_biconnected(g);
    return j;
}

int cmd_tait(const RunConfig& cfg) {
    Diagram d = load_diagram(cfg);
    if (d.crossing_count() == 0)
        throw CliError{kExitUsage, "tait: the diagram has no crossings"};
    Projection p = projection(d);
    TaitGraphPair t = tait_graphs(p);
    StrengthWitness w;
    const bool strong = is_strong(p, &w);
    std::optional<int> tm;
    if (d.crossing_count() >= 2) tm = is_torus_minimal_projection(p);

    if (cfg.format == "dot") {
        std::cout << to_dot(t.white, "white") << to_dot(t.gray, "gray");
        return 0;
    }
    if (cfg.format == "json") {
        json j;
        j["crossings"] = d.crossing_count();
        j["white"] = graph_report(t.white);
        j["gray"] = graph_report(t.gray);
        j["strong"] = strong;
        if (!strong)
            j["strength_witness"] = {{"arcs", {w.arc1, w.arc2}},
                                     {"faces", {w.face1, w.face2}}};
        j["torus_minimal"] = tm ? json(*tm) : json(nullptr);
        emit(j);
        return 0;
    }
    auto line = [](const char* name, const json& g) {
        std::cout << name << ": vertices=" << g["vertices"] << " edges=" << g["edges"]
                  << " shape=" << (g["shape"].is_null() ? "-" : g["shape"].get<std::string>())
                  << " two-connected=" << (g["two_connected"].get<bool>() ? "yes" : "no")
                  << "\n";
    };
    std::cout << "crossings: " << d.crossing_count() << "\n";
    line("white", graph_report(t.white));
    line("gray", graph_report(t.gray));
    std::cout << "strong: " << (strong ? "yes" : "no") << "\n";
    if (!strong)
        std::cout << "strength-witness: arcs " << w.arc1 << " " << w.arc2
                  << " faces " << w.face1 << " " << w.face2 << "\n";
    std::cout << "torus-minimal: ";
    if (tm)
        std::cout << *tm << "\n";
    else
        std::cout << "no\n";
    return 0;
}

// ---- decompose -------------------------------------------------------------

int cmd_decompose(const RunConfig& cfg) {
    Diagram d = load_diagram(cfg);
    if (d.crossing_count() == 0)
        throw CliError{kExitUsage, "decompose: the diagram has no crossings"};
    std::vector<Diagram> parts = strong_decomposition(d);
    if (cfg.format == "json") {
        json j;
        j["crossings"] = d.crossing_count();
        j["strong"] = parts.size() == 1;
        json pj = json::array();
        for (const Diagram& p : parts)
            pj.push_back({{"crossings", p.crossing_count()}, {"pd", serialize_pd(p)}});
        j["parts"] = pj;
        emit(j);
    } else {
        std::cout << "parts: " << parts.size() << "\n";
        for (std::size_t i = 0; i < parts.size(); ++i)
            std::cout << "part " << i << ": crossings=" << parts[i].crossing_count()
                      << " pd=" << serialize_pd(parts[i]) << "\n";
    }
    return 0;
}

// ---- decide / oracle -------------------------------------------------------

FamilyTarget family_target(const RunConfig& cfg) {
    if (cfg.family != "torus" && cfg.family != "twist")
        throw CliError{kExitUsage, "--family must be torus or twist"};
    return {cfg.family == "torus" ? Family::Torus2 : Family::Twist, cfg.m};
}

int decision_exit(const Decision& dec) {
    switch (dec.answer) {
    case Answer::Yes: return kExitYes;
    case Answer::No: return kExitNo;
    case Answer::UndecidedBudget: return kExitUndecided;
    }
    return kExitInternal;
}

int emit_decision(const Decision& dec, const RunConfig& cfg) {
    if (cfg.verify) {
        std::string err;
        if (!verify_decision(dec, &err))
            throw CliError{kExitInternal, "certificate re-verification failed: " + err};
    }
    if (cfg.format == "dot") {
        if (dec.yes_part < 0 || !dec.parts[dec.yes_part].minor_cert)
            throw CliError{kExitUsage, "no minor witness to render as DOT"};
        const MinorCertificate& mc = *dec.parts[dec.yes_part].minor_cert;
        std::cout << witness_to_dot(mc.tait_graph, mc.witness,
                                    "witness_" + mc.tait_color);
        return decision_exit(dec);
    }
    if (cfg.format == "text") {
        std::cout << "answer: " << answer_name(dec.answer) << "\n";
        for (std::size_t i = 0; i < dec.parts.size(); ++i) {
            const PartDecision& p = dec.parts[i];
            std::cout << "part " << i << ": crossings=" << p.diagram.crossing_count()
                      << " answer=" << answer_name(p.answer);
            if (p.minor_cert)
                std::cout << " certificate=minor-witness:"
                          << target_name(p.minor_cert->witness.target,
                                         p.minor_cert->witness.m)
                          << ":" << p.minor_cert->tait_color;
            else if (p.assignment_cert) {
                std::cout << " certificate=assignment:";
                const auto& st = p.assignment_cert->states;
                for (std::size_t k = 0; k < st.size(); ++k)
                    std::cout << (k ? "," : "") << crossing_state_name(st[k]);
            } else if (p.no_reason)
                std::cout << " certificate=structural-no:" << no_reason_name(*p.no_reason);
            std::cout << "\n";
        }
        return decision_exit(dec);
    }
    emit(decision_to_json(dec));
    return decision_exit(dec);
}

int cmd_decide(const RunConfig& cfg) {
    Diagram d = load_diagram(cfg);
    const FamilyTarget t = family_target(cfg);
    Decision dec = t.family == Family::Torus2 ? decide_torus(d, t.m, cfg.budget)
                                              : decide_twist(d, t.m, cfg.budget);
    return emit_decision(dec, cfg);
}

int cmd_oracle(const RunConfig& cfg) {
    Diagram d = load_diagram(cfg);
    const bool has_family = !cfg.family.empty() || cfg.m != 0;
    const bool has_target_pd = !cfg.target_pd.empty();
    if (has_family && has_target_pd)
        throw CliError{kExitUsage, "give either --family/--m or --target-pd, not both"};
    try {
        if (has_target_pd)
            return emit_decision(oracle_decide(d, parse_pd(cfg.target_pd), cfg.budget), cfg);
        if (has_family)
            return emit_decision(oracle_decide(d, family_target(cfg), cfg.budget), cfg);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUndecided;
    }

    // Census mode: every reachable signature with counts.
    try {
        std::vector<CensusEntry> census = oracle_census(d, cfg.budget);
        const int n = d.crossing_count();
        if (cfg.format == "text") {
            std::cout << "crossings: " << n << "\n"
                      << "classes: " << census.size() << "\n";
            for (const CensusEntry& e : census) {
                const std::string label = classify_signature(e.signature, n);
                std::cout << (label.empty() ? "?" : label)
                          << ": components=" << e.signature.components
                          << " count=" << e.count << " least=";
                for (std::size_t k = 0; k < e.least.size(); ++k)
                    std::cout << (k ? "," : "") << crossing_state_name(e.least[k]);
                if (e.least.empty()) std::cout << "-";
                std::cout << " poly=" << e.signature.poly_low.to_string() << "\n";
            }
            return 0;
        }
        json j;
        j["crossings"] = n;
        long long total = 1;
        for (int i = 0; i < n; ++i) total *= 4;
        j["total_assignments"] = total;
        json cj = json::array();
        for (const CensusEntry& e : census) {
            json ej;
            const std::string label = classify_signature(e.signature, n);
            ej["classification"] = label.empty() ? json(nullptr) : json(label);
            ej["components"] = e.signature.components;
            ej["count"] = e.count;
            json least = json::array();
            for (CrossingState s : e.least) least.push_back(crossing_state_name(s));
            ej["least_assignment"] = least;
            ej["poly_low"] = e.signature.poly_low.to_string();
            ej["poly_high"] = e.signature.poly_high.to_string();
            cj.push_back(std::move(ej));
        }
        j["census"] = cj;
        emit(j);
        return 0;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUndecided;
    }
}

// ---- render ----------------------------------------------------------------

int cmd_render(const RunConfig& cfg) {
    Diagram d = load_diagram(cfg);
    Projection p = projection(d);
    std::vector<std::string> vlabels, elabels;
    for (int c = 0; c < d.crossing_count(); ++c)
        vlabels.push_back("x" + std::to_string(c));
    for (int a = 0; a < d.arc_count; ++a) elabels.push_back(std::to_string(a));
    std::cout << to_dot(p.graph, "projection", vlabels, elabels);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"link diagram analysis and reachability decisions"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("LEADSTO_BUDGET")) {
        try {
            cfg.budget = std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << "error: LEADSTO_BUDGET is not an integer: " << env << "\n";
            return kExitUsage;
        }
    }

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input, "PD or Gauss code file, - for stdin");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "dot", "text"}));
        sub->add_option("--budget", cfg.budget,
                        "max crossings for exhaustive enumeration");
        sub->add_flag("--verify", cfg.verify,
                      "re-check decision certificates before printing");
        return sub;
    };

    CLI::App* validate = add_common(
        app.add_subcommand("validate", "parse a diagram and report its shape"));
    CLI::App* tait = add_common(
        app.add_subcommand("tait", "checkerboard graphs, strength, block structure"));
    bool tait_dot = false;
    tait->add_flag("--dot", tait_dot, "emit DOT (same as --format dot)");
    CLI::App* decompose = add_common(
        app.add_subcommand("decompose", "split into strong parts"));
    CLI::App* decide = add_common(
        app.add_subcommand("decide", "structural reachability decision"));
    decide->add_option("--family", cfg.family, "target family: torus | twist")
        ->required();
    decide->add_option("--m", cfg.m, "target parameter m")->required();
    CLI::App* oracle = add_common(
        app.add_subcommand("oracle", "exhaustive assignment enumeration"));
    oracle->add_option("--family", cfg.family, "target family: torus | twist");
    oracle->add_option("--m", cfg.m, "target parameter m");
    oracle->add_option("--target-pd", cfg.target_pd, "explicit target as a PD code");
    CLI::App* render = add_common(
        app.add_subcommand("render", "DOT drawing of the underlying projection"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (tait_dot) cfg.format = "dot";
    if (cfg.format.empty()) {
        if (decide->parsed() || oracle->parsed())
            cfg.format = "json";
        else if (render->parsed())
            cfg.format = "dot";
        else
            cfg.format = "text";
    }
    if (cfg.budget < 0) {
        std::cerr << "error: budget must be nonnegative\n";
        return kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(cfg);
        if (tait->parsed()) return cmd_tait(cfg);
        if (decompose->parsed()) return cmd_decompose(cfg);
        if (decide->parsed()) return cmd_decide(cfg);
        if (oracle->parsed()) return cmd_oracle(cfg);
        if (render->parsed()) return cmd_render(cfg);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << " (byte " << e.offset() << ")\n";
        return parse_error_exit(e);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
