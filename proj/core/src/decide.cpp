#include "leadsto/decide.hpp"

#include "leadsto/codes.hpp"
#include "leadsto/tait.hpp"

#include <map>
#include <stdexcept>

namespace leadsto {

std::string answer_name(Answer a) {
    switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::UndecidedBudget: return "undecided-budget";
    }
    return "?";
}

std::string no_reason_name(NoReason r) {
    return r == NoReason::TorusMinimalProjection ? "torus-minimal-projection"
                                                 : "exhausted-assignments";
}

namespace {

// Advances a through the 4^n assignments in lexicographic order (crossing 0
// most significant); returns false after the last one.
bool next_assignment(std::vector<CrossingState>& a) {
    int i = static_cast<int>(a.size()) - 1;
    while (i >= 0 && a[i] == CrossingState::SmoothB) {
        a[i] = CrossingState::Keep;
        --i;
    }
    if (i < 0) return false;
    a[i] = static_cast<CrossingState>(static_cast<int>(a[i]) + 1);
    return true;
}

std::optional<std::vector<CrossingState>>
oracle_search(const Diagram& d, const InvariantSignature& want, BracketCache& cache) {
    std::vector<CrossingState> a(d.crossing_count(), CrossingState::Keep);
    do {
        Diagram r = apply_assignment(d, a);
        // cheap rejection on component count before any bracket work
        if (component_count(r) == want.components &&
            signature_of(r, r.crossing_count(), &cache) == want)
            return a;
    } while (next_assignment(a));
    return std::nullopt;
}

InvariantSignature target_signature(const DecisionTarget& t) {
    if (t.family) return reference_signature(*t.family);
    const Diagram& e = *t.explicit_diagram;
    return signature_of(e, e.crossing_count());
}

PartDecision oracle_part(const Diagram& d, const InvariantSignature& want, int budget) {
    PartDecision part;
    part.diagram = d;
    if (d.crossing_count() > budget) {
        part.answer = Answer::UndecidedBudget;
        return part;
    }
    part.via_oracle = true;
    BracketCache cache;
    if (auto hit = oracle_search(d, want, cache)) {
        part.answer = Answer::Yes;
        part.assignment_cert = AssignmentCertificate{std::move(*hit)};
    } else {
        part.answer = Answer::No;
        part.no_reason = NoReason::ExhaustedAssignments;
    }
    return part;
}

Decision single_part_decision(PartDecision part, DecisionTarget target) {
    Decision dec;
    dec.target = std::move(target);
    dec.answer = part.answer;
    dec.yes_part = part.answer == Answer::Yes ? 0 : -1;
    dec.parts.push_back(std::move(part));
    return dec;
}

void require_valid(const Diagram& d, const char* who) {
    if (validate_diagram(d) != DiagramDefect::None)
        throw std::invalid_argument(std::string(who) + ": invalid diagram");
}

std::vector<Diagram> parts_of(const Diagram& d) {
    if (d.crossing_count() == 0) return {d};
    return strong_decomposition(d);
}

} // namespace

Decision oracle_decide(const Diagram& d, const FamilyTarget& target, int budget) {
    require_valid(d, "oracle_decide");
    if (d.crossing_count() > budget) throw BudgetExceeded(d.crossing_count(), budget);
    DecisionTarget t;
    t.family = target;
    return single_part_decision(oracle_part(d, reference_signature(target), budget),
                                std::move(t));
}

Decision oracle_decide(const Diagram& d, const Diagram& target, int budget) {
    require_valid(d, "oracle_decide");
    require_valid(target, "oracle_decide target");
    if (d.crossing_count() > budget) throw BudgetExceeded(d.crossing_count(), budget);
    DecisionTarget t;
    t.explicit_diagram = target;
    return single_part_decision(
        oracle_part(d, signature_of(target, target.crossing_count()), budget),
        std::move(t));
}

std::vector<CensusEntry> oracle_census(const Diagram& d, int budget) {
    require_valid(d, "oracle_census");
    if (d.crossing_count() > budget) throw BudgetExceeded(d.crossing_count(), budget);
    BracketCache cache;
    std::map<InvariantSignature, CensusEntry> seen;
    std::vector<CrossingState> a(d.crossing_count(), CrossingState::Keep);
    do {
        Diagram r = apply_assignment(d, a);
        InvariantSignature sig = signature_of(r, r.crossing_count(), &cache);
        auto [it, fresh] = seen.try_emplace(sig);
        if (fresh) {
            it->second.signature = sig;
            it->second.least = a; // lexicographic enumeration: first hit is least
        }
        ++it->second.count;
    } while (next_assignment(a));
    std::vector<CensusEntry> out;
    out.reserve(seen.size());
    for (auto& [sig, entry] : seen) out.push_back(std::move(entry));
    return out;
}

std::string classify_signature(const InvariantSignature& sig, int max_crossings) {
    static std::map<int, InvariantSignature> unlinks; // by component count
    auto unlink_sig = [&](int k) -> const InvariantSignature& {
        auto it = unlinks.find(k);
        if (it == unlinks.end()) {
            Diagram u;
            u.free_loops = k;
            it = unlinks.emplace(k, signature_of(u, 0)).first;
        }
        return it->second;
    };
    if (sig == unlink_sig(sig.components))
        return sig.components == 1 ? "unknot"
                                   : "unlink-" + std::to_string(sig.components);
    for (int m = 2; m <= max_crossings; ++m)
        if (sig == reference_signature({Family::Torus2, m}))
            return target_name(FamilyTarget{Family::Torus2, m});
    for (int m = 3; m <= max_crossings; ++m)
        if (sig == reference_signature({Family::Twist, m}))
            return target_name(FamilyTarget{Family::Twist, m});
    return "";
}

namespace {

PartDecision torus_part(const Diagram& d, int m, const InvariantSignature& want,
                        int budget) {
    if (d.crossing_count() >= 1) {
        TaitGraphPair t = tait_graphs(projection(d));
        struct Search {
            const PlaneMultigraph* g;
            const char* color;
            bool bond;
        };
        const Search searches[] = {{&t.gray, "gray", false},
                                   {&t.white, "white", false},
                                   {&t.gray, "gray", true},
                                   {&t.white, "white", true}};
        for (const Search& s : searches) {
            auto w = s.bond ? find_bond_minor(*s.g, m) : find_cycle_minor(*s.g, m);
            if (w) {
                PartDecision part;
                part.diagram = d;
                part.answer = Answer::Yes;
                part.minor_cert = MinorCertificate{s.color, *s.g, std::move(*w)};
                return part;
            }
        }
    }
    return oracle_part(d, want, budget);
}

PartDecision twist_part(const Diagram& d, int m, const InvariantSignature& want,
                        int budget) {
    if (d.crossing_count() >= 2) {
        Projection p = projection(d);
        if (is_torus_minimal_projection(p)) {
            PartDecision part;
            part.diagram = d;
            part.answer = Answer::No;
            part.no_reason = NoReason::TorusMinimalProjection;
            return part;
        }
        TaitGraphPair t = tait_graphs(p);
        // A C+_{m-1} minor of the white graph is equally a B+_{m-1} minor of
        // the gray graph (the two are plane duals), so these two searches
        // cover both targets in both graphs.
        const std::pair<const PlaneMultigraph*, const char*> searches[] = {
            {&t.gray, "gray"}, {&t.white, "white"}};
        for (const auto& [g, color] : searches) {
            if (auto w = find_theta_minor(*g, m - 2)) {
                PartDecision part;
                part.diagram = d;
                part.answer = Answer::Yes;
                part.minor_cert = MinorCertificate{color, *g, std::move(*w)};
                return part;
            }
        }
    }
    return oracle_part(d, want, budget);
}

} // namespace

Decision decide_torus(const Diagram& d, int m, int budget) {
    if (m < 3) throw std::invalid_argument("decide_torus: need m >= 3");
    require_valid(d, "decide_torus");
    const FamilyTarget target{Family::Torus2, m};
    const InvariantSignature& want = reference_signature(target);
    DecisionTarget dt;
    dt.family = target;
    std::vector<Decision> per;
    for (const Diagram& part : parts_of(d))
        per.push_back(single_part_decision(torus_part(part, m, want, budget), dt));
    return combine_parts(per);
}

Decision decide_twist(const Diagram& d, int m, int budget) {
    if (m == 3) {
        // The 3-crossing twist knot is the torus knot T(2,3); the torus
        // engine decides it (the torus-minimal-projection exclusion below
        // would be wrong for it).
        Decision dec = decide_torus(d, 3, budget);
        dec.target.family = FamilyTarget{Family::Twist, 3};
        dec.note = "twist(3) is the torus knot torus2(3); decided by the torus engine";
        return dec;
    }
    if (m < 4) throw std::invalid_argument("decide_twist: need m >= 3");
    require_valid(d, "decide_twist");
    const FamilyTarget target{Family::Twist, m};
    const InvariantSignature& want = reference_signature(target);
    DecisionTarget dt;
    dt.family = target;
    std::vector<Decision> per;
    for (const Diagram& part : parts_of(d))
        per.push_back(single_part_decision(twist_part(part, m, want, budget), dt));
    return combine_parts(per);
}

Decision combine_parts(const std::vector<Decision>& per_part) {
    if (per_part.empty())
        throw std::invalid_argument("combine_parts: no decisions");
    Decision out;
    out.target = per_part.front().target;
    for (const Decision& dec : per_part) {
        for (const PartDecision& p : dec.parts) out.parts.push_back(p);
        if (!dec.note.empty() && out.note.empty()) out.note = dec.note;
    }
    bool any_undecided = false;
    for (std::size_t i = 0; i < out.parts.size(); ++i) {
        switch (out.parts[i].answer) {
        case Answer::Yes:
            if (out.yes_part == -1) out.yes_part = static_cast<int>(i);
            break;
        case Answer::UndecidedBudget: any_undecided = true; break;
        case Answer::No: break;
        }
    }
    out.answer = out.yes_part >= 0 ? Answer::Yes
             : any_undecided       ? Answer::UndecidedBudget
                                   : Answer::No;
    return out;
}

namespace {

nlohmann::json certificate_json(const PartDecision& p) {
    if (p.minor_cert) {
        const MinorCertificate& mc = *p.minor_cert;
        nlohmann::json j;
        j["kind"] = "minor-witness";
        j["tait"] = mc.tait_color;
        j["target"] = target_name(mc.witness.target, mc.witness.m);
        j["branch_sets"] = mc.witness.branch_sets;
        j["edge_map"] = mc.witness.edge_map;
        return j;
    }
    if (p.assignment_cert) {
        nlohmann::json states = nlohmann::json::array();
        for (CrossingState s : p.assignment_cert->states)
            states.push_back(crossing_state_name(s));
        return {{"kind", "assignment"}, {"states", states}};
    }
    if (p.no_reason)
        return {{"kind", "structural-no"}, {"reason", no_reason_name(*p.no_reason)}};
    return nullptr;
}

} // namespace

nlohmann::json decision_to_json(const Decision& dec) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["answer"] = answer_name(dec.answer);
    nlohmann::json target;
    if (dec.target.family) {
        target["family"] = family_name(dec.target.family->family);
        target["m"] = dec.target.family->m;
    } else {
        target["pd"] = serialize_pd(*dec.target.explicit_diagram);
    }
    j["target"] = target;
    nlohmann::json parts = nlohmann::json::array();
    for (const PartDecision& p : dec.parts) {
        nlohmann::json pj;
        pj["crossings"] = p.diagram.crossing_count();
        pj["pd"] = serialize_pd(p.diagram);
        pj["answer"] = answer_name(p.answer);
        pj["certificate"] = certificate_json(p);
        parts.push_back(std::move(pj));
    }
    j["parts"] = parts;
    if (dec.yes_part >= 0) j["yes_part"] = dec.yes_part;
    if (!dec.note.empty()) j["note"] = dec.note;
    return j;
}

namespace {

bool graphs_equal(const PlaneMultigraph& a, const PlaneMultigraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    for (int e = 0; e < a.edge_count(); ++e)
        if (a.ends(e) != b.ends(e)) return false;
    for (int v = 0; v < a.vertex_count(); ++v)
        if (a.rotation(v) != b.rotation(v)) return false;
    return true;
}

} // namespace

bool verify_decision(const Decision& dec, std::string* error) {
    auto fail = [&](const std::string& why) {
        if (error) *error = why;
        return false;
    };
    int first_yes = -1;
    bool any_undecided = false;
    for (std::size_t i = 0; i < dec.parts.size(); ++i) {
        const PartDecision& p = dec.parts[i];
        const std::string where = "part " + std::to_string(i) + ": ";
        if (p.answer == Answer::UndecidedBudget) any_undecided = true;
        if (p.answer != Answer::Yes) {
            if (p.answer == Answer::No && !p.no_reason && !p.via_oracle)
                return fail(where + "no-answer without a reason");
            continue;
        }
        if (first_yes == -1) first_yes = static_cast<int>(i);
        if (p.minor_cert) {
            const MinorCertificate& mc = *p.minor_cert;
            if (mc.tait_color != "gray" && mc.tait_color != "white")
                return fail(where + "unknown tait colour " + mc.tait_color);
            TaitGraphPair t = tait_graphs(projection(p.diagram));
            const PlaneMultigraph& g = mc.tait_color == "gray" ? t.gray : t.white;
            if (!graphs_equal(g, mc.tait_graph))
                return fail(where + "stored Tait graph differs from recomputed one");
            std::string err;
            if (!verify_minor_witness(g, mc.witness, &err))
                return fail(where + "minor witness rejected: " + err);
            if (dec.target.family) {
                const FamilyTarget& ft = *dec.target.family;
                bool ok;
                if (ft.family == Family::Torus2 || ft.m == 3)
                    ok = (mc.witness.target == MinorTarget::Cycle ||
                          mc.witness.target == MinorTarget::Bond) &&
                         mc.witness.m == ft.m;
                else
                    ok = (mc.witness.target == MinorTarget::CyclePlus ||
                          mc.witness.target == MinorTarget::BondPlus) &&
                         mc.witness.m == ft.m - 1;
                if (!ok)
                    return fail(where + "witness target " +
                                target_name(mc.witness.target, mc.witness.m) +
                                " does not match " + target_name(ft));
            }
        } else if (p.assignment_cert) {
            const auto& states = p.assignment_cert->states;
            if (static_cast<int>(states.size()) != p.diagram.crossing_count())
                return fail(where + "assignment length mismatch");
            Diagram r = apply_assignment(p.diagram, states);
            InvariantSignature got = signature_of(r, r.crossing_count());
            if (!(got == target_signature(dec.target)))
                return fail(where + "assignment does not reach the target");
        } else {
            return fail(where + "yes without certificate");
        }
    }
    const Answer expect = first_yes >= 0 ? Answer::Yes
                      : any_undecided    ? Answer::UndecidedBudget
                                         : Answer::No;
    if (dec.answer != expect)
        return fail("combined answer " + answer_name(dec.answer) +
                    " inconsistent with parts");
    if (dec.yes_part != first_yes)
        return fail("yes_part does not point at the first yes part");
    return true;
}

} // namespace leadsto
