#pragma once

#include "leadsto/diagram.hpp"
#include "leadsto/invariants.hpp"
#include "leadsto/minors.hpp"
#include "leadsto/planegraph.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace leadsto {

// ---- decisions -------------------------------------------------------------

enum class Answer { Yes, No, UndecidedBudget };
std::string answer_name(Answer a); // "yes" / "no" / "undecided-budget"

// A minor-based yes certificate: the target graph was found as a minor of
// one Tait graph of the responsible part.  The searched graph is kept so the
// certificate can be re-verified without recomputing the embedding.
struct MinorCertificate {
    std::string tait_color; // "gray" or "white"
    PlaneMultigraph tait_graph;
    MinorWitness witness;
};

// An assignment-based yes certificate: the lexicographically least
// per-crossing state vector whose application yields a diagram of the
// target (Keep < Exchange < SmoothA < SmoothB, crossing 0 most significant).
struct AssignmentCertificate {
    std::vector<CrossingState> states;
};

enum class NoReason { TorusMinimalProjection, ExhaustedAssignments };
std::string no_reason_name(NoReason r);

// Outcome for one strong part.
struct PartDecision {
    Diagram diagram;
    Answer answer = Answer::No;
    std::optional<MinorCertificate> minor_cert;
    std::optional<AssignmentCertificate> assignment_cert;
    std::optional<NoReason> no_reason;
    bool via_oracle = false; // whether the exhaustive oracle produced this outcome
};

// What a decision was made against: a named family target or an explicit
// target diagram (exactly one is set).
struct DecisionTarget {
    std::optional<FamilyTarget> family;
    std::optional<Diagram> explicit_diagram;
};

struct Decision {
    Answer answer = Answer::No;
    DecisionTarget target;
    std::vector<PartDecision> parts;
    int yes_part = -1; // index into parts of the responsible part, -1 if none
    std::string note;  // optional human-readable remark
};

// ---- exhaustive oracle -----------------------------------------------------

// Decides reachability by enumerating all 4^n crossing assignments of d in
// lexicographic order and identifying each result by invariant signature.
// Yes answers carry the least reaching assignment; no answers are
// certificate-kind "structural-no" with reason exhausted-assignments.
// Throws BudgetExceeded when d has more than `budget` crossings.
Decision oracle_decide(const Diagram& d, const FamilyTarget& target, int budget = 10);
Decision oracle_decide(const Diagram& d, const Diagram& target, int budget = 10);

// Full census of the links reachable from d: one entry per distinct
// invariant signature with the least assignment producing it and the number
// of assignments that do.  Entries sorted by signature.
struct CensusEntry {
    InvariantSignature signature;
    std::vector<CrossingState> least;
    long long count = 0;
};
std::vector<CensusEntry> oracle_census(const Diagram& d, int budget = 10);

// Name for a signature if it is a recognized small link: "unknot",
// "unlink-k", "torus2(m)" or "twist(m)" with m at most max_crossings;
// empty string otherwise.
std::string classify_signature(const InvariantSignature& sig, int max_crossings);

// ---- structural deciders ---------------------------------------------------

// Decides d leads-to T(2,m), m >= 3: splits d into strong parts; per part
// searches the Tait graphs for a C_m minor and then a B_m minor (gray graph
// before white); a hit is a yes with a minor witness, otherwise the part
// falls back to the oracle (or undecided-budget when too large).  Parts
// combine as in combine_parts.
Decision decide_torus(const Diagram& d, int m, int budget = 10);

// Decides d leads-to the twist knot with m crossings, m >= 4: per strong
// part, a part whose projection is torus-minimal is a structural no;
// otherwise the Tait graphs are searched for a C+_{m-1} minor (a theta
// subgraph with a branch of length >= m-2), gray before white — a white hit
// equally witnesses B+_{m-1} in the gray graph, the two being plane duals —
// then oracle fallback.  m == 3 names the trefoil, which equals the torus
// knot T(2,3); that case is routed to decide_torus(d, 3).
Decision decide_twist(const Diagram& d, int m, int budget = 10);

// Combines per-part decisions for a prime target: yes if any part is yes
// (carrying the first yes certificate), undecided-budget if none is yes and
// some part is undecided, otherwise no.  The target is taken from the first
// decision.
Decision combine_parts(const std::vector<Decision>& per_part);

// ---- certificates as data --------------------------------------------------

// Versioned decision document with deterministic (sorted) keys.
nlohmann::json decision_to_json(const Decision& dec);

// Independently re-checks every certificate in a decision: minor witnesses
// are verified against freshly built Tait graphs, assignment certificates
// are re-applied and the result's signature compared with the target's.
// Returns false (with a reason in *error) on any mismatch.
bool verify_decision(const Decision& dec, std::string* error = nullptr);

} // namespace leadsto
