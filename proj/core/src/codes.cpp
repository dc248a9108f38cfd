#include "leadsto/codes.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace leadsto {

namespace {

// Comments become spaces so byte offsets survive.
std::string strip_comments(const std::string& text) {
    std::string s = text;
    bool in_comment = false;
    for (char& ch : s) {
        if (ch == '#') in_comment = true;
        if (ch == '\n') in_comment = false;
        if (in_comment) ch = ' ';
    }
    return s;
}

struct Scanner {
    const std::string& s;
    std::size_t pos = 0;

    bool at_end() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(ParseError::Code::Syntax, pos, why);
    }
    void expect(char c) {
        if (at_end() || s[pos] != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }
    long read_int() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected an integer");
        long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000000L) fail("integer too large");
            ++pos;
        }
        return v;
    }
};

Diagram finish_pd(const std::vector<std::array<long, 4>>& raw,
                  const std::vector<std::size_t>& entry_offsets, int free_loops,
                  std::size_t end_offset) {
    Diagram d;
    d.free_loops = free_loops;
    std::map<long, int> id_of_label;
    std::map<long, int> uses;
    std::map<long, std::size_t> last_offset;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        Crossing c;
        for (int s = 0; s < 4; ++s) {
            const long label = raw[i][s];
            auto [it, fresh] = id_of_label.try_emplace(label, d.arc_count);
            if (fresh) ++d.arc_count;
            c.arcs[s] = it->second;
            ++uses[label];
            last_offset[label] = entry_offsets[i];
        }
        d.crossings.push_back(c);
    }
    for (const auto& [label, count] : uses)
        if (count != 2)
            throw ParseError(ParseError::Code::ArcUse, last_offset[label],
                             "arc " + std::to_string(label) + " used " +
                                 std::to_string(count) + " times (need 2)");
    switch (validate_diagram(d)) {
    case DiagramDefect::None: break;
    case DiagramDefect::ArcUse:
        throw ParseError(ParseError::Code::ArcUse, end_offset, "arcs not closed");
    case DiagramDefect::NonPlanar:
        throw ParseError(ParseError::Code::NonPlanar, end_offset,
                         "rotation system is not planar (Euler check failed)");
    case DiagramDefect::Disconnected:
        throw ParseError(ParseError::Code::Disconnected, end_offset,
                         "diagram is split (disconnected)");
    }
    return d;
}

} // namespace

Diagram parse_pd(const std::string& text) {
    const std::string s = strip_comments(text);
    Scanner sc{s};
    std::vector<std::array<long, 4>> raw;
    std::vector<std::size_t> entry_offsets;
    int free_loops = 0;

    sc.skip_ws();
    bool wrapped = false;
    if (s.compare(sc.pos, 3, "PD[") == 0) {
        wrapped = true;
        sc.pos += 3;
    }
    bool closed = false;
    while (true) {
        sc.skip_ws();
        if (wrapped && !sc.at_end() && sc.peek() == ',') {
            ++sc.pos;
            continue;
        }
        if (wrapped && !sc.at_end() && sc.peek() == ']') {
            ++sc.pos;
            closed = true;
            break;
        }
        if (sc.at_end()) break;
        const std::size_t at = sc.pos;
        const char c = sc.peek();
        if (c == 'X') {
            ++sc.pos;
            sc.expect('[');
            std::array<long, 4> arcs;
            for (int i = 0; i < 4; ++i) {
                sc.skip_ws();
                arcs[i] = sc.read_int();
                sc.skip_ws();
                if (i < 3) sc.expect(',');
            }
            sc.expect(']');
            raw.push_back(arcs);
            entry_offsets.push_back(at);
        } else if (c == 'O') {
            ++sc.pos;
            if (!sc.at_end() && (sc.peek() == '[' ||
                                 std::isdigit(static_cast<unsigned char>(sc.peek()))))
                sc.fail("'O' (unknot component) takes no arguments");
            ++free_loops;
        } else {
            sc.fail("expected a crossing 'X[a,b,c,d]' or unknot 'O'");
        }
    }
    if (wrapped && !closed) sc.fail("unterminated 'PD[' wrapper");
    sc.skip_ws();
    if (!sc.at_end()) sc.fail("trailing input after diagram");
    if (raw.empty() && free_loops == 0)
        throw ParseError(ParseError::Code::Syntax, sc.pos, "empty diagram");
    return finish_pd(raw, entry_offsets, free_loops, sc.pos);
}

Diagram parse_gauss(const std::string& text) {
    const std::string s = strip_comments(text);
    Scanner sc{s};

    struct Passage {
        long label;
        bool over;
        int sign; // +1 or -1
        std::size_t offset;
    };
    std::vector<std::vector<Passage>> comps(1);
    while (true) {
        sc.skip_ws();
        if (sc.at_end()) break;
        const std::size_t at = sc.pos;
        const char c = sc.peek();
        if (c == '/') {
            ++sc.pos;
            if (comps.back().empty()) sc.fail("empty component before '/'");
            comps.emplace_back();
            continue;
        }
        if (c != 'O' && c != 'U') sc.fail("expected 'O<k><sign>' or 'U<k><sign>'");
        ++sc.pos;
        const long label = sc.read_int();
        int sign = 0;
        if (!sc.at_end() && sc.peek() == '+') {
            sign = 1;
            ++sc.pos;
        } else if (!sc.at_end() && sc.peek() == '-') {
            sign = -1;
            ++sc.pos;
        } else if (s.compare(sc.pos, 3, "\xe2\x88\x92") == 0) { // U+2212 minus
            sign = -1;
            sc.pos += 3;
        } else {
            sc.fail("expected a sign '+' or '-'");
        }
        comps.back().push_back({label, c == 'O', sign, at});
    }
    if (comps.back().empty()) {
        if (comps.size() > 1) sc.fail("empty component after '/'");
        throw ParseError(ParseError::Code::Syntax, sc.pos, "empty code");
    }

    // crossing ids in order of first appearance; check O/U pairing and signs
    std::map<long, int> id_of_label;
    struct Seen {
        int over = 0, under = 0, sign = 0;
        std::size_t offset = 0;
    };
    std::map<long, Seen> seen;
    for (const auto& comp : comps) {
        for (const auto& p : comp) {
            id_of_label.try_emplace(p.label, static_cast<int>(id_of_label.size()));
            Seen& sn = seen[p.label];
            (p.over ? sn.over : sn.under) += 1;
            if (sn.sign == 0) sn.sign = p.sign;
            if (sn.sign != p.sign)
                throw ParseError(ParseError::Code::Syntax, p.offset,
                                 "crossing " + std::to_string(p.label) +
                                     " has inconsistent signs");
            sn.offset = p.offset;
        }
    }
    for (const auto& [label, sn] : seen)
        if (sn.over != 1 || sn.under != 1)
            throw ParseError(ParseError::Code::Syntax, sn.offset,
                             "crossing " + std::to_string(label) +
                                 " needs exactly one 'O' and one 'U' passage");

    Diagram d;
    d.crossings.resize(id_of_label.size());
    for (auto& c : d.crossings) c.arcs = {-1, -1, -1, -1};
    // Arc i of a component runs from passage i to passage i+1 (cyclically).
    // At an under-passage the strand enters slot 0 and leaves slot 2; at an
    // over-passage of a positive crossing it enters slot 3 and leaves slot 1
    // (negative: enters 1, leaves 3).
    for (const auto& comp : comps) {
        const int t = static_cast<int>(comp.size());
        const int base = d.arc_count;
        d.arc_count += t;
        for (int i = 0; i < t; ++i) {
            const auto& p = comp[i];
            const int cid = id_of_label[p.label];
            const int in_arc = base + (i + t - 1) % t;
            const int out_arc = base + i;
            int in_slot, out_slot;
            if (!p.over) {
                in_slot = 0;
                out_slot = 2;
            } else if (p.sign > 0) {
                in_slot = 3;
                out_slot = 1;
            } else {
                in_slot = 1;
                out_slot = 3;
            }
            d.crossings[cid].arcs[in_slot] = in_arc;
            d.crossings[cid].arcs[out_slot] = out_arc;
        }
    }
    switch (validate_diagram(d)) {
    case DiagramDefect::None: break;
    case DiagramDefect::ArcUse:
        throw ParseError(ParseError::Code::Syntax, sc.pos, "malformed sequence");
    case DiagramDefect::NonPlanar:
        throw ParseError(ParseError::Code::Unrealizable, sc.pos,
                         "code admits no planar realization");
    case DiagramDefect::Disconnected:
        throw ParseError(ParseError::Code::Disconnected, sc.pos,
                         "diagram is split (disconnected)");
    }
    return d;
}

std::string serialize_pd(const Diagram& d) {
    const int n = d.crossing_count();
    std::vector<int> label(d.arc_count, 0);
    if (n > 0) {
        // Same deterministic walk as trace_strands; the departing arc of each
        // passage receives the next label.
        std::vector<std::array<int, 2>> occ(d.arc_count, {-1, -1});
        for (int c = 0; c < n; ++c)
            for (int s = 0; s < 4; ++s) {
                const int a = d.crossings[c].arcs[s];
                (occ[a][0] == -1 ? occ[a][0] : occ[a][1]) = 4 * c + s;
            }
        std::vector<char> visited(4 * n, 0);
        int next = 1;
        for (int start = 0; start < 4 * n; ++start) {
            if (visited[start]) continue;
            int pos = start;
            do {
                const int c = pos / 4, s = pos % 4;
                visited[pos] = 1;
                const int out_slot = (s + 2) % 4;
                visited[4 * c + out_slot] = 1;
                const int arc = d.crossings[c].arcs[out_slot];
                if (label[arc] == 0) label[arc] = next++;
                pos = occ[arc][0] == 4 * c + out_slot ? occ[arc][1] : occ[arc][0];
            } while (pos != start);
        }
    }
    std::ostringstream os;
    for (int c = 0; c < n; ++c) {
        if (c) os << ' ';
        os << "X[";
        for (int s = 0; s < 4; ++s) {
            if (s) os << ',';
            os << label[d.crossings[c].arcs[s]];
        }
        os << ']';
    }
    for (int i = 0; i < d.free_loops; ++i) {
        if (n > 0 || i > 0) os << ' ';
        os << 'O';
    }
    return os.str();
}

} // namespace leadsto
