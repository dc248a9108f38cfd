#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "leadsto/diagram.hpp"

namespace leadsto {

class ParseError : public std::runtime_error {
public:
    enum class Code {
        Syntax,       // malformed text
        ArcUse,       // an arc label is not used exactly twice
        NonPlanar,    // the rotation system fails the Euler check
        Disconnected, // split diagram (the inputs model nonsplit links)
        Unrealizable, // signed Gauss code admits no planar realization
    };

    ParseError(Code code, std::size_t offset, const std::string& message)
        : std::runtime_error(message), code_(code), offset_(offset) {}

    Code code() const { return code_; }
    // Byte offset into the input where the problem was detected.
    std::size_t offset() const { return offset_; }

private:
    Code code_;
    std::size_t offset_;
};

// PD notation: whitespace-separated tokens `X[a,b,c,d]` listing the four arc
// labels counterclockwise from the incoming under-strand (positive integers,
// each label appearing exactly twice overall), plus `O` for a crossing-free
// unknot component.  `#` starts a comment running to end of line.  An
// optional `PD[ ... ]` wrapper with comma-separated entries is accepted for
// interoperability with knot tables.  Arc ids are normalized to 0..2n-1 in
// order of first appearance.
Diagram parse_pd(const std::string& text);

// Signed Gauss code: tokens `O<k><s>` (over-passage) and `U<k><s>`
// (under-passage) with sign s in {+,-}, in strand traversal order; tokens
// may be concatenated or whitespace-separated, `/` separates the strands of
// a multi-component link, `#` starts a comment.  Each crossing label occurs
// exactly once as O and once as U, with equal signs; the sign is the writhe
// sign of the crossing under the traversal orientation.  The signs force the
// rotation at every crossing, so realizability reduces to the Euler check.
Diagram parse_gauss(const std::string& text);

// Canonical PD form: arcs are relabeled 1..2n along a deterministic strand
// traversal (components in order of their smallest crossing passage, each
// entered at that passage's incoming slot), crossings emitted in index order,
// one `O` token per free loop.  parse_pd(serialize_pd(d)) reproduces d up to
// arc relabeling.
std::string serialize_pd(const Diagram& d);

} // namespace leadsto
