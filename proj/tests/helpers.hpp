#pragma once

// Shared conveniences for the test binaries: fixture loading and small
// formatting helpers.  Paths come from compile definitions set in
// tests/CMakeLists.txt.

#include <leadsto/codes.hpp>
#include <leadsto/diagram.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace leadsto::testsupport {

inline std::string fixture_path(const std::string& rel) {
    return std::string(LEADSTO_FIXTURE_DIR) + "/" + rel;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Loads fixtures/diagrams/<name>.pd and parses it.
inline Diagram load_diagram(const std::string& name) {
    return parse_pd(read_file(fixture_path("diagrams/" + name + ".pd")));
}

} // namespace leadsto::testsupport
