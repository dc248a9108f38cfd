#include <doctest.h>

#include <leadsto/codes.hpp>
#include <leadsto/invariants.hpp>
#include <leadsto/minors.hpp>
#include <leadsto/tait.hpp>

#include "corpus.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>

using namespace leadsto;
using namespace leadsto::testsupport;

TEST_SUITE("tait") {

TEST_CASE("checkerboard colouring of the small projections") {
    auto t = projection(load_diagram("torus2_3"));
    auto cb = checkerboard(t);
    REQUIRE((int)cb.face_color.size() == t.graph.face_count());
    int white = (int)std::count(cb.face_color.begin(), cb.face_color.end(), 0);
    int gray = (int)std::count(cb.face_color.begin(), cb.face_color.end(), 1);
    CHECK(white == 3);
    CHECK(gray == 2);
    CHECK(cb.face_color[0] == 0); // canonical anchor: first face is white

    auto kink = projection(parse_gauss("O1+U1+"));
    auto kcb = checkerboard(kink);
    int kw = (int)std::count(kcb.face_color.begin(), kcb.face_color.end(), 0);
    CHECK(((kw == 1) || (kw == 2)));
    CHECK((int)kcb.face_color.size() == 3);

    auto f8 = projection(load_diagram("figure_eight"));
    CHECK((int)checkerboard(f8).face_color.size() == 6);

    // Adjacent faces always get opposite colours.
    for (const Projection* p : {&t, &kink, &f8}) {
        auto c = checkerboard(*p);
        for (int d = 0; d < p->graph.dart_count(); ++d) {
            int f1 = p->graph.face_of_dart(d);
            int f2 = p->graph.face_of_dart(PlaneMultigraph::mate(d));
            CHECK(c.face_color[f1] != c.face_color[f2]);
        }
    }
}

TEST_CASE("tait graphs of the named fixtures") {
    auto shapes = [](const std::string& name) {
        auto pair = tait_graphs(projection(load_diagram(name)));
        return std::pair{recognize_target_shape(pair.white),
                         recognize_target_shape(pair.gray)};
    };
    CHECK(shapes("torus2_5") == std::pair<std::string, std::string>{"C5", "B5"});
    CHECK(shapes("twist_6") == std::pair<std::string, std::string>{"B5+", "C5+"});
    // The figure-eight's two Tait graphs coincide: the theta graph on path
    // lengths 1,1,2 is both a 3-cycle with a parallel edge and a 3-bond with
    // a subdivided edge.
    auto f8 = tait_graphs(projection(load_diagram("figure_eight")));
    CHECK(plane_isomorphic(f8.white, f8.gray));
    CHECK(recognize_target_shape(f8.white) == "C3+");

    for (int m = 3; m <= 9; ++m) {
        auto pair = tait_graphs(projection(load_diagram("torus2_" + std::to_string(m))));
        CHECK(recognize_target_shape(pair.white) == "C" + std::to_string(m));
        CHECK(recognize_target_shape(pair.gray) == "B" + std::to_string(m));
    }
}

TEST_CASE("tait graphs are mutual duals with one edge per crossing") {
    std::mt19937 rng(31337);
    for (int it = 0; it < 300; ++it) {
        auto d = random_diagram(1 + it % 10, rng);
        auto pair = tait_graphs(projection(d));
        CHECK(pair.white.edge_count() == d.crossing_count());
        CHECK(pair.gray.edge_count() == d.crossing_count());
        CHECK(plane_isomorphic(pair.white.dual(), pair.gray));
        CHECK(plane_isomorphic(pair.gray.dual(), pair.white));
    }
}

TEST_CASE("strength verdicts on the fixtures") {
    for (int m = 2; m <= 9; ++m)
        CHECK(is_strong(load_diagram("torus2_" + std::to_string(m))));
    for (int m = 3; m <= 8; ++m)
        CHECK(is_strong(load_diagram("twist_" + std::to_string(m))));
    CHECK(is_strong(load_diagram("strong_8")));
    CHECK(is_strong(load_diagram("figure_eight")));
    CHECK(is_strong(parse_gauss("O1+U1+"))); // one crossing: vacuously strong

    StrengthWitness w;
    CHECK_FALSE(is_strong(load_diagram("nonstrong_sum8"), &w));
    CHECK(w.arc1 >= 0);
    CHECK(w.arc1 < w.arc2);
    CHECK(w.face1 < w.face2);
    // The reported witness must be one the geometric enumeration also finds.
    auto all = strength_witnesses_geometric(projection(load_diagram("nonstrong_sum8")));
    bool found = false;
    for (const auto& g : all)
        found = found || (g.arc1 == w.arc1 && g.arc2 == w.arc2 &&
                          g.face1 == w.face1 && g.face2 == w.face2);
    CHECK(found);

    CHECK_FALSE(is_strong(load_diagram("nonstrong_sum6")));
    CHECK_FALSE(is_strong(load_diagram("trefoil_kinked")));
}

TEST_CASE("block-based strength equals the geometric enumeration") {
    std::mt19937 rng(777);
    for (int it = 0; it < 200; ++it) {
        auto d = random_diagram(1 + it % 8, rng);
        auto p = projection(d);
        auto witnesses = strength_witnesses_geometric(p);
        CAPTURE(serialize_pd(d));
        CHECK(is_strong(p) == witnesses.empty());
    }
}

TEST_CASE("strong projections have two-connected tait graphs") {
    std::mt19937 rng(4242);
    int strong_seen = 0;
    // Strong diagrams are a small minority of random samples, so keep
    // drawing until enough have been seen.
    for (int it = 0; it < 5000 && strong_seen < 60; ++it) {
        auto d = random_diagram(2 + it % 8, rng);
        if (!is_strong(d)) continue;
        ++strong_seen;
        auto pair = tait_graphs(projection(d));
        CHECK(is_biconnected(pair.white));
        CHECK(is_biconnected(pair.gray));
    }
    CHECK(strong_seen == 60);
}

TEST_CASE("strong decomposition") {
    SUBCASE("strong inputs are fixed points") {
        for (const char* name : {"torus2_5", "twist_6", "strong_8"}) {
            auto d = load_diagram(name);
            auto parts = strong_decomposition(d);
            REQUIRE(parts.size() == 1);
            CHECK(serialize_pd(parts[0]) == serialize_pd(d));
        }
    }
    SUBCASE("a summed diagram splits into its summands") {
        auto parts = strong_decomposition(load_diagram("nonstrong_sum6"));
        REQUIRE(parts.size() == 2);
        for (const auto& p : parts) {
            CHECK(p.crossing_count() == 3);
            CHECK(is_strong(p));
            CHECK(signature_of(p) == reference_signature({Family::Torus2, 3}));
        }
    }
    SUBCASE("a kink splits off as a one-crossing part") {
        auto parts = strong_decomposition(load_diagram("trefoil_kinked"));
        REQUIRE(parts.size() == 2);
        CHECK(parts[0].crossing_count() == 1);
        CHECK(parts[1].crossing_count() == 3);
        CHECK(signature_of(parts[0]) == signature_of(parse_pd("O")));
        CHECK(signature_of(parts[1]) == reference_signature({Family::Torus2, 3}));
    }
    SUBCASE("an eight-crossing sum splits into two four-crossing parts") {
        auto d = load_diagram("nonstrong_sum8");
        auto parts = strong_decomposition(d);
        REQUIRE(parts.size() == 2);
        for (const auto& p : parts) {
            CHECK(p.crossing_count() == 4);
            CHECK(is_strong(p));
            CHECK(is_torus_minimal_projection(projection(p)) == 4);
        }
    }
    SUBCASE("crossing counts are preserved on random sums") {
        std::mt19937 rng(808);
        for (int it = 0; it < 40; ++it) {
            auto a = random_diagram(2 + it % 4, rng);
            auto b = random_diagram(2 + (it / 2) % 4, rng);
            Diagram s;
            try {
                s = connected_sum(a, 0, b, 0);
            } catch (const std::exception&) {
                continue; // the chosen arcs may not admit a planar splice
            }
            auto parts = strong_decomposition(s);
            int total = 0;
            for (const auto& p : parts) {
                total += p.crossing_count();
                CHECK(is_strong(p));
            }
            CHECK(total == s.crossing_count());
            CHECK(parts.size() >= 2);
        }
    }
}

TEST_CASE("torus-minimal projection recognition") {
    CHECK(is_torus_minimal_projection(projection(load_diagram("torus2_7"))) == 7);
    for (int m = 2; m <= 9; ++m)
        CHECK(is_torus_minimal_projection(
                  projection(load_diagram("torus2_" + std::to_string(m)))) == m);
    CHECK_FALSE(is_torus_minimal_projection(projection(load_diagram("twist_6"))).has_value());
    CHECK_FALSE(is_torus_minimal_projection(projection(load_diagram("figure_eight"))).has_value());
    CHECK_FALSE(is_torus_minimal_projection(projection(load_diagram("strong_8"))).has_value());
}

TEST_CASE("preconditions reject crossing-free projections") {
    auto unknot = load_diagram("unknot");
    CHECK_THROWS(is_strong(unknot));
    CHECK_THROWS((void)checkerboard(projection(unknot)));
}

} // TEST_SUITE
