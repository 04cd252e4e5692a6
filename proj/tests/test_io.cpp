#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chx/io.hpp"

using namespace chx;

namespace {

const Ring kZ = Ring::integers();

ChainComplex running_complex() {
    return make_complex(kZ, -1,
                        {Presentation::cyclic(kZ, 2), Presentation::free_module(kZ, 1),
                         Presentation::free_module(kZ, 1)},
                        {IntMatrix(1, 1, {1}), IntMatrix(1, 1, {2})});
}

ChainComplex random_complex(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 3), nd(-2, 2), dd(2, 6), rd(1, 3);
    switch (pick(rng)) {
        case 0:
            return running_complex();
        case 1:
            return sphere(kZ, nd(rng), Presentation::cyclic(kZ, dd(rng)));
        case 2: {
            Ring r = Ring::zmod(dd(rng));
            return disk(r, nd(rng), Presentation::free_module(r, rd(rng)));
        }
        default:
            return direct_sum(disk(kZ, nd(rng), Presentation::free_module(kZ, rd(rng))),
                              sphere(kZ, nd(rng), Presentation::free_module(kZ, 1)));
    }
}

bool structurally_equal(const ChainComplex& A, const ChainComplex& B) {
    if (!(A.ring == B.ring) || A.min_deg != B.min_deg || A.max_deg != B.max_deg) return false;
    for (int m = A.min_deg; m <= A.max_deg; ++m) {
        if (A.gens(m) != B.gens(m) || !(A.at(m).relations == B.at(m).relations)) return false;
        if (m > A.min_deg && !(A.boundary(m) == B.boundary(m))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("round-trip is byte-identical and structure-preserving") {
    std::mt19937 rng(83);
    for (int t = 0; t < 12; ++t) {
        ComplexFile f{random_complex(rng), {}};
        std::string s = write_complex_file(f);
        ComplexFile g = read_complex_file(s);
        CHECK(structurally_equal(f.complex, g.complex));
        CHECK(write_complex_file(g) == s);
    }
}

TEST_CASE("named elements round-trip") {
    ComplexFile f{running_complex(), {}};
    f.elements["cycle"] = Element{0, {Int(2)}};
    f.elements["torsion"] = Element{-1, {Int(1)}};
    std::string s = write_complex_file(f);
    ComplexFile g = read_complex_file(s);
    REQUIRE(g.elements.size() == 2);
    CHECK(g.elements.at("cycle").degree == 0);
    CHECK(g.elements.at("cycle").coords == std::vector<Int>{Int(2)});
    CHECK(g.elements.at("torsion").degree == -1);
    CHECK(write_complex_file(g) == s);
}

TEST_CASE("frozen shape of the serialized text") {
    ComplexFile f{running_complex(), {}};
    std::string s = write_complex_file(f);
    CHECK(s.find("\"format\": 1") != std::string::npos);
    CHECK(s.find("\"ring\": \"Z\"") != std::string::npos);
    CHECK(s.find("\"-1\"") != std::string::npos);  // degree keys are explicit
    CHECK(s.find("\"2\"") != std::string::npos);   // integers are decimal strings
    CHECK(s.back() == '\n');

    ComplexFile e{ChainComplex::empty(Ring::zmod(6)), {}};
    std::string se = write_complex_file(e);
    CHECK(se.find("\"ring\": \"Z/6\"") != std::string::npos);
    CHECK(structurally_equal(read_complex_file(se).complex, e.complex));
}

TEST_CASE("read rejects malformed input") {
    std::string good = write_complex_file({running_complex(), {}});

    CHECK_THROWS_AS(read_complex_file("not json"), std::invalid_argument);
    CHECK_THROWS_AS(read_complex_file("{\"format\": 2}"), std::invalid_argument);

    // wrong ring tag
    std::string bad_ring = good;
    bad_ring.replace(bad_ring.find("\"Z\""), 3, "\"Q\"");
    CHECK_THROWS_AS(read_complex_file(bad_ring), std::invalid_argument);

    // non-string integer entry
    std::string bad_int = good;
    bad_int.replace(bad_int.find("\"2\""), 3, "2");
    CHECK_THROWS_AS(read_complex_file(bad_int), std::invalid_argument);

    // missing boundary matrix
    CHECK_THROWS_AS(read_complex_file(R"({
        "format": 1, "ring": "Z",
        "components": {
            "0": {"generators": 1, "relations": []},
            "1": {"generators": 1, "relations": []}
        },
        "boundaries": {}
    })"),
                    std::invalid_argument);

    // boundary fails the squared-to-zero law
    CHECK_THROWS_AS(read_complex_file(R"({
        "format": 1, "ring": "Z",
        "components": {
            "0": {"generators": 1, "relations": []},
            "1": {"generators": 1, "relations": []},
            "2": {"generators": 1, "relations": []}
        },
        "boundaries": {"1": [["1"]], "2": [["1"]]}
    })"),
                    std::invalid_argument);

    // element with the wrong number of coordinates
    CHECK_THROWS_AS(read_complex_file(R"({
        "format": 1, "ring": "Z",
        "components": {"0": {"generators": 2, "relations": []}},
        "boundaries": {},
        "elements": {"x": {"degree": 0, "coords": ["1"]}}
    })"),
                    std::invalid_argument);

    // gap in the degree window
    CHECK_THROWS_AS(read_complex_file(R"({
        "format": 1, "ring": "Z",
        "components": {
            "0": {"generators": 1, "relations": []},
            "2": {"generators": 1, "relations": []}
        },
        "boundaries": {}
    })"),
                    std::invalid_argument);
}
