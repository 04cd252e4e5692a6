#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chx/zigzag.hpp"

using namespace chx;

namespace {

const Ring kZ = Ring::integers();

ChainComplex running_complex(int shift = 0) {
    return make_complex(kZ, -1 + shift,
                        {Presentation::cyclic(kZ, 2), Presentation::free_module(kZ, 1),
                         Presentation::free_module(kZ, 1)},
                        {IntMatrix(1, 1, {1}), IntMatrix(1, 1, {2})});
}

ChainComplex zdisk(int n, int rank = 1) { return disk(kZ, n, Presentation::free_module(kZ, rank)); }

ChainComplex random_disk_sum(std::mt19937& rng, int max_pieces = 3) {
    std::uniform_int_distribution<int> nd(-2, 3), rd(1, 2), cnt(1, max_pieces);
    ChainComplex X = ChainComplex::empty(kZ);
    int pieces = cnt(rng);
    for (int i = 0; i < pieces; ++i) X = direct_sum(X, zdisk(nd(rng), rd(rng)));
    return X;
}

ChainComplex random_exact_complex(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 2), sd(-1, 2), dd(2, 5);
    switch (pick(rng)) {
        case 0:
            return running_complex(sd(rng));
        case 1:
            return direct_sum(random_disk_sum(rng, 2),
                              disk(kZ, sd(rng), Presentation::cyclic(kZ, dd(rng))));
        default:
            return random_disk_sum(rng);
    }
}

Element random_element(std::mt19937& rng, const ChainComplex& X) {
    std::vector<int> degs;
    for (int m = X.min_deg; m <= X.max_deg; ++m)
        if (X.gens(m) > 0) degs.push_back(m);
    REQUIRE(!degs.empty());
    std::uniform_int_distribution<size_t> dpick(0, degs.size() - 1);
    std::uniform_int_distribution<int> cd(-2, 2);
    int m = degs[dpick(rng)];
    std::vector<Int> coords(X.gens(m));
    for (Int& c : coords) c = cd(rng);
    return Element{m, std::move(coords)};
}

std::vector<Int> unit(int n, int i) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    return e;
}

}  // namespace

TEST_CASE("module extraction: frozen examples") {
    // two independent torsion summands: one is extracted, one survives
    Presentation M2(kZ, 2, IntMatrix(2, 2, {2, 0, 0, 2}));
    ModuleZigzagCertificate c = zigzag_module(M2, {1, 0}, 1);
    CHECK(c.B0 == std::vector<int>{0});
    CHECK(c.B1 == std::vector<int>{0});
    CHECK(invariants(c.extracted.pres) == FgAbInvariants{0, {2}});
    CHECK(invariants(c.quotient) == FgAbInvariants{0, {2}});
    CHECK(!c.budget_exceeded);
    CHECK(verify_certificate(c).ok());

    // single cyclic module: the whole module is the minimal closure
    Presentation C2 = Presentation::cyclic(kZ, 2);
    ModuleZigzagCertificate w = zigzag_module(C2, {1}, 1);
    CHECK(invariants(w.extracted.pres) == FgAbInvariants{0, {2}});
    CHECK(is_zero_module(w.quotient));

    // mixed free/torsion: the torsion part splits off, the free part remains
    Presentation Mix(kZ, 2, IntMatrix(1, 2, {0, 2}));
    ModuleZigzagCertificate m = zigzag_module(Mix, {0, 1}, 1);
    CHECK(m.B0 == std::vector<int>{1});
    CHECK(invariants(m.extracted.pres) == FgAbInvariants{0, {2}});
    CHECK(invariants(m.quotient) == FgAbInvariants{1, {}});
    CHECK(!m.budget_exceeded);

    // budget pressure only raises the flag, never breaks the certificate
    ModuleZigzagCertificate f = zigzag_module(M2, {1, 1}, 1);
    CHECK(f.budget_exceeded);
    CHECK(verify_certificate(f).ok());
}

TEST_CASE("module extraction: random certificates verify") {
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<int> gd(1, 4), rd(0, 3), ed(-3, 3), coeff(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        int g = gd(rng), r = rd(rng);
        IntMatrix rel(r, g);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < g; ++j) rel.at(i, j) = coeff(rng);
        Presentation M(kZ, g, rel);
        std::vector<Int> x(g);
        for (Int& c : x) c = ed(rng);
        ModuleZigzagCertificate c = zigzag_module(M, x, 2);
        CHECK(verify_certificate(c).ok());
        // the complementary presentation really is the cokernel of inclusion
        CHECK(invariants(c.quotient) == invariants(cokernel(c.extracted.map).pres));
        // the element lifts into the extraction
        CHECK(lift_element(c.extracted.map, x).has_value());
    }
}

TEST_CASE("disk towers: literal disk sums resolving the target") {
    std::mt19937 rng(7);
    std::vector<ChainComplex> targets = {running_complex(), zdisk(1, 2),
                                         direct_sum(running_complex(), running_complex())};
    for (int i = 0; i < 6; ++i) targets.push_back(random_exact_complex(rng));
    for (const ChainComplex& X : targets) {
        DiskTower dt = disk_tower(X, 1);
        CHECK(dt.tower.complete);
        CHECK(validate_tower(dt.tower).ok());
        REQUIRE(dt.disks.size() == dt.tower.stages.size());
        for (size_t i = 0; i < dt.tower.stages.size(); ++i) {
            auto dec = disk_decomposition(dt.tower.stages[i].complex);
            REQUIRE(dec.has_value());
            CHECK(dec->disks == dt.disks[i]);
        }
    }
}

TEST_CASE("complex extraction: frozen examples") {
    // two copies of the torsion-cycle exact complex: the seed's copy splits off
    ChainComplex R = running_complex();
    ChainComplex XX = direct_sum(R, R);
    ComplexZigzagCertificate c = zigzag_complex(XX, Element{-1, unit(2, 0)}, 1, 3);
    CHECK(!c.budget_exceeded);
    ChainComplex sub = c.extracted.sub();
    CHECK(sub.size() < XX.size());
    // the quotient looks like the untouched second copy
    CHECK(invariants(c.quotient.at(1)) == FgAbInvariants{1, {}});
    CHECK(invariants(c.quotient.at(0)) == FgAbInvariants{1, {}});
    CHECK(invariants(c.quotient.at(-1)) == FgAbInvariants{0, {2}});
    // and the extraction covers the first copy
    CHECK(subcomplex_contains(c.extracted, Element{1, unit(2, 0)}));
    CHECK(subcomplex_contains(c.extracted, Element{0, unit(2, 0)}));
    CHECK(!subcomplex_contains(c.extracted, Element{0, unit(2, 1)}));

    // seeding at the bottom generator of a single copy absorbs everything
    ComplexZigzagCertificate whole = zigzag_complex(R, Element{-1, {Int(1)}}, 1, 3);
    CHECK(quotient(R, whole.extracted).trimmed().size() == 0);

    // seeding at the top generator finds the proper contractible piece Z -> 2Z
    ComplexZigzagCertificate top = zigzag_complex(R, Element{1, {Int(1)}}, 1, 3);
    CHECK(top.extracted.sub().size() == 2);
    CHECK(invariants(top.quotient.at(0)) == FgAbInvariants{0, {2}});
    CHECK(invariants(top.quotient.at(-1)) == FgAbInvariants{0, {2}});

    // independent disks stay independent
    ChainComplex D = direct_sum(zdisk(1), zdisk(0));
    ComplexZigzagCertificate d = zigzag_complex(D, Element{0, unit(2, 1)}, 0, 1);
    CHECK(!d.budget_exceeded);
    CHECK(d.extracted.sub().size() == 2);
    CHECK(invariants(d.quotient.at(1)) == FgAbInvariants{1, {}});
    CHECK(is_zero_module(d.quotient.at(-1)));
}

TEST_CASE("complex extraction: preconditions and budget flag") {
    ChainComplex S = sphere(kZ, 0, Presentation::cyclic(kZ, 2));  // not exact
    CHECK_THROWS_AS(zigzag_complex(S, Element{0, {Int(1)}}, 1, 5), std::invalid_argument);
    ChainComplex R = running_complex();
    CHECK_THROWS_AS(zigzag_complex(R, Element{0, {Int(1)}}, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(zigzag_complex(R, Element{0, {Int(1)}}, 1, -1), std::invalid_argument);
    ComplexZigzagCertificate c = zigzag_complex(R, Element{-1, {Int(1)}}, 1, 1);
    CHECK(c.budget_exceeded);  // needs more than one disk, still valid
    CHECK(verify_certificate(c).ok());
}

TEST_CASE("complex extraction: random certificates verify") {
    std::mt19937 rng(99);
    int proper = 0, trials = 0;
    for (int t = 0; t < 20; ++t) {
        ChainComplex X = random_exact_complex(rng);
        if (X.trimmed().size() == 0) continue;
        Element x = random_element(rng, X);
        ComplexZigzagCertificate c = zigzag_complex(X, x, 1, 1000, t % 2 == 0);
        CHECK(verify_certificate(c).ok());
        if (t % 2 == 0) CHECK(!c.audit.empty());
    }
    // block separation: extraction from a summand of a k-fold sum stays proper
    for (int k = 2; k <= 4; ++k) {
        ChainComplex X = ChainComplex::empty(kZ);
        for (int i = 0; i < k; ++i) X = direct_sum(X, running_complex());
        for (int m = X.min_deg; m <= X.max_deg; ++m)
            for (int j = 0; j < X.gens(m); ++j) {
                ComplexZigzagCertificate c =
                    zigzag_complex(X, Element{m, unit(X.gens(m), j)}, 1, 3);
                ++trials;
                if (c.extracted.sub().size() < X.size()) ++proper;
                CHECK(!c.budget_exceeded);
            }
    }
    CHECK(proper == trials);  // every single-summand seed extracts a proper piece
}

TEST_CASE("filtrations: frozen examples") {
    // three independent copies peel off one at a time
    ChainComplex R = running_complex();
    ChainComplex X3 = direct_sum(direct_sum(R, R), R);
    Filtration f = build_filtration(X3, 1, 3);
    CHECK(f.stages.size() == 3);
    CHECK(!f.budget_exceeded);
    CHECK(quotient(X3, f.stages.back()).trimmed().size() == 0);

    // a rank-4 disk under budget 2 splits into two rank-2 disks
    Filtration g = build_filtration(zdisk(1, 4), 0, 2);
    CHECK(g.stages.size() == 2);
    for (const ComplexZigzagCertificate& c : g.factors) CHECK(c.extracted.sub().size() == 4);

    // the zero complex filters trivially
    Filtration z = build_filtration(ChainComplex::empty(kZ), 0, 1);
    CHECK(z.stages.empty());
    CHECK(z.factors.empty());
}

TEST_CASE("filtrations: random properties") {
    std::mt19937 rng(4242);
    for (int t = 0; t < 8; ++t) {
        ChainComplex X = random_exact_complex(rng);
        Filtration f = build_filtration(X, 1, 4);
        CHECK(static_cast<int>(f.stages.size()) <= X.size());
        CHECK(f.stages.size() == f.factors.size());
        if (X.trimmed().size() == 0) {
            CHECK(f.stages.empty());
            continue;
        }
        // the chain is nested and exhausts the complex
        CHECK(quotient(X, f.stages.back()).trimmed().size() == 0);
        for (size_t i = 0; i + 1 < f.stages.size(); ++i)
            for (const auto& [m, incl] : f.stages[i].inclusion)
                for (int j = 0; j < incl.matrix.cols; ++j)
                    CHECK(lift_element(f.stages[i + 1].inclusion_at(m), incl.matrix.col(j)).has_value());
        for (const Subcomplex& s : f.stages) CHECK(validate_subcomplex(s).ok());
        for (const ComplexZigzagCertificate& c : f.factors) CHECK(verify_certificate(c).ok());
    }
}
