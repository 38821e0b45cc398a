#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"

using namespace pclab;
using namespace pclab::testing;

TEST_CASE("list carries every shipped entry in stable order") {
    Catalog cat = load_catalog();
    std::vector<std::string> ids;
    for (const auto& e : cat.entries()) ids.push_back(e.id);
    std::vector<std::string> want = {"g2",   "g3",         "g4",      "g5g6", "g7",
                                     "km5d", "heisenberg", "flat_e2", "hyp3", "eq4_nonsasakian"};
    CHECK(ids == want);
}

TEST_CASE("instantiate: g3 at beta = gamma = 0 is the heisenberg frame") {
    Catalog cat = load_catalog();
    ParacontactFrame f = cat.instantiate("g3", {{"beta", Rational(0)}, {"gamma", Rational(0)}});
    CHECK(f.h.is_zero());
    for (std::size_t k = 0; k < 3; ++k) {
        Polynomial c = f.bracket(1, 2)[k];
        CHECK(c == parse_expr(k == 0 ? "2" : "0", f.params()));
        CHECK(f.bracket(0, 1)[k].is_zero());
        CHECK(f.bracket(0, 2)[k].is_zero());
    }
}

TEST_CASE("instantiate enforces the family constraints") {
    Catalog cat = load_catalog();
    CHECK_THROWS_AS(cat.instantiate("g2", {{"gamma", Rational(0)}}), ConstraintViolation);
    CHECK_THROWS_AS(cat.instantiate("g4", {{"eps", Rational(2)}}), ConstraintViolation);
    CHECK_THROWS_AS(cat.instantiate("g2", {{"zeta", Rational(1)}}), VarMismatchError);
    // partial substitution keeps the rest symbolic
    ParacontactFrame f = cat.instantiate("g2", {{"beta", Rational(1)}});
    CHECK(f.params() == std::vector<std::string>{"beta", "gamma"});
}

TEST_CASE("verify_goldens passes for every entry") {
    Catalog cat = load_catalog();
    for (const auto& e : cat.entries()) {
        VerifyReport r = cat.verify(e.id);
        for (const auto& c : r.checks) {
            INFO(e.id << " " << c.what << " " << c.detail);
            CHECK(c.ok);
        }
        CHECK(r.ok);
    }
}

TEST_CASE("verify reports a counterexample substitution on a golden mismatch") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "pclab_broken_catalog";
    fs::create_directories(dir);
    std::ifstream in(std::string(Catalog::default_dir()) + "/g2.json");
    Json j;
    in >> j;
    j["goldens"]["Q"][1][1] = "2 + 2*beta";  // wrong sign of beta
    std::ofstream out(dir / "g2.json");
    out << j.dump(2);
    out.close();
    Catalog broken = Catalog::load(dir.string());
    VerifyReport r = broken.verify("g2");
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.counterexample.empty());
    CHECK(r.counterexample.find("beta") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("every entry validates for 20 random constraint-satisfying instantiations") {
    Catalog cat = load_catalog();
    TestRng rng(0xfeedbead);
    for (const auto& e : cat.entries()) {
        for (int trial = 0; trial < 20; ++trial) {
            auto assign = random_assignment(e, rng);
            ParacontactFrame f = cat.instantiate(e.id, assign);  // throws on failure
            CHECK(f.dim() == e.frame.dim);
        }
    }
}

TEST_CASE("corollary loci: per-family infinitesimal-harmonic-transformation sets") {
    Catalog cat = load_catalog();
    auto iht_of = [&](const std::string& id) {
        const CatalogEntry& e = cat.get(id);
        ParacontactFrame f = must_validate(e.frame);
        Connection conn = levi_civita(f);
        CurvaturePackage pkg = riemann(f, conn);
        return is_iht(f, conn, pkg, e.inequations());
    };
    CHECK(iht_of("g2").status == Status::Fails);
    Verdict g3 = iht_of("g3");
    CHECK(g3.status == Status::Conditional);
    ConditionSet want({"beta", "gamma"}, {parse_expr("beta - gamma", {"beta", "gamma"})});
    CHECK(g3.conditions.equivalent(want));
    CHECK(iht_of("g4").status == Status::Holds);
    CHECK(iht_of("g5g6").status == Status::Holds);
    CHECK(iht_of("g7").status == Status::Holds);
}

TEST_CASE("catalog polynomials round-trip through print and parse") {
    Catalog cat = load_catalog();
    for (const auto& e : cat.entries()) {
        ParacontactFrame f = must_validate(e.frame);
        CurvaturePackage pkg = riemann(f, levi_civita(f));
        for (std::size_t i = 0; i < f.dim(); ++i)
            for (std::size_t j = 0; j < f.dim(); ++j) {
                const Polynomial& q = pkg.ricci_op.at(i, j);
                CHECK(parse_expr(q.to_string(), f.params()) == q);
                const Polynomial& h = f.h.at(i, j);
                CHECK(parse_expr(h.to_string(), f.params()) == h);
            }
    }
}

TEST_CASE("harmonic map trace vanishes for all five 3d families") {
    Catalog cat = load_catalog();
    for (const char* id : {"g2", "g3", "g4", "g5g6", "g7"}) {
        ParacontactFrame f = must_validate(cat.get(id).frame);
        Connection conn = levi_civita(f);
        CurvaturePackage pkg = riemann(f, conn);
        INFO(id);
        CHECK(is_zero(harmonic_map_trace(f, conn, pkg)));
    }
}
