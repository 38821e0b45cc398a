#include "doctest.h"
#include "pclab/linalg.hpp"
#include "pclab/polynomial.hpp"

using namespace pclab;

namespace {

const std::vector<std::string> kBG = {"beta", "gamma"};

Polynomial P(const std::string& s, const std::vector<std::string>& vars = kBG) {
    return parse_expr(s, vars);
}

// Deterministic generator for property tests.
struct Rng {
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long long small(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational rational() {
        long long den = small(1, 3);
        return Rational(small(-9, 9), den);
    }
    Polynomial poly(const std::vector<std::string>& vars) {
        Polynomial p(vars);
        int terms = static_cast<int>(small(0, 4));
        for (int t = 0; t < terms; ++t) {
            Polynomial::Exponents e(vars.size());
            for (auto& x : e) x = static_cast<unsigned>(small(0, 2));
            p.add_term(e, rational());
        }
        return p;
    }
};

}  // namespace

TEST_CASE("bigint arithmetic and decimal round trip") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("-98765432109876543210");
    CHECK((a * b).to_string() == "-12193263113702179522496570642237463801111263526900");
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK((q * b + r) == a);
    CHECK(BigInt::gcd(BigInt(48), BigInt(-36)) == BigInt(12));
    BigInt s;
    CHECK(BigInt::from_string("152399025").sqrt_exact(s));
    CHECK(s == BigInt(12345));
    CHECK_FALSE(BigInt(2).sqrt_exact(s));
}

TEST_CASE("rational canonical form") {
    Rational r(6, -4);
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse_expr on the documented examples") {
    Polynomial p = P("2 - 2*beta");
    Polynomial want(kBG);
    want.add_term({0, 0}, Rational(2));
    want.add_term({1, 0}, Rational(-2));
    CHECK(p == want);

    CHECK(P("0").is_zero());

    // (beta-gamma)^2 * 1/2 expands to beta^2/2 - beta gamma + gamma^2/2
    Polynomial q = P("(beta-gamma)^2 * 1/2");
    Polynomial expect(kBG);
    expect.add_term({2, 0}, Rational(1, 2));
    expect.add_term({1, 1}, Rational(-1));
    expect.add_term({0, 2}, Rational(1, 2));
    CHECK(q == expect);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(P("2 +"), ParseError);
    CHECK_THROWS_AS(P("unknown + 1"), ParseError);
    CHECK_THROWS_AS(P("beta ^ -1"), ParseError);
    CHECK_THROWS_AS(P("(beta"), ParseError);
    try {
        P("beta + zeta");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 7);
    }
}

TEST_CASE("poly_arith documented examples") {
    Polynomial bg = P("beta - gamma");
    CHECK(poly_arith(bg, bg, PolyOp::mul) == P("beta^2 - 2*beta*gamma + gamma^2"));
    Polynomial p = P("1/2*beta^2 - 3*gamma + 7");
    CHECK(poly_arith(p, -p, PolyOp::add).is_zero());
    CHECK(poly_arith(P("2 - 2*beta"), P("gamma"), PolyOp::mul) == P("2*gamma - 2*beta*gamma"));
}

TEST_CASE("variable list mismatch is rejected") {
    Polynomial a = P("beta");
    Polynomial b = parse_expr("t", {"t"});
    CHECK_THROWS_AS(a + b, VarMismatchError);
}

TEST_CASE("substitution: documented examples") {
    Polynomial half_sq = P("(beta-gamma)^2 * 1/2");
    CHECK(half_sq.substitute({{"beta", Rational(2)}, {"gamma", Rational(2)}}).is_zero());

    Polynomial p = P("-2 - 2*gamma^2");
    CHECK(p.substitute({{"gamma", Rational(1)}}) == P("-4"));

    Polynomial flat = P("1/2*((2-gamma)^2 - beta^2)");
    CHECK(flat.substitute({{"beta", Rational(2)}, {"gamma", Rational(0)}}).is_zero());

    // partial substitution keeps the remaining variable symbolic
    Polynomial q = P("beta*gamma + gamma");
    CHECK(q.substitute({{"beta", Rational(1)}}) == P("2*gamma"));
    CHECK_THROWS_AS(q.substitute({{"zeta", Rational(1)}}), VarMismatchError);
}

TEST_CASE("eps exponents reduce mod 2") {
    std::vector<std::string> vars = {"beta", "eps"};
    CHECK(parse_expr("eps^2", vars) == parse_expr("1", vars));
    CHECK(parse_expr("eps^3 + eps", vars) == parse_expr("2*eps", vars));
    CHECK(parse_expr("(eps + 1)*(eps - 1)", vars).is_zero());
    // the h^2 = 0 cancellation pattern for the eps-family
    CHECK(parse_expr("eps^2 - 1", vars).is_zero());
}

TEST_CASE("ring axioms hold on random polynomials") {
    Rng rng;
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial a = rng.poly(kBG), b = rng.poly(kBG), c = rng.poly(kBG);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    Rng rng;
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial a = rng.poly(kBG), b = rng.poly(kBG);
        std::map<std::string, Rational> assign = {{"beta", rng.rational()},
                                                  {"gamma", rng.rational()}};
        CHECK((a * b).substitute(assign) == a.substitute(assign) * b.substitute(assign));
        CHECK((a + b).substitute(assign) == a.substitute(assign) + b.substitute(assign));
    }
}

TEST_CASE("printing round-trips through the parser") {
    Rng rng;
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial a = rng.poly(kBG);
        CHECK(parse_expr(a.to_string(), kBG) == a);
    }
    for (const char* s : {"-2 - 2*gamma^2", "2*gamma - 2*beta*gamma",
                          "1/2*beta^2 - beta*gamma + 1/2*gamma^2 - 2"}) {
        Polynomial p = P(s);
        CHECK(parse_expr(p.to_string(), kBG) == p);
    }
}

TEST_CASE("polynomial square root and exact division") {
    CHECK(*P("(beta-gamma)^2").sqrt_exact() == P("beta - gamma"));
    CHECK(*P("9*gamma^2").sqrt_exact() == P("3*gamma"));
    CHECK_FALSE(P("beta^2 + 1").sqrt_exact().has_value());
    CHECK(*P("2*gamma - 2*beta*gamma").divide_exact(P("gamma")) == P("2 - 2*beta"));
    CHECK_FALSE(P("beta + 1").divide_exact(P("gamma")).has_value());
}

TEST_CASE("solve_linear: documented examples") {
    // identity matrix
    RationalMatrix id = RationalMatrix::identity(2);
    PolyVec rhs = {P("beta"), P("gamma - 1")};
    CHECK(id.solve(rhs) == rhs);

    // diag(2,2) x = (2 beta, 0)
    RationalMatrix diag(2);
    diag.at(0, 0) = Rational(2);
    diag.at(1, 1) = Rational(2);
    PolyVec sol = diag.solve({P("2*beta"), P("0")});
    CHECK(sol[0] == P("beta"));
    CHECK(sol[1].is_zero());

    // null-metric block [[0,1],[1,0]] swaps the right-hand side
    RationalMatrix swap(2);
    swap.at(0, 1) = Rational(1);
    swap.at(1, 0) = Rational(1);
    PolyVec sw = swap.solve({P("beta"), P("gamma")});
    CHECK(sw[0] == P("gamma"));
    CHECK(sw[1] == P("beta"));

    RationalMatrix sing(2);
    sing.at(0, 0) = Rational(1);
    CHECK_THROWS_AS(sing.solve({P("1"), P("1")}), SingularMatrixError);
}

TEST_CASE("linear solve residual is identically zero") {
    Rng rng;
    for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix m(3);
        do {
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = rng.rational();
        } while (m.det().is_zero());
        PolyVec rhs = {rng.poly(kBG), rng.poly(kBG), rng.poly(kBG)};
        PolyVec x = m.solve(rhs);
        for (std::size_t i = 0; i < 3; ++i) {
            Polynomial acc(kBG);
            for (std::size_t j = 0; j < 3; ++j) acc += x[j].scaled(m.at(i, j));
            CHECK((acc - rhs[i]).is_zero());
        }
    }
}

TEST_CASE("matrix inverse is exact") {
    RationalMatrix m(3);
    m.at(0, 0) = Rational(1);
    m.at(0, 1) = Rational(2);
    m.at(1, 0) = Rational(3);
    m.at(1, 1) = Rational(4);
    m.at(2, 2) = Rational(-1, 7);
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK(*inv * m == RationalMatrix::identity(3));
    RationalMatrix sing(2);
    CHECK_FALSE(sing.inverse().has_value());
}
