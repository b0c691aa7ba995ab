#include <doctest.h>

#include <random>

#include "heegraph/errors.hpp"
#include "heegraph/polynomial.hpp"

using namespace heegraph;

namespace {
const MultiPoly X = MultiPoly::variable(Var::x);
const MultiPoly Y = MultiPoly::variable(Var::y);
const MultiPoly Z = MultiPoly::variable(Var::z);
const MultiPoly W = MultiPoly::variable(Var::w);
const MultiPoly Lam = MultiPoly::variable(Var::L);
}  // namespace

TEST_SUITE("polynomial") {
    TEST_CASE("formatting") {
        CHECK(MultiPoly().to_string() == "0");
        CHECK(MultiPoly(-5).to_string() == "-5");
        CHECK((X * X * Y + MultiPoly(3) * Y * Z - MultiPoly(1)).to_string() == "x^2*y + 3*y*z - 1");
        CHECK((Lam * Lam - Lam).to_string() == "L^2 - L");
        CHECK((MultiPoly(1) + Y).to_string() == "y + 1");
        CHECK((-X).to_string() == "-x");
    }

    TEST_CASE("canonical order is graded reverse lexicographic") {
        // equal degree: smaller exponent in the last differing variable first
        CHECK((X * Y + X * X + Y * Y).to_string() == "x^2 + x*y + y^2");
        CHECK((Y * W + X * Z).to_string() == "x*z + y*w");
        CHECK((X + Y * Y * Y + MultiPoly(2)).to_string() == "y^3 + x + 2");
    }

    TEST_CASE("arithmetic") {
        CHECK((X - MultiPoly(1)).pow(3) == X * X * X - MultiPoly(3) * X * X + MultiPoly(3) * X - MultiPoly(1));
        CHECK(shifted_power(Var::x, -1, 3) == (X - MultiPoly(1)).pow(3));
        CHECK((X + Y) * (X - Y) == X * X - Y * Y);
        CHECK((X - X).is_zero());
        const auto p = X * X * Y + MultiPoly(7) * Z;
        CHECK(p.substitute(Var::x, Y + MultiPoly(1)) == (Y + MultiPoly(1)).pow(2) * Y + MultiPoly(7) * Z);
        std::array<mpz_class, kVarCount> at{2, 3, 5, 0, 0};
        CHECK(p.evaluate(at) == 4 * 3 + 7 * 5);
        CHECK(p.degree(Var::x) == 2);
        CHECK(p.total_degree() == 3);
        CHECK((Lam.pow(3) - MultiPoly(2) * Lam).univariate_coefficients(Var::L) ==
              std::vector<mpz_class>{0, -2, 0, 1});
    }

    TEST_CASE("big coefficients stay exact") {
        const auto p = (X + MultiPoly(1)).pow(80);
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), 80, 40);
        Exponents e{};
        e[0] = 40;
        CHECK(p.coefficient(e) == c);
        CHECK(MultiPoly::parse(p.to_string()) == p);
    }

    TEST_CASE("parse accepts the printed form and rejects junk") {
        CHECK(MultiPoly::parse("0").is_zero());
        CHECK(MultiPoly::parse("x^2*y + 3*y*z - 1") == X * X * Y + MultiPoly(3) * Y * Z - MultiPoly(1));
        CHECK(MultiPoly::parse("-L") == -Lam);
        CHECK_THROWS_AS(MultiPoly::parse("x^"), ParseError);
        CHECK_THROWS_AS(MultiPoly::parse("q + 1"), ParseError);
        CHECK_THROWS_AS(MultiPoly::parse("3 +"), ParseError);
    }

    TEST_CASE("random round trips") {
        std::mt19937_64 rng(42);
        std::uniform_int_distribution<int> exp(0, 5);
        std::uniform_int_distribution<long> coef(-1000, 1000);
        for (int i = 0; i < 500; ++i) {
            MultiPoly p;
            for (int k = 0; k < 6; ++k) {
                Exponents e{};
                for (auto& x : e) x = exp(rng);
                p.add_term(e, mpz_class(coef(rng)) * coef(rng) * coef(rng));
            }
            const auto text = p.to_string();
            const auto back = MultiPoly::parse(text);
            CHECK(back == p);
            CHECK(back.to_string() == text);
            for (const auto& [e, c] : p.terms()) CHECK(c != 0);
        }
    }
}
