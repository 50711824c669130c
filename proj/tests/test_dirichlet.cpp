#include <catch2/catch_amalgamated.hpp>

#include <eiscong/dirichlet.hpp>
#include <eiscong/json_io.hpp>

using namespace eiscong;

TEST_CASE("canonical generators") {
    auto g5 = canonical_generators(5);
    REQUIRE(g5.size() == 1);
    CHECK(g5[0].first == 2);
    CHECK(g5[0].second == 4);
    auto g8 = canonical_generators(8);
    REQUIRE(g8.size() == 2);
    CHECK(g8[0].second == 2); // class of -1
    CHECK(g8[1].second == 2); // class of 5
    // residues generate: orders multiply to phi(q)
    for (long long q : {3, 4, 5, 7, 8, 9, 12, 15, 16, 24, 36}) {
        long long prod = 1;
        for (auto& [r, o] : canonical_generators(q)) {
            CHECK(gcd_ll(r, q) == 1);
            CHECK(mult_order(r, q) % o == 0); // o divides the true order...
            CHECK(mult_order(r, q) == o);     // ...and equals it
            prod *= o;
        }
        CHECK(prod == euler_phi(q));
    }
}

TEST_CASE("quadratic character mod 4") {
    auto chi = parse_character("quad:4");
    CHECK(chi.modulus() == 4);
    CHECK(chi.order() == 2);
    CHECK(chi.eval(1) == Cyclotomic(1));
    CHECK(chi.eval(3) == Cyclotomic(-1));
    CHECK(chi.eval(2).is_zero());
    CHECK(chi.parity() == -1);
    CHECK(chi.is_primitive());
}

TEST_CASE("legendre symbol mod 7 via order-2 character") {
    auto chi = DirichletCharacter::from_generator_images(7, {{3, 1, 2}});
    CHECK(chi.order() == 2);
    // squares mod 7: 1, 2, 4
    for (long long a : {1, 2, 4}) CHECK(chi.eval(a) == Cyclotomic(1));
    for (long long a : {3, 5, 6}) CHECK(chi.eval(a) == Cyclotomic(-1));
}

TEST_CASE("multiplicativity and exact order") {
    auto chi = parse_character("gen:5:1:4");
    CHECK(chi.order() == 4);
    for (long long a = 1; a < 5; ++a)
        for (long long b = 1; b < 5; ++b)
            CHECK(chi.eval(a * b) == chi.eval(a) * chi.eval(b));
    // chi^2 has exact order 2, not 4
    auto sq = chi * chi;
    CHECK(sq.order() == 2);
    CHECK(sq.eval(2) == Cyclotomic(-1));
    // chi * conj(chi) is trivial
    CHECK((chi * chi.conj()).is_trivial());
}

TEST_CASE("product across moduli") {
    auto a = parse_character("quad:3");
    auto b = parse_character("quad:4");
    auto p = a * b;
    CHECK(p.modulus() == 12);
    CHECK(p.order() == 2);
    CHECK(p.is_primitive());
    for (long long x : {1, 5, 7, 11})
        CHECK(p.eval(x) == a.eval(x) * b.eval(x));
}

TEST_CASE("primitivize") {
    // chi quad mod 3 lifted to modulus 6 is imprimitive with conductor 3
    auto a = parse_character("quad:3");
    auto lifted = a * DirichletCharacter::trivial(2);
    CHECK(lifted.modulus() == 6);
    CHECK_FALSE(lifted.is_primitive());
    auto [f, prim] = lifted.primitivize();
    CHECK(f == 3);
    CHECK(prim == a);
    // trivial character of modulus 12 has conductor 1
    CHECK(DirichletCharacter::trivial(12).conductor() == 1);
}

TEST_CASE("Gauss sums") {
    // W(quad mod 4) = 2i
    auto w4 = gauss_sum(parse_character("quad:4"));
    CHECK(w4 == Cyclotomic::scalar(4, 2) * Cyclotomic::root_of_unity(4, 1));
    // W(quad mod 3) = zeta_3 - zeta_3^2 = i sqrt(3)
    auto w3 = gauss_sum(parse_character("quad:3"));
    CHECK(w3 == Cyclotomic::root_of_unity(3, 1) - Cyclotomic::root_of_unity(3, 2));
    // non-primitive characters are rejected
    CHECK_THROWS_AS(gauss_sum(DirichletCharacter::trivial(4)), domain_error);
}

TEST_CASE("Gauss sum norm identity W(chi) W(chi-bar) = chi(-1) f") {
    for (const char* s : {"quad:3", "quad:4", "gen:5:1:4", "quad:5", "gen:7:1:6", "quad:8",
                          "gen:9:1:6", "quad:11", "quad:12"}) {
        auto chi = parse_character(s);
        auto lhs = gauss_sum(chi) * gauss_sum(chi.conj());
        CHECK(lhs == Cyclotomic(chi.parity() * chi.modulus()));
    }
}

TEST_CASE("value table round trip") {
    auto chi = parse_character("gen:7:1:6");
    auto j = character_to_json(chi);
    auto back = character_from_json(j);
    CHECK(back == chi);
    // corrupted tables are rejected
    j["values"][2] = 5;
    CHECK_THROWS_AS(character_from_json(j), domain_error);
}

TEST_CASE("invalid generator data") {
    CHECK_THROWS_AS(DirichletCharacter::from_generator_images(5, {{3, 1, 4}}), domain_error);
    CHECK_THROWS_AS(DirichletCharacter::from_generator_images(5, {{2, 1, 3}}), domain_error);
}
