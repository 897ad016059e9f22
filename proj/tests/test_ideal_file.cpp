#include <catch2/catch_amalgamated.hpp>

#include "lexpp/ideal_file.hpp"

using namespace lexpp;

TEST_CASE("parse the worked instance file") {
    const IdealFile f = parse_ideal_file(
        "ring 2\npowers 2 2\ngen 2 0\ngen 0 2\ngen 1 1\n");
    CHECK(f.ring.var_count() == 2);
    REQUIRE(f.powers.has_value());
    CHECK(f.powers->exponents() == std::vector<int>{2, 2});
    CHECK(f.to_ideal() ==
          MonomialIdeal(RingContext(2),
                        {Monomial({2, 0}), Monomial({0, 2}), Monomial({1, 1})}));
}

TEST_CASE("parse plex lines") {
    const IdealFile f = parse_ideal_file("ring 3\nplex 1 3\ngen 3 0 0\n");
    CHECK_FALSE(f.plex.empty());
    CHECK(plex_ideal(f.plex) == MonomialIdeal(RingContext(3), {Monomial({3, 0, 0})}));
    CHECK(f.to_ideal() == MonomialIdeal(RingContext(3), {Monomial({3, 0, 0})}));
    CHECK_FALSE(f.powers.has_value());
}

TEST_CASE("comments and blank lines are ignored") {
    const IdealFile f = parse_ideal_file(
        "# a comment\n\nring 2   # trailing comment\n\ngen 1 1\n# done\n");
    CHECK(f.gens.size() == 1);
}

TEST_CASE("parse diagnostics carry line numbers") {
    using Catch::Matchers::ContainsSubstring;
    CHECK_THROWS_WITH(parse_ideal_file("ring 2\npowers 3 2\n"),
                      ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_ideal_file("gen 1 1\n"), ContainsSubstring("ring"));
    CHECK_THROWS_WITH(parse_ideal_file("ring 2\ngen 1\n"), ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_ideal_file("ring 2\ngen 1 x\n"), ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_ideal_file("ring 2\nfoo 1\n"), ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_ideal_file("ring 2\nring 3\n"), ContainsSubstring("duplicate"));
    CHECK_THROWS_AS(parse_ideal_file("ring 2\nplex 2 2 2\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal_file(""), ParseError);
}

TEST_CASE("plex exponent counts are per component") {
    CHECK_THROWS_AS(parse_ideal_file("ring 3\nplex 1 3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal_file("ring 3\nplex 4 1 1 1 1\n"), ParseError);
}

TEST_CASE("round trip: parse after render is the identity") {
    const std::string text =
        "ring 3\npowers 2 3\nplex 1 2\nplex 2 2 0\nplex 2 1 1\n"
        "gen 2 0 0\ngen 0 3 0\ngen 1 1 1\n";
    const IdealFile f = parse_ideal_file(text);
    CHECK(parse_ideal_file(render_ideal_file(f)) == f);
}

TEST_CASE("round trip on generated instances") {
    for (std::uint64_t seed = 40; seed < 70; ++seed) {
        const int n = 2 + static_cast<int>(seed % 3);
        const Instance inst =
            random_instance(seed, n, 1 + static_cast<int>(seed % n), 4, 4,
                            static_cast<int>(seed % 4));
        const IdealFile f = IdealFile::from_instance(inst);
        const IdealFile reparsed = parse_ideal_file(render_ideal_file(f));
        CHECK(reparsed == f);
        CHECK(reparsed.to_ideal() == inst.I);
        CHECK(reparsed.powers_or_none() == inst.P);
        CHECK(reparsed.plex == inst.Ltilde);
    }
}

TEST_CASE("rendering is canonical: generators sorted lex-descending") {
    const IdealFile f = parse_ideal_file("ring 2\ngen 0 2\ngen 2 0\n");
    const std::string rendered = render_ideal_file(f);
    CHECK(rendered == "ring 2\ngen 2 0\ngen 0 2\n");
}
