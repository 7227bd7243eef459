#include <doctest.h>

#include "cgr/words.hpp"

#include <random>

using namespace cgr;

namespace {

const std::vector<std::string> G3 = default_names(3);

Word random_word(std::mt19937_64 &rng, int n, int max_len)
{
	std::uniform_int_distribution<int> len(0, max_len), gen(1, n), sign(0, 1);
	std::vector<Syllable> s;
	int l = len(rng);
	for (int i = 0; i < l; ++i)
		s.push_back({gen(rng), sign(rng) ? 1L : -1L});
	return Word::from_syllables(s);
}

} // namespace

TEST_CASE("parse_word examples")
{
	CHECK(parse_word("e", G3).is_identity());
	CHECK(parse_word("g1*g2^-1*g1^2", G3).syllables() == std::vector<Syllable>{{1, 1}, {2, -1}, {1, 2}});
	CHECK(parse_word("g1*g1^-1", G3).is_identity());
	CHECK(parse_word("  g3 ^ 4 * g3 ", G3) == Word::generator(3, 5));
}

TEST_CASE("parse_word errors")
{
	CHECK_THROWS_AS(parse_word("g4", G3), UnknownGenerator);
	try
	{
		parse_word("g1*h", G3);
		FAIL("no throw");
	}
	catch (const UnknownGenerator &e)
	{
		CHECK(e.name() == "h");
		CHECK(e.position() == 3);
	}
	CHECK_THROWS_AS(parse_word("g1^0", G3), ParseError);
	CHECK_THROWS_AS(parse_word("g1 g2", G3), ParseError);
	CHECK_THROWS_AS(parse_word("g1*", G3), ParseError);
	CHECK_THROWS_AS(parse_word("", G3), ParseError);
	CHECK_THROWS_AS(parse_word("g1^x", G3), ParseError);
}

TEST_CASE("a generator named e shadows the identity literal")
{
	std::vector<std::string> names{"e", "f"};
	CHECK(parse_word("e", names) == Word::generator(1));
}

TEST_CASE("multiply, inverse, exponent_sum examples")
{
	Word g1 = Word::generator(1), g2 = Word::generator(2);
	CHECK((g1 * g2) * (inverse(g2) * g1) == Word::generator(1, 2));
	CHECK(Word{} * g1 == g1);
	CHECK(g1 * g1 == Word::generator(1, 2));
	CHECK(inverse(g1 * g2) == inverse(g2) * inverse(g1));
	CHECK(inverse(Word{}).is_identity());
	CHECK(inverse(Word::generator(1, 3)) == Word::generator(1, -3));
	CHECK(exponent_sum(parse_word("g1*g2^-1*g1^2", G3), 1) == 3);
	CHECK(exponent_sum(Word{}, 2) == 0);
	CHECK(exponent_sum(parse_word("g1*g2*g1^-1*g2^-1", G3), 2) == 0);
	CHECK(Word::generator(2).pow(-3) == Word::generator(2, -3));
	CHECK(parse_word("g1*g2", G3).length() == 2);
	CHECK(parse_word("g1^-3*g2", G3).length() == 4);
}

TEST_CASE("cancellation cascades across several syllables")
{
	Word a = parse_word("g1*g2*g3", G3);
	Word b = parse_word("g3^-1*g2^-1*g1^-1*g2", G3);
	CHECK(a * b == Word::generator(2));
}

TEST_CASE("presentations")
{
	Presentation p = parse_presentation("<g1,g2|g1^5,g2^7>");
	CHECK(p.generator_count() == 2);
	REQUIRE(p.relators.size() == 2);
	CHECK(p.relators[0] == Word::generator(1, 5));
	CHECK(p.relators[1] == Word::generator(2, 7));

	Presentation free1 = parse_presentation("<a|>");
	CHECK(free1.generator_count() == 1);
	CHECK(free1.relators.empty());

	Presentation c235 = parse_presentation("< g1, g2, g3 | g1^2, g2^3, g3^5 >");
	CHECK(c235.generator_count() == 3);
	CHECK(c235.relators[2] == Word::generator(3, 5));
	CHECK(render(c235) == "<g1,g2,g3|g1^2,g2^3,g3^5>");

	CHECK_THROWS_AS(parse_presentation("<a,a|>"), ParseError);
	CHECK_THROWS_AS(parse_presentation("<a|b>"), UnknownGenerator);
	CHECK_THROWS_AS(parse_presentation("<a|a"), ParseError);
	CHECK_THROWS_AS(parse_presentation("<a|a> x"), ParseError);
	CHECK_THROWS_AS(parse_presentation("a|a>"), ParseError);
}

TEST_CASE("relator errors report positions in the full text")
{
	try
	{
		parse_presentation("<a,b|a^2,c>");
		FAIL("no throw");
	}
	catch (const UnknownGenerator &e)
	{
		CHECK(e.position() == 9);
	}
}

TEST_CASE("group laws on random words")
{
	std::mt19937_64 rng(11);
	for (int trial = 0; trial < 300; ++trial)
	{
		Word a = random_word(rng, 3, 10), b = random_word(rng, 3, 10), c = random_word(rng, 3, 10);
		CHECK((a * b) * c == a * (b * c));
		CHECK(inverse(inverse(a)) == a);
		CHECK((a * inverse(a)).is_identity());
		for (int i = 1; i <= 3; ++i)
			CHECK(exponent_sum(a * b, i) == exponent_sum(a, i) + exponent_sum(b, i));
		CHECK(parse_word(render(a, G3), G3) == a);
		for (std::size_t k = 1; k < a.syllables().size(); ++k)
			CHECK(a.syllables()[k].index != a.syllables()[k - 1].index);
	}
}
