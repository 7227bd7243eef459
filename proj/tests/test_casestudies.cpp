#include "cgr/casestudies.hpp"

#include <doctest.h>

#include <functional>

using namespace cgr;

namespace {

Poly P(const char *s) { return parse_poly(s); }
Word W(const char *s, int n) { return parse_word(s, default_names(n)); }

Presentation cyclic_product(const std::vector<long> &orders)
{
	std::string text = "<";
	for (std::size_t i = 0; i < orders.size(); ++i)
		text += (i ? ", g" : "g") + std::to_string(i + 1);
	text += " | ";
	for (std::size_t i = 0; i < orders.size(); ++i)
		text += (i ? ", g" : "g") + std::to_string(i + 1) + "^" + std::to_string(orders[i]);
	return parse_presentation(text + ">");
}

// Every freely reduced word over two generators with at most `max` letters.
void for_each_word(long max, const std::function<void(const Word &)> &f)
{
	std::function<void(Word, int, long)> rec = [&](Word w, int last, long left) {
		f(w);
		if (left == 0)
			return;
		for (int letter : {1, -1, 2, -2})
			if (letter != -last)
				rec(w * Word::generator(letter > 0 ? letter : -letter, letter > 0 ? 1 : -1), letter, left - 1);
	};
	rec(Word(), 0, max);
}

} // namespace

TEST_CASE("exponent sum normalization")
{
	CHECK(normalize_exponent_sums(W("g1*g2", 2), {2, 3}) == W("g1*g2", 2));
	CHECK(normalize_exponent_sums(W("g1^4*g2", 2), {3, 3}) == W("g1^4*g2*g1^-3", 2));
	CHECK(normalize_exponent_sums(W("g2^-2*g1^-1", 2), {2, 3}) == W("g2^-2*g1^-1*g1^2*g2^3", 2));
	CHECK_THROWS_AS(normalize_exponent_sums(W("g1^2*g2", 2), {3, 3}), std::invalid_argument);
	CHECK_THROWS_AS(normalize_exponent_sums(W("g1*g2*g3", 3), {2, 3}), std::invalid_argument);

	std::mt19937_64 rng(3);
	for (int i = 0; i < 20; ++i)
	{
		Word w = normalize_exponent_sums(random_unit_sum_word(rng, {3, 4, 5}, 8), {3, 4, 5});
		for (int g = 1; g <= 3; ++g)
			CHECK(exponent_sum(w, g) == 1);
	}
}

TEST_CASE("boyer theta")
{
	BoyerRing R = boyer_ring(5, 7);
	CHECK(boyer_theta(P("lambda1*lambda2 - m12"), R) == P("mu1*mu2 - s1*s2*x"));
	CHECK(boyer_theta(P("lambda1"), R) == P("mu1"));
	CHECK(boyer_theta(P("m12^2"), R) == R.Ex.reduce(P("(1 - mu1^2)*(1 - mu2^2)*x^2")));
	CHECK(R.Ex.equal(boyer_theta(P("m12^2"), R), P("s1^2*s2^2*x^2")));
	CHECK_THROWS_AS(boyer_theta(P("lambda3"), R), std::invalid_argument);
	CHECK_THROWS_AS(boyer_theta(P("zeta"), R), std::invalid_argument);
	CHECK(R.E.dimension() == std::optional<std::size_t>(4 * 4 * 6));
}

TEST_CASE("boyer certificates")
{
	Certificate c = boyer_certificate({2, 3, 2, W("g1*g2", 2)});
	BoyerRing R = boyer_ring(2, 3);
	CHECK(R.Ex.equal(c.theta_image, P("mu1*mu2 - s1*s2*x")));
	CHECK(R.Ex.equal(c.remainder, P("mu1*mu2 - s1*s2*x")));
	CHECK(c.degree == std::optional<unsigned>(1));
	CHECK(R.E.equal(c.leading_coefficient, P("-2*s1*s2")));
	REQUIRE(c.leading_inverse);
	CHECK(R.E.equal(*c.leading_inverse * c.leading_coefficient, Poly(1)));
	CHECK(c.certified());
	CHECK(c.conclusion == "(g1*g2)^2 does not normally generate C_2 * C_3");

	Certificate c3 = boyer_certificate({2, 3, 3, W("g1*g2", 2)});
	CHECK(c3.degree == std::optional<unsigned>(2));
	CHECK(c3.certified());

	CHECK_THROWS_AS(boyer_certificate({2, 3, 2, W("g1^2*g2", 2)}), std::invalid_argument);
	CHECK_THROWS_AS(boyer_certificate({2, 3, 1, W("g1*g2", 2)}), std::invalid_argument);
}

TEST_CASE("zero divisors are skipped as leading coefficients")
{
	// P_4 has the root 0, so mu2 is a zero divisor in E for t = 4.
	Certificate c = boyer_certificate({3, 4, 3, W("g1^-1*g2^-2*g1^-1*g2^-1", 2)});
	REQUIRE(c.nonzero_degree);
	REQUIRE(c.degree);
	CHECK(*c.nonzero_degree == 4);
	CHECK(*c.degree == 2);
	CHECK(c.certified());
}

TEST_CASE("boyer form check on all short words")
{
	for (auto [s, t] : std::vector<std::pair<long, long>>{{2, 3}, {3, 4}})
	{
		int count = 0;
		for_each_word(6, [&, s = s, t = t](const Word &w) {
			if ((exponent_sum(w, 1) - 1) % s != 0 || (exponent_sum(w, 2) - 1) % t != 0)
				return;
			++count;
			Certificate c;
			CHECK_NOTHROW(c = boyer_certificate({s, t, 2, w}));
			CHECK(c.certified());
		});
		CHECK(count > 10);
	}
}

TEST_CASE("boyer agrees with the normal generation check")
{
	std::mt19937_64 rng(17);
	for (int i = 0; i < 8; ++i)
	{
		long s = 2 + i % 2, t = 3 + (i / 2) % 2, r = 2 + (i / 4) % 2;
		Word w = random_unit_sum_word(rng, {s, t}, 6);
		CAPTURE(render(w));
		Certificate c = boyer_certificate({s, t, r, w});
		CHECK(c.certified());
		Word nw = normalize_exponent_sums(w, {s, t});
		CHECK(normally_generates_check(cyclic_product({s, t}), {nw.pow(r)}).verdict == Verdict::certified_no);
	}
}

TEST_CASE("sw theta")
{
	const SWRing &G = sw_generic_ring();
	CHECK(sw_theta(P("m12"), G) == G.A.reduce(P("s1*s2*x")));
	CHECK(sw_theta(P("m13"), G) == G.A.reduce(P("s3*s1*y")));
	CHECK(sw_theta(P("m23"), G) == G.A.reduce(P("s2*s3*(u + x*y)")));
	CHECK(sw_theta(P("w123"), G) == G.A.reduce(P("s1*s2*s3*v")));
	CHECK(sw_theta(P("lambda2"), G) == P("mu2"));
	CHECK(sw_theta(P("1 - lambda1^2"), G) == G.A.reduce(P("s1^2")));
	CHECK_THROWS_AS(sw_theta(P("m14"), G), std::invalid_argument);
	CHECK(G.A.is_zero(P("v^2 - (1 - x^2)*(1 - y^2) + u^2")));

	SWRing R = sw_build(2, 3, 5);
	CHECK(R.E.dimension() == std::optional<std::size_t>(8 * 1 * 2 * 4));
}

TEST_CASE("sw static checks")
{
	std::vector<NamedCheck> checks = sw_static_checks();
	CHECK(checks.size() >= 16 + 3 + 3);
	for (const auto &c : checks)
	{
		CAPTURE(c.name);
		CAPTURE(c.residue);
		CHECK(c.passed);
	}
}

TEST_CASE("sw elements")
{
	SWRing R = sw_build(2, 3, 5);
	Word w = W("g1*g2*g3", 3);
	SWElements e = sw_elements(w, R);
	CHECK(e.w1 == sw_theta(dot(AElem::v(3, 1), vec(embed_word(3, w))), R));
	GroebnerBasis J = buchberger_extend(R.A.basis(), sw_J_generators(R));
	CHECK(normal_form(e.w1 - sw_W(R), J).is_zero());

	// With w = g1 every bracket against v1 vanishes.
	SWElements g1 = sw_elements(W("g1", 3), R);
	CHECK(g1.w2p.is_zero());
	CHECK(g1.w3p.is_zero());
	CHECK(g1.w2.is_zero());
	CHECK(g1.w3.is_zero());
}

TEST_CASE("sw generating set matches the full hashhash image")
{
	// Second route: theta applied to every v . vec(w) over the Lambda generators.
	SWRing R = sw_build(2, 3, 5);
	std::mt19937_64 rng(23);
	for (int i = 0; i < 3; ++i)
	{
		Word w = i == 0 ? W("g1*g2*g3", 3) : normalize_exponent_sums(random_unit_sum_word(rng, {2, 3, 5}, 6), {2, 3, 5});
		CAPTURE(render(w));
		std::vector<Poly> direct;
		for (const auto &g : hashhash_generators({w}, 3).generators)
			direct.push_back(sw_theta(g, R));
		GroebnerBasis a = buchberger_extend(R.A.basis(), sw_elements(w, R).all());
		GroebnerBasis b = buchberger_extend(R.A.basis(), direct);
		CHECK(a.generators() == b.generators());
		CHECK_FALSE(a.is_unit_ideal());
	}
}

TEST_CASE("sw verify")
{
	SWReport rep = sw_verify({2, 3, 5, W("g1*g2*g3", 3)}, true, Deadline::after_seconds(600));
	CHECK(rep.structural_ok());
	CHECK(rep.checks.size() == 5);
	CHECK(rep.properness == Properness::proper);
	CHECK(rep.conclusion == "g1*g2*g3 does not normally generate C_2 * C_3 * C_5");

	std::mt19937_64 rng(29);
	for (auto orders : std::vector<std::array<long, 3>>{{2, 3, 5}, {3, 3, 4}, {2, 2, 2}})
		for (int i = 0; i < 3; ++i)
		{
			Word w = random_unit_sum_word(rng, {orders[0], orders[1], orders[2]}, 8);
			CAPTURE(render(w));
			SWReport r = sw_verify({orders[0], orders[1], orders[2], w}, false);
			CHECK(r.structural_ok());
			CHECK(r.properness == Properness::not_checked);
			CHECK(r.conclusion.empty());
		}

	CHECK_THROWS_AS(sw_verify({2, 3, 5, W("g1^2*g2*g3", 3)}, false), std::invalid_argument);
	CHECK(to_string(Properness::timed_out) == "timed_out");
}

TEST_CASE("conjecture probe")
{
	const SWRing &G = sw_generic_ring();
	const QuotientRing &A = sw_plain_ring();
	CHECK_FALSE(is_whole_ring({Poly(), P("x*y")}, A));
	std::array<Poly, 4> e1{Poly(1), Poly(), Poly(), Poly()};
	CHECK(sw_form(e1, e1, G) == P("u"));
	CHECK(sw_form(e1, {Poly(), Poly(), Poly(1), Poly()}, G) == P("1 - x^2"));
	CHECK(is_whole_ring({P("u"), P("v"), P("1 - x^2"), P("1 - y^2"), P("x*y + 2")}, A));

	ProbeReport rep = conjecture_probe({0, 0, 0, 1}, 5, 10);
	CHECK(rep.seed == 5);
	CHECK(rep.counterexamples.empty());
	CHECK(rep.proper + rep.timed_out == 10);
	CHECK_THROWS_AS(conjecture_probe({1, 0, 0, 0}, 1, 1), std::invalid_argument);
}
