#include <doctest.h>

#include "cgr/groebner.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace cgr;

namespace {

// Fixed registration order so that a > b > c > d in every order below.
struct Vars
{
	VarId a = var_id("gb_a"), b = var_id("gb_b"), c = var_id("gb_c"), d = var_id("gb_d");
};
const Vars V;

Poly P(std::string s)
{
	for (const char *name : {"a", "b", "c", "d"})
	{
		std::string out;
		for (std::size_t i = 0; i < s.size(); ++i)
		{
			bool ident_before = i > 0 && (std::isalnum(static_cast<unsigned char>(s[i - 1])) || s[i - 1] == '_');
			bool ident_after = i + 1 < s.size() && (std::isalnum(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '_');
			if (s[i] == name[0] && !ident_before && !ident_after)
				out += std::string("gb_") + name;
			else
				out += s[i];
		}
		s = out;
	}
	return parse_poly(s);
}

MonomialOrder lex() { return MonomialOrder::block({{V.a}, {V.b}, {V.c}, {V.d}}); }

std::set<std::string> as_set(const std::vector<Poly> &ps)
{
	std::set<std::string> out;
	for (const auto &p : ps)
		out.insert(render(primitive_part(p)));
	return out;
}

// Plain multivariate division, written independently of the engine.
Poly naive_remainder(Poly f, const std::vector<Poly> &gs, const MonomialOrder &order)
{
	Poly rem;
	while (!f.is_zero())
	{
		Term lt = leading_term(f, order);
		bool divided = false;
		for (const auto &g : gs)
		{
			Term lg = leading_term(g, order);
			bool div = true;
			std::vector<Monomial::Entry> q;
			for (const auto &[v, e] : lg.mono.entries())
				if (lt.mono.exponent(v) < e)
					div = false;
			if (!div)
				continue;
			for (const auto &[v, e] : lt.mono.entries())
				if (e > lg.mono.exponent(v))
					q.push_back({v, e - lg.mono.exponent(v)});
			f -= Poly::monomial(lt.coeff / lg.coeff, Monomial::from_entries(q)) * g;
			divided = true;
			break;
		}
		if (!divided)
		{
			Poly t = Poly::monomial(lt.coeff, lt.mono);
			rem += t;
			f -= t;
		}
	}
	return rem;
}

Poly s_poly(const Poly &f, const Poly &g, const MonomialOrder &order)
{
	Term lf = leading_term(f, order), lg = leading_term(g, order);
	std::vector<Monomial::Entry> l;
	for (const auto &e : lf.mono.entries())
		l.push_back({e.first, std::max(e.second, lg.mono.exponent(e.first))});
	for (const auto &e : lg.mono.entries())
		if (!lf.mono.exponent(e.first))
			l.push_back(e);
	Monomial lcm = Monomial::from_entries(l);
	auto cofactor = [&](const Term &t) {
		std::vector<Monomial::Entry> q;
		for (const auto &[v, e] : lcm.entries())
			if (e > t.mono.exponent(v))
				q.push_back({v, e - t.mono.exponent(v)});
		return Poly::monomial(1 / t.coeff, Monomial::from_entries(q));
	};
	return cofactor(lf) * f - cofactor(lg) * g;
}

void check_reduced_basis(const std::vector<Poly> &input, const GroebnerBasis &gb)
{
	const auto &G = gb.generators();
	const auto &ord = gb.order();
	for (const auto &f : input)
		CHECK(naive_remainder(f, G, ord).is_zero());
	for (std::size_t i = 0; i < G.size(); ++i)
	{
		CHECK(leading_term(G[i], ord).coeff == 1);
		for (std::size_t j = i + 1; j < G.size(); ++j)
			CHECK(naive_remainder(s_poly(G[i], G[j], ord), G, ord).is_zero());
		// Reduced: no term divisible by another leading monomial.
		for (std::size_t j = 0; j < G.size(); ++j)
		{
			if (i == j)
				continue;
			Monomial lj = leading_term(G[j], ord).mono;
			for (const auto &t : G[i].terms())
			{
				bool div = true;
				for (const auto &[v, e] : lj.entries())
					div = div && t.mono.exponent(v) >= e;
				CHECK_FALSE(div);
			}
		}
	}
}

Poly random_poly(std::mt19937_64 &rng, int terms, int max_deg)
{
	std::uniform_int_distribution<int> coeff(-3, 3), deg(0, max_deg);
	std::vector<Term> ts;
	for (int t = 0; t < terms; ++t)
	{
		std::vector<Monomial::Entry> e{{V.a, deg(rng)}, {V.b, deg(rng)}, {V.c, deg(rng)}};
		ts.push_back({Rational(coeff(rng)), Monomial::from_entries(e)});
	}
	return Poly::from_terms(ts);
}

} // namespace

TEST_CASE("buchberger examples")
{
	auto g = buchberger({P("a^2 - 1"), P("a - 1")});
	CHECK(g.generators() == std::vector<Poly>{P("a - 1")});
	CHECK(buchberger({}).generators().empty());
	auto unit = buchberger({Poly(2)});
	CHECK(unit.generators() == std::vector<Poly>{Poly(1)});
	CHECK(unit.is_unit_ideal());
}

TEST_CASE("reduced bases agree with an external computer algebra system")
{
	// Reference bases computed offline with sympy (grevlex and lex, a > b > c > d).
	struct Case
	{
		std::vector<std::string> gens, grevlex, lex;
	};
	std::vector<Case> cases = {
	    {{"a^2+b^2-1", "a*b-1"}, {"a + b^3 - b", "a^2 + b^2 - 1", "a*b - 1"}, {"a + b^3 - b", "b^4 - b^2 + 1"}},
	    {{"a+b+c", "a*b+b*c+c*a", "a*b*c-1"},
	     {"c^3 - 1", "b^2 + b*c + c^2", "a + b + c"},
	     {"a + b + c", "b^2 + b*c + c^2", "c^3 - 1"}},
	    {{"a^2-b", "a^3-c"}, {"a^2 - b", "a*b - c", "-a*c + b^2"}, {"a^2 - b", "a*b - c", "a*c - b^2", "b^3 - c^2"}},
	    {{"3*a^2*b+a*c-2", "b^2-c*a+1", "a*b*c-d"},
	     {"3*a^3*c - 3*a^2 - 2*b + d", "12*a*c*d + 6*b*d^2 + c^2*d^2 - 4*c^2 + 3*d^3", "3*a^2*b + a*c - 2",
	      "a*b*c - d", "a*c^2 + 3*a*d - 2*c", "2*b*c^2 - c^2*d - 3*d^2", "3*a^2*d - a*c + b*d",
	      "3*a*b*d - 2*b*c + c*d", "-a*c + b^2 + 1"},
	     {"3*a^2*b + b^2 - 1", "a*c - b^2 - 1", "3*a*d + b^2*c - c", "b^3 + b - d",
	      "12*b^2*d + 6*b*d^2 + c^2*d^2 - 4*c^2 + 3*d^3 + 12*d", "2*b*c^2 - c^2*d - 3*d^2",
	      "18*b*d^3 + c^4*d^2 - 4*c^4 + 9*c^2*d^3 + 12*c^2*d + 18*d^4",
	      "c^6*d^2 - 4*c^6 + 9*c^4*d^3 + 12*c^4*d + 27*c^2*d^4 + 27*d^5"}},
	    {{"a+2*b+2*c-1", "a^2+2*b^2+2*c^2-a", "2*a*b+2*b*c-b"},
	     {"7*b + 210*c^3 - 79*c^2 + 3*c", "5*b^2 - b - 3*c^2 + c", "10*b*c - b + 12*c^2 - 4*c", "a + 2*b + 2*c - 1"},
	     {"7*a - 420*c^3 + 158*c^2 + 8*c - 7", "7*b + 210*c^3 - 79*c^2 + 3*c", "84*c^4 - 40*c^3 + c^2 + c"}},
	};
	for (const auto &cs : cases)
	{
		std::vector<Poly> gens, grevlex, lexb;
		for (const auto &s : cs.gens)
			gens.push_back(P(s));
		for (const auto &s : cs.grevlex)
			grevlex.push_back(P(s));
		for (const auto &s : cs.lex)
			lexb.push_back(P(s));
		auto g1 = buchberger(gens);
		CHECK(as_set(g1.generators()) == as_set(grevlex));
		check_reduced_basis(gens, g1);
		auto g2 = buchberger(gens, lex());
		CHECK(as_set(g2.generators()) == as_set(lexb));
		check_reduced_basis(gens, g2);
	}
}

TEST_CASE("normal_form examples")
{
	auto gb = buchberger({P("a - 1")});
	CHECK(normal_form(P("a^2"), gb) == Poly(1));
	CHECK(normal_form(P("a^2*b + 1/3"), buchberger({})) == P("a^2*b + 1/3"));
	auto circ = buchberger({P("a^2+b^2-1")});
	CHECK(normal_form(P("a^2"), circ) == P("-b^2 + 1"));
	// Variables foreign to the basis pass through.
	CHECK(normal_form(P("a*d - d"), gb).is_zero());
	CHECK(normal_form(P("3/2*d*a^3"), gb) == P("3/2*d"));
}

TEST_CASE("ideal_contains and ideal_equal")
{
	CHECK(ideal_contains({P("a")}, P("a*b")));
	CHECK_FALSE(ideal_contains({P("a")}, P("b")));
	CHECK(ideal_equal({P("a"), P("b")}, {P("b"), P("a+b")}));
	CHECK_FALSE(ideal_equal({P("a^2")}, {P("a")}));
	CHECK(ideal_equal({P("2*a")}, {P("a")}));
	CHECK(ideal_equal({}, {Poly()}));
	CHECK(ideal_equal({P("a-1"), P("a+1")}, {Poly(1)}));
}

TEST_CASE("monomial orders")
{
	Monomial a = Monomial::variable(V.a), b2 = Monomial::variable(V.b, 2), c = Monomial::variable(V.c);
	CHECK(MonomialOrder{}.compare(a, b2) < 0);
	CHECK(lex().compare(a, b2) > 0);
	auto blk = MonomialOrder::block({{V.c}});
	CHECK(blk.compare(c, b2) > 0);
	CHECK(blk.compare(a, b2) < 0);
	CHECK(blk.describe() == "block(gb_c > rest)");
	CHECK(MonomialOrder{}.describe() == "degrevlex");
	CHECK_THROWS_AS(MonomialOrder::block({{V.a}, {V.a, V.b}}), std::invalid_argument);
	CHECK(leading_term(P("a + b^2"), lex()).mono == a);
}

TEST_CASE("extending a basis")
{
	auto base = buchberger({P("a^2 - 2"), P("b^2 - 3")});
	// Invert a via t*a - 1 with t in a new top block.
	VarId t = var_id("gb_t");
	auto ext = buchberger_extend(base, {Poly::variable(t) * P("a") - Poly(1)}, base.order().with_top_block({t}));
	CHECK(normal_form(Poly::variable(t), ext) == P("1/2*a"));
	CHECK(buchberger_extend(base, {P("a*b")}).is_unit_ideal());
	// a - b^2 leads with b^2 in degrevlex but with a in lex.
	CHECK_THROWS_AS(buchberger_extend(buchberger({P("a - b^2")}), {}, lex()), std::invalid_argument);
}

TEST_CASE("standard monomial count")
{
	auto gb = buchberger({P("a^2 - 2"), P("b^3 - a")});
	CHECK(standard_monomial_count(gb, {V.a, V.b}) == 6u);
	CHECK(standard_monomial_count(gb, {V.a, V.b, V.c}) == std::nullopt);
	CHECK(standard_monomial_count(buchberger({Poly(1)}), {V.a}) == 0u);
	CHECK(standard_monomial_count(buchberger({P("a^2"), P("a*b"), P("b^2")}), {V.a, V.b}) == 3u);
}

TEST_CASE("timeouts")
{
	Deadline spent = Deadline::after(std::chrono::milliseconds(0));
	CHECK(spent.expired());
	CHECK_THROWS_AS(buchberger({P("3*a^2*b+a*c-2"), P("b^2-c*a+1"), P("a*b*c-d")}, lex(), spent), Timeout);
	CHECK_FALSE(Deadline{}.expired());
	CHECK(spent.sooner(std::chrono::hours(1)).expired());
	CHECK(Deadline{}.sooner(std::chrono::milliseconds(0)).expired());
	CHECK_FALSE(Deadline{}.sooner(std::chrono::hours(1)).expired());
}

TEST_CASE("random ideals produce reduced bases")
{
	std::mt19937_64 rng(3);
	for (int trial = 0; trial < 25; ++trial)
	{
		std::vector<Poly> gens{random_poly(rng, 3, 2), random_poly(rng, 3, 2), random_poly(rng, 2, 2)};
		auto gb = buchberger(gens);
		check_reduced_basis(gens, gb);
		auto gl = buchberger(gens, lex());
		check_reduced_basis(gens, gl);
		// Same ideal under two orders.
		for (const auto &g : gl.generators())
			CHECK(normal_form(g, gb).is_zero());
		for (const auto &g : gb.generators())
			CHECK(normal_form(g, gl).is_zero());
		// Normal forms are idempotent and respect membership.
		Poly f = random_poly(rng, 4, 3);
		Poly nf = normal_form(f, gb);
		CHECK(normal_form(nf, gb) == nf);
		CHECK(normal_form(f - nf, gb).is_zero());
		CHECK(naive_remainder(f, gb.generators(), gb.order()) == nf);
	}
}
