// One PASS/FAIL line per acceptance criterion. Comparisons are exact; the
// time budgets below are the only tolerances.

#include "cgr/casestudies.hpp"
#include "cgr/identities.hpp"
#include "cgr/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

using namespace cgr;

namespace {

constexpr std::uint64_t kSeed = 1;
constexpr double kIdentityBudget = 60;
constexpr double kOracleBudget = 30;
constexpr double kBoyerBudget = 300;
constexpr double kStructuralBudget = 300;
constexpr double kPropernessTimeout = 900;

struct Outcome
{
	bool passed = false;
	std::string detail;
};

int failures = 0;

void criterion(int id, const char *name, double budget, const std::function<Outcome()> &body)
{
	auto start = std::chrono::steady_clock::now();
	Outcome o;
	try
	{
		o = body();
	}
	catch (const std::exception &e)
	{
		o = {false, std::string("exception: ") + e.what()};
	}
	double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	if (budget > 0 && secs > budget)
	{
		o.passed = false;
		o.detail += "; over the " + std::to_string(static_cast<int>(budget)) + " s budget";
	}
	if (!o.passed)
		++failures;
	std::printf("%s %d %s: %s (%.1f s)\n", o.passed ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
	std::fflush(stdout);
}

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

Outcome identity_suite()
{
	IdentitySuiteOptions o;
	o.seed = kSeed;
	o.samples = 200;
	o.generators = 3;
	o.max_length = 6;
	int checks = 0, failed = 0;
	std::string first;
	for (const auto &r : run_identity_suite(o))
	{
		++checks;
		if (!r.passed())
		{
			++failed;
			if (first.empty())
				first = r.name + " " + r.first_failure;
		}
	}
	return {failed == 0 && checks > 0,
	        std::to_string(checks) + " identities x 200 samples, " + std::to_string(failed) + " failing" +
	            (first.empty() ? "" : " (" + first + ")")};
}

Outcome oracle_equivalence()
{
	FuzzReport r = fuzz_bar(500, 12, 3, kSeed);
	return {r.mismatches.empty() && r.trials == 500,
	        "500 words, length <= 12, 3 generators, seed " + std::to_string(r.seed) + ", " +
	            std::to_string(r.mismatches.size()) + " mismatches"};
}

Outcome two_cyclic_presentation()
{
	const Word e, g1 = W("g1", 2), g2 = W("g2", 2);
	const Poly l1 = parse_poly("lambda1"), l2 = parse_poly("lambda2"), g12 = parse_poly("lambda1*lambda2 - m12");
	int mismatches = 0, ring_mismatches = 0;
	for (auto [s, t] : std::vector<std::pair<long, long>>{{2, 3}, {3, 4}, {5, 7}})
	{
		auto pb = [&](const Word &g, const Word &h, long p) { return power_bar(2, g, h, e, p); };
		auto direct = [&](const Word &w) { return bar(embed_word(2, w)); };
		std::vector<Poly> expanded{pb(e, g1, s) - Poly(1), pb(e, g1, s + 1) - l1, pb(g2, g1, s) - l2,
		                           pb(g2, g1, s + 1) - g12,  pb(e, g2, t) - Poly(1), pb(e, g2, t + 1) - l2,
		                           pb(g1, g2, t) - l1,       pb(g1, g2, t + 1) - g12};
		std::vector<Poly> words{direct(g1.pow(s)) - Poly(1),      direct(g1.pow(s + 1)) - l1,
		                        direct(g2 * g1.pow(s)) - l2,      direct(g2 * g1.pow(s + 1)) - g12,
		                        direct(g2.pow(t)) - Poly(1),      direct(g2.pow(t + 1)) - l2,
		                        direct(g1 * g2.pow(t)) - l1,      direct(g1 * g2.pow(t + 1)) - g12};
		for (std::size_t i = 0; i < 8; ++i)
			mismatches += expanded[i] != words[i];
		QuotientRing KG = quotient_ring_of_presentation(cyclic_product({s, t}));
		bool same = KG.variables() == kf_variables(2) &&
		            KG.basis().generators() == ideal_basis(make_ideal(2, expanded)).generators();
		ring_mismatches += !same;
	}
	return {mismatches == 0 && ring_mismatches == 0,
	        "(s,t) in {(2,3),(3,4),(5,7)}: " + std::to_string(mismatches) +
	            " generator mismatches, " + std::to_string(ring_mismatches) + " ring mismatches"};
}

Outcome boyer_instances()
{
	std::mt19937_64 rng(kSeed);
	int instances = 0, certified = 0, cross = 0;
	std::string first;
	for (long s : {2, 3})
		for (long t : {3, 4})
			for (long r : {2, 3})
				for (int k = 0; k < 10; ++k)
				{
					Word w = random_unit_sum_word(rng, {s, t}, 8);
					++instances;
					Certificate c = boyer_certificate({s, t, r, w});
					bool ok = c.certified() && c.degree_ok && c.unit_ok;
					certified += ok;
					Word nw = normalize_exponent_sums(w, {s, t});
					bool no = normally_generates_check(cyclic_product({s, t}), {nw.pow(r)}).verdict == Verdict::certified_no;
					cross += no;
					if ((!ok || !no) && first.empty())
						first = "(" + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(r) + ") " +
						        render(w);
				}
	return {certified == instances && cross == instances,
	        std::to_string(certified) + "/" + std::to_string(instances) + " certificates, " + std::to_string(cross) +
	            "/" + std::to_string(instances) + " CertifiedNo" + (first.empty() ? "" : ", first failure " + first)};
}

Outcome sw_structural()
{
	int static_failed = 0;
	std::string first;
	std::vector<NamedCheck> st = sw_static_checks();
	for (const auto &c : st)
		if (!c.passed)
		{
			++static_failed;
			if (first.empty())
				first = c.name;
		}
	std::mt19937_64 rng(kSeed);
	int ok = 0;
	for (int k = 0; k < 20; ++k)
	{
		Word w = random_unit_sum_word(rng, {2, 3, 5}, 8);
		SWReport rep = sw_verify({2, 3, 5, w}, false);
		if (rep.structural_ok())
			++ok;
		else if (first.empty())
			first = render(w);
	}
	return {static_failed == 0 && ok == 20,
	        std::to_string(st.size() - static_failed) + "/" + std::to_string(st.size()) + " static identities, " +
	            std::to_string(ok) + "/20 words pass matrix rows and w1 - W in J" +
	            (first.empty() ? "" : ", first failure " + first)};
}

Outcome sw_properness()
{
	const std::vector<const char *> words{"g1*g2*g3", "g3*g2*g1", "g1^3*g2^-2*g3^6", "g1*g2*g1^-1*g3*g1"};
	int proper = 0, timeouts = 0, whole = 0;
	std::string detail;
	for (const char *text : words)
	{
		SWReport rep = sw_verify({2, 3, 5, W(text, 3)}, true, Deadline::after_seconds(kPropernessTimeout));
		bool structural = rep.structural_ok();
		switch (rep.properness)
		{
		case Properness::proper:
			proper += structural;
			break;
		case Properness::timed_out:
			++timeouts;
			break;
		default:
			++whole;
			break;
		}
		char buf[160];
		std::snprintf(buf, sizeof buf, "%s%s %s", detail.empty() ? "" : ", ", text, to_string(rep.properness).c_str());
		detail += buf;
	}
	bool passed = whole == 0 && proper + timeouts == static_cast<int>(words.size()) && proper >= 1;
	return {passed, "(2,3,5): " + detail + (timeouts ? " [timeouts are reported, not failed]" : "")};
}

Outcome p_polynomials()
{
	const VarId x = var_id("x");
	const Poly X = Poly::variable(x);
	int bad = 0;
	for (long n = -49; n <= 49; ++n)
		bad += Poly(2) * X * chebyshev_like(n, x) != chebyshev_like(n - 1, x) + chebyshev_like(n + 1, x);
	for (long n = 0; n <= 50; ++n)
	{
		Poly p = chebyshev_like(n, x);
		bad += chebyshev_like(-n, x) != -p;
		if (n >= 1)
		{
			bad += degree_in(p, x) != std::optional<unsigned>(static_cast<unsigned>(n - 1));
			bad += evaluate(p, [](VarId) { return Rational(1); }) != n;
			bad += evaluate(p, [](VarId) { return Rational(-1); }) != (n % 2 ? n : -n);
		}
	}
	bad += !chebyshev_like(0, x).is_zero();
	bad += chebyshev_like(1, x) != Poly(1);
	return {bad == 0, "recurrence, degree, P_n(1), P_n(-1), P_-n for |n| <= 50: " + std::to_string(bad) + " violations"};
}

Outcome ideal_properties()
{
	std::mt19937_64 rng(kSeed);
	int conj = 0, inv = 0, sum = 0;
	for (int k = 0; k < 50; ++k)
	{
		int n = 2 + k % 2;
		Word l = random_word(rng, n, 5), h = random_word(rng, n, 3);
		IdealSpec base = hashhash_generators({l}, n);
		conj += ideal_equal(base, hashhash_generators({h * l * inverse(h)}, n));
		inv += ideal_equal(base, hashhash_generators({inverse(l)}, n));
		sum += ideal_equal(hash_generators({l}, n), ideal_sum(base, bullet_generators({l}, n)));
	}
	return {conj == 50 && inv == 50 && sum == 50,
	        "50 relators over 2-3 generators: conjugation " + std::to_string(conj) + "/50, inversion " +
	            std::to_string(inv) + "/50, L# = L## + L* " + std::to_string(sum) + "/50"};
}

Outcome cyclic_dimensions()
{
	std::string detail;
	bool ok = true;
	for (int n = 2; n <= 8; ++n)
	{
		// Orbits of k -> -k on Z/n.
		std::set<std::pair<int, int>> orbits;
		for (int k = 0; k < n; ++k)
			orbits.insert({std::min(k, (n - k) % n), std::max(k, (n - k) % n)});
		auto dim = quotient_ring_of_presentation(parse_presentation("<g1 | g1^" + std::to_string(n) + ">")).dimension();
		ok = ok && dim && *dim == orbits.size() && *dim == static_cast<std::size_t>(n / 2 + 1);
		detail += (n > 2 ? " " : "") + std::to_string(dim ? static_cast<long>(*dim) : -1L);
	}
	return {ok, "dimensions for n = 2..8:" + std::string(detail.empty() ? "" : " ") + detail};
}

} // namespace

int main()
{
	criterion(1, "identity suite", kIdentityBudget, identity_suite);
	criterion(2, "quaternion oracle equivalence", kOracleBudget, oracle_equivalence);
	criterion(3, "K[C_s * C_t] presentation", 0, two_cyclic_presentation);
	criterion(4, "Boyer certificates", kBoyerBudget, boyer_instances);
	criterion(5, "three-factor structural suite", kStructuralBudget, sw_structural);
	criterion(6, "three-factor properness", 0, sw_properness);
	criterion(7, "P_n properties", 0, p_polynomials);
	criterion(8, "ideal calculus properties", 0, ideal_properties);
	criterion(9, "cyclic group dimensions", 0, cyclic_dimensions);
	std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
	return failures ? 1 : 0;
}
