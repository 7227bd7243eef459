#include "cgr/casestudies.hpp"

#include <chrono>

namespace cgr {

namespace {

Poly var(VarId v) { return Poly::variable(v); }

std::string order_name(long n) { return "C_" + std::to_string(n); }

std::string free_product_name(const std::vector<long> &orders)
{
	std::string out;
	for (std::size_t i = 0; i < orders.size(); ++i)
		out += (i ? " * " : "") + order_name(orders[i]);
	return out;
}

NamedCheck zero_check(std::string name, const Poly &nf)
{
	return {std::move(name), nf.is_zero(), render(nf)};
}

// Affine combination of vars with coefficients in [-height, height].
Poly random_linear(std::mt19937_64 &rng, const std::vector<Poly> &vars, int height)
{
	std::uniform_int_distribution<int> coeff(-height, height);
	Poly out(coeff(rng));
	for (const auto &v : vars)
		out += Poly(coeff(rng)) * v;
	return out;
}

} // namespace

// ---------------------------------------------------------------- words

Word normalize_exponent_sums(const Word &w, const std::vector<long> &orders)
{
	const int n = static_cast<int>(orders.size());
	if (w.max_index() > n)
		throw std::invalid_argument("word " + render(w) + " uses a generator beyond g" + std::to_string(n));
	Word out = w;
	for (int i = 1; i <= n; ++i)
	{
		long o = orders[i - 1];
		if (o < 2)
			throw std::invalid_argument("cyclic factor orders must exceed 1");
		long e = exponent_sum(w, i);
		if ((e - 1) % o != 0)
			throw std::invalid_argument("exponent sum of g" + std::to_string(i) + " in " + render(w) + " is " +
			                            std::to_string(e) + ", not 1 modulo " + std::to_string(o));
		if (e != 1)
			out = out * Word::generator(i, 1 - e);
	}
	return out;
}

Word random_unit_sum_word(std::mt19937_64 &rng, const std::vector<long> &orders, long max_letters)
{
	const int n = static_cast<int>(orders.size());
	for (int attempt = 0; attempt < 1000000; ++attempt)
	{
		Word w = random_word(rng, n, max_letters);
		bool ok = true;
		for (int i = 1; i <= n && ok; ++i)
			ok = (exponent_sum(w, i) - 1) % orders[i - 1] == 0;
		if (ok)
			return w;
	}
	throw std::runtime_error("no word with unit exponent sums found within " + std::to_string(max_letters) +
	                         " letters");
}

// ---------------------------------------------------------------- two factors

BoyerRing boyer_ring(long s, long t)
{
	if (s < 2 || t < 2)
		throw std::invalid_argument("cyclic factor orders must exceed 1");
	BoyerRing R;
	R.s = s;
	R.t = t;
	R.x = var_id("x");
	R.s1 = var_id("s1");
	R.s2 = var_id("s2");
	R.mu1 = var_id("mu1");
	R.mu2 = var_id("mu2");
	std::vector<VarId> evars{R.s1, R.s2, R.mu1, R.mu2};
	std::vector<Poly> rels{chebyshev_like(s, R.mu1), chebyshev_like(t, R.mu2),
	                       var(R.s1) * var(R.s1) + var(R.mu1) * var(R.mu1) - Poly(1),
	                       var(R.s2) * var(R.s2) + var(R.mu2) * var(R.mu2) - Poly(1)};
	R.E = QuotientRing(evars, rels, MonomialOrder::block({evars}));
	R.Ex = R.E.extend({R.x}, {}, R.E.order().with_top_block({R.x}));
	return R;
}

Poly boyer_theta(const Poly &p, const BoyerRing &ring)
{
	std::map<VarId, Poly> image;
	for (VarId v : variables(p))
	{
		auto sym = classify(v);
		if (sym && sym->kind == SymbolKind::lambda && sym->index[0] <= 2)
			image[v] = var(sym->index[0] == 1 ? ring.mu1 : ring.mu2);
		else if (sym && sym->kind == SymbolKind::m && sym->index[0] == 1 && sym->index[1] == 2)
			image[v] = var(ring.s1) * var(ring.s2) * var(ring.x);
		else
			throw std::invalid_argument("foreign variable " + var_name(v));
	}
	return ring.Ex.reduce(substitute(p, image));
}

Certificate boyer_certificate(const BoyerInstance &inst, const Deadline &deadline)
{
	if (inst.r < 2)
		throw std::invalid_argument("the power r must exceed 1");
	Certificate c;
	c.s = inst.s;
	c.t = inst.t;
	c.r = inst.r;
	c.word = render(inst.w);
	Word w = normalize_exponent_sums(inst.w, {inst.s, inst.t});
	c.normalized_word = render(w);

	BoyerRing R = boyer_ring(inst.s, inst.t);
	c.order = R.Ex.order().describe();
	const Poly X = var(R.x);
	c.theta_image = boyer_theta(bar(embed_word(2, w)), R);
	deadline.check();

	// Remainder on division by 1 - x^2: x^2 -> 1.
	Poly even, odd;
	for (const auto &[k, coeff] : coefficients_in(c.theta_image, R.x))
		(k % 2 ? odd : even) += coeff;
	c.remainder = R.Ex.reduce(even + odd * X);
	Poly expected = R.Ex.reduce(var(R.mu1) * var(R.mu2) - var(R.s1) * var(R.s2) * X);
	if (c.remainder != expected)
		throw FormCheckFailed("theta(bar w) for w = " + c.normalized_word + " has remainder " + render(c.remainder) +
		                      " modulo 1 - x^2, expected " + render(expected));

	Poly composite = R.Ex.reduce(substitute(chebyshev_like(inst.r, R.x), {{R.x, c.theta_image}}), deadline);
	// E splits as a product of fields, so the top nonzero coefficient can be a
	// zero divisor. The degree is taken at the highest unit coefficient.
	auto coeffs = coefficients_in(composite, R.x);
	for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
	{
		Poly coeff = R.E.reduce(it->second);
		if (coeff.is_zero())
			continue;
		if (!c.nonzero_degree)
			c.nonzero_degree = it->first;
		if (is_whole_ring({coeff}, R.E, deadline))
		{
			c.degree = it->first;
			c.leading_coefficient = coeff;
			c.leading_inverse = invert(coeff, R.E, deadline);
			c.unit_ok = true;
			break;
		}
	}
	c.degree_ok = c.degree && static_cast<long>(*c.degree) >= inst.r - 1;
	if (c.degree_ok && c.unit_ok)
		c.conclusion = "(" + c.word + ")^" + std::to_string(inst.r) + " does not normally generate " +
		               free_product_name({inst.s, inst.t});
	return c;
}

// ---------------------------------------------------------------- three factors

SWRing sw_build(long r, long s, long t)
{
	const std::array<long, 3> orders{r, s, t};
	for (long o : orders)
		if (o != 0 && o < 2)
			throw std::invalid_argument("cyclic factor orders must exceed 1");
	SWRing R;
	R.r = r;
	R.s = s;
	R.t = t;
	R.x = var_id("x");
	R.y = var_id("y");
	R.u = var_id("u");
	R.v = var_id("v");
	std::vector<VarId> evars;
	std::vector<Poly> rels;
	for (int i = 0; i < 3; ++i)
	{
		R.sv[i] = var_id("s" + std::to_string(i + 1));
		R.mu[i] = var_id("mu" + std::to_string(i + 1));
	}
	for (int i = 0; i < 3; ++i)
		evars.push_back(R.sv[i]);
	for (int i = 0; i < 3; ++i)
	{
		evars.push_back(R.mu[i]);
		if (orders[i] != 0)
			rels.push_back(chebyshev_like(orders[i], R.mu[i]));
		rels.push_back(var(R.sv[i]) * var(R.sv[i]) + var(R.mu[i]) * var(R.mu[i]) - Poly(1));
	}
	R.E = QuotientRing(evars, rels, MonomialOrder::block({evars}));
	Poly rel = (Poly(1) - R.X() * R.X()) * (Poly(1) - R.Y() * R.Y()) - R.U() * R.U() - R.V() * R.V();
	R.A = R.E.extend({R.v, R.u, R.x, R.y}, {rel}, R.E.order().with_top_block({R.u, R.x, R.y}).with_top_block({R.v}));
	return R;
}

Poly sw_theta(const Poly &p, const SWRing &ring)
{
	std::map<VarId, Poly> image;
	const SWRing &R = ring;
	for (VarId v : variables(p))
	{
		auto sym = classify(v);
		if (!sym)
			throw std::invalid_argument("foreign variable " + var_name(v));
		const auto &ix = sym->index;
		switch (sym->kind)
		{
		case SymbolKind::lambda:
			if (ix[0] <= 3)
			{
				image[v] = R.Mu(ix[0]);
				continue;
			}
			break;
		case SymbolKind::m:
			if (ix[0] == 1 && ix[1] == 2)
			{
				image[v] = R.S(1) * R.S(2) * R.X();
				continue;
			}
			if (ix[0] == 1 && ix[1] == 3)
			{
				image[v] = R.S(3) * R.S(1) * R.Y();
				continue;
			}
			if (ix[0] == 2 && ix[1] == 3)
			{
				image[v] = R.S(2) * R.S(3) * (R.U() + R.X() * R.Y());
				continue;
			}
			break;
		case SymbolKind::w:
			if (ix[0] == 1 && ix[1] == 2 && ix[2] == 3)
			{
				image[v] = R.S(1) * R.S(2) * R.S(3) * R.V();
				continue;
			}
			break;
		}
		throw std::invalid_argument("foreign variable " + var_name(v));
	}
	return R.A.reduce(substitute(p, image));
}

Matrix4 sw_relation_matrix(const SWRing &R)
{
	const Poly u = R.U(), v = R.V(), ox = Poly(1) - R.X() * R.X(), oy = Poly(1) - R.Y() * R.Y();
	return {{{-u, v, ox, Poly()}, {-v, -u, Poly(), ox}, {oy, Poly(), -u, -v}, {Poly(), oy, v, -u}}};
}

Matrix4 sw_matrix_M(const SWRing &R)
{
	const Poly u = R.U(), v = R.V(), ox = Poly(1) - R.X() * R.X(), oy = Poly(1) - R.Y() * R.Y();
	return {{{u, v, ox, Poly()}, {-v, u, Poly(), ox}, {oy, Poly(), u, -v}, {Poly(), oy, v, u}}};
}

Poly sw_W(const SWRing &R)
{
	return -(R.S(1) * R.S(1) * R.S(2) * R.S(3) * R.X() * R.Y()) + R.Mu(1) * R.Mu(3) * R.S(1) * R.S(2) * R.X() +
	       R.Mu(1) * R.Mu(2) * R.S(1) * R.S(3) * R.Y() + R.S(1) * R.S(1) * R.Mu(2) * R.Mu(3);
}

std::vector<Poly> sw_J_generators(const SWRing &R)
{
	return {R.U(), R.V(), Poly(1) - R.X() * R.X(), Poly(1) - R.Y() * R.Y()};
}

SWElements sw_elements(const Word &w, const SWRing &R)
{
	const AElem v1 = AElem::v(3, 1), vw = vec(embed_word(3, w));
	const AElem b12 = bracket(v1, AElem::v(3, 2)), b13 = bracket(v1, AElem::v(3, 3));
	const AElem b1w = bracket(v1, vw);
	const Poly i1 = invert(R.S(1), R.E), i2 = invert(R.S(2), R.E), i3 = invert(R.S(3), R.E);
	SWElements e;
	e.w1 = sw_theta(dot(v1, vw), R);
	e.w2 = R.A.reduce(i2 * sw_theta(dot(b12, vw), R));
	e.w2p = R.A.reduce(i1 * i2 * sw_theta(dot(b12, b1w), R));
	e.w3 = R.A.reduce(i3 * sw_theta(dot(b13, vw), R));
	e.w3p = R.A.reduce(i1 * i3 * sw_theta(dot(b13, b1w), R));
	return e;
}

std::string to_string(Properness p)
{
	switch (p)
	{
	case Properness::proper:
		return "proper";
	case Properness::whole_ring:
		return "whole_ring";
	case Properness::timed_out:
		return "timed_out";
	case Properness::not_checked:
		break;
	}
	return "not_checked";
}

bool SWReport::structural_ok() const
{
	for (const auto &c : checks)
		if (!c.passed)
			return false;
	return !checks.empty();
}

SWReport sw_verify(const SWInstance &inst, bool check_properness, const Deadline &properness_deadline)
{
	SWReport rep;
	rep.r = inst.r;
	rep.s = inst.s;
	rep.t = inst.t;
	rep.word = render(inst.w);
	Word w = normalize_exponent_sums(inst.w, {inst.r, inst.s, inst.t});
	rep.normalized_word = render(w);

	SWRing R = sw_build(inst.r, inst.s, inst.t);
	rep.order = R.A.order().describe();
	SWElements e = sw_elements(w, R);

	const std::array<Poly, 4> col{e.w2, e.w2p, e.w3, e.w3p};
	Matrix4 N = sw_relation_matrix(R);
	for (int i = 0; i < 4; ++i)
	{
		Poly row;
		for (int j = 0; j < 4; ++j)
			row += N[i][j] * col[j];
		rep.checks.push_back(zero_check("matrix row " + std::to_string(i + 1), R.A.reduce(row)));
	}
	GroebnerBasis J = buchberger_extend(R.A.basis(), sw_J_generators(R));
	rep.checks.push_back(zero_check("w1 - W in J", normal_form(e.w1 - sw_W(R), J)));

	if (check_properness)
	{
		auto start = std::chrono::steady_clock::now();
		try
		{
			rep.properness =
			    is_whole_ring(e.all(), R.A, properness_deadline) ? Properness::whole_ring : Properness::proper;
		}
		catch (const Timeout &)
		{
			rep.properness = Properness::timed_out;
		}
		rep.properness_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		if (rep.properness == Properness::proper)
			rep.conclusion = rep.word + " does not normally generate " + free_product_name({inst.r, inst.s, inst.t});
	}
	return rep;
}

const SWRing &sw_generic_ring()
{
	static const SWRing R = sw_build(0, 0, 0);
	return R;
}

const QuotientRing &sw_plain_ring()
{
	static const QuotientRing A = [] {
		const SWRing &G = sw_generic_ring();
		Poly rel = (Poly(1) - G.X() * G.X()) * (Poly(1) - G.Y() * G.Y()) - G.U() * G.U() - G.V() * G.V();
		return QuotientRing({G.v, G.u, G.x, G.y}, {rel}, MonomialOrder::block({{G.v, G.u, G.x, G.y}}));
	}();
	return A;
}

std::vector<NamedCheck> sw_static_checks()
{
	const SWRing &R = sw_generic_ring();
	const Poly x = R.X(), y = R.Y(), u = R.U(), v = R.V();
	std::vector<NamedCheck> out;

	Matrix4 N = sw_relation_matrix(R), M = sw_matrix_M(R);
	for (int i = 0; i < 4; ++i)
		for (int j = 0; j < 4; ++j)
		{
			Poly entry;
			for (int k = 0; k < 4; ++k)
				entry += N[i][k] * M[k][j];
			out.push_back(
			    zero_check("kernel entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", R.A.reduce(entry)));
		}

	const Poly ox = Poly(1) - x * x, oy = Poly(1) - y * y, uxy = u + x * y;
	out.push_back(zero_check("J reduction 1 - (u+xy)^2",
	                         R.A.reduce(Poly(1) - uxy * uxy - (ox + x * x * oy - (u + Poly(2) * x * y) * u))));
	out.push_back(zero_check("J reduction x(u+xy) - y", R.A.reduce(x * uxy - y - (x * u - y * ox))));
	out.push_back(zero_check("J reduction x - y(u+xy)", R.A.reduce(x - y * uxy - (x * oy - y * u))));

	// K[F_3] has the single relation w123^2 = det of the m-matrix.
	const QuotientRing &KF3 = build_KF(3);
	Poly det_m = [] {
		Poly a = canonical_m(1, 1), b = canonical_m(2, 2), c = canonical_m(3, 3);
		Poly p = canonical_m(1, 2), q = canonical_m(2, 3), r = canonical_m(1, 3);
		return a * (b * c - q * q) - p * (p * c - q * r) + r * (p * q - b * r);
	}();
	Poly relation = Poly::variable(w_var(1, 2, 3)).pow(2) - det_m;
	out.push_back({"K[F_3] has one relation", KF3.basis().generators().size() == 1,
	               std::to_string(KF3.basis().generators().size()) + " generators"});
	out.push_back(zero_check("Relation holds in K[F_3]", KF3.reduce(relation)));
	out.push_back(zero_check("theta respects Relation", sw_theta(relation, R)));

	Poly det_xyu = Poly(1) * (Poly(1) - uxy * uxy) - x * (x - uxy * y) + y * (x * uxy - y);
	out.push_back(zero_check("v^2 equals the reduced determinant", R.A.reduce(v * v - det_xyu)));
	out.push_back(zero_check("reduced determinant expands to (1-x^2)(1-y^2) - u^2",
	                         R.A.reduce(det_xyu - (ox * oy - u * u))));

	// theta(v1 . vec(g1 g2 g3)) = W - s1^2 s2 s3 u + mu1 s1 s2 s3 v.
	Word g123 = Word::generator(1) * Word::generator(2) * Word::generator(3);
	Poly lhs = sw_theta(dot(AElem::v(3, 1), vec(embed_word(3, g123))), R);
	Poly rhs = sw_W(R) - R.S(1) * R.S(1) * R.S(2) * R.S(3) * u + R.Mu(1) * R.S(1) * R.S(2) * R.S(3) * v;
	out.push_back(zero_check("expansion of v1 . vec(g1 g2 g3)", R.A.reduce(lhs - rhs)));
	return out;
}

// ---------------------------------------------------------------- conjecture probe

Poly sw_form(const std::array<Poly, 4> &q1, const std::array<Poly, 4> &q2, const SWRing &ring)
{
	Matrix4 M = sw_matrix_M(ring);
	Poly out;
	for (int i = 0; i < 4; ++i)
		for (int j = 0; j < 4; ++j)
			if (!q1[i].is_zero() && !q2[j].is_zero())
				out += q1[i] * M[i][j] * q2[j];
	return ring.A.reduce(out);
}

ProbeReport conjecture_probe(const std::array<Rational, 4> &c, std::uint64_t seed, int trials, double seconds_per_trial)
{
	if (c[3] == 0)
		throw std::invalid_argument("c3 must be nonzero");
	const SWRing &G = sw_generic_ring();
	const QuotientRing &A = sw_plain_ring();
	const std::vector<Poly> vars{G.X(), G.Y(), G.U(), G.V()};
	const Poly Wp = c[3] * G.X() * G.Y() + c[2] * G.Y() + c[1] * G.X() + Poly(c[0]);

	ProbeReport rep;
	rep.c = c;
	rep.seed = seed;
	rep.trials = trials;
	std::mt19937_64 rng(seed);
	for (int k = 0; k < trials; ++k)
	{
		ProbeTrial trial;
		trial.index = k;
		for (int i = 0; i < 4; ++i)
			trial.q1[i] = random_linear(rng, vars, 2);
		for (int i = 0; i < 4; ++i)
			trial.q2[i] = random_linear(rng, vars, 2);
		for (const auto &g : sw_J_generators(G))
			trial.alpha += random_linear(rng, vars, 2) * g;
		trial.alpha = A.reduce(trial.alpha);
		trial.a = A.reduce(sw_form(trial.q1, trial.q2, G));
		try
		{
			if (is_whole_ring({trial.a, Wp + trial.alpha}, A, Deadline::after_seconds(seconds_per_trial)))
				rep.counterexamples.push_back(std::move(trial));
			else
				++rep.proper;
		}
		catch (const Timeout &)
		{
			++rep.timed_out;
		}
	}
	return rep;
}

} // namespace cgr
