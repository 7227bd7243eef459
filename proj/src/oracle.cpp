#include "cgr/oracle.hpp"

#include <stdexcept>

namespace cgr {

namespace {

struct Vec3
{
	Rational x, y, z;
};

Vec3 vector_part(const Quaternion &q) { return {q.a, q.b, q.c}; }

Rational dot3(const Vec3 &p, const Vec3 &q) { return p.x * q.x + p.y * q.y + p.z * q.z; }

Vec3 cross3(const Vec3 &p, const Vec3 &q)
{
	return {p.y * q.z - p.z * q.y, p.z * q.x - p.x * q.z, p.x * q.y - p.y * q.x};
}

const Quaternion &generator_image(const EvalPoint &pt, int i)
{
	if (i < 1 || static_cast<std::size_t>(i) > pt.size())
		throw std::out_of_range("no evaluation point for g" + std::to_string(i));
	return pt[i - 1];
}

} // namespace

Quaternion quat_mul(const Quaternion &p, const Quaternion &q)
{
	return {p.mu * q.mu - p.a * q.a - p.b * q.b - p.c * q.c, p.mu * q.a + p.a * q.mu + p.b * q.c - p.c * q.b,
	        p.mu * q.b - p.a * q.c + p.b * q.mu + p.c * q.a, p.mu * q.c + p.a * q.b - p.b * q.a + p.c * q.mu};
}

Quaternion quat_conj(const Quaternion &p) { return {p.mu, -p.a, -p.b, -p.c}; }

Rational quat_norm(const Quaternion &p) { return p.mu * p.mu + p.a * p.a + p.b * p.b + p.c * p.c; }

std::string render(const Quaternion &q)
{
	return "(" + to_string(q.mu) + ", " + to_string(q.a) + ", " + to_string(q.b) + ", " + to_string(q.c) + ")";
}

Quaternion cayley_point(const Rational &x, const Rational &y, const Rational &z)
{
	Rational n = x * x + y * y + z * z;
	Rational d = 1 + n;
	return {(1 - n) / d, -2 * x / d, -2 * y / d, -2 * z / d};
}

Rational random_rational(std::mt19937_64 &rng, int height)
{
	if (height < 1)
		throw std::invalid_argument("height must be positive");
	std::uniform_int_distribution<int> num(-height, height), den(1, height);
	Rational q(num(rng), den(rng));
	q.canonicalize();
	return q;
}

EvalPoint random_eval_point(std::mt19937_64 &rng, int n, int height)
{
	EvalPoint pt;
	for (int i = 0; i < n; ++i)
	{
		Rational x = random_rational(rng, height);
		Rational y = random_rational(rng, height);
		Rational z = random_rational(rng, height);
		pt.push_back(cayley_point(x, y, z));
	}
	return pt;
}

Quaternion eval_word(const Word &w, const EvalPoint &pt)
{
	Quaternion out{1, 0, 0, 0};
	for (const auto &s : w.syllables())
	{
		const Quaternion &g = generator_image(pt, s.index);
		Quaternion f = s.exponent > 0 ? g : quat_conj(g);
		for (long k = s.exponent > 0 ? s.exponent : -s.exponent; k > 0; --k)
			out = quat_mul(out, f);
	}
	return out;
}

Rational eval_ring_elem(const Poly &p, const EvalPoint &pt)
{
	return evaluate(p, [&](VarId v) -> Rational {
		auto sym = classify(v);
		if (!sym)
			throw std::invalid_argument("foreign variable " + var_name(v));
		const auto &idx = sym->index;
		switch (sym->kind)
		{
		case SymbolKind::lambda:
			return generator_image(pt, idx[0]).mu;
		case SymbolKind::m:
			return dot3(vector_part(generator_image(pt, idx[0])), vector_part(generator_image(pt, idx[1])));
		case SymbolKind::w:
			return dot3(cross3(vector_part(generator_image(pt, idx[0])), vector_part(generator_image(pt, idx[1]))),
			            vector_part(generator_image(pt, idx[2])));
		}
		throw std::logic_error("unreachable");
	});
}

Quaternion eval_aelem(const AElem &a, const EvalPoint &pt)
{
	const int n = a.rank();
	Quaternion out{eval_ring_elem(a.scalar_part(), pt), 0, 0, 0};
	auto add = [&](const Poly &c, const Vec3 &v) {
		if (c.is_zero())
			return;
		Rational k = eval_ring_elem(c, pt);
		out.a += k * v.x;
		out.b += k * v.y;
		out.c += k * v.z;
	};
	for (int i = 1; i <= n; ++i)
		add(a.v_coeff(i), vector_part(generator_image(pt, i)));
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
			add(a.b_coeff(i, j), cross3(vector_part(generator_image(pt, i)), vector_part(generator_image(pt, j))));
	return out;
}

FuzzReport fuzz_bar(int trials, long max_length, int n, std::uint64_t seed, int height)
{
	FuzzReport report;
	report.seed = seed;
	report.trials = trials;
	report.max_length = max_length;
	report.generators = n;
	report.height = height;
	std::mt19937_64 rng(seed);
	for (int t = 0; t < trials; ++t)
	{
		Word w = random_word(rng, n, max_length);
		EvalPoint pt = random_eval_point(rng, n, height);
		Rational lhs = eval_word(w, pt).mu;
		Rational rhs = eval_ring_elem(bar(embed_word(n, w)), pt);
		if (lhs != rhs)
			report.mismatches.push_back({w, pt, lhs, rhs});
	}
	return report;
}

} // namespace cgr
