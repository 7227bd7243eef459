#include "cgr/identities.hpp"

#include <map>
#include <random>

namespace cgr {

namespace {

using Matrix = std::vector<std::vector<Poly>>;

class Suite
{
  public:
	explicit Suite(int n) : n_(n), ring_(n >= 3 ? &build_KF(n) : nullptr) {}

	Poly nf(const Poly &p) const { return ring_ ? ring_->reduce(p) : p; }
	bool eq(const Poly &a, const Poly &b) const { return nf(a - b).is_zero(); }
	bool eq(const AElem &a, const AElem &b) const { return same_element(a, b); }

	Poly det(const Matrix &a) const
	{
		const std::size_t size = a.size();
		if (size == 1)
			return a[0][0];
		Poly out;
		for (std::size_t col = 0; col < size; ++col)
		{
			if (a[0][col].is_zero())
				continue;
			Matrix minor;
			for (std::size_t r = 1; r < size; ++r)
			{
				std::vector<Poly> row;
				for (std::size_t c = 0; c < size; ++c)
					if (c != col)
						row.push_back(a[r][c]);
				minor.push_back(std::move(row));
			}
			Poly term = nf(a[0][col] * det(minor));
			if (col % 2)
				out -= term;
			else
				out += term;
		}
		return nf(out);
	}

	Poly p_of(long k, const Poly &at) const
	{
		static const VarId x = var_id("x");
		return nf(substitute(chebyshev_like(k, x), {{x, at}}));
	}

	void record(const std::string &name, bool ok, const std::string &sample)
	{
		auto [it, fresh] = index_.try_emplace(name, results_.size());
		if (fresh)
		{
			IdentityResult r;
			r.name = name;
			results_.push_back(r);
		}
		IdentityResult &r = results_[it->second];
		++r.trials;
		if (!ok && r.failures++ == 0)
			r.first_failure = sample;
	}

	std::vector<IdentityResult> results() const { return results_; }
	int rank() const { return n_; }

  private:
	int n_;
	const QuotientRing *ring_;
	std::map<std::string, std::size_t> index_;
	std::vector<IdentityResult> results_;
};

AElem one(int n) { return AElem::scalar(n, Poly(1)); }

AElem half(const AElem &a) { return Poly(Rational(1, 2)) * a; }

void check_sample(Suite &s, std::mt19937_64 &rng, const IdentitySuiteOptions &opt)
{
	const int n = s.rank();
	std::vector<Word> words;
	std::vector<AElem> elems;
	std::string label;
	for (int i = 0; i < 8; ++i)
	{
		words.push_back(random_word(rng, n, opt.max_length));
		elems.push_back(embed_word(n, words.back()));
		label += (i ? "; " : "") + render(words.back());
	}

	// General elements: two group elements and one sum of group elements.
	const AElem &X = elems[0];
	const AElem Y = elems[1] + elems[3];
	const AElem &Z = elems[2];
	const Poly c = bar(elems[4]);

	std::vector<AElem> lam;
	for (const auto &e : elems)
		lam.push_back(vec(e));
	const AElem &x = lam[0], &y = lam[1], &z = lam[2], &w = lam[3], &u = lam[4], &v = lam[5], &ss = lam[6],
	             &t = lam[7];

	// Group-level facts.
	s.record("unit", s.eq(mul(one(n), X), X) && s.eq(mul(Y, one(n)), Y), label);
	s.record("associativity", s.eq(mul(mul(X, Y), Z), mul(X, mul(Y, Z))), label);
	s.record("inverse", s.eq(mul(X, embed_word(n, inverse(words[0]))), one(n)), label);
	s.record("star_of_group_element", s.eq(star(X), embed_word(n, inverse(words[0]))), label);

	// bar and the involution.
	const AElem XY = mul(X, Y), YX = mul(Y, X), XYZ = mul(XY, Z), ZYX = mul(mul(Z, Y), X);
	s.record("bar_cyclic", s.eq(bar(XY), bar(YX)), label);
	s.record("bar_reflection", s.eq(Poly(2) * bar(Y) * bar(mul(X, Z)), bar(XYZ) + bar(mul(mul(X, star(Y)), Z))),
	         label);
	s.record("bar_star", s.eq(bar(star(Y)), bar(Y)), label);

	// dot and bracket from products.
	const AElem vX = vec(X), vY = vec(Y), vZ = vec(Z);
	const Poly dXY = dot(vX, vY);
	s.record("dot_from_bar",
	         s.eq(dXY, bar(X) * bar(Y) - bar(XY)) &&
	             s.eq(Poly(2) * dXY, bar(mul(X, star(Y))) - bar(XY)),
	         label);
	s.record("bracket_from_products", s.eq(bracket(vX, vY), half(XY - YX)), label);
	s.record("triple_from_bar", s.eq(Poly(2) * triple(vX, vY, vZ), bar(ZYX) - bar(XYZ)), label);

	// Bilinear forms.
	const AElem cxy = c * x + y;
	s.record("bilinearity",
	         s.eq(dot(cxy, z), c * dot(x, z) + dot(y, z)) && s.eq(dot(z, cxy), c * dot(z, x) + dot(z, y)) &&
	             s.eq(bracket(cxy, z), c * bracket(x, z) + bracket(y, z)) &&
	             s.eq(bracket(z, cxy), c * bracket(z, x) + bracket(z, y)),
	         label);
	const AElem xy = bracket(x, y), yz = bracket(y, z), zx = bracket(z, x), xz = bracket(x, z),
	            zw = bracket(z, w), uv = bracket(u, v);
	s.record("symmetry",
	         s.eq(dot(x, y), dot(y, x)) && s.eq(xy, -bracket(y, x)) && s.eq(bracket(x, x), AElem(n)),
	         label);
	s.record("jacobi", s.eq(bracket(xy, z) + bracket(yz, x) + bracket(zx, y), AElem(n)), label);
	const Poly xyz = dot(xy, z);
	s.record("triple_alternating",
	         dot(xy, x).is_zero() && dot(xy, y).is_zero() && s.eq(xyz, -dot(bracket(y, x), z)) &&
	             s.eq(xyz, -dot(xz, y)),
	         label);
	s.record("double_bracket", s.eq(bracket(xy, z), dot(x, z) * y - dot(y, z) * x), label);

	// Consequences for four vectors.
	s.record("triple_cyclic", s.eq(xyz, dot(yz, x)) && s.eq(xyz, dot(zx, y)), label);
	s.record("bracket_dot_bracket", s.eq(dot(xy, zw), dot(x, z) * dot(y, w) - dot(x, w) * dot(y, z)), label);
	const AElem xy_zw = bracket(xy, zw);
	s.record("bracket_of_brackets_as_vectors",
	         s.eq(xy_zw, dot(xz, w) * y - dot(yz, w) * x) && s.eq(xy_zw, dot(xy, w) * z - xyz * w), label);
	s.record("triple_times_vector",
	         s.eq(xyz * w, dot(x, w) * yz - dot(y, w) * xz + dot(z, w) * xy), label);
	s.record("bracket_of_brackets_as_brackets",
	         s.eq(xy_zw, dot(x, z) * bracket(y, w) + dot(y, w) * xz - dot(x, w) * bracket(y, z) -
	                         dot(y, z) * bracket(x, w)),
	         label);

	// Product expansions.
	s.record("product_expansion",
	         s.eq(XY, AElem::scalar(n, bar(X) * bar(Y) - dXY) + bar(X) * vY + bar(Y) * vX + bracket(vX, vY)),
	         label);
	const Poly xz_dot = dot(x, z), yz_dot = dot(y, z);
	s.record("lambda_products",
	         s.eq(mul(x, y), AElem::scalar(n, -dot(x, y)) + xy) &&
	             s.eq(mul(xy, z), AElem::scalar(n, -xyz) + xz_dot * y - yz_dot * x) &&
	             s.eq(mul(z, xy), AElem::scalar(n, -xyz) - xz_dot * y + yz_dot * x) &&
	             s.eq(mul(xy, zw), AElem::scalar(n, dot(x, w) * dot(y, z) - dot(x, z) * dot(y, w)) +
	                                   dot(xz, w) * y - dot(yz, w) * x),
	         label);
	s.record("symmetrized_bar",
	         s.eq(bar(XYZ) + bar(ZYX), Poly(2) * (bar(XY) * bar(Z) + bar(mul(X, Z)) * bar(Y) +
	                                              bar(mul(Y, Z)) * bar(X) - Poly(2) * bar(X) * bar(Y) * bar(Z))),
	         label);

	// Determinant identities.
	s.record("quadrilinear_relation",
	         s.eq(dot(yz, w) * dot(x, u) - dot(xz, w) * dot(y, u) + dot(xy, w) * dot(z, u) - xyz * dot(w, u), Poly()),
	         label);
	{
		std::vector<const AElem *> rows{&x, &y, &z}, cols{&u, &v, &w};
		Matrix m(3, std::vector<Poly>(3));
		for (int r = 0; r < 3; ++r)
			for (int q = 0; q < 3; ++q)
				m[r][q] = dot(*rows[r], *cols[q]);
		s.record("triple_determinant", s.eq(xyz * dot(uv, w), s.det(m)), label);
	}
	{
		std::vector<const AElem *> rows{&x, &y, &z, &w}, cols{&u, &v, &ss, &t};
		Matrix m(4, std::vector<Poly>(4));
		for (int r = 0; r < 4; ++r)
			for (int q = 0; q < 4; ++q)
				m[r][q] = dot(*rows[r], *cols[q]);
		s.record("gram_determinant", s.det(m).is_zero(), label);
	}

	// Powers and commutators of group elements.
	const Word g = random_word(rng, n, opt.power_length + 1), h = random_word(rng, n, opt.power_length),
	           k = random_word(rng, n, opt.power_length + 1);
	const std::string power_label = label + " | " + render(g) + "; " + render(h) + "; " + render(k);
	bool powers = true;
	for (long p = -opt.max_power; p <= opt.max_power && powers; ++p)
		powers = s.eq(power_bar(n, g, h, k, p), bar(embed_word(n, g * h.pow(p) * k)));
	s.record("power_bar", powers, power_label);
	const Poly bh = bar(embed_word(n, h));
	const Poly gh = bar(embed_word(n, g * h)), ghi = bar(embed_word(n, g * inverse(h)));
	bool differences = true;
	for (long p = 0; p <= opt.max_power && differences; ++p)
		differences = s.eq(bar(embed_word(n, g * h.pow(p))) - bar(embed_word(n, g * h.pow(-p))),
		                   (gh - ghi) * s.p_of(p, bh));
	s.record("power_difference", differences, power_label);
	{
		const Word &p = words[0], &q = words[1];
		const Poly a = bar(elems[0]), b = bar(elems[1]), ab = bar(embed_word(n, p * q));
		const Poly comm = bar(embed_word(n, p * q * inverse(p) * inverse(q)));
		s.record("commutator_bar",
		         s.eq(comm, Poly(2) * ab * ab - Poly(4) * a * b * ab + Poly(2) * a * a + Poly(2) * b * b - Poly(1)),
		         label);
		const AElem va = vec(elems[0]), vb = vec(elems[1]), ab_br = bracket(va, vb);
		s.record("bracket_square",
		         s.eq(dot(ab_br, ab_br), dot(va, va) * dot(vb, vb) - dot(va, vb) * dot(va, vb)), label);
	}
}

} // namespace

std::vector<IdentityResult> run_identity_suite(const IdentitySuiteOptions &options, const Deadline &deadline)
{
	if (options.generators < 1 || options.samples < 1)
		throw std::invalid_argument("identity suite needs generators >= 1 and samples >= 1");
	Suite suite(options.generators);
	std::mt19937_64 rng(options.seed);
	for (int i = 0; i < options.samples; ++i)
	{
		deadline.check();
		check_sample(suite, rng, options);
	}
	return suite.results();
}

} // namespace cgr
