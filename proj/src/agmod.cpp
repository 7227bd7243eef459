#include "cgr/agmod.hpp"

#include <stdexcept>

namespace cgr {

namespace {

const QuotientRing *ambient(int n) { return n >= 3 ? &build_KF(n) : nullptr; }

Poly reduce_in(int n, const Poly &p)
{
	const QuotientRing *r = ambient(n);
	return r ? r->reduce(p) : p;
}

void require_rank(const AElem &a, const AElem &b)
{
	if (a.rank() != b.rank())
		throw std::invalid_argument("elements live over different generator counts");
}

const Poly kZero;

} // namespace

AElem::AElem(int n) : n_(n), v_(n > 0 ? n : 0), b_(n > 1 ? n * (n - 1) / 2 : 0)
{
	if (n < 1)
		throw std::invalid_argument("need at least one generator");
}

std::size_t AElem::pair_index(int i, int j) const
{
	if (!(1 <= i && i < j && j <= n_))
		throw std::out_of_range("bracket index pair out of range");
	// Pairs (1,2),(1,3),...,(1,n),(2,3),...
	return static_cast<std::size_t>((i - 1) * n_ - (i - 1) * i / 2 + (j - i - 1));
}

AElem AElem::scalar(int n, const Poly &p)
{
	AElem a(n);
	a.scalar_ = reduce_in(n, p);
	return a;
}

AElem AElem::v(int n, int i)
{
	AElem a(n);
	a.add_v(i, Poly(1));
	return a;
}

AElem AElem::b(int n, int i, int j)
{
	AElem a(n);
	a.add_b(i, j, Poly(1));
	return a;
}

const Poly &AElem::v_coeff(int i) const
{
	if (i < 1 || i > n_)
		throw std::out_of_range("generator index out of range");
	return v_[i - 1];
}

const Poly &AElem::b_coeff(int i, int j) const { return b_[pair_index(i, j)]; }

bool AElem::is_zero() const
{
	if (!scalar_.is_zero())
		return false;
	for (const auto &p : v_)
		if (!p.is_zero())
			return false;
	for (const auto &p : b_)
		if (!p.is_zero())
			return false;
	return true;
}

void AElem::add_v(int i, const Poly &c)
{
	if (i < 1 || i > n_)
		throw std::out_of_range("generator index out of range");
	v_[i - 1] += c;
}

void AElem::add_b(int i, int j, const Poly &c)
{
	if (i == j)
		return;
	if (i < j)
		b_[pair_index(i, j)] += c;
	else
		b_[pair_index(j, i)] -= c;
}

void AElem::set_b(int i, int j, const Poly &c) { b_[pair_index(i, j)] = c; }

void AElem::normalize()
{
	const QuotientRing *r = ambient(n_);
	if (!r)
		return;
	scalar_ = r->reduce(scalar_);
	for (auto &p : v_)
		p = r->reduce(p);
	for (auto &p : b_)
		p = r->reduce(p);
}

AElem &AElem::operator+=(const AElem &o)
{
	require_rank(*this, o);
	scalar_ += o.scalar_;
	for (std::size_t i = 0; i < v_.size(); ++i)
		v_[i] += o.v_[i];
	for (std::size_t i = 0; i < b_.size(); ++i)
		b_[i] += o.b_[i];
	return *this;
}

AElem &AElem::operator-=(const AElem &o)
{
	require_rank(*this, o);
	scalar_ -= o.scalar_;
	for (std::size_t i = 0; i < v_.size(); ++i)
		v_[i] -= o.v_[i];
	for (std::size_t i = 0; i < b_.size(); ++i)
		b_[i] -= o.b_[i];
	return *this;
}

AElem operator*(const Poly &c, const AElem &a)
{
	AElem out = a;
	out.scalar_ = c * a.scalar_;
	for (auto &p : out.v_)
		p = c * p;
	for (auto &p : out.b_)
		p = c * p;
	out.normalize();
	return out;
}

AElem AElem::operator-() const
{
	AElem out = *this;
	out.scalar_ = -scalar_;
	for (auto &p : out.v_)
		p = -p;
	for (auto &p : out.b_)
		p = -p;
	return out;
}

bool AElem::operator==(const AElem &o) const
{
	return n_ == o.n_ && scalar_ == o.scalar_ && v_ == o.v_ && b_ == o.b_;
}

AElem embed_generator(int n, int i, int sign)
{
	if (i < 1 || i > n)
		throw std::out_of_range("generator index out of range");
	if (sign != 1 && sign != -1)
		throw std::invalid_argument("sign must be +1 or -1");
	AElem a = AElem::v(n, i);
	if (sign < 0)
		a = -a;
	return a + AElem::scalar(n, Poly::variable(lambda_var(i)));
}

AElem embed_word(int n, const Word &w)
{
	if (w.max_index() > n)
		throw std::out_of_range("word uses a generator beyond the ambient rank");
	AElem out = AElem::scalar(n, Poly(1));
	for (const auto &s : w.syllables())
	{
		AElem g = embed_generator(n, s.index, s.exponent > 0 ? 1 : -1);
		long count = s.exponent > 0 ? s.exponent : -s.exponent;
		for (long k = 0; k < count; ++k)
			out = mul(out, g);
	}
	return out;
}

AElem mul(const AElem &a, const AElem &b)
{
	require_rank(a, b);
	const int n = a.rank();
	AElem out(n);
	auto m = canonical_m;
	auto w = w_symbol;

	// Scalar times anything.
	if (!a.scalar_.is_zero())
	{
		out.scalar_ += a.scalar_ * b.scalar_;
		for (int i = 0; i < n; ++i)
			out.v_[i] += a.scalar_ * b.v_[i];
		for (std::size_t k = 0; k < out.b_.size(); ++k)
			out.b_[k] += a.scalar_ * b.b_[k];
	}
	if (!b.scalar_.is_zero())
	{
		for (int i = 0; i < n; ++i)
			out.v_[i] += a.v_[i] * b.scalar_;
		for (std::size_t k = 0; k < out.b_.size(); ++k)
			out.b_[k] += a.b_[k] * b.scalar_;
	}

	for (int i = 1; i <= n; ++i)
	{
		const Poly &ca = a.v_[i - 1];
		if (ca.is_zero())
			continue;
		// v_i v_j = -m_ij + b_ij
		for (int j = 1; j <= n; ++j)
		{
			const Poly &cb = b.v_[j - 1];
			if (cb.is_zero())
				continue;
			Poly c = ca * cb;
			out.scalar_ -= c * m(i, j);
			out.add_b(i, j, c);
		}
		// v_k b_jl = -w_jlk - m_jk v_l + m_lk v_j
		for (int j = 1; j <= n; ++j)
			for (int l = j + 1; l <= n; ++l)
			{
				const Poly &cb = b.b_coeff(j, l);
				if (cb.is_zero())
					continue;
				Poly c = ca * cb;
				out.scalar_ -= c * w(j, l, i);
				out.add_v(l, -(c * m(j, i)));
				out.add_v(j, c * m(l, i));
			}
	}
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
		{
			const Poly &ca = a.b_coeff(i, j);
			if (ca.is_zero())
				continue;
			// b_ij v_k = -w_ijk + m_ik v_j - m_jk v_i
			for (int k = 1; k <= n; ++k)
			{
				const Poly &cb = b.v_[k - 1];
				if (cb.is_zero())
					continue;
				Poly c = ca * cb;
				out.scalar_ -= c * w(i, j, k);
				out.add_v(j, c * m(i, k));
				out.add_v(i, -(c * m(j, k)));
			}
			// b_ij b_kl = (-m_ik m_jl + m_il m_jk) - w_ijk v_l + w_ijl v_k
			for (int k = 1; k <= n; ++k)
				for (int l = k + 1; l <= n; ++l)
				{
					const Poly &cb = b.b_coeff(k, l);
					if (cb.is_zero())
						continue;
					Poly c = ca * cb;
					out.scalar_ += c * (m(i, l) * m(j, k) - m(i, k) * m(j, l));
					out.add_v(l, -(c * w(i, j, k)));
					out.add_v(k, c * w(i, j, l));
				}
		}
	out.normalize();
	return out;
}

Poly bar(const AElem &a) { return a.scalar_part(); }

AElem vec(const AElem &a) { return a - AElem::scalar(a.rank(), a.scalar_part()); }

AElem star(const AElem &a) { return AElem::scalar(a.rank(), a.scalar_part()) - vec(a); }

Poly dot(const AElem &a, const AElem &b)
{
	require_rank(a, b);
	if (!a.is_lambda() || !b.is_lambda())
		throw std::invalid_argument("dot is defined on the Lambda part only");
	const int n = a.rank();
	Poly out;
	for (int i = 1; i <= n; ++i)
	{
		const Poly &ca = a.v_coeff(i);
		for (int j = 1; j <= n; ++j)
			if (!ca.is_zero() && !b.v_coeff(j).is_zero())
				out += ca * b.v_coeff(j) * canonical_m(i, j);
		for (int j = 1; j <= n; ++j)
			for (int k = j + 1; k <= n; ++k)
			{
				// v_i . b_jk = w_jki, symmetric.
				if (!ca.is_zero() && !b.b_coeff(j, k).is_zero())
					out += ca * b.b_coeff(j, k) * w_symbol(j, k, i);
				if (!b.v_coeff(i).is_zero() && !a.b_coeff(j, k).is_zero())
					out += a.b_coeff(j, k) * b.v_coeff(i) * w_symbol(j, k, i);
			}
	}
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
		{
			const Poly &ca = a.b_coeff(i, j);
			if (ca.is_zero())
				continue;
			for (int k = 1; k <= n; ++k)
				for (int l = k + 1; l <= n; ++l)
				{
					const Poly &cb = b.b_coeff(k, l);
					if (cb.is_zero())
						continue;
					out += ca * cb *
					       (canonical_m(i, k) * canonical_m(j, l) - canonical_m(i, l) * canonical_m(j, k));
				}
		}
	return reduce_in(n, out);
}

AElem bracket(const AElem &a, const AElem &b)
{
	require_rank(a, b);
	if (!a.is_lambda() || !b.is_lambda())
		throw std::invalid_argument("bracket is defined on the Lambda part only");
	const int n = a.rank();
	auto m = canonical_m;
	AElem out(n);
	for (int i = 1; i <= n; ++i)
	{
		const Poly &ca = a.v_[i - 1];
		if (ca.is_zero())
			continue;
		for (int j = 1; j <= n; ++j)
			if (!b.v_[j - 1].is_zero())
				out.add_b(i, j, ca * b.v_[j - 1]);
		// [v_i, b_jk] = m_ik v_j - m_ij v_k
		for (int j = 1; j <= n; ++j)
			for (int k = j + 1; k <= n; ++k)
			{
				const Poly &cb = b.b_coeff(j, k);
				if (cb.is_zero())
					continue;
				Poly c = ca * cb;
				out.add_v(j, c * m(i, k));
				out.add_v(k, -(c * m(i, j)));
			}
	}
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
		{
			const Poly &ca = a.b_coeff(i, j);
			if (ca.is_zero())
				continue;
			// [b_ij, v_k] = m_ik v_j - m_jk v_i
			for (int k = 1; k <= n; ++k)
			{
				const Poly &cb = b.v_[k - 1];
				if (cb.is_zero())
					continue;
				Poly c = ca * cb;
				out.add_v(j, c * m(i, k));
				out.add_v(i, -(c * m(j, k)));
			}
			// [b_ij, b_kl] = m_ik b_jl + m_jl b_ik - m_il b_jk - m_jk b_il
			for (int k = 1; k <= n; ++k)
				for (int l = k + 1; l <= n; ++l)
				{
					const Poly &cb = b.b_coeff(k, l);
					if (cb.is_zero())
						continue;
					Poly c = ca * cb;
					out.add_b(j, l, c * m(i, k));
					out.add_b(i, k, c * m(j, l));
					out.add_b(j, k, -(c * m(i, l)));
					out.add_b(i, l, -(c * m(j, k)));
				}
		}
	out.normalize();
	return out;
}

Poly triple(const AElem &a, const AElem &b, const AElem &c) { return dot(bracket(a, b), c); }

bool same_element(const AElem &a, const AElem &b)
{
	require_rank(a, b);
	const int n = a.rank();
	if (!(reduce_in(n, bar(a) - bar(b)).is_zero()))
		return false;
	AElem d = vec(a) - vec(b);
	for (int i = 1; i <= n; ++i)
		if (!dot(d, AElem::v(n, i)).is_zero())
			return false;
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
			if (!dot(d, AElem::b(n, i, j)).is_zero())
				return false;
	return true;
}

Poly power_bar(int n, const Word &g, const Word &h, const Word &k, long power)
{
	static const VarId x = var_id("x");
	Poly bh = bar(embed_word(n, h));
	std::map<VarId, Poly> at{{x, bh}};
	Poly pn = substitute(chebyshev_like(power, x), at);
	Poly pn1 = substitute(chebyshev_like(power - 1, x), at);
	Poly ghk = bar(embed_word(n, g * h * k));
	Poly gk = bar(embed_word(n, g * k));
	return reduce_in(n, ghk * pn - gk * pn1);
}

std::string render(const AElem &a)
{
	std::string out;
	auto piece = [&](const Poly &c, const std::string &basis) {
		if (c.is_zero())
			return;
		if (!out.empty())
			out += " + ";
		out += basis.empty() ? render(c) : "(" + render(c) + ")*" + basis;
	};
	piece(a.scalar_part(), "");
	for (int i = 1; i <= a.rank(); ++i)
		piece(a.v_coeff(i), "v" + std::to_string(i));
	for (int i = 1; i <= a.rank(); ++i)
		for (int j = i + 1; j <= a.rank(); ++j)
			piece(a.b_coeff(i, j), "b" + std::to_string(i) + "_" + std::to_string(j));
	return out.empty() ? "0" : out;
}

} // namespace cgr
