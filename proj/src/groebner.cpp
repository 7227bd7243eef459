#include "cgr/groebner.hpp"

#include "engine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>
#include <stdexcept>

namespace cgr {

// ---------------------------------------------------------------- deadline

Deadline Deadline::after(std::chrono::milliseconds budget)
{
	Deadline d;
	d.at_ = std::chrono::steady_clock::now() + budget;
	return d;
}

Deadline Deadline::after_seconds(double seconds)
{
	return after(std::chrono::milliseconds(static_cast<long long>(seconds * 1000.0)));
}

Deadline Deadline::sooner(std::chrono::milliseconds budget) const
{
	Deadline d = after(budget);
	if (at_ && *at_ < *d.at_)
		d.at_ = at_;
	return d;
}

bool Deadline::expired() const { return at_ && std::chrono::steady_clock::now() >= *at_; }

void Deadline::check() const
{
	if (expired())
		throw Timeout();
}

// ---------------------------------------------------------------- order

MonomialOrder MonomialOrder::block(std::vector<std::vector<VarId>> blocks)
{
	MonomialOrder o;
	std::set<VarId> seen;
	for (auto &b : blocks)
	{
		for (VarId v : b)
			if (!seen.insert(v).second)
				throw std::invalid_argument("variable " + var_name(v) + " listed twice in a monomial order");
		if (!b.empty())
			o.blocks_.push_back(std::move(b));
	}
	return o;
}

MonomialOrder MonomialOrder::with_top_block(std::vector<VarId> vars) const
{
	std::vector<std::vector<VarId>> b;
	b.push_back(std::move(vars));
	for (const auto &x : blocks_)
		b.push_back(x);
	return block(std::move(b));
}

std::strong_ordering MonomialOrder::compare(const Monomial &a, const Monomial &b) const
{
	if (blocks_.empty())
		return a <=> b;
	// Exponent vectors per listed block; unlisted variables fall back to the
	// canonical order as the last block.
	auto locate = [&](VarId v) -> std::pair<std::size_t, std::size_t> {
		for (std::size_t i = 0; i < blocks_.size(); ++i)
			for (std::size_t j = 0; j < blocks_[i].size(); ++j)
				if (blocks_[i][j] == v)
					return {i, j};
		return {blocks_.size(), 0};
	};
	std::vector<std::vector<std::uint32_t>> ea(blocks_.size()), eb(blocks_.size());
	for (std::size_t i = 0; i < blocks_.size(); ++i)
	{
		ea[i].assign(blocks_[i].size(), 0);
		eb[i].assign(blocks_[i].size(), 0);
	}
	std::vector<Monomial::Entry> ra, rb;
	for (const auto &e : a.entries())
	{
		auto [i, j] = locate(e.first);
		if (i == blocks_.size())
			ra.push_back(e);
		else
			ea[i][j] = e.second;
	}
	for (const auto &e : b.entries())
	{
		auto [i, j] = locate(e.first);
		if (i == blocks_.size())
			rb.push_back(e);
		else
			eb[i][j] = e.second;
	}
	for (std::size_t i = 0; i < blocks_.size(); ++i)
	{
		std::uint32_t da = 0, db = 0;
		for (std::size_t j = 0; j < ea[i].size(); ++j)
		{
			da += ea[i][j];
			db += eb[i][j];
		}
		if (da != db)
			return da <=> db;
		for (std::size_t j = ea[i].size(); j-- > 0;)
			if (ea[i][j] != eb[i][j])
				return eb[i][j] <=> ea[i][j];
	}
	return Monomial::from_entries(ra) <=> Monomial::from_entries(rb);
}

std::string MonomialOrder::describe() const
{
	if (blocks_.empty())
		return "degrevlex";
	std::string out = "block(";
	for (std::size_t i = 0; i < blocks_.size(); ++i)
	{
		if (i)
			out += " > ";
		for (std::size_t j = 0; j < blocks_[i].size(); ++j)
			out += (j ? "," : "") + var_name(blocks_[i][j]);
	}
	return out + " > rest)";
}

Term leading_term(const Poly &p, const MonomialOrder &order)
{
	if (p.is_zero())
		throw std::invalid_argument("zero polynomial has no leading term");
	const Term *best = &p.terms().front();
	for (const auto &t : p.terms())
		if (order.compare(t.mono, best->mono) > 0)
			best = &t;
	return *best;
}

namespace detail {

// ---------------------------------------------------------------- space

Space::Space(const MonomialOrder &order, const std::vector<VarId> &extra)
{
	auto add_block = [&](const std::vector<VarId> &vs) {
		unsigned begin = nv;
		for (VarId v : vs)
		{
			if (local.count(v))
				continue;
			local.emplace(v, nv++);
			vars.push_back(v);
		}
		if (nv > begin)
			blocks.push_back({begin, nv});
	};
	for (const auto &b : order.blocks())
		add_block(b);
	std::vector<VarId> rest;
	for (VarId v : extra)
		if (!local.count(v))
			rest.push_back(v);
	std::sort(rest.begin(), rest.end());
	rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
	add_block(rest);
}

int Space::cmp(const Exp *a, const Exp *b) const
{
	for (const auto &[s, e] : blocks)
	{
		unsigned da = 0, db = 0;
		for (unsigned k = s; k < e; ++k)
		{
			da += a[k];
			db += b[k];
		}
		if (da != db)
			return da < db ? -1 : 1;
		for (unsigned k = e; k-- > s;)
			if (a[k] != b[k])
				return a[k] < b[k] ? 1 : -1;
	}
	return 0;
}

std::uint64_t Space::mask(const Exp *a) const
{
	std::uint64_t m = 0;
	for (unsigned k = 0; k < nv; ++k)
		if (a[k])
			m |= std::uint64_t(1) << (k & 63);
	return m;
}

unsigned Space::degree(const Exp *a) const
{
	unsigned d = 0;
	for (unsigned k = 0; k < nv; ++k)
		d += a[k];
	return d;
}

IPoly to_ipoly(const Poly &p, const Space &sp, mpz_class *den)
{
	mpz_class lcm = 1;
	for (const auto &t : p.terms())
		mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
	std::vector<std::size_t> idx(p.size());
	std::vector<Exp> raw(p.size() * sp.nv, 0);
	for (std::size_t i = 0; i < p.size(); ++i)
	{
		idx[i] = i;
		for (const auto &[v, e] : p.terms()[i].mono.entries())
		{
			auto it = sp.local.find(v);
			if (it == sp.local.end())
				throw std::logic_error("variable " + var_name(v) + " outside the computation space");
			if (e > 0xFFFF)
				throw std::overflow_error("exponent too large for the Groebner engine");
			raw[i * sp.nv + it->second] = static_cast<Exp>(e);
		}
	}
	std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
		return sp.cmp(raw.data() + a * sp.nv, raw.data() + b * sp.nv) > 0;
	});
	IPoly f;
	f.exps.reserve(raw.size());
	f.coeffs.reserve(p.size());
	for (std::size_t i : idx)
	{
		f.exps.insert(f.exps.end(), raw.begin() + i * sp.nv, raw.begin() + (i + 1) * sp.nv);
		const Rational &c = p.terms()[i].coeff;
		f.coeffs.push_back(c.get_num() * (lcm / c.get_den()));
		f.sugar = std::max(f.sugar, sp.degree(f.mono(f.size() - 1, sp.nv)));
	}
	if (den)
		*den = lcm;
	return f;
}

Poly to_poly(const IPoly &f, const Space &sp, const Rational &scale)
{
	std::vector<Term> terms;
	terms.reserve(f.size());
	for (std::size_t i = 0; i < f.size(); ++i)
	{
		std::vector<Monomial::Entry> entries;
		const Exp *m = f.mono(i, sp.nv);
		for (unsigned k = 0; k < sp.nv; ++k)
			if (m[k])
				entries.push_back({sp.vars[k], m[k]});
		Rational c(f.coeffs[i]);
		c *= scale;
		terms.push_back({c, Monomial::from_entries(std::move(entries))});
	}
	return Poly::from_terms(std::move(terms));
}

mpz_class make_primitive(IPoly &f)
{
	if (f.empty())
		return 1;
	mpz_class g = 0;
	for (const auto &c : f.coeffs)
	{
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
		if (g == 1)
			break;
	}
	if (f.coeffs[0] < 0)
		g = -g;
	if (g != 1)
		for (auto &c : f.coeffs)
			mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
	return g;
}

namespace {

bool divides(const Exp *a, const Exp *b, unsigned nv)
{
	for (unsigned k = 0; k < nv; ++k)
		if (a[k] > b[k])
			return false;
	return true;
}

bool coprime(const Exp *a, const Exp *b, unsigned nv)
{
	for (unsigned k = 0; k < nv; ++k)
		if (a[k] && b[k])
			return false;
	return true;
}

void lcm_into(const Exp *a, const Exp *b, Exp *out, unsigned nv)
{
	for (unsigned k = 0; k < nv; ++k)
		out[k] = std::max(a[k], b[k]);
}

// out = a * x^sa * A[ia..] - b * x^sb * B[ib..]; shifts may be null.
void merge_sub(const Space &sp, const IPoly &A, const mpz_class &a, const Exp *sa, std::size_t ia,
               const IPoly &B, const mpz_class &b, const Exp *sb, std::size_t ib, IPoly &out)
{
	const unsigned nv = sp.nv;
	std::vector<Exp> ta(nv), tb(nv);
	auto load = [nv](const IPoly &P, const Exp *s, std::size_t i, Exp *dst) {
		const Exp *m = P.mono(i, nv);
		if (s)
			for (unsigned k = 0; k < nv; ++k)
				dst[k] = static_cast<Exp>(m[k] + s[k]);
		else
			std::copy(m, m + nv, dst);
	};
	bool a_one = a == 1;
	mpz_class tmp;
	if (ia < A.size())
		load(A, sa, ia, ta.data());
	if (ib < B.size())
		load(B, sb, ib, tb.data());
	while (ia < A.size() || ib < B.size())
	{
		int c;
		if (ia >= A.size())
			c = -1;
		else if (ib >= B.size())
			c = 1;
		else
			c = sp.cmp(ta.data(), tb.data());
		if (c > 0)
		{
			out.exps.insert(out.exps.end(), ta.begin(), ta.end());
			if (a_one)
				out.coeffs.push_back(A.coeffs[ia]);
			else
			{
				out.coeffs.emplace_back();
				mpz_mul(out.coeffs.back().get_mpz_t(), a.get_mpz_t(), A.coeffs[ia].get_mpz_t());
			}
			if (++ia < A.size())
				load(A, sa, ia, ta.data());
		}
		else if (c < 0)
		{
			out.exps.insert(out.exps.end(), tb.begin(), tb.end());
			out.coeffs.emplace_back();
			mpz_mul(out.coeffs.back().get_mpz_t(), b.get_mpz_t(), B.coeffs[ib].get_mpz_t());
			mpz_neg(out.coeffs.back().get_mpz_t(), out.coeffs.back().get_mpz_t());
			if (++ib < B.size())
				load(B, sb, ib, tb.data());
		}
		else
		{
			if (a_one)
				tmp = A.coeffs[ia];
			else
				mpz_mul(tmp.get_mpz_t(), a.get_mpz_t(), A.coeffs[ia].get_mpz_t());
			mpz_submul(tmp.get_mpz_t(), b.get_mpz_t(), B.coeffs[ib].get_mpz_t());
			if (tmp != 0)
			{
				out.exps.insert(out.exps.end(), ta.begin(), ta.end());
				out.coeffs.push_back(tmp);
			}
			if (++ia < A.size())
				load(A, sa, ia, ta.data());
			if (++ib < B.size())
				load(B, sb, ib, tb.data());
		}
	}
}

struct Reducers
{
	std::vector<const IPoly *> polys;
	std::vector<std::uint64_t> masks;

	void add(const IPoly *p, const Space &sp)
	{
		polys.push_back(p);
		masks.push_back(sp.mask(p->mono(0, sp.nv)));
	}

	const IPoly *find(const Exp *t, std::uint64_t tmask, unsigned nv, const IPoly *skip) const
	{
		const IPoly *best = nullptr;
		for (std::size_t i = 0; i < polys.size(); ++i)
		{
			if ((masks[i] & ~tmask) || polys[i] == skip)
				continue;
			if (!divides(polys[i]->mono(0, nv), t, nv))
				continue;
			if (!best || polys[i]->size() < best->size())
				best = polys[i];
		}
		return best;
	}
};

// Fully reduces f. Keeps f ≡ scale * f_in modulo the ideal when scale is
// given. `skip` excludes one reducer (used for interreduction).
void full_reduce(IPoly &f, const Reducers &red, const Space &sp, const Deadline &deadline,
                 mpq_class *scale = nullptr, const IPoly *skip = nullptr)
{
	const unsigned nv = sp.nv;
	std::vector<Exp> shift(nv);
	mpz_class g, a, b;
	std::size_t pos = 0;
	unsigned steps = 0;
	while (pos < f.size())
	{
		const Exp *t = f.mono(pos, nv);
		const IPoly *r = red.find(t, sp.mask(t), nv, skip);
		if (!r)
		{
			++pos;
			continue;
		}
		deadline.check();
		const Exp *lm = r->mono(0, nv);
		unsigned shift_deg = 0;
		for (unsigned k = 0; k < nv; ++k)
		{
			shift[k] = static_cast<Exp>(t[k] - lm[k]);
			shift_deg += shift[k];
		}
		mpz_gcd(g.get_mpz_t(), f.coeffs[pos].get_mpz_t(), r->coeffs[0].get_mpz_t());
		mpz_divexact(a.get_mpz_t(), r->coeffs[0].get_mpz_t(), g.get_mpz_t());
		mpz_divexact(b.get_mpz_t(), f.coeffs[pos].get_mpz_t(), g.get_mpz_t());

		IPoly out;
		out.sugar = std::max(f.sugar, r->sugar + shift_deg);
		out.exps.reserve(f.exps.size() + r->exps.size());
		out.coeffs.reserve(f.size() + r->size());
		out.exps.insert(out.exps.end(), f.exps.begin(), f.exps.begin() + pos * nv);
		for (std::size_t i = 0; i < pos; ++i)
		{
			out.coeffs.push_back(std::move(f.coeffs[i]));
			if (a != 1)
				out.coeffs.back() *= a;
		}
		merge_sub(sp, f, a, nullptr, pos + 1, *r, b, shift.data(), 1, out);
		f = std::move(out);
		if (scale && a != 1)
			*scale *= a;

		if (++steps % 4 == 0)
		{
			mpz_class c = make_primitive(f);
			if (scale && c != 1)
				*scale /= c;
		}
	}
	mpz_class c = make_primitive(f);
	if (scale && c != 1)
		*scale /= c;
}

// Remainder of p by the reducers over the rationals. Pending terms live in an
// ordered map, so each step costs one reducer length rather than one pass
// over the whole polynomial.
Poly rational_remainder(const Poly &p, const Reducers &red, const Space &sp, const Deadline &deadline)
{
	const unsigned nv = sp.nv;
	auto greater = [&sp](const std::vector<Exp> &a, const std::vector<Exp> &b) {
		return sp.cmp(a.data(), b.data()) > 0;
	};
	std::map<std::vector<Exp>, mpq_class, decltype(greater)> work(greater);
	{
		mpz_class den;
		IPoly f = to_ipoly(p, sp, &den);
		for (std::size_t i = 0; i < f.size(); ++i)
		{
			mpq_class c(f.coeffs[i], den);
			c.canonicalize();
			work.emplace(std::vector<Exp>(f.mono(i, nv), f.mono(i, nv) + nv), std::move(c));
		}
	}
	IPoly rem;
	std::vector<mpq_class> rem_coeffs;
	std::vector<Exp> key(nv);
	unsigned steps = 0;
	while (!work.empty())
	{
		auto it = work.begin();
		const Exp *t = it->first.data();
		const IPoly *r = red.find(t, sp.mask(t), nv, nullptr);
		if (!r)
		{
			rem.exps.insert(rem.exps.end(), it->first.begin(), it->first.end());
			rem_coeffs.push_back(std::move(it->second));
			work.erase(it);
			continue;
		}
		if (++steps % 64 == 0)
			deadline.check();
		const Exp *lm = r->mono(0, nv);
		std::vector<Exp> shift(nv);
		for (unsigned k = 0; k < nv; ++k)
			shift[k] = static_cast<Exp>(t[k] - lm[k]);
		mpq_class c = it->second / mpq_class(r->coeffs[0]);
		work.erase(it);
		mpq_class d;
		for (std::size_t i = 1; i < r->size(); ++i)
		{
			const Exp *m = r->mono(i, nv);
			for (unsigned k = 0; k < nv; ++k)
				key[k] = static_cast<Exp>(m[k] + shift[k]);
			d = c * r->coeffs[i];
			auto jt = work.try_emplace(key).first;
			jt->second -= d;
			if (jt->second == 0)
				work.erase(jt);
		}
	}
	std::vector<Term> terms;
	terms.reserve(rem_coeffs.size());
	for (std::size_t i = 0; i < rem_coeffs.size(); ++i)
	{
		std::vector<Monomial::Entry> entries;
		const Exp *m = rem.exps.data() + i * nv;
		for (unsigned k = 0; k < nv; ++k)
			if (m[k])
				entries.push_back({sp.vars[k], m[k]});
		terms.push_back({std::move(rem_coeffs[i]), Monomial::from_entries(std::move(entries))});
	}
	return Poly::from_terms(std::move(terms));
}

struct Pair
{
	std::size_t i, j;
	std::vector<Exp> lcm;
	unsigned sugar;
};

class Buchberger
{
  public:
	// Sugar selection on degree compatible orders; on block orders the sugar
	// degree says little about the leading block and smallest-lcm selection
	// keeps intermediate coefficients far smaller.
	Buchberger(const Space &sp, const Deadline &deadline)
	    : sp_(sp), deadline_(deadline), sugar_(sp.blocks.size() <= 1)
	{
	}

	void seed(std::vector<IPoly> basis)
	{
		for (auto &p : basis)
		{
			store_.push_back(std::move(p));
			active_.push_back(store_.size() - 1);
		}
	}

	// Returns false once the unit ideal is detected.
	bool add(IPoly h)
	{
		full_reduce(h, reducers(), sp_, deadline_);
		if (h.empty())
			return true;
		if (is_constant(h))
		{
			unit_ = true;
			return false;
		}
		update(std::move(h));
		return true;
	}

	bool run()
	{
		if (unit_)
			return false;
		while (!pairs_.empty())
		{
			deadline_.check();
			std::size_t best = 0;
			for (std::size_t k = 1; k < pairs_.size(); ++k)
				if (before(pairs_[k], pairs_[best]))
					best = k;
			Pair p = std::move(pairs_[best]);
			pairs_[best] = std::move(pairs_.back());
			pairs_.pop_back();

			IPoly s = spoly(p);
			full_reduce(s, reducers(), sp_, deadline_);
			if (s.empty())
				continue;
			if (is_constant(s))
			{
				unit_ = true;
				return false;
			}
			update(std::move(s));
		}
		return true;
	}

	bool unit() const { return unit_; }

	// Minimal, interreduced, primitive basis sorted by ascending leading monomial.
	std::vector<IPoly> result()
	{
		std::vector<IPoly> out;
		if (unit_)
		{
			IPoly one;
			one.exps.assign(sp_.nv, 0);
			one.coeffs.push_back(1);
			out.push_back(std::move(one));
			return out;
		}
		Reducers red = reducers();
		for (std::size_t idx : active_)
		{
			IPoly g = store_[idx];
			full_reduce(g, red, sp_, deadline_, nullptr, &store_[idx]);
			out.push_back(std::move(g));
		}
		std::sort(out.begin(), out.end(),
		          [&](const IPoly &a, const IPoly &b) { return sp_.cmp(a.mono(0, sp_.nv), b.mono(0, sp_.nv)) < 0; });
		return out;
	}

  private:
	bool is_constant(const IPoly &h) const { return h.size() == 1 && sp_.degree(h.mono(0, sp_.nv)) == 0; }

	const Exp *lm(std::size_t i) const { return store_[i].mono(0, sp_.nv); }

	Reducers reducers() const
	{
		Reducers r;
		for (std::size_t idx : active_)
			r.add(&store_[idx], sp_);
		return r;
	}

	bool before(const Pair &a, const Pair &b) const
	{
		if (sugar_ && a.sugar != b.sugar)
			return a.sugar < b.sugar;
		int c = sp_.cmp(a.lcm.data(), b.lcm.data());
		if (c != 0)
			return c < 0;
		return std::tie(a.i, a.j) < std::tie(b.i, b.j);
	}

	Pair make_pair(std::size_t i, std::size_t j) const
	{
		Pair p{i, j, std::vector<Exp>(sp_.nv), 0};
		lcm_into(lm(i), lm(j), p.lcm.data(), sp_.nv);
		unsigned dl = sp_.degree(p.lcm.data());
		unsigned si = store_[i].sugar - sp_.degree(lm(i)) + dl;
		unsigned sj = store_[j].sugar - sp_.degree(lm(j)) + dl;
		p.sugar = std::max(si, sj);
		return p;
	}

	IPoly spoly(const Pair &p) const
	{
		const IPoly &f = store_[p.i], &g = store_[p.j];
		const unsigned nv = sp_.nv;
		std::vector<Exp> sf(nv), sg(nv);
		for (unsigned k = 0; k < nv; ++k)
		{
			sf[k] = static_cast<Exp>(p.lcm[k] - f.mono(0, nv)[k]);
			sg[k] = static_cast<Exp>(p.lcm[k] - g.mono(0, nv)[k]);
		}
		mpz_class gcd, a, b;
		mpz_gcd(gcd.get_mpz_t(), f.coeffs[0].get_mpz_t(), g.coeffs[0].get_mpz_t());
		mpz_divexact(a.get_mpz_t(), g.coeffs[0].get_mpz_t(), gcd.get_mpz_t());
		mpz_divexact(b.get_mpz_t(), f.coeffs[0].get_mpz_t(), gcd.get_mpz_t());
		IPoly s;
		s.sugar = p.sugar;
		merge_sub(sp_, f, a, sf.data(), 1, g, b, sg.data(), 1, s);
		make_primitive(s);
		return s;
	}

	// Gebauer-Moeller update with the new element h.
	void update(IPoly h)
	{
		make_primitive(h);
		store_.push_back(std::move(h));
		const std::size_t hi = store_.size() - 1;
		const unsigned nv = sp_.nv;
		const Exp *lh = lm(hi);

		std::vector<Pair> cand;
		for (std::size_t g : active_)
			cand.push_back(make_pair(g, hi));

		// Chain criterion among the new pairs.
		std::vector<Pair> kept;
		for (std::size_t a = 0; a < cand.size(); ++a)
		{
			bool disjoint = coprime(lm(cand[a].i), lh, nv);
			bool dominated = false;
			if (!disjoint)
			{
				for (std::size_t b = a + 1; b < cand.size() && !dominated; ++b)
					dominated = divides(cand[b].lcm.data(), cand[a].lcm.data(), nv);
				for (std::size_t b = 0; b < kept.size() && !dominated; ++b)
					dominated = divides(kept[b].lcm.data(), cand[a].lcm.data(), nv);
			}
			if (!dominated)
				kept.push_back(cand[a]);
		}
		// Product criterion.
		std::vector<Pair> fresh;
		for (auto &p : kept)
			if (!coprime(lm(p.i), lh, nv))
				fresh.push_back(std::move(p));

		// Old pairs made redundant by h.
		std::vector<Pair> old;
		std::vector<Exp> l1(nv), l2(nv);
		for (auto &p : pairs_)
		{
			bool drop = false;
			if (divides(lh, p.lcm.data(), nv))
			{
				lcm_into(lm(p.i), lh, l1.data(), nv);
				lcm_into(lm(p.j), lh, l2.data(), nv);
				drop = l1 != p.lcm && l2 != p.lcm;
			}
			if (!drop)
				old.push_back(std::move(p));
		}
		pairs_ = std::move(old);
		for (auto &p : fresh)
			pairs_.push_back(std::move(p));

		std::vector<std::size_t> still;
		for (std::size_t g : active_)
			if (!divides(lh, lm(g), nv))
				still.push_back(g);
		still.push_back(hi);
		active_ = std::move(still);
	}

	const Space &sp_;
	const Deadline &deadline_;
	std::deque<IPoly> store_;
	std::vector<std::size_t> active_;
	std::vector<Pair> pairs_;
	bool sugar_;
	bool unit_ = false;
};

std::vector<VarId> collect_vars(const std::vector<Poly> &polys)
{
	std::vector<VarId> out;
	for (const auto &p : polys)
		for (VarId v : variables(p))
			out.push_back(v);
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

std::shared_ptr<const BasisData> finish(const MonomialOrder &order, std::shared_ptr<const Space> sp,
                                        std::vector<IPoly> basis)
{
	auto data = std::make_shared<BasisData>();
	data->order = order;
	data->space = sp;
	for (const auto &f : basis)
	{
		Rational inv(mpz_class(1), f.coeffs[0]);
		inv.canonicalize();
		data->generators.push_back(to_poly(f, *sp, inv));
	}
	data->ipolys = std::move(basis);
	return data;
}

std::shared_ptr<const BasisData> compute(const MonomialOrder &order, const std::vector<VarId> &vars,
                                         const std::vector<Poly> &seed, const std::vector<Poly> &gens,
                                         const Deadline &deadline)
{
	auto sp = std::make_shared<const Space>(order, vars);
	Buchberger bb(*sp, deadline);
	std::vector<IPoly> seeds;
	for (const auto &p : seed)
	{
		IPoly f = to_ipoly(p, *sp);
		make_primitive(f);
		seeds.push_back(std::move(f));
	}
	bb.seed(std::move(seeds));

	// Inputs go in by ascending leading monomial so small elements reduce
	// the larger ones first.
	std::vector<IPoly> in;
	for (const auto &p : gens)
		if (!p.is_zero())
			in.push_back(to_ipoly(p, *sp));
	std::stable_sort(in.begin(), in.end(),
	                 [&](const IPoly &a, const IPoly &b) { return sp->cmp(a.mono(0, sp->nv), b.mono(0, sp->nv)) < 0; });
	for (auto &f : in)
		if (!bb.add(std::move(f)))
			break;
	bb.run();
	return finish(order, sp, bb.result());
}

} // namespace
} // namespace detail

// ---------------------------------------------------------------- basis

GroebnerBasis make_basis(std::shared_ptr<const detail::BasisData> d)
{
	GroebnerBasis gb;
	gb.data_ = std::move(d);
	return gb;
}

GroebnerBasis::GroebnerBasis()
{
	auto d = std::make_shared<detail::BasisData>();
	d->space = std::make_shared<const detail::Space>(MonomialOrder{}, std::vector<VarId>{});
	data_ = d;
}

const std::vector<Poly> &GroebnerBasis::generators() const { return data_->generators; }
const MonomialOrder &GroebnerBasis::order() const { return data_->order; }

bool GroebnerBasis::is_unit_ideal() const
{
	return generators().size() == 1 && generators()[0].is_constant();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const
{
	std::vector<Monomial> out;
	const auto &sp = *data_->space;
	for (const auto &f : data_->ipolys)
	{
		std::vector<Monomial::Entry> entries;
		for (unsigned k = 0; k < sp.nv; ++k)
			if (f.mono(0, sp.nv)[k])
				entries.push_back({sp.vars[k], f.mono(0, sp.nv)[k]});
		out.push_back(Monomial::from_entries(std::move(entries)));
	}
	return out;
}

GroebnerBasis buchberger(const std::vector<Poly> &gens, const MonomialOrder &order, const Deadline &deadline)
{
	return make_basis(detail::compute(order, detail::collect_vars(gens), {}, gens, deadline));
}

GroebnerBasis buchberger_extend(const GroebnerBasis &base, const std::vector<Poly> &gens,
                                const MonomialOrder &order, const Deadline &deadline)
{
	if (base.is_unit_ideal())
		return base;
	for (const auto &g : base.generators())
		if (!(leading_term(g, order).mono == leading_term(g, base.order()).mono))
			throw std::invalid_argument("order does not extend the order of the base basis");
	std::vector<Poly> all = base.generators();
	all.insert(all.end(), gens.begin(), gens.end());
	std::vector<VarId> vars = detail::collect_vars(all);
	for (VarId v : base.data().space->vars)
		vars.push_back(v);
	return make_basis(detail::compute(order, vars, base.generators(), gens, deadline));
}

GroebnerBasis buchberger_extend(const GroebnerBasis &base, const std::vector<Poly> &gens, const Deadline &deadline)
{
	return buchberger_extend(base, gens, base.order(), deadline);
}

Poly normal_form(const Poly &p, const GroebnerBasis &gb, const Deadline &deadline)
{
	if (gb.is_zero_ideal() || p.is_zero())
		return p;
	if (gb.is_unit_ideal())
		return {};
	const auto &data = gb.data();
	std::shared_ptr<const detail::Space> sp = data.space;
	std::vector<detail::IPoly> converted;
	const std::vector<detail::IPoly> *polys = &data.ipolys;
	std::vector<VarId> pv = variables(p);
	bool foreign = std::any_of(pv.begin(), pv.end(), [&](VarId v) { return !sp->contains(v); });
	if (foreign)
	{
		// Extra variables join as the lowest block; the basis stays a basis.
		std::vector<VarId> vars = sp->vars;
		vars.insert(vars.end(), pv.begin(), pv.end());
		sp = std::make_shared<const detail::Space>(data.order, vars);
		for (const auto &g : data.generators)
		{
			converted.push_back(detail::to_ipoly(g, *sp));
			detail::make_primitive(converted.back());
		}
		polys = &converted;
	}
	detail::Reducers red;
	for (const auto &f : *polys)
		red.add(&f, *sp);
	return detail::rational_remainder(p, red, *sp, deadline);
}

bool ideal_contains(const std::vector<Poly> &gens, const Poly &p, const MonomialOrder &order)
{
	return normal_form(p, buchberger(gens, order)).is_zero();
}

bool ideal_equal(const std::vector<Poly> &a, const std::vector<Poly> &b, const MonomialOrder &order)
{
	GroebnerBasis ga = buchberger(a, order), gb = buchberger(b, order);
	if (ga.generators().size() != gb.generators().size())
		return false;
	for (const auto &g : a)
		if (!normal_form(g, gb).is_zero())
			return false;
	for (const auto &g : b)
		if (!normal_form(g, ga).is_zero())
			return false;
	return true;
}

std::optional<std::size_t> standard_monomial_count(const GroebnerBasis &gb, const std::vector<VarId> &vars)
{
	if (gb.is_unit_ideal())
		return 0;
	std::vector<Monomial> lms = gb.leading_monomials();
	std::vector<std::uint32_t> bound(vars.size());
	for (std::size_t i = 0; i < vars.size(); ++i)
	{
		bool found = false;
		for (const auto &m : lms)
			if (m.entries().size() == 1 && m.entries()[0].first == vars[i])
			{
				bound[i] = found ? std::min(bound[i], m.entries()[0].second) : m.entries()[0].second;
				found = true;
			}
		if (!found)
			return std::nullopt;
	}
	std::size_t count = 0;
	std::vector<std::uint32_t> e(vars.size(), 0);
	auto standard = [&]() {
		for (const auto &m : lms)
		{
			bool div = true;
			for (const auto &[v, k] : m.entries())
			{
				auto it = std::find(vars.begin(), vars.end(), v);
				if (it == vars.end() || e[it - vars.begin()] < k)
				{
					div = false;
					break;
				}
			}
			if (div)
				return false;
		}
		return true;
	};
	// Standard monomials form an order ideal, so a divisible monomial prunes
	// everything above it in the current coordinate.
	auto rec = [&](auto &&self, std::size_t i) -> void {
		if (i == vars.size())
		{
			++count;
			return;
		}
		for (e[i] = 0; e[i] < bound[i]; ++e[i])
		{
			if (!standard())
				break;
			self(self, i + 1);
		}
		e[i] = 0;
	};
	rec(rec, 0);
	return count;
}

} // namespace cgr
