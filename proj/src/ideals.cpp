#include "cgr/ideals.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace cgr {

namespace {

void require_words(const std::vector<Word> &L, int n)
{
	if (n < 1)
		throw std::invalid_argument("need at least one generator");
	for (const auto &w : L)
		if (w.max_index() > n)
			throw std::out_of_range("word " + render(w) + " uses a generator beyond g" + std::to_string(n));
}

std::vector<AElem> lambda_generators(int n)
{
	std::vector<AElem> out;
	for (int i = 1; i <= n; ++i)
		out.push_back(AElem::v(n, i));
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
			out.push_back(AElem::b(n, i, j));
	return out;
}

} // namespace

std::string to_string(IdealKind kind)
{
	switch (kind)
	{
	case IdealKind::hash:
		return "hash";
	case IdealKind::hashhash:
		return "hashhash";
	case IdealKind::bullet:
		return "bullet";
	case IdealKind::custom:
		break;
	}
	return "custom";
}

std::string to_string(Verdict v) { return v == Verdict::certified_no ? "CertifiedNo" : "Inconclusive"; }

IdealSpec make_ideal(int n, const std::vector<Poly> &generators, IdealKind kind)
{
	IdealSpec I;
	I.rank = n;
	I.kind = kind;
	const QuotientRing &K = build_KF(n);
	std::vector<Poly> seen;
	for (const auto &g : generators)
	{
		K.require_variables(g);
		Poly r = K.reduce(g);
		if (r.is_zero())
			continue;
		Poly key = primitive_part(r);
		bool duplicate = false;
		for (const auto &s : seen)
			if (s == key)
			{
				duplicate = true;
				break;
			}
		if (duplicate)
			continue;
		seen.push_back(std::move(key));
		I.generators.push_back(std::move(r));
	}
	return I;
}

IdealSpec ideal_sum(const IdealSpec &a, const IdealSpec &b)
{
	if (a.rank != b.rank)
		throw std::invalid_argument("ideals over different generator counts");
	std::vector<Poly> gens = a.generators;
	gens.insert(gens.end(), b.generators.begin(), b.generators.end());
	return make_ideal(a.rank, gens, a.kind == b.kind ? a.kind : IdealKind::custom);
}

std::vector<AElem> module_generators(int n)
{
	std::vector<AElem> out{AElem::scalar(n, Poly(1))};
	for (auto &l : lambda_generators(n))
		out.push_back(std::move(l));
	return out;
}

IdealSpec hash_generators(const std::vector<Word> &L, int n)
{
	require_words(L, n);
	std::vector<Poly> gens;
	const auto basis = module_generators(n);
	for (const auto &l : L)
	{
		AElem el = embed_word(n, l);
		for (const auto &beta : basis)
			gens.push_back(bar(mul(beta, el)) - bar(beta));
	}
	return make_ideal(n, gens, IdealKind::hash);
}

IdealSpec hashhash_generators(const std::vector<Word> &L, int n)
{
	require_words(L, n);
	std::vector<Poly> gens;
	const auto basis = lambda_generators(n);
	for (const auto &l : L)
	{
		AElem vl = vec(embed_word(n, l));
		for (const auto &beta : basis)
			gens.push_back(dot(beta, vl));
	}
	return make_ideal(n, gens, IdealKind::hashhash);
}

IdealSpec bullet_generators(const std::vector<Word> &L, int n)
{
	require_words(L, n);
	std::vector<Poly> gens;
	for (const auto &l : L)
		gens.push_back(Poly(1) - bar(embed_word(n, l)));
	return make_ideal(n, gens, IdealKind::bullet);
}

GroebnerBasis ideal_basis(const IdealSpec &I, const Deadline &deadline)
{
	return buchberger_extend(I.ambient().basis(), I.generators, deadline);
}

namespace {

// Orders under which two ideals are compared. The K[F_n] order comes first;
// the others put the variables touching one generator on top, or split
// w > m > lambda. Which of these is fast depends heavily on the ideal.
std::vector<MonomialOrder> comparison_orders(int n)
{
	std::vector<MonomialOrder> out{kf_order(n)};
	std::vector<VarId> ws, ms, ls;
	for (VarId v : kf_variables(n))
	{
		auto s = classify(v);
		(s->kind == SymbolKind::w ? ws : s->kind == SymbolKind::m ? ms : ls).push_back(v);
	}
	if (n >= 2)
		out.push_back(MonomialOrder::block({ws, ms, ls}));
	for (int i = 1; i <= n && n >= 2; ++i)
	{
		std::vector<VarId> top, rest;
		for (VarId v : kf_variables(n))
		{
			const auto &idx = classify(v)->index;
			(std::find(idx.begin(), idx.end(), i) != idx.end() ? top : rest).push_back(v);
		}
		out.push_back(MonomialOrder::block({top, rest}));
	}
	return out;
}

std::vector<Poly> with_relations(const IdealSpec &I)
{
	std::vector<Poly> gens = I.generators;
	for (const auto &g : I.ambient().basis().generators())
		gens.push_back(g);
	return gens;
}

} // namespace

bool ideal_equal(const IdealSpec &a, const IdealSpec &b, const Deadline &deadline)
{
	if (a.rank != b.rank)
		throw std::invalid_argument("ideals over different generator counts");
	if (a.generators == b.generators)
		return true;
	// Reduced bases in any fixed order are unique, so the first order to
	// finish both bases decides. Orders get time slices growing fourfold.
	const auto orders = comparison_orders(a.rank);
	const auto ga = with_relations(a), gb = with_relations(b);
	for (std::chrono::milliseconds slice{250};; slice *= 4)
		for (const auto &order : orders)
		{
			Deadline d = deadline.sooner(slice);
			try
			{
				return buchberger(ga, order, d).generators() == buchberger(gb, order, d).generators();
			}
			catch (const Timeout &)
			{
				if (deadline.expired())
					throw;
			}
		}
}

bool ideal_contains(const IdealSpec &I, const Poly &p, const Deadline &deadline)
{
	I.ambient().require_variables(p);
	return normal_form(p, ideal_basis(I, deadline), deadline).is_zero();
}

QuotientRing quotient_ring_of_presentation(const Presentation &P, const Deadline &deadline)
{
	const int n = P.generator_count();
	IdealSpec I = hash_generators(P.relators, n);
	return QuotientRing::from_basis(kf_variables(n), ideal_basis(I, deadline));
}

IdealSpec abelianization_kernel_generators(int n)
{
	if (n < 1)
		throw std::invalid_argument("need at least one generator");
	std::vector<Poly> gens;
	const auto basis = lambda_generators(n);
	for (int a = 1; a <= n; ++a)
		for (int b = a + 1; b <= n; ++b)
		{
			AElem br = bracket(AElem::v(n, a), AElem::v(n, b));
			for (const auto &beta : basis)
				gens.push_back(dot(br, beta));
		}
	return make_ideal(n, gens, IdealKind::custom);
}

NormalGenerationReport normally_generates_check(const Presentation &P, const std::vector<Word> &L, bool use_hash,
                                                const Deadline &deadline)
{
	const int n = P.generator_count();
	std::vector<Word> candidate = P.relators;
	candidate.insert(candidate.end(), L.begin(), L.end());
	std::vector<Word> all;
	for (int i = 1; i <= n; ++i)
		all.push_back(Word::generator(i));
	auto ideal = use_hash ? hash_generators : hashhash_generators;
	NormalGenerationReport report;
	report.candidate = ideal(candidate, n);
	report.full = ideal(all, n);
	report.verdict = ideal_equal(report.candidate, report.full, deadline) ? Verdict::inconclusive : Verdict::certified_no;
	return report;
}

} // namespace cgr
