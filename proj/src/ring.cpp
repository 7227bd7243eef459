#include "cgr/ring.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace cgr {

// ---------------------------------------------------------------- quotient rings

QuotientRing::QuotientRing(std::vector<VarId> vars, const std::vector<Poly> &relations, MonomialOrder order,
                           const Deadline &deadline)
    : vars_(std::move(vars)), basis_(buchberger(relations, order, deadline))
{
}

QuotientRing QuotientRing::from_basis(std::vector<VarId> vars, GroebnerBasis basis)
{
	QuotientRing r;
	r.vars_ = std::move(vars);
	r.basis_ = std::move(basis);
	return r;
}

Poly QuotientRing::reduce(const Poly &p, const Deadline &deadline) const
{
	return normal_form(p, basis_, deadline);
}

std::optional<std::size_t> QuotientRing::dimension() const { return standard_monomial_count(basis_, vars_); }

QuotientRing QuotientRing::extend(const std::vector<VarId> &vars, const std::vector<Poly> &relations,
                                  const MonomialOrder &order, const Deadline &deadline) const
{
	QuotientRing r;
	r.vars_ = vars_;
	for (VarId v : vars)
		if (std::find(r.vars_.begin(), r.vars_.end(), v) == r.vars_.end())
			r.vars_.push_back(v);
	r.basis_ = buchberger_extend(basis_, relations, order, deadline);
	return r;
}

void QuotientRing::require_variables(const Poly &p) const
{
	for (VarId v : cgr::variables(p))
		if (std::find(vars_.begin(), vars_.end(), v) == vars_.end())
			throw std::invalid_argument("foreign variable " + var_name(v));
}

bool is_whole_ring(const std::vector<Poly> &gens, const QuotientRing &ambient, const Deadline &deadline)
{
	if (ambient.basis().is_unit_ideal())
		return true;
	std::vector<Poly> nonzero;
	for (const auto &g : gens)
	{
		Poly r = ambient.reduce(g, deadline);
		if (!r.is_zero())
			nonzero.push_back(std::move(r));
	}
	if (nonzero.empty())
		return false;
	return buchberger_extend(ambient.basis(), nonzero, deadline).is_unit_ideal();
}

Poly invert(const Poly &elem, const QuotientRing &ambient, const Deadline &deadline)
{
	Poly e = ambient.reduce(elem, deadline);
	if (e.is_zero())
		throw NotAUnit("zero is not a unit");
	if (e.is_constant())
		return Poly(1 / e.constant());
	static const VarId t = var_id("_t_inv");
	Poly relation = Poly::variable(t) * e - Poly(1);
	GroebnerBasis ext =
	    buchberger_extend(ambient.basis(), {relation}, ambient.order().with_top_block({t}), deadline);
	if (ext.is_unit_ideal())
		throw NotAUnit(render(e) + " is not a unit");
	Poly u = normal_form(Poly::variable(t), ext, deadline);
	if (degree_in(u, t).value_or(0) > 0 || !ambient.reduce(e * u - Poly(1), deadline).is_zero())
		throw NotAUnit(render(e) + " is not a unit");
	return u;
}

// ---------------------------------------------------------------- symbols

namespace {

std::string index_suffix(std::initializer_list<int> idx)
{
	bool wide = std::any_of(idx.begin(), idx.end(), [](int i) { return i >= 10; });
	std::string out;
	for (int i : idx)
		out += (wide ? "_" : "") + std::to_string(i);
	return out;
}

void require_index(int i)
{
	if (i < 1)
		throw std::invalid_argument("generator indices start at 1");
}

Poly det3(const std::array<std::array<Poly, 3>, 3> &a)
{
	return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
	       a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

} // namespace

VarId lambda_var(int i)
{
	require_index(i);
	return var_id("lambda" + std::to_string(i));
}

VarId m_var(int i, int j)
{
	require_index(i);
	if (!(i < j))
		throw std::invalid_argument("m symbols need i < j");
	return var_id("m" + index_suffix({i, j}));
}

VarId w_var(int i, int j, int k)
{
	require_index(i);
	if (!(i < j && j < k))
		throw std::invalid_argument("w symbols need i < j < k");
	return var_id("w" + index_suffix({i, j, k}));
}

std::optional<CanonicalSymbol> classify(VarId v)
{
	std::string name = var_name(v);
	auto digits = [](const std::string &s) {
		return !s.empty() && s.size() < 9 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
		       s[0] != '0';
	};
	auto split = [&](const std::string &body, std::size_t count) -> std::optional<std::array<int, 3>> {
		std::array<int, 3> out{};
		if (body.empty())
			return std::nullopt;
		if (body[0] == '_')
		{
			std::size_t at = 1;
			for (std::size_t k = 0; k < count; ++k)
			{
				std::size_t next = body.find('_', at);
				std::string part = body.substr(at, next == std::string::npos ? std::string::npos : next - at);
				if (!digits(part) || (k + 1 < count) == (next == std::string::npos))
					return std::nullopt;
				out[k] = std::stoi(part);
				at = next + 1;
			}
		}
		else
		{
			if (body.size() != count || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '1' && c <= '9'; }))
				return std::nullopt;
			for (std::size_t k = 0; k < count; ++k)
				out[k] = body[k] - '0';
		}
		return out;
	};
	if (name.rfind("lambda", 0) == 0 && digits(name.substr(6)))
		return CanonicalSymbol{SymbolKind::lambda, {std::stoi(name.substr(6)), 0, 0}, v};
	if (name.size() > 1 && name[0] == 'm')
		if (auto idx = split(name.substr(1), 2); idx && (*idx)[0] < (*idx)[1] && m_var((*idx)[0], (*idx)[1]) == v)
			return CanonicalSymbol{SymbolKind::m, *idx, v};
	if (name.size() > 1 && name[0] == 'w')
		if (auto idx = split(name.substr(1), 3);
		    idx && (*idx)[0] < (*idx)[1] && (*idx)[1] < (*idx)[2] && w_var((*idx)[0], (*idx)[1], (*idx)[2]) == v)
			return CanonicalSymbol{SymbolKind::w, *idx, v};
	return std::nullopt;
}

Poly canonical_m(int i, int j)
{
	require_index(i);
	require_index(j);
	if (i == j)
		return Poly(1) - Poly::variable(lambda_var(i)).pow(2);
	return Poly::variable(m_var(std::min(i, j), std::max(i, j)));
}

std::pair<int, Poly> canonical_w(int i, int j, int k)
{
	require_index(i);
	require_index(j);
	require_index(k);
	if (i == j || j == k || i == k)
		return {0, Poly()};
	std::array<int, 3> a{i, j, k};
	int sign = 1;
	for (int pass = 0; pass < 2; ++pass)
		for (int p = 0; p < 2; ++p)
			if (a[p] > a[p + 1])
			{
				std::swap(a[p], a[p + 1]);
				sign = -sign;
			}
	return {sign, Poly::variable(w_var(a[0], a[1], a[2]))};
}

Poly w_symbol(int i, int j, int k)
{
	auto [sign, w] = canonical_w(i, j, k);
	return sign < 0 ? -w : w;
}

Poly raw_r3(int i, int j, int k, int l, int s)
{
	return w_symbol(j, k, l) * canonical_m(i, s) - w_symbol(i, k, l) * canonical_m(j, s) +
	       w_symbol(i, j, l) * canonical_m(k, s) - w_symbol(i, j, k) * canonical_m(l, s);
}

Poly raw_r4(int i, int j, int k, int l, int s, int t)
{
	std::array<int, 3> rows{i, j, k}, cols{l, s, t};
	std::array<std::array<Poly, 3>, 3> a;
	for (int r = 0; r < 3; ++r)
		for (int c = 0; c < 3; ++c)
			a[r][c] = canonical_m(rows[r], cols[c]);
	return w_symbol(i, j, k) * w_symbol(l, s, t) - det3(a);
}

std::vector<VarId> kf_variables(int n)
{
	std::vector<VarId> vars;
	for (int i = 1; i <= n; ++i)
		vars.push_back(lambda_var(i));
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
			vars.push_back(m_var(i, j));
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
			for (int k = j + 1; k <= n; ++k)
				vars.push_back(w_var(i, j, k));
	return vars;
}

MonomialOrder kf_order(int n)
{
	std::vector<VarId> ws, rest;
	for (VarId v : kf_variables(n))
		(classify(v)->kind == SymbolKind::w ? ws : rest).push_back(v);
	if (ws.empty())
		return MonomialOrder::block({rest});
	return MonomialOrder::block({ws, rest});
}

std::vector<Poly> kf_relations(int n)
{
	std::vector<Poly> out;
	std::vector<std::array<int, 3>> triples;
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
			for (int k = j + 1; k <= n; ++k)
				triples.push_back({i, j, k});
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
			for (int k = j + 1; k <= n; ++k)
				for (int l = k + 1; l <= n; ++l)
					for (int s = 1; s <= n; ++s)
						out.push_back(raw_r3(i, j, k, l, s));
	for (std::size_t a = 0; a < triples.size(); ++a)
		for (std::size_t b = a; b < triples.size(); ++b)
			out.push_back(raw_r4(triples[a][0], triples[a][1], triples[a][2], triples[b][0], triples[b][1],
			                     triples[b][2]));
	return out;
}

const QuotientRing &build_KF(int n)
{
	if (n < 1)
		throw std::invalid_argument("build_KF needs at least one generator");
	static std::mutex mutex;
	static std::map<int, std::unique_ptr<QuotientRing>> cache;
	std::lock_guard lock(mutex);
	auto &slot = cache[n];
	if (!slot)
		slot = std::make_unique<QuotientRing>(kf_variables(n), kf_relations(n), kf_order(n));
	return *slot;
}

} // namespace cgr
