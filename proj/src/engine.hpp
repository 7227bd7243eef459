#pragma once

// Dense-exponent polynomial representation used inside the Groebner engine.

#include "cgr/groebner.hpp"

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace cgr::detail {

using Exp = std::uint16_t;

/// Local coordinates for one computation: variables laid out block by block,
/// each block in ascending registry id.
struct Space
{
	std::vector<VarId> vars;
	std::unordered_map<VarId, unsigned> local;
	std::vector<std::pair<unsigned, unsigned>> blocks;
	unsigned nv = 0;

	Space(const MonomialOrder &order, const std::vector<VarId> &extra);

	bool contains(VarId v) const { return local.count(v) != 0; }
	int cmp(const Exp *a, const Exp *b) const;
	std::uint64_t mask(const Exp *a) const;
	unsigned degree(const Exp *a) const;
};

/// Integer-coefficient polynomial, terms sorted descending. exps holds
/// size() * nv exponents.
struct IPoly
{
	std::vector<Exp> exps;
	std::vector<mpz_class> coeffs;
	unsigned sugar = 0;

	std::size_t size() const { return coeffs.size(); }
	bool empty() const { return coeffs.empty(); }
	const Exp *mono(std::size_t i, unsigned nv) const { return exps.data() + i * nv; }
};

/// Converts p (rational) into the space: returns the integer polynomial
/// den * p together with den.
IPoly to_ipoly(const Poly &p, const Space &sp, mpz_class *den = nullptr);
Poly to_poly(const IPoly &f, const Space &sp, const Rational &scale = 1);
/// Divides by the content and makes the leading coefficient positive.
/// Returns the factor divided out (signed).
mpz_class make_primitive(IPoly &f);

struct BasisData
{
	MonomialOrder order;
	std::vector<Poly> generators;
	std::shared_ptr<const Space> space;
	std::vector<IPoly> ipolys;
};

} // namespace cgr::detail
