#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cgr {

using Rational = mpq_class;
using VarId = std::uint32_t;

std::string to_string(const Rational &q);
/// Accepts "a" or "a/b" with optional sign.
Rational parse_rational(std::string_view text);

/// Append-only name <-> id table shared by every polynomial in the process.
/// Ids are stable for the lifetime of the process.
class VarRegistry
{
  public:
	static VarRegistry &global();

	VarId intern(std::string_view name);
	std::optional<VarId> find(std::string_view name) const;
	std::string name(VarId id) const;
	std::size_t size() const;

  private:
	mutable std::shared_mutex mutex_;
	std::deque<std::string> names_;
	std::unordered_map<std::string, VarId> ids_;
};

inline VarId var_id(std::string_view name) { return VarRegistry::global().intern(name); }
inline std::string var_name(VarId id) { return VarRegistry::global().name(id); }

/// Sparse power product: (variable, exponent) pairs sorted by variable id,
/// exponents strictly positive.
class Monomial
{
  public:
	using Entry = std::pair<VarId, std::uint32_t>;

	Monomial() = default;
	static Monomial variable(VarId v, std::uint32_t exponent = 1);
	static Monomial from_entries(std::vector<Entry> entries);

	const std::vector<Entry> &entries() const { return entries_; }
	std::uint32_t exponent(VarId v) const;
	std::uint32_t degree() const { return degree_; }
	bool is_one() const { return entries_.empty(); }

	friend Monomial operator*(const Monomial &a, const Monomial &b);
	bool operator==(const Monomial &o) const { return entries_ == o.entries_; }

	/// Canonical storage order: degree reverse lexicographic, lower id is the
	/// larger variable.
	friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b);

  private:
	std::vector<Entry> entries_;
	std::uint32_t degree_ = 0;
};

struct Term
{
	Rational coeff;
	Monomial mono;
};

/// Sparse multivariate polynomial over the rationals. Terms are kept with
/// nonzero coefficients, distinct monomials, sorted descending in the
/// canonical monomial order.
class Poly
{
  public:
	Poly() = default;
	Poly(long c);
	Poly(const Rational &c);
	static Poly variable(VarId v);
	static Poly var(std::string_view name) { return variable(var_id(name)); }
	static Poly monomial(const Rational &c, Monomial m);
	/// Canonicalizes an arbitrary term list (combines duplicates, drops zeros).
	static Poly from_terms(std::vector<Term> terms);

	const std::vector<Term> &terms() const { return terms_; }
	std::size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	/// Value of a constant polynomial (0 for the zero polynomial).
	Rational constant() const;
	/// Coefficient of the constant term.
	Rational constant_term() const;
	std::uint32_t total_degree() const;

	Poly &operator+=(const Poly &o);
	Poly &operator-=(const Poly &o);
	Poly &operator*=(const Poly &o);
	Poly &operator*=(const Rational &c);
	friend Poly operator+(Poly a, const Poly &b) { return a += b; }
	friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
	friend Poly operator*(const Poly &a, const Poly &b);
	friend Poly operator*(Poly a, const Rational &c) { return a *= c; }
	friend Poly operator*(const Rational &c, Poly a) { return a *= c; }
	Poly operator-() const;
	Poly pow(unsigned k) const;

	bool operator==(const Poly &o) const;

  private:
	std::vector<Term> terms_;
};

Poly add(const Poly &a, const Poly &b);
Poly sub(const Poly &a, const Poly &b);
Poly mul(const Poly &a, const Poly &b);
Poly neg(const Poly &a);
Poly power(const Poly &a, unsigned k);

/// Homomorphic substitution; unassigned variables pass through unchanged.
Poly substitute(const Poly &p, const std::map<VarId, Poly> &assignment);

/// Exact evaluation at a point given by `value`.
Rational evaluate(const Poly &p, const std::function<Rational(VarId)> &value);

/// Largest exponent of v; nullopt stands for minus infinity (the zero
/// polynomial).
std::optional<unsigned> degree_in(const Poly &p, VarId v);

/// p = sum_k coeffs[k] * v^k with coeffs free of v.
std::map<unsigned, Poly> coefficients_in(const Poly &p, VarId v);

std::vector<VarId> variables(const Poly &p);

/// Divides by the content so the result has coprime integer coefficients and
/// a positive leading coefficient. Zero stays zero.
Poly primitive_part(const Poly &p);

/// The family with P_0 = 0, P_1 = 1 and 2 x P_n = P_{n-1} + P_{n+1}, for any
/// integer n. Univariate in `x`.
Poly chebyshev_like(long n, VarId x);
Poly chebyshev_like(long n);

/// Human readable form such as "3/2*x^2*y - 1"; "0" for zero.
std::string render(const Poly &p);

/// Parses the rendered form (plus parentheses and '^' on groups). Unknown
/// identifiers are registered.
Poly parse_poly(std::string_view text);

} // namespace cgr
