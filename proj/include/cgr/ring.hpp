#pragma once

#include "cgr/groebner.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cgr {

class NotAUnit : public std::runtime_error
{
  public:
	explicit NotAUnit(const std::string &what) : std::runtime_error(what) {}
};

/// Polynomial ring over the rationals modulo an ideal, kept as a reduced
/// Groebner basis. Elements are represented by their normal forms.
class QuotientRing
{
  public:
	QuotientRing() = default;
	QuotientRing(std::vector<VarId> vars, const std::vector<Poly> &relations, MonomialOrder order = {},
	             const Deadline &deadline = {});
	static QuotientRing from_basis(std::vector<VarId> vars, GroebnerBasis basis);

	const std::vector<VarId> &variables() const { return vars_; }
	const GroebnerBasis &basis() const { return basis_; }
	const MonomialOrder &order() const { return basis_.order(); }

	Poly reduce(const Poly &p, const Deadline &deadline = {}) const;
	bool is_zero(const Poly &p) const { return reduce(p).is_zero(); }
	bool equal(const Poly &a, const Poly &b) const { return is_zero(a - b); }

	/// Vector space dimension over the rationals; nullopt if infinite.
	std::optional<std::size_t> dimension() const;

	/// Adjoins variables and relations. `order` must agree with order() on
	/// the existing variables.
	QuotientRing extend(const std::vector<VarId> &vars, const std::vector<Poly> &relations, const MonomialOrder &order,
	                    const Deadline &deadline = {}) const;

	/// Throws std::invalid_argument naming the first variable of p that is
	/// not a variable of the ring.
	void require_variables(const Poly &p) const;

  private:
	std::vector<VarId> vars_;
	GroebnerBasis basis_;
};

/// True iff 1 lies in <gens> + relations of the ambient ring.
bool is_whole_ring(const std::vector<Poly> &gens, const QuotientRing &ambient, const Deadline &deadline = {});

/// Inverse modulo the ambient relations, computed from the Groebner basis of
/// relations + <elem*t - 1> with t eliminated first, and verified.
Poly invert(const Poly &elem, const QuotientRing &ambient, const Deadline &deadline = {});

// ---------------------------------------------------------------- K[F_n]

enum class SymbolKind
{
	lambda,
	m,
	w,
};

struct CanonicalSymbol
{
	SymbolKind kind;
	std::array<int, 3> index{}; // 1-based, ascending, unused slots 0
	VarId var;
};

VarId lambda_var(int i);
/// Requires i < j.
VarId m_var(int i, int j);
/// Requires i < j < k.
VarId w_var(int i, int j, int k);

/// Recognizes lambda/m/w variable names; nullopt for anything else.
std::optional<CanonicalSymbol> classify(VarId v);

/// m_{min,max} for i != j, and 1 - lambda_i^2 for i == j.
Poly canonical_m(int i, int j);
/// (sign, w_sorted) with the sign of the sorting permutation, or (0, 0) when
/// two indices coincide.
std::pair<int, Poly> canonical_w(int i, int j, int k);
/// sign * w_sorted as a single polynomial.
Poly w_symbol(int i, int j, int k);

/// The alternating relation among w and m for arbitrary indices.
Poly raw_r3(int i, int j, int k, int l, int s);
/// w_ijk w_lst minus the 3x3 determinant of m's for arbitrary indices.
Poly raw_r4(int i, int j, int k, int l, int s, int t);

std::vector<VarId> kf_variables(int n);
/// Block order with all w variables above the lambda and m variables.
MonomialOrder kf_order(int n);
/// Relation generators over canonical index sets.
std::vector<Poly> kf_relations(int n);

/// The ring K[F_n] as generated by lambda_i, m_ij, w_ijk modulo R3 and R4.
const QuotientRing &build_KF(int n);

} // namespace cgr
