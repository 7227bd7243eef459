#pragma once

#include "cgr/poly.hpp"

#include <chrono>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgr {

class Timeout : public std::runtime_error
{
  public:
	Timeout() : std::runtime_error("computation timed out") {}
};

/// Wall-clock budget for long computations. Default constructed means no limit.
class Deadline
{
  public:
	Deadline() = default;
	static Deadline after(std::chrono::milliseconds budget);
	static Deadline after_seconds(double seconds);

	/// This deadline or `budget` from now, whichever comes first.
	Deadline sooner(std::chrono::milliseconds budget) const;

	bool expired() const;
	/// Throws Timeout once the budget is spent.
	void check() const;

  private:
	std::optional<std::chrono::steady_clock::time_point> at_;
};

/// Degree reverse lexicographic order, optionally refined into blocks that are
/// compared lexicographically (degrevlex inside each block). Within a listed
/// block, earlier variables are larger. Variables not listed in any block
/// form an implicit last block ordered canonically (lower registry id is
/// larger).
class MonomialOrder
{
  public:
	MonomialOrder() = default;
	static MonomialOrder degrevlex() { return {}; }
	static MonomialOrder block(std::vector<std::vector<VarId>> blocks);

	const std::vector<std::vector<VarId>> &blocks() const { return blocks_; }
	bool is_degrevlex() const { return blocks_.empty(); }

	/// The same order with `vars` prepended as a new highest block.
	MonomialOrder with_top_block(std::vector<VarId> vars) const;

	std::strong_ordering compare(const Monomial &a, const Monomial &b) const;
	/// "degrevlex" or e.g. "block(x > mu1,mu2,s1,s2)".
	std::string describe() const;

	bool operator==(const MonomialOrder &o) const { return blocks_ == o.blocks_; }

  private:
	std::vector<std::vector<VarId>> blocks_;
};

Term leading_term(const Poly &p, const MonomialOrder &order);

namespace detail {
struct BasisData;
}

/// Reduced Groebner basis: monic, pairwise reduced, sorted by ascending
/// leading monomial. Unique for the ideal and the order.
class GroebnerBasis
{
  public:
	GroebnerBasis();

	const std::vector<Poly> &generators() const;
	const MonomialOrder &order() const;
	bool is_zero_ideal() const { return generators().empty(); }
	bool is_unit_ideal() const;
	std::vector<Monomial> leading_monomials() const;

	const detail::BasisData &data() const { return *data_; }

  private:
	friend GroebnerBasis make_basis(std::shared_ptr<const detail::BasisData>);
	std::shared_ptr<const detail::BasisData> data_;
};

GroebnerBasis buchberger(const std::vector<Poly> &gens, const MonomialOrder &order = {},
                         const Deadline &deadline = {});

/// Groebner basis of base + <gens>, reusing `base` without recomputing its
/// own S-pairs. `order` must restrict to base.order() on base's variables
/// (e.g. base.order().with_top_block(...)).
GroebnerBasis buchberger_extend(const GroebnerBasis &base, const std::vector<Poly> &gens,
                                const MonomialOrder &order, const Deadline &deadline = {});
GroebnerBasis buchberger_extend(const GroebnerBasis &base, const std::vector<Poly> &gens,
                                const Deadline &deadline = {});

/// Unique remainder of p modulo the basis.
Poly normal_form(const Poly &p, const GroebnerBasis &gb, const Deadline &deadline = {});

bool ideal_contains(const std::vector<Poly> &gens, const Poly &p, const MonomialOrder &order = {});
bool ideal_equal(const std::vector<Poly> &a, const std::vector<Poly> &b, const MonomialOrder &order = {});

/// Number of standard monomials in `vars`, or nullopt if infinite.
std::optional<std::size_t> standard_monomial_count(const GroebnerBasis &gb, const std::vector<VarId> &vars);

} // namespace cgr
