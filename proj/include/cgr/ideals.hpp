#pragma once

#include "cgr/agmod.hpp"

#include <string>
#include <vector>

namespace cgr {

enum class IdealKind
{
	hash,
	hashhash,
	bullet,
	custom,
};

std::string to_string(IdealKind kind);

/// Ideal of K[F_n] given by generators in normal form. Zero and duplicate
/// generators (up to a rational factor) are dropped.
struct IdealSpec
{
	int rank = 1;
	std::vector<Poly> generators;
	IdealKind kind = IdealKind::custom;

	const QuotientRing &ambient() const { return build_KF(rank); }
	bool is_zero() const { return generators.empty(); }
};

IdealSpec make_ideal(int n, const std::vector<Poly> &generators, IdealKind kind = IdealKind::custom);
/// Generators of both; kind becomes custom unless the kinds agree.
IdealSpec ideal_sum(const IdealSpec &a, const IdealSpec &b);

/// The module generators 1, v_i, b_ij of A_F.
std::vector<AElem> module_generators(int n);

/// {bar(beta l) - bar(beta)} over the module generators beta and l in L.
IdealSpec hash_generators(const std::vector<Word> &L, int n);
/// {beta . vec(l)} over the Lambda generators v_i, b_ij and l in L.
IdealSpec hashhash_generators(const std::vector<Word> &L, int n);
/// {1 - bar(l)}.
IdealSpec bullet_generators(const std::vector<Word> &L, int n);

/// Reduced Groebner basis of the ideal plus the K[F_n] relations, in the
/// K[F_n] order.
GroebnerBasis ideal_basis(const IdealSpec &I, const Deadline &deadline = {});
bool ideal_equal(const IdealSpec &a, const IdealSpec &b, const Deadline &deadline = {});
bool ideal_contains(const IdealSpec &I, const Poly &p, const Deadline &deadline = {});

/// K[G] for G given by the presentation, as K[F_n] modulo the hash ideal of
/// the relators.
QuotientRing quotient_ring_of_presentation(const Presentation &P, const Deadline &deadline = {});

/// Generators of the kernel ideal for F_n -> Z^n: triple products
/// [v_a, v_b] . beta over a < b and the Lambda generators beta.
IdealSpec abelianization_kernel_generators(int n);

enum class Verdict
{
	certified_no,
	inconclusive,
};

std::string to_string(Verdict v);

struct NormalGenerationReport
{
	Verdict verdict = Verdict::inconclusive;
	/// (relators + L) and {g_1, ..., g_n}, both over K[F_n].
	IdealSpec candidate;
	IdealSpec full;
};

/// Tests whether L could normally generate the group of P by comparing the
/// ideals of relators + L and of all generators. Unequal ideals certify that
/// it cannot; equal ideals prove nothing. Uses the hashhash ideals unless
/// use_hash is set.
NormalGenerationReport normally_generates_check(const Presentation &P, const std::vector<Word> &L,
                                                bool use_hash = false, const Deadline &deadline = {});

} // namespace cgr
