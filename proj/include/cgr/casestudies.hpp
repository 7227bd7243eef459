#pragma once

#include "cgr/ideals.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgr {

/// A structural identity that must hold failed. Indicates a bug.
class FormCheckFailed : public std::runtime_error
{
  public:
	explicit FormCheckFailed(const std::string &what) : std::runtime_error(what) {}
};

/// Rewrites w so that exponent_sum(w, i) == 1 for every generator by
/// appending powers of g_i^orders[i-1]. Throws std::invalid_argument when a
/// sum is not congruent to 1 modulo the order.
Word normalize_exponent_sums(const Word &w, const std::vector<long> &orders);

/// Random word over orders.size() generators whose exponent sums are
/// congruent to 1 modulo the orders, before normalization.
Word random_unit_sum_word(std::mt19937_64 &rng, const std::vector<long> &orders, long max_letters);

// ---------------------------------------------------------------- two factors

struct BoyerInstance
{
	long s = 2, t = 3, r = 2;
	Word w;
};

/// E = Q[s1,s2,mu1,mu2] / <P_s(mu1), P_t(mu2), s_i^2 + mu_i^2 - 1> and E[x]
/// with x in a block above the E variables.
struct BoyerRing
{
	long s = 0, t = 0;
	VarId x{}, s1{}, s2{}, mu1{}, mu2{};
	QuotientRing E;
	QuotientRing Ex;
};

BoyerRing boyer_ring(long s, long t);

/// lambda1 -> mu1, lambda2 -> mu2, m12 -> s1 s2 x, then normal form in E[x].
/// Throws std::invalid_argument on any other variable.
Poly boyer_theta(const Poly &p, const BoyerRing &ring);

struct Certificate
{
	long s = 0, t = 0, r = 0;
	std::string word;
	std::string normalized_word;
	std::string order;
	Poly theta_image;
	Poly remainder;
	/// Highest power of x with a nonzero coefficient in P_r(theta_image).
	std::optional<unsigned> nonzero_degree;
	/// Highest power of x whose coefficient is a unit of E, and that
	/// coefficient.
	std::optional<unsigned> degree;
	Poly leading_coefficient;
	std::optional<Poly> leading_inverse;
	bool degree_ok = false;
	bool unit_ok = false;
	/// Empty unless every check passed.
	std::string conclusion;

	bool certified() const { return !conclusion.empty(); }
};

/// Throws FormCheckFailed if theta(bar w) is not -s1 s2 x + mu1 mu2 modulo
/// 1 - x^2. A failed degree or unit check is reported without a conclusion.
Certificate boyer_certificate(const BoyerInstance &inst, const Deadline &deadline = {});

// ---------------------------------------------------------------- three factors

/// E' = Q[s_i, mu_i] / <P_r(mu1), P_s(mu2), P_t(mu3), s_i^2 + mu_i^2 - 1> and
/// A = E'[x,y,u,v] / <(1-x^2)(1-y^2) - u^2 - v^2>. An order of 0 drops the
/// corresponding P relation, leaving the ring generic in that factor.
struct SWRing
{
	long r = 0, s = 0, t = 0;
	VarId x{}, y{}, u{}, v{};
	std::array<VarId, 3> sv{}, mu{};
	QuotientRing E;
	QuotientRing A;

	Poly X() const { return Poly::variable(x); }
	Poly Y() const { return Poly::variable(y); }
	Poly U() const { return Poly::variable(u); }
	Poly V() const { return Poly::variable(v); }
	Poly S(int i) const { return Poly::variable(sv[i - 1]); }
	Poly Mu(int i) const { return Poly::variable(mu[i - 1]); }
};

SWRing sw_build(long r, long s, long t);

/// lambda_i -> mu_i, m12 -> s1 s2 x, m13 -> s3 s1 y, m23 -> s2 s3 (u + xy),
/// w123 -> s1 s2 s3 v, then normal form in A.
Poly sw_theta(const Poly &p, const SWRing &ring);

using Matrix4 = std::array<std::array<Poly, 4>, 4>;

/// The relation matrix annihilating (w2, w2', w3, w3').
Matrix4 sw_relation_matrix(const SWRing &ring);
/// The matrix M whose columns span that kernel.
Matrix4 sw_matrix_M(const SWRing &ring);
/// -s1^2 s2 s3 xy + mu1 mu3 s1 s2 x + mu1 mu2 s1 s3 y + s1^2 mu2 mu3.
Poly sw_W(const SWRing &ring);
/// u, v, 1 - x^2, 1 - y^2.
std::vector<Poly> sw_J_generators(const SWRing &ring);

struct SWInstance
{
	long r = 2, s = 3, t = 5;
	Word w;
};

struct SWElements
{
	Poly w1, w2, w2p, w3, w3p;

	std::vector<Poly> all() const { return {w1, w2, w2p, w3, w3p}; }
};

/// Elements for a word with unit exponent sums; s-inverses via invert in E'.
SWElements sw_elements(const Word &w, const SWRing &ring);

struct NamedCheck
{
	std::string name;
	bool passed = false;
	/// Normal form of the offending expression; "0" when passed.
	std::string residue;
};

enum class Properness
{
	not_checked,
	proper,
	whole_ring,
	timed_out,
};

std::string to_string(Properness p);

struct SWReport
{
	long r = 0, s = 0, t = 0;
	std::string word;
	std::string normalized_word;
	std::string order;
	std::vector<NamedCheck> checks;
	Properness properness = Properness::not_checked;
	double properness_seconds = 0;
	/// Nonempty only when properness was established.
	std::string conclusion;

	bool structural_ok() const;
};

/// Structural checks (matrix rows, w1 - W in J) and, optionally, properness
/// of <w1, w2, w2', w3, w3'> within the deadline. The deadline only bounds
/// the properness computation.
SWReport sw_verify(const SWInstance &inst, bool check_properness, const Deadline &properness_deadline = {});

/// Matrix kernel, J reduction identities, the K[F_3] relation and
/// well-definedness of theta, in the generic ring.
std::vector<NamedCheck> sw_static_checks();

// ---------------------------------------------------------------- conjecture probe

/// sw_build(0, 0, 0): only s_i^2 + mu_i^2 = 1 on the coefficients.
const SWRing &sw_generic_ring();
/// Q[x,y,u,v] / <(1-x^2)(1-y^2) - u^2 - v^2>.
const QuotientRing &sw_plain_ring();

/// q1^T M q2.
Poly sw_form(const std::array<Poly, 4> &q1, const std::array<Poly, 4> &q2, const SWRing &ring);

struct ProbeTrial
{
	int index = 0;
	Poly a;
	Poly alpha;
	std::array<Poly, 4> q1, q2;
};

struct ProbeReport
{
	std::array<Rational, 4> c;
	std::uint64_t seed = 0;
	int trials = 0;
	int proper = 0;
	int timed_out = 0;
	std::vector<ProbeTrial> counterexamples;
};

/// For random q1, q2 in A^4 (entries of degree <= 1) and alpha in J, checks
/// that <q1^T M q2, W' + alpha> is proper, W' = c3 xy + c2 y + c1 x + c0.
ProbeReport conjecture_probe(const std::array<Rational, 4> &c, std::uint64_t seed, int trials,
                             double seconds_per_trial = 30);

} // namespace cgr
