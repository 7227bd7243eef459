#pragma once

#include "cgr/agmod.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace cgr {

/// mu + a e1 + b e2 + c e3 with e1^2 = e2^2 = e3^2 = e1 e2 e3 = -1.
struct Quaternion
{
	Rational mu, a, b, c;

	bool operator==(const Quaternion &) const = default;
};

Quaternion quat_mul(const Quaternion &p, const Quaternion &q);
Quaternion quat_conj(const Quaternion &p);
Rational quat_norm(const Quaternion &p);
std::string render(const Quaternion &q);

/// Unit quaternion from a rational point of R^3 (inverse stereographic
/// projection): with n = x^2+y^2+z^2 it is ((1-n), -2x, -2y, -2z) / (1+n).
Quaternion cayley_point(const Rational &x, const Rational &y, const Rational &z);

/// Unit quaternion per generator, index i-1 for g_i.
using EvalPoint = std::vector<Quaternion>;

/// Rationals p/q with |p| <= height and 1 <= q <= height.
Rational random_rational(std::mt19937_64 &rng, int height);
EvalPoint random_eval_point(std::mt19937_64 &rng, int n, int height);

/// Product of generator images; g_i^-1 maps to the conjugate.
Quaternion eval_word(const Word &w, const EvalPoint &pt);

/// lambda_i -> mu_i, m_ij -> dot of vector parts, w_ijk -> det of vector
/// parts (rows i, j, k). Throws on any other variable.
Rational eval_ring_elem(const Poly &p, const EvalPoint &pt);

/// Image of an A_F element: 1 -> 1, v_i -> vector part of g_i,
/// b_ij -> cross product of the vector parts of g_i and g_j.
Quaternion eval_aelem(const AElem &a, const EvalPoint &pt);

struct FuzzMismatch
{
	Word word;
	EvalPoint point;
	Rational quaternion_value;
	Rational symbolic_value;
};

struct FuzzReport
{
	std::uint64_t seed = 0;
	int trials = 0;
	long max_length = 0;
	int generators = 0;
	int height = 0;
	std::vector<FuzzMismatch> mismatches;
};

/// Compares the mu-component of eval_word(w) with eval_ring_elem(bar(w)) on
/// random words and points.
FuzzReport fuzz_bar(int trials, long max_length, int n, std::uint64_t seed, int height = 6);

} // namespace cgr
