#pragma once

#include "cgr/ring.hpp"
#include "cgr/words.hpp"

#include <string>
#include <vector>

namespace cgr {

/// Element of A_F for the free group on n generators, written over the
/// module generators 1, v_i (= vec g_i) and b_ij (= [v_i, v_j], i < j) with
/// coefficients in K[F_n]. Coefficients are kept in normal form.
///
/// For n >= 3 these generators are not a free basis, so two AElems can be
/// equal with different coefficients; use same_element() to compare values.
class AElem
{
  public:
	explicit AElem(int n = 1);
	static AElem scalar(int n, const Poly &p);
	static AElem v(int n, int i);
	/// b_ij with the sign convention b_ji = -b_ij and b_ii = 0.
	static AElem b(int n, int i, int j);

	int rank() const { return n_; }
	const Poly &scalar_part() const { return scalar_; }
	const Poly &v_coeff(int i) const;
	/// Coefficient of b_ij for i < j.
	const Poly &b_coeff(int i, int j) const;
	bool is_lambda() const { return scalar_.is_zero(); }
	/// All stored coefficients zero.
	bool is_zero() const;

	AElem &operator+=(const AElem &o);
	AElem &operator-=(const AElem &o);
	friend AElem operator+(AElem a, const AElem &b) { return a += b; }
	friend AElem operator-(AElem a, const AElem &b) { return a -= b; }
	friend AElem operator*(const Poly &c, const AElem &a);
	AElem operator-() const;

	/// Coefficient-wise equality of the representation.
	bool operator==(const AElem &o) const;

  private:
	friend AElem mul(const AElem &a, const AElem &b);
	friend AElem bracket(const AElem &a, const AElem &b);
	void set_b(int i, int j, const Poly &c);
	void add_b(int i, int j, const Poly &c);
	void add_v(int i, const Poly &c);
	void normalize();
	std::size_t pair_index(int i, int j) const;

	int n_;
	Poly scalar_;
	std::vector<Poly> v_;
	std::vector<Poly> b_;
};

AElem embed_generator(int n, int i, int sign);
/// Left-to-right product of the generator images.
AElem embed_word(int n, const Word &w);

AElem mul(const AElem &a, const AElem &b);
Poly bar(const AElem &a);
AElem vec(const AElem &a);
/// The involution x -> x*, i.e. bar(x) - vec(x).
AElem star(const AElem &a);

/// Symmetric bilinear form on the Lambda part. Throws if a scalar part is
/// nonzero.
Poly dot(const AElem &a, const AElem &b);
/// Antisymmetric bracket on the Lambda part.
AElem bracket(const AElem &a, const AElem &b);
Poly triple(const AElem &a, const AElem &b, const AElem &c);

/// True iff a and b are the same element of A_F: equal scalar parts and
/// vec(a - b) orthogonal to every module generator.
bool same_element(const AElem &a, const AElem &b);

/// bar(g h^n k) computed as bar(ghk) P_n(bar h) - bar(gk) P_{n-1}(bar h).
Poly power_bar(int n, const Word &g, const Word &h, const Word &k, long power);

/// Diagnostic rendering such as "lambda1 + (1)*v1 + (m12)*b12".
std::string render(const AElem &a);

} // namespace cgr
