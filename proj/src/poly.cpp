#include "cgr/poly.hpp"

#include "cgr/words.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <mutex>
#include <stdexcept>

namespace cgr {

std::string to_string(const Rational &q) { return q.get_str(); }

Rational parse_rational(std::string_view text)
{
	std::string s(text);
	s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
	if (!s.empty() && s[0] == '+')
		s.erase(0, 1);
	Rational q;
	if (s.empty() || q.set_str(s, 10) != 0)
		throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
	if (q.get_den() == 0)
		throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
	q.canonicalize();
	return q;
}

// ---------------------------------------------------------------- registry

VarRegistry &VarRegistry::global()
{
	static VarRegistry instance;
	return instance;
}

VarId VarRegistry::intern(std::string_view name)
{
	{
		std::shared_lock lock(mutex_);
		auto it = ids_.find(std::string(name));
		if (it != ids_.end())
			return it->second;
	}
	std::unique_lock lock(mutex_);
	auto [it, inserted] = ids_.try_emplace(std::string(name), static_cast<VarId>(names_.size()));
	if (inserted)
		names_.emplace_back(name);
	return it->second;
}

std::optional<VarId> VarRegistry::find(std::string_view name) const
{
	std::shared_lock lock(mutex_);
	auto it = ids_.find(std::string(name));
	if (it == ids_.end())
		return std::nullopt;
	return it->second;
}

std::string VarRegistry::name(VarId id) const
{
	std::shared_lock lock(mutex_);
	if (id >= names_.size())
		throw std::out_of_range("unknown variable id " + std::to_string(id));
	return names_[id];
}

std::size_t VarRegistry::size() const
{
	std::shared_lock lock(mutex_);
	return names_.size();
}

// ---------------------------------------------------------------- monomial

Monomial Monomial::variable(VarId v, std::uint32_t exponent)
{
	Monomial m;
	if (exponent > 0)
	{
		m.entries_.push_back({v, exponent});
		m.degree_ = exponent;
	}
	return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries)
{
	std::sort(entries.begin(), entries.end());
	Monomial m;
	for (const auto &[v, e] : entries)
	{
		if (e == 0)
			continue;
		if (!m.entries_.empty() && m.entries_.back().first == v)
			m.entries_.back().second += e;
		else
			m.entries_.push_back({v, e});
		m.degree_ += e;
	}
	return m;
}

std::uint32_t Monomial::exponent(VarId v) const
{
	auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{v, 0});
	return it != entries_.end() && it->first == v ? it->second : 0;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
	Monomial out;
	out.entries_.reserve(a.entries_.size() + b.entries_.size());
	auto i = a.entries_.begin(), j = b.entries_.begin();
	while (i != a.entries_.end() || j != b.entries_.end())
	{
		if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first))
			out.entries_.push_back(*i++);
		else if (i == a.entries_.end() || j->first < i->first)
			out.entries_.push_back(*j++);
		else
		{
			out.entries_.push_back({i->first, i->second + j->second});
			++i;
			++j;
		}
	}
	out.degree_ = a.degree_ + b.degree_;
	return out;
}

std::strong_ordering operator<=>(const Monomial &a, const Monomial &b)
{
	if (a.degree_ != b.degree_)
		return a.degree_ <=> b.degree_;
	// Reverse lexicographic: the last variable where they differ decides, and
	// a smaller exponent there means a larger monomial.
	auto i = a.entries_.rbegin(), j = b.entries_.rbegin();
	while (i != a.entries_.rend() && j != b.entries_.rend())
	{
		if (i->first == j->first)
		{
			if (i->second != j->second)
				return j->second <=> i->second;
			++i;
			++j;
		}
		else if (i->first > j->first)
			return std::strong_ordering::less;
		else
			return std::strong_ordering::greater;
	}
	return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- poly

Poly::Poly(long c)
{
	if (c != 0)
		terms_.push_back({Rational(c), Monomial{}});
}

Poly::Poly(const Rational &c)
{
	if (c != 0)
		terms_.push_back({c, Monomial{}});
}

Poly Poly::variable(VarId v) { return monomial(1, Monomial::variable(v)); }

Poly Poly::monomial(const Rational &c, Monomial m)
{
	Poly p;
	if (c != 0)
		p.terms_.push_back({c, std::move(m)});
	return p;
}

Poly Poly::from_terms(std::vector<Term> terms)
{
	std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.mono > b.mono; });
	Poly p;
	for (auto &t : terms)
	{
		if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
			p.terms_.back().coeff += t.coeff;
		else
		{
			if (!p.terms_.empty() && p.terms_.back().coeff == 0)
				p.terms_.pop_back();
			p.terms_.push_back(std::move(t));
		}
	}
	if (!p.terms_.empty() && p.terms_.back().coeff == 0)
		p.terms_.pop_back();
	return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational Poly::constant() const
{
	if (!is_constant())
		throw std::logic_error("polynomial is not constant");
	return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

Rational Poly::constant_term() const
{
	// The constant monomial is the smallest in every degree order.
	if (!terms_.empty() && terms_.back().mono.is_one())
		return terms_.back().coeff;
	return 0;
}

std::uint32_t Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

namespace {

// Merges b*sign into a. Both sorted descending.
std::vector<Term> merge(const std::vector<Term> &a, const std::vector<Term> &b, int sign)
{
	std::vector<Term> out;
	out.reserve(a.size() + b.size());
	auto i = a.begin(), j = b.begin();
	while (i != a.end() || j != b.end())
	{
		std::strong_ordering c = std::strong_ordering::equal;
		if (i == a.end())
			c = std::strong_ordering::less;
		else if (j == b.end())
			c = std::strong_ordering::greater;
		else
			c = i->mono <=> j->mono;
		if (c > 0)
			out.push_back(*i++);
		else if (c < 0)
		{
			out.push_back(*j++);
			if (sign < 0)
				out.back().coeff = -out.back().coeff;
		}
		else
		{
			Rational s = sign < 0 ? Rational(i->coeff - j->coeff) : Rational(i->coeff + j->coeff);
			if (s != 0)
				out.push_back({s, i->mono});
			++i;
			++j;
		}
	}
	return out;
}

} // namespace

Poly &Poly::operator+=(const Poly &o)
{
	terms_ = merge(terms_, o.terms_, 1);
	return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
	terms_ = merge(terms_, o.terms_, -1);
	return *this;
}

namespace {

// Consumes two descending term lists and returns their sum.
std::vector<Term> merge_move(std::vector<Term> &&a, std::vector<Term> &&b)
{
	std::vector<Term> out;
	out.reserve(a.size() + b.size());
	auto i = a.begin(), j = b.begin();
	while (i != a.end() && j != b.end())
	{
		auto c = i->mono <=> j->mono;
		if (c > 0)
			out.push_back(std::move(*i++));
		else if (c < 0)
			out.push_back(std::move(*j++));
		else
		{
			i->coeff += j->coeff;
			if (i->coeff != 0)
				out.push_back(std::move(*i));
			++i;
			++j;
		}
	}
	std::move(i, a.end(), std::back_inserter(out));
	std::move(j, b.end(), std::back_inserter(out));
	return out;
}

} // namespace

Poly operator*(const Poly &a, const Poly &b)
{
	if (a.is_zero() || b.is_zero())
		return {};
	if (a.size() < b.size())
		return b * a;
	// Rows a*t for each term t of b are sorted; merge them pairwise.
	std::vector<std::vector<Term>> rows;
	rows.reserve(b.size());
	for (const auto &tb : b.terms_)
	{
		std::vector<Term> row;
		row.reserve(a.size());
		for (const auto &ta : a.terms_)
			row.push_back({ta.coeff * tb.coeff, ta.mono * tb.mono});
		rows.push_back(std::move(row));
	}
	while (rows.size() > 1)
	{
		std::vector<std::vector<Term>> next;
		next.reserve((rows.size() + 1) / 2);
		for (std::size_t k = 0; k + 1 < rows.size(); k += 2)
			next.push_back(merge_move(std::move(rows[k]), std::move(rows[k + 1])));
		if (rows.size() % 2)
			next.push_back(std::move(rows.back()));
		rows = std::move(next);
	}
	Poly out;
	out.terms_ = std::move(rows.front());
	return out;
}

Poly &Poly::operator*=(const Poly &o)
{
	*this = *this * o;
	return *this;
}

Poly &Poly::operator*=(const Rational &c)
{
	if (c == 0)
		terms_.clear();
	else
		for (auto &t : terms_)
			t.coeff *= c;
	return *this;
}

Poly Poly::operator-() const
{
	Poly p = *this;
	for (auto &t : p.terms_)
		t.coeff = -t.coeff;
	return p;
}

Poly Poly::pow(unsigned k) const
{
	Poly result(1), base = *this;
	while (k)
	{
		if (k & 1)
			result *= base;
		k >>= 1;
		if (k)
			base = base * base;
	}
	return result;
}

bool Poly::operator==(const Poly &o) const
{
	if (terms_.size() != o.terms_.size())
		return false;
	for (std::size_t i = 0; i < terms_.size(); ++i)
		if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].mono == o.terms_[i].mono))
			return false;
	return true;
}

Poly add(const Poly &a, const Poly &b) { return a + b; }
Poly sub(const Poly &a, const Poly &b) { return a - b; }
Poly mul(const Poly &a, const Poly &b) { return a * b; }
Poly neg(const Poly &a) { return -a; }
Poly power(const Poly &a, unsigned k) { return a.pow(k); }

Poly substitute(const Poly &p, const std::map<VarId, Poly> &assignment)
{
	// Powers of each assigned image are cached across terms.
	std::map<std::pair<VarId, std::uint32_t>, Poly> powers;
	auto image_power = [&](VarId v, std::uint32_t e) -> const Poly & {
		auto key = std::make_pair(v, e);
		auto it = powers.find(key);
		if (it == powers.end())
			it = powers.emplace(key, assignment.at(v).pow(e)).first;
		return it->second;
	};

	std::vector<Term> direct;
	Poly out;
	for (const auto &t : p.terms())
	{
		std::vector<Monomial::Entry> kept;
		Poly factor(t.coeff);
		for (const auto &[v, e] : t.mono.entries())
		{
			if (assignment.count(v))
				factor *= image_power(v, e);
			else
				kept.push_back({v, e});
		}
		if (kept.empty())
			out += factor;
		else
			out += factor * Poly::monomial(1, Monomial::from_entries(std::move(kept)));
	}
	return out;
}

Rational evaluate(const Poly &p, const std::function<Rational(VarId)> &value)
{
	std::map<VarId, Rational> cache;
	Rational total = 0;
	for (const auto &t : p.terms())
	{
		Rational term = t.coeff;
		for (const auto &[v, e] : t.mono.entries())
		{
			auto it = cache.find(v);
			if (it == cache.end())
				it = cache.emplace(v, value(v)).first;
			Rational pw;
			mpz_pow_ui(pw.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
			mpz_pow_ui(pw.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
			pw.canonicalize();
			term *= pw;
		}
		total += term;
	}
	return total;
}

std::optional<unsigned> degree_in(const Poly &p, VarId v)
{
	if (p.is_zero())
		return std::nullopt;
	unsigned d = 0;
	for (const auto &t : p.terms())
		d = std::max<unsigned>(d, t.mono.exponent(v));
	return d;
}

std::map<unsigned, Poly> coefficients_in(const Poly &p, VarId v)
{
	std::map<unsigned, std::vector<Term>> buckets;
	for (const auto &t : p.terms())
	{
		std::vector<Monomial::Entry> rest;
		unsigned k = 0;
		for (const auto &e : t.mono.entries())
			if (e.first == v)
				k = e.second;
			else
				rest.push_back(e);
		buckets[k].push_back({t.coeff, Monomial::from_entries(std::move(rest))});
	}
	std::map<unsigned, Poly> out;
	for (auto &[k, terms] : buckets)
		out.emplace(k, Poly::from_terms(std::move(terms)));
	return out;
}

std::vector<VarId> variables(const Poly &p)
{
	std::vector<VarId> vs;
	for (const auto &t : p.terms())
		for (const auto &e : t.mono.entries())
			vs.push_back(e.first);
	std::sort(vs.begin(), vs.end());
	vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
	return vs;
}

Poly primitive_part(const Poly &p)
{
	if (p.is_zero())
		return p;
	mpz_class num_gcd = 0, den_lcm = 1;
	for (const auto &t : p.terms())
	{
		mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
		mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
	}
	Rational scale(den_lcm, num_gcd);
	scale.canonicalize();
	if (p.terms().front().coeff < 0)
		scale = -scale;
	return p * scale;
}

Poly chebyshev_like(long n, VarId x)
{
	if (n < 0)
		return -chebyshev_like(-n, x);
	Poly prev(0), cur(1);
	if (n == 0)
		return prev;
	Poly two_x = Poly::monomial(2, Monomial::variable(x));
	for (long k = 1; k < n; ++k)
	{
		Poly next = two_x * cur - prev;
		prev = std::move(cur);
		cur = std::move(next);
	}
	return cur;
}

Poly chebyshev_like(long n) { return chebyshev_like(n, var_id("x")); }

std::string render(const Poly &p)
{
	if (p.is_zero())
		return "0";
	std::string out;
	bool first = true;
	for (const auto &t : p.terms())
	{
		Rational c = t.coeff;
		if (first)
		{
			if (c < 0)
				out += "-";
		}
		else
			out += c < 0 ? " - " : " + ";
		if (c < 0)
			c = -c;
		std::string mono;
		for (const auto &[v, e] : t.mono.entries())
		{
			if (!mono.empty())
				mono += '*';
			mono += var_name(v);
			if (e != 1)
				mono += "^" + std::to_string(e);
		}
		if (mono.empty())
			out += c.get_str();
		else if (c == 1)
			out += mono;
		else
			out += c.get_str() + "*" + mono;
		first = false;
	}
	return out;
}

namespace {

class PolyParser
{
  public:
	explicit PolyParser(std::string_view text) : text_(text) {}

	Poly parse()
	{
		Poly p = expr();
		skip_ws();
		if (pos_ != text_.size())
			throw ParseError("unexpected character", pos_);
		return p;
	}

  private:
	void skip_ws()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}
	bool accept(char c)
	{
		skip_ws();
		if (pos_ < text_.size() && text_[pos_] == c)
		{
			++pos_;
			return true;
		}
		return false;
	}
	bool peek_digit()
	{
		skip_ws();
		return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
	}
	mpz_class integer()
	{
		skip_ws();
		std::size_t start = pos_;
		while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
			++pos_;
		if (start == pos_)
			throw ParseError("expected integer", start);
		return mpz_class(std::string(text_.substr(start, pos_ - start)));
	}

	Poly expr()
	{
		Poly acc;
		bool negate = false;
		if (accept('-'))
			negate = true;
		else
			accept('+');
		acc = term();
		if (negate)
			acc = -acc;
		while (true)
		{
			if (accept('+'))
				acc += term();
			else if (accept('-'))
				acc -= term();
			else
				return acc;
		}
	}

	Poly term()
	{
		Poly acc = factor();
		while (true)
		{
			if (accept('*'))
				acc *= factor();
			else if (accept('/'))
			{
				std::size_t at = pos_;
				mpz_class d = integer();
				if (d == 0)
					throw ParseError("division by zero", at);
				acc *= Rational(mpz_class(1), d);
			}
			else
				return acc;
		}
	}

	Poly factor()
	{
		Poly base = primary();
		if (accept('^'))
		{
			std::size_t at = pos_;
			mpz_class e = integer();
			if (!e.fits_uint_p())
				throw ParseError("exponent out of range", at);
			base = base.pow(static_cast<unsigned>(e.get_ui()));
		}
		return base;
	}

	Poly primary()
	{
		skip_ws();
		if (accept('('))
		{
			Poly p = expr();
			if (!accept(')'))
				throw ParseError("expected ')'", pos_);
			return p;
		}
		if (peek_digit())
			return Poly(Rational(integer()));
		if (accept('-'))
			return -factor();
		std::size_t start = pos_;
		while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
			++pos_;
		if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start])))
			throw ParseError("expected number, variable or '('", start);
		return Poly::var(text_.substr(start, pos_ - start));
	}

	std::string_view text_;
	std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

} // namespace cgr
