#include "cgr/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace cgr {

namespace {

// Appends one syllable to a reduced list, cancelling against the tail.
void push_reduced(std::vector<Syllable> &out, Syllable s)
{
	if (s.exponent == 0)
		return;
	if (out.empty() || out.back().index != s.index)
	{
		out.push_back(s);
		return;
	}
	// The syllable before the tail has a different index, so no cascade.
	out.back().exponent += s.exponent;
	if (out.back().exponent == 0)
		out.pop_back();
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer
{
  public:
	Lexer(std::string_view text, std::size_t base) : text_(text), base_(base) {}

	void skip_ws()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}
	bool at_end()
	{
		skip_ws();
		return pos_ >= text_.size();
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
	void expect(char c)
	{
		if (!accept(c))
			throw ParseError(std::string("expected '") + c + "'", position());
	}
	std::string identifier()
	{
		skip_ws();
		if (pos_ >= text_.size() || !is_ident_start(text_[pos_]))
			throw ParseError("expected generator name", position());
		std::size_t start = pos_;
		while (pos_ < text_.size() && is_ident_char(text_[pos_]))
			++pos_;
		return std::string(text_.substr(start, pos_ - start));
	}
	long integer()
	{
		skip_ws();
		std::size_t start = pos_;
		bool neg = false;
		if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
		{
			neg = text_[pos_] == '-';
			++pos_;
			skip_ws();
		}
		std::size_t digits = pos_;
		while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
			++pos_;
		if (digits == pos_)
			throw ParseError("expected integer exponent", base_ + start);
		long value = 0;
		auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, value);
		if (ec != std::errc())
			throw ParseError("exponent out of range", base_ + digits);
		return neg ? -value : value;
	}
	std::size_t position() const { return base_ + pos_; }
	std::size_t raw() const { return pos_; }

  private:
	std::string_view text_;
	std::size_t base_;
	std::size_t pos_ = 0;
};

Word parse_word_at(std::string_view text, const std::vector<std::string> &names, std::size_t base)
{
	std::size_t first = text.find_first_not_of(" \t\r\n");
	std::size_t last = text.find_last_not_of(" \t\r\n");
	if (first == std::string_view::npos)
		throw ParseError("empty word", base);
	std::string_view trimmed = text.substr(first, last - first + 1);
	if (trimmed == "e" && std::find(names.begin(), names.end(), "e") == names.end())
		return Word{};

	Lexer lex(text, base);
	std::vector<Syllable> syl;
	do
	{
		lex.skip_ws();
		std::size_t at = lex.position();
		std::string name = lex.identifier();
		auto it = std::find(names.begin(), names.end(), name);
		if (it == names.end())
			throw UnknownGenerator(name, at);
		long exp = 1;
		if (lex.accept('^'))
		{
			std::size_t exp_at = lex.position();
			exp = lex.integer();
			if (exp == 0)
				throw ParseError("zero exponent", exp_at);
		}
		push_reduced(syl, {static_cast<int>(it - names.begin()) + 1, exp});
	} while (lex.accept('*'));
	if (!lex.at_end())
		throw ParseError("unexpected character", lex.position());
	return Word::from_syllables(syl);
}

} // namespace

Word Word::from_syllables(const std::vector<Syllable> &syllables)
{
	Word w;
	for (const auto &s : syllables)
		push_reduced(w.syllables_, s);
	return w;
}

Word Word::generator(int index, long exponent)
{
	if (index < 1)
		throw std::invalid_argument("generator index must be >= 1");
	return from_syllables({{index, exponent}});
}

long Word::length() const
{
	long n = 0;
	for (const auto &s : syllables_)
		n += s.exponent < 0 ? -s.exponent : s.exponent;
	return n;
}

int Word::max_index() const
{
	int m = 0;
	for (const auto &s : syllables_)
		m = std::max(m, s.index);
	return m;
}

Word operator*(const Word &a, const Word &b)
{
	Word out = a;
	for (const auto &s : b.syllables_)
		push_reduced(out.syllables_, s);
	return out;
}

Word Word::pow(long n) const
{
	Word base = n < 0 ? inverse(*this) : *this;
	if (n < 0)
		n = -n;
	Word out;
	for (long i = 0; i < n; ++i)
		out = out * base;
	return out;
}

Word multiply(const Word &a, const Word &b) { return a * b; }

Word inverse(const Word &a)
{
	std::vector<Syllable> s(a.syllables().rbegin(), a.syllables().rend());
	for (auto &x : s)
		x.exponent = -x.exponent;
	return Word::from_syllables(s);
}

Word random_word(std::mt19937_64 &rng, int generators, long max_letters)
{
	if (generators < 1 || max_letters < 0)
		throw std::invalid_argument("random_word needs generators >= 1 and max_letters >= 0");
	std::uniform_int_distribution<long> length(0, max_letters);
	std::uniform_int_distribution<int> index(1, generators);
	std::bernoulli_distribution positive(0.5);
	std::vector<Syllable> letters;
	for (long k = length(rng); k > 0; --k)
		letters.push_back({index(rng), positive(rng) ? 1L : -1L});
	return Word::from_syllables(letters);
}

long exponent_sum(const Word &a, int index)
{
	long total = 0;
	for (const auto &s : a.syllables())
		if (s.index == index)
			total += s.exponent;
	return total;
}

std::vector<std::string> default_names(int n)
{
	std::vector<std::string> names;
	for (int i = 1; i <= n; ++i)
		names.push_back("g" + std::to_string(i));
	return names;
}

Word parse_word(std::string_view text, const std::vector<std::string> &names)
{
	return parse_word_at(text, names, 0);
}

std::string render(const Word &w, const std::vector<std::string> &names)
{
	if (w.is_identity())
		return "e";
	std::string out;
	for (const auto &s : w.syllables())
	{
		if (!out.empty())
			out += '*';
		if (s.index < 1 || s.index > static_cast<int>(names.size()))
			out += "g" + std::to_string(s.index);
		else
			out += names[s.index - 1];
		if (s.exponent != 1)
			out += "^" + std::to_string(s.exponent);
	}
	return out;
}

std::string render(const Word &w) { return render(w, default_names(w.max_index())); }

Presentation parse_presentation(std::string_view text)
{
	Lexer lex(text, 0);
	lex.expect('<');
	Presentation p;
	std::set<std::string> seen;
	do
	{
		lex.skip_ws();
		std::size_t at = lex.position();
		std::string name = lex.identifier();
		if (!seen.insert(name).second)
			throw ParseError("duplicate generator name '" + name + "'", at);
		p.names.push_back(name);
	} while (lex.accept(','));
	lex.expect('|');

	// Relators are the comma separated segments up to the closing '>'.
	std::size_t close = text.rfind('>');
	std::size_t start = lex.raw();
	if (close == std::string_view::npos || close < start)
		throw ParseError("expected '>'", text.size());
	std::string_view body = text.substr(start, close - start);
	if (body.find_first_not_of(" \t\r\n") != std::string_view::npos)
	{
		std::size_t seg = 0;
		while (true)
		{
			std::size_t comma = body.find(',', seg);
			std::string_view piece = body.substr(seg, comma == std::string_view::npos ? std::string_view::npos : comma - seg);
			p.relators.push_back(parse_word_at(piece, p.names, start + seg));
			if (comma == std::string_view::npos)
				break;
			seg = comma + 1;
		}
	}
	if (text.substr(close + 1).find_first_not_of(" \t\r\n") != std::string_view::npos)
		throw ParseError("trailing characters after '>'", close + 1);
	return p;
}

std::string render(const Presentation &p)
{
	std::string out = "<";
	for (std::size_t i = 0; i < p.names.size(); ++i)
		out += (i ? "," : "") + p.names[i];
	out += "|";
	for (std::size_t i = 0; i < p.relators.size(); ++i)
		out += (i ? "," : "") + render(p.relators[i], p.names);
	return out + ">";
}

} // namespace cgr
