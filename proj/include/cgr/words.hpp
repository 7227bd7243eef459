#pragma once

#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cgr {

/// Raised on malformed word or presentation text. `position` is a byte offset
/// into the input.
class ParseError : public std::runtime_error
{
  public:
	ParseError(const std::string &what, std::size_t position)
	    : std::runtime_error(what + " at position " + std::to_string(position)),
	      position_(position)
	{}
	std::size_t position() const { return position_; }

  private:
	std::size_t position_;
};

class UnknownGenerator : public ParseError
{
  public:
	UnknownGenerator(const std::string &name, std::size_t position)
	    : ParseError("unknown generator '" + name + "'", position), name_(name)
	{}
	const std::string &name() const { return name_; }

  private:
	std::string name_;
};

/// One run g_index^exponent of a word. Indices are 1-based.
struct Syllable
{
	int index;
	long exponent;
	bool operator==(const Syllable &) const = default;
};

/// A freely reduced word in the free group on generators g_1, g_2, ...
/// Stored in run-length form: adjacent syllables never share an index and
/// no exponent is zero. The empty word is the identity.
class Word
{
  public:
	Word() = default;

	/// Builds the free reduction of an arbitrary syllable list.
	static Word from_syllables(const std::vector<Syllable> &syllables);
	static Word generator(int index, long exponent = 1);

	const std::vector<Syllable> &syllables() const { return syllables_; }
	bool is_identity() const { return syllables_.empty(); }

	/// Number of letters, i.e. the sum of |exponent|.
	long length() const;
	int max_index() const;

	friend Word operator*(const Word &a, const Word &b);
	Word pow(long n) const;
	bool operator==(const Word &) const = default;

  private:
	std::vector<Syllable> syllables_;
};

Word multiply(const Word &a, const Word &b);
Word inverse(const Word &a);
long exponent_sum(const Word &a, int index);

/// Draws up to `max_letters` uniform letters g_i^{+-1}, i <= generators, and
/// reduces freely.
Word random_word(std::mt19937_64 &rng, int generators, long max_letters);

/// Default generator names g1, ..., gn.
std::vector<std::string> default_names(int n);

/// Parses `e` or `term (* term)*` with `term := name (^ integer)?`.
Word parse_word(std::string_view text, const std::vector<std::string> &names);

/// Renders with the given names (e.g. "g1*g2^-1"), or "e" for the identity.
std::string render(const Word &w, const std::vector<std::string> &names);
std::string render(const Word &w);

struct Presentation
{
	std::vector<std::string> names;
	std::vector<Word> relators;

	int generator_count() const { return static_cast<int>(names.size()); }
};

/// Parses `<a, b, ... | r1, r2, ...>`.
Presentation parse_presentation(std::string_view text);
std::string render(const Presentation &p);

} // namespace cgr
