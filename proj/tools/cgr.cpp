#include "cgr/casestudies.hpp"
#include "cgr/identities.hpp"
#include "cgr/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cgr;
using Json = nlohmann::ordered_json;

namespace {

enum Exit
{
	ok = 0,
	error = 1,
	inconclusive = 2,
	timed_out = 3,
};

struct Common
{
	bool json = false;
	double timeout = 0;

	Deadline deadline() const { return timeout > 0 ? Deadline::after_seconds(timeout) : Deadline(); }
};

void add_common(CLI::App *cmd, Common &c, bool with_timeout = true)
{
	cmd->add_flag("--json", c.json, "Emit JSON");
	if (with_timeout)
		cmd->add_option("--timeout", c.timeout, "Seconds allowed for Groebner computations (0 = none)")
		    ->check(CLI::NonNegativeNumber);
}

void emit(const Common &c, const Json &j, const std::string &text)
{
	if (c.json)
		std::cout << j.dump(2) << "\n";
	else
		std::cout << text;
}

Json polys(const std::vector<Poly> &ps)
{
	Json a = Json::array();
	for (const auto &p : ps)
		a.push_back(render(p));
	return a;
}

std::string lines(const std::vector<Poly> &ps, const std::string &indent = "  ")
{
	if (ps.empty())
		return indent + "(none)\n";
	std::string out;
	for (const auto &p : ps)
		out += indent + render(p) + "\n";
	return out;
}

// ---------------------------------------------------------------- ring / ideal / normalgen

struct PresentationInput
{
	std::string inline_text;
	std::string file;

	Presentation load() const
	{
		if (!file.empty())
		{
			std::ifstream in(file);
			if (!in)
				throw std::runtime_error("cannot read " + file);
			std::stringstream ss;
			ss << in.rdbuf();
			return parse_presentation(ss.str());
		}
		if (inline_text.empty())
			throw std::runtime_error("a presentation is required (inline or --file)");
		return parse_presentation(inline_text);
	}
};

void add_presentation(CLI::App *cmd, PresentationInput &p)
{
	cmd->add_option("presentation", p.inline_text, "Presentation such as \"<g1, g2 | g1^2, g2^3>\"");
	cmd->add_option("--file", p.file, "Read the presentation from a file");
}

std::vector<Word> parse_words(const std::vector<std::string> &texts, const Presentation &P)
{
	std::vector<Word> out;
	for (const auto &t : texts)
		out.push_back(parse_word(t, P.names));
	return out;
}

int cmd_ring_describe(const PresentationInput &in, const Common &c)
{
	Presentation P = in.load();
	const int n = P.generator_count();
	if (n < 1)
		throw std::runtime_error("presentation has no generators");
	std::vector<Poly> kf = kf_relations(n);
	IdealSpec hash = hash_generators(P.relators, n);
	QuotientRing KG = quotient_ring_of_presentation(P, c.deadline());
	std::optional<std::size_t> dim = KG.dimension();

	Json j;
	j["presentation"] = render(P);
	j["variables"] = Json::array();
	for (VarId v : KG.variables())
		j["variables"].push_back(var_name(v));
	j["order"] = KG.order().describe();
	j["free_relations"] = polys(kf);
	j["relator_generators"] = polys(hash.generators);
	j["groebner_basis"] = polys(KG.basis().generators());
	j["dimension"] = dim ? Json(*dim) : Json(nullptr);

	std::string text = "K[G] for " + render(P) + "\nvariables:";
	for (VarId v : KG.variables())
		text += " " + var_name(v);
	text += "\norder: " + KG.order().describe() + "\nrelations of K[F]:\n" + lines(kf) +
	        "relator generators:\n" + lines(hash.generators) + "reduced Groebner basis:\n" +
	        lines(KG.basis().generators()) + "dimension: " + (dim ? std::to_string(*dim) : "infinite") + "\n";
	emit(c, j, text);
	return ok;
}

int cmd_ideal(const std::string &kind, const PresentationInput &in, const std::vector<std::string> &words,
              const Common &c)
{
	Presentation P = in.load();
	const int n = P.generator_count();
	std::vector<Word> L = parse_words(words, P);
	IdealSpec I = kind == "hash" ? hash_generators(L, n) : kind == "hashhash" ? hashhash_generators(L, n)
	                                                                          : bullet_generators(L, n);
	Json j;
	j["kind"] = to_string(I.kind);
	j["presentation"] = render(P);
	j["words"] = Json::array();
	for (const auto &w : L)
		j["words"].push_back(render(w, P.names));
	j["generators"] = polys(I.generators);
	j["zero"] = I.is_zero();
	std::string text = kind + " ideal:\n" + (I.is_zero() ? std::string("  (zero ideal)\n") : lines(I.generators));
	emit(c, j, text);
	return ok;
}

int cmd_normalgen(const PresentationInput &in, const std::vector<std::string> &words, bool use_hash, const Common &c)
{
	Presentation P = in.load();
	std::vector<Word> L = parse_words(words, P);
	NormalGenerationReport rep = normally_generates_check(P, L, use_hash, c.deadline());
	Json j;
	j["presentation"] = render(P);
	j["words"] = Json::array();
	for (const auto &w : L)
		j["words"].push_back(render(w, P.names));
	j["ideal"] = use_hash ? "hash" : "hashhash";
	j["verdict"] = to_string(rep.verdict);
	j["candidate_generators"] = polys(rep.candidate.generators);
	j["full_generators"] = polys(rep.full.generators);
	std::string text = "verdict: " + to_string(rep.verdict) + "\n";
	if (rep.verdict == Verdict::certified_no)
		text += "the words do not normally generate the group\n";
	else
		text += "the ideals agree; no conclusion\n";
	emit(c, j, text);
	return rep.verdict == Verdict::certified_no ? ok : inconclusive;
}

// ---------------------------------------------------------------- case studies

int cmd_boyer(long s, long t, long r, const std::string &word, const Common &c)
{
	Certificate cert = boyer_certificate({s, t, r, parse_word(word, default_names(2))}, c.deadline());
	Json j;
	j["instance"] = {{"s", s}, {"t", t}, {"r", r}, {"word", cert.word}, {"normalized_word", cert.normalized_word}};
	j["order"] = cert.order;
	j["theta_image"] = render(cert.theta_image);
	j["remainder_mod_1_minus_x2"] = render(cert.remainder);
	j["nonzero_degree"] = cert.nonzero_degree ? Json(*cert.nonzero_degree) : Json(nullptr);
	j["degree"] = cert.degree ? Json(*cert.degree) : Json(nullptr);
	j["leading_coefficient"] = render(cert.leading_coefficient);
	j["leading_inverse"] = cert.leading_inverse ? Json(render(*cert.leading_inverse)) : Json(nullptr);
	j["checks"] = {{"form", true}, {"degree", cert.degree_ok}, {"unit", cert.unit_ok}};
	j["conclusion"] = cert.certified() ? Json(cert.conclusion) : Json(nullptr);

	std::string text = "w = " + cert.normalized_word + " in C_" + std::to_string(s) + " * C_" + std::to_string(t) +
	                   ", r = " + std::to_string(r) + "\norder: " + cert.order +
	                   "\ntheta(bar w) = " + render(cert.theta_image) + "\nremainder mod 1 - x^2: " +
	                   render(cert.remainder) + "\ndegree of P_r(theta(bar w)): " +
	                   (cert.degree ? std::to_string(*cert.degree) : "none") +
	                   "\nleading coefficient: " + render(cert.leading_coefficient) + "\ninverse: " +
	                   (cert.leading_inverse ? render(*cert.leading_inverse) : "none") + "\n" +
	                   (cert.certified() ? cert.conclusion : "no conclusion") + "\n";
	emit(c, j, text);
	return cert.certified() ? ok : inconclusive;
}

Json checks_json(const std::vector<NamedCheck> &checks)
{
	Json a = Json::array();
	for (const auto &ch : checks)
		a.push_back({{"name", ch.name}, {"passed", ch.passed}, {"residue", ch.residue}});
	return a;
}

std::string checks_text(const std::vector<NamedCheck> &checks)
{
	std::string out;
	for (const auto &ch : checks)
		out += std::string(ch.passed ? "PASS " : "FAIL ") + ch.name + (ch.passed ? "" : ": " + ch.residue) + "\n";
	return out;
}

bool all_passed(const std::vector<NamedCheck> &checks)
{
	for (const auto &ch : checks)
		if (!ch.passed)
			return false;
	return true;
}

int cmd_sw_verify(long r, long s, long t, const std::string &word, bool properness, const Common &c)
{
	SWReport rep = sw_verify({r, s, t, parse_word(word, default_names(3))}, properness, c.deadline());
	Json j;
	j["instance"] = {
	    {"r", r}, {"s", s}, {"t", t}, {"word", rep.word}, {"normalized_word", rep.normalized_word}};
	j["order"] = rep.order;
	j["checks"] = checks_json(rep.checks);
	j["properness"] = to_string(rep.properness);
	j["conclusion"] = rep.conclusion.empty() ? Json(nullptr) : Json(rep.conclusion);
	std::string text = checks_text(rep.checks) + "properness: " + to_string(rep.properness) + "\n" +
	                   (rep.conclusion.empty() ? "" : rep.conclusion + "\n");
	emit(c, j, text);
	if (!rep.structural_ok())
		return error;
	switch (rep.properness)
	{
	case Properness::timed_out:
		return timed_out;
	case Properness::whole_ring:
		return inconclusive;
	default:
		return ok;
	}
}

int cmd_sw_static(const Common &c)
{
	std::vector<NamedCheck> checks = sw_static_checks();
	Json j;
	j["checks"] = checks_json(checks);
	j["passed"] = all_passed(checks);
	emit(c, j, checks_text(checks));
	return all_passed(checks) ? ok : error;
}

int cmd_sw_probe(const std::array<std::string, 4> &cs, std::uint64_t seed, int trials, double per_trial,
                 const Common &c)
{
	std::array<Rational, 4> coeffs;
	for (int i = 0; i < 4; ++i)
		coeffs[i] = parse_rational(cs[i]);
	ProbeReport rep = conjecture_probe(coeffs, seed, trials, per_trial);
	Json j;
	j["c"] = Json::array();
	for (const auto &q : rep.c)
		j["c"].push_back(to_string(q));
	j["seed"] = rep.seed;
	j["trials"] = rep.trials;
	j["proper"] = rep.proper;
	j["timed_out"] = rep.timed_out;
	j["counterexamples"] = Json::array();
	for (const auto &ce : rep.counterexamples)
	{
		Json e;
		e["trial"] = ce.index;
		e["a"] = render(ce.a);
		e["alpha"] = render(ce.alpha);
		e["q1"] = polys({ce.q1.begin(), ce.q1.end()});
		e["q2"] = polys({ce.q2.begin(), ce.q2.end()});
		j["counterexamples"].push_back(e);
	}
	std::string text = "seed " + std::to_string(rep.seed) + ": " + std::to_string(rep.proper) + " of " +
	                   std::to_string(rep.trials) + " trials proper, " + std::to_string(rep.timed_out) +
	                   " timed out, " + std::to_string(rep.counterexamples.size()) + " counterexamples\n";
	for (const auto &ce : rep.counterexamples)
		text += "  trial " + std::to_string(ce.index) + ": a = " + render(ce.a) + ", alpha = " + render(ce.alpha) +
		        "\n";
	emit(c, j, text);
	if (!rep.counterexamples.empty())
		return inconclusive;
	return rep.timed_out ? timed_out : ok;
}

// ---------------------------------------------------------------- oracle / identities

int cmd_oracle_fuzz(int trials, long length, int generators, std::uint64_t seed, int height, const Common &c)
{
	FuzzReport rep = fuzz_bar(trials, length, generators, seed, height);
	Json j;
	j["seed"] = rep.seed;
	j["trials"] = rep.trials;
	j["max_length"] = rep.max_length;
	j["generators"] = rep.generators;
	j["height"] = rep.height;
	j["mismatches"] = Json::array();
	for (const auto &m : rep.mismatches)
	{
		Json e;
		e["word"] = render(m.word);
		e["point"] = Json::array();
		for (const auto &q : m.point)
			e["point"].push_back(render(q));
		e["quaternion_value"] = to_string(m.quaternion_value);
		e["symbolic_value"] = to_string(m.symbolic_value);
		j["mismatches"].push_back(e);
	}
	std::string text = "seed " + std::to_string(rep.seed) + ": " + std::to_string(rep.trials) + " trials, " +
	                   std::to_string(rep.mismatches.size()) + " mismatches\n";
	for (const auto &m : rep.mismatches)
		text += "  " + render(m.word) + ": " + to_string(m.quaternion_value) + " vs " + to_string(m.symbolic_value) +
		        "\n";
	emit(c, j, text);
	return rep.mismatches.empty() ? ok : error;
}

int cmd_identity_selftest(const IdentitySuiteOptions &o, const Common &c)
{
	std::vector<IdentityResult> results = run_identity_suite(o, c.deadline());
	bool passed = true;
	Json j;
	j["seed"] = o.seed;
	j["samples"] = o.samples;
	j["generators"] = o.generators;
	j["max_length"] = o.max_length;
	j["results"] = Json::array();
	std::string text = "seed " + std::to_string(o.seed) + ", " + std::to_string(o.samples) + " samples\n";
	for (const auto &r : results)
	{
		passed = passed && r.passed();
		j["results"].push_back({{"name", r.name},
		                        {"trials", r.trials},
		                        {"failures", r.failures},
		                        {"first_failure", r.first_failure}});
		text += std::string(r.passed() ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.trials) + " trials" +
		        (r.failures ? ", " + std::to_string(r.failures) + " failures: " + r.first_failure : "") + ")\n";
	}
	j["passed"] = passed;
	emit(c, j, text);
	return passed ? ok : error;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Commutative group ring computations"};
	app.require_subcommand(1);
	std::function<int()> run;

	// ring describe
	Common ring_c;
	PresentationInput ring_in;
	auto *ring = app.add_subcommand("ring", "Rings of presentations");
	ring->require_subcommand(1);
	auto *describe = ring->add_subcommand("describe", "Variables, relations and Groebner basis of K[G]");
	add_presentation(describe, ring_in);
	add_common(describe, ring_c);
	describe->callback([&] { run = [&] { return cmd_ring_describe(ring_in, ring_c); }; });

	// ideal
	Common ideal_c;
	PresentationInput ideal_in;
	std::string ideal_kind = "hashhash";
	std::vector<std::string> ideal_words;
	auto *ideal = app.add_subcommand("ideal", "Generators of the hash, hashhash or bullet ideal of words");
	ideal->add_option("--kind", ideal_kind, "hash | hashhash | bullet")
	    ->check(CLI::IsMember({"hash", "hashhash", "bullet"}));
	add_presentation(ideal, ideal_in);
	ideal->add_option("--word", ideal_words, "Word in the presentation's generators (repeatable)");
	add_common(ideal, ideal_c, false);
	ideal->callback([&] { run = [&] { return cmd_ideal(ideal_kind, ideal_in, ideal_words, ideal_c); }; });

	// normalgen
	Common ng_c;
	PresentationInput ng_in;
	std::vector<std::string> ng_words;
	bool ng_hash = false;
	auto *ng = app.add_subcommand("normalgen", "Can the words normally generate the group?");
	add_presentation(ng, ng_in);
	ng->add_option("--word", ng_words, "Candidate word (repeatable)");
	ng->add_flag("--hash", ng_hash, "Compare hash ideals instead of hashhash ideals");
	add_common(ng, ng_c);
	ng->callback([&] { run = [&] { return cmd_normalgen(ng_in, ng_words, ng_hash, ng_c); }; });

	// boyer
	Common boyer_c;
	long bs = 2, bt = 3, br = 2;
	std::string bword = "g1*g2";
	auto *boyer = app.add_subcommand("boyer", "Certificate that w^r does not normally generate C_s * C_t");
	boyer->add_option("--s", bs, "Order of g1")->required()->check(CLI::Range(2L, 1000L));
	boyer->add_option("--t", bt, "Order of g2")->required()->check(CLI::Range(2L, 1000L));
	boyer->add_option("--r", br, "Power")->required()->check(CLI::Range(2L, 1000L));
	boyer->add_option("--word", bword, "Word in g1, g2")->required();
	add_common(boyer, boyer_c);
	boyer->callback([&] { run = [&] { return cmd_boyer(bs, bt, br, bword, boyer_c); }; });

	// sw
	auto *sw = app.add_subcommand("sw", "Three cyclic factors");
	sw->require_subcommand(1);
	Common swv_c;
	long sr = 2, ss = 3, st = 5;
	std::string sword = "g1*g2*g3";
	bool sprop = false;
	auto *verify = sw->add_subcommand("verify", "Structural checks and optional properness for one word");
	verify->add_option("--r", sr, "Order of g1")->required()->check(CLI::Range(2L, 1000L));
	verify->add_option("--s", ss, "Order of g2")->required()->check(CLI::Range(2L, 1000L));
	verify->add_option("--t", st, "Order of g3")->required()->check(CLI::Range(2L, 1000L));
	verify->add_option("--word", sword, "Word in g1, g2, g3")->required();
	verify->add_flag("--properness", sprop, "Also decide whether <w1, w2, w2', w3, w3'> is proper");
	add_common(verify, swv_c);
	verify->callback([&] { run = [&] { return cmd_sw_verify(sr, ss, st, sword, sprop, swv_c); }; });

	Common sws_c;
	auto *statics = sw->add_subcommand("static-checks", "Identities independent of the word");
	add_common(statics, sws_c, false);
	statics->callback([&] { run = [&] { return cmd_sw_static(sws_c); }; });

	Common swp_c;
	std::array<std::string, 4> pc{"0", "0", "0", "1"};
	std::uint64_t pseed = 1;
	int ptrials = 50;
	double pper = 30;
	auto *probe = sw->add_subcommand("probe", "Random search for counterexamples to the properness conjecture");
	probe->add_option("--c0", pc[0], "Constant term of W'");
	probe->add_option("--c1", pc[1], "Coefficient of x in W'");
	probe->add_option("--c2", pc[2], "Coefficient of y in W'");
	probe->add_option("--c3", pc[3], "Coefficient of xy in W' (nonzero)");
	probe->add_option("--seed", pseed, "RNG seed");
	probe->add_option("--trials", ptrials, "Number of trials")->check(CLI::NonNegativeNumber);
	probe->add_option("--trial-timeout", pper, "Seconds per trial")->check(CLI::PositiveNumber);
	add_common(probe, swp_c, false);
	probe->callback([&] { run = [&] { return cmd_sw_probe(pc, pseed, ptrials, pper, swp_c); }; });

	// oracle fuzz
	auto *oracle = app.add_subcommand("oracle", "Quaternion evaluation oracle");
	oracle->require_subcommand(1);
	Common of_c;
	int of_trials = 500, of_gens = 3, of_height = 6;
	long of_len = 12;
	std::uint64_t of_seed = 1;
	auto *fuzz = oracle->add_subcommand("fuzz", "Compare bar against quaternion traces on random words");
	fuzz->add_option("--trials", of_trials, "Number of random words")->check(CLI::NonNegativeNumber);
	fuzz->add_option("--length", of_len, "Maximum word length")->check(CLI::NonNegativeNumber);
	fuzz->add_option("--generators", of_gens, "Number of generators")->check(CLI::Range(1, 9));
	fuzz->add_option("--height", of_height, "Height of the random rationals")->check(CLI::PositiveNumber);
	fuzz->add_option("--seed", of_seed, "RNG seed");
	add_common(fuzz, of_c, false);
	fuzz->callback([&] { run = [&] { return cmd_oracle_fuzz(of_trials, of_len, of_gens, of_seed, of_height, of_c); }; });

	// identity selftest
	auto *identity = app.add_subcommand("identity", "Identity suite for A_F arithmetic");
	identity->require_subcommand(1);
	Common id_c;
	IdentitySuiteOptions id_o;
	auto *selftest = identity->add_subcommand("selftest", "Run every identity on seeded random samples");
	selftest->add_option("--seed", id_o.seed, "RNG seed");
	selftest->add_option("--samples", id_o.samples, "Number of samples")->check(CLI::PositiveNumber);
	selftest->add_option("--generators", id_o.generators, "Number of generators")->check(CLI::Range(3, 6));
	selftest->add_option("--max-length", id_o.max_length, "Maximum word length")->check(CLI::NonNegativeNumber);
	add_common(selftest, id_c);
	selftest->callback([&] { run = [&] { return cmd_identity_selftest(id_o, id_c); }; });

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError &e)
	{
		return app.exit(e) == 0 ? ok : error;
	}

	try
	{
		return run();
	}
	catch (const Timeout &e)
	{
		std::cerr << "timeout: " << e.what() << "\n";
		return timed_out;
	}
	catch (const std::exception &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return error;
	}
}
