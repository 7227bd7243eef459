#pragma once

#include "cgr/agmod.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cgr {

struct IdentityResult
{
	std::string name;
	int trials = 0;
	int failures = 0;
	/// Words of the first failing sample, empty if none.
	std::string first_failure;

	bool passed() const { return trials > 0 && failures == 0; }
};

struct IdentitySuiteOptions
{
	std::uint64_t seed = 1;
	int samples = 200;
	int generators = 3;
	long max_length = 6;
	/// power_bar is checked for exponents -max_power..max_power.
	int max_power = 8;
	/// Length bound for h in the power checks; g and k get one more letter.
	long power_length = 2;
};

/// Runs every identity of the A_F arithmetic on random words and Lambda
/// elements, comparing exactly in K[F_n]. One result per identity, in a fixed
/// order.
std::vector<IdentityResult> run_identity_suite(const IdentitySuiteOptions &options, const Deadline &deadline = {});

} // namespace cgr
