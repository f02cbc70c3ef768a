#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace incalg::cli {

enum ExitCode : int {
	kPass = 0,
	kMathFailure = 1,
	kInputError = 2,
};

struct RunConfig {
	std::string subcommand;
	std::string poset;
	std::string ring = "Q";
	std::string map_class;
	std::string xi;
	std::string tau;
	std::string out;  // report destination; stdout when empty
	std::string dump; // solve: basis dump
	std::uint64_t seed = 0;
	std::size_t samples = 10;
	std::optional<std::size_t> max_poset_size;
	bool identity_suite = true;
	bool summary = false;
};

/// Executes one subcommand. Reports go to `out` (or config.out), errors
/// and summaries to `err`.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses argv and runs. Usage errors return kInputError.
int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace incalg::cli
