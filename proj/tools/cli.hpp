#ifndef SYMPROD_TOOLS_CLI_HPP
#define SYMPROD_TOOLS_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "symprod/tensor_oracle.hpp"

namespace symprod::cli {

enum ExitCode : int { exit_ok = 0, exit_input_error = 2, exit_identity_violation = 3 };

// Largest n accepted by each verification suite.
inline constexpr std::size_t signs_max_n = 5;
inline constexpr std::size_t sweep_max_n = 4;

/// Every complex on degrees {b, b+1}, b in {0, 1}, with dims <= 2 and
/// differential entries in {-1, 0, 1}.
std::vector<FiniteComplex> small_complexes();

std::vector<CheckReport> signs_suite(std::size_t max_n, const OracleConfig& config);
std::vector<CheckReport> kunneth_suite(std::size_t max_n, std::uint64_t seed, const OracleConfig& config);
std::vector<CheckReport> prop22_suite(std::size_t max_n, const OracleConfig& config);
std::vector<CheckReport> theorem2_suite(std::size_t max_n, std::uint64_t seed, const OracleConfig& config);

/// Runs "signs", "kunneth", "prop22", "theorem2" or "all". Throws
/// precondition_error for an unknown suite or an n beyond the suite limit.
std::vector<CheckReport> run_suite(const std::string& suite, std::size_t max_n, std::uint64_t seed,
                                   const OracleConfig& config);

/// Entry point of the symprod tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace symprod::cli

#endif
