#ifndef HILBERT_TOOLS_CLI_HPP
#define HILBERT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "hilbert/certify.hpp"
#include "hilbert/polytope.hpp"

namespace hilbert::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitNumerical = 3,
};

/// Runs one hilbertctl invocation. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Byte-stable text report of the certify subcommand. Timing is not part
/// of it.
std::string certify_report(const Polytope& p, const std::string& input_digest,
                           std::size_t samples, std::uint64_t seed,
                           const SamplingOptions& options);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& data);

/// printf %.17g.
std::string format_number(double v);

}  // namespace hilbert::cli

#endif  // HILBERT_TOOLS_CLI_HPP
