#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qdef::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kIdentityFailure = 1,
  kUsage = 2,
  kIo = 3,
};

enum class Command { Catalog, Spectrum, Verify, Export };
enum class Format { Text, Json, Csv };

struct RunConfig {
  Command command = Command::Catalog;
  std::string algebra = "aq1";
  std::optional<double> q;
  std::optional<double> p;
  std::optional<int> N, N1, N2, N3;
  int delta = 1, zeta = 1, eta = 1, mu = 1;
  std::optional<double> m0;
  std::optional<double> casimir;
  int steps = 10;
  int max_N = 2;
  std::string suite = "all";
  std::string object;
  std::optional<double> tol;
  std::string out;
  Format format = Format::Text;
};

/// Parse argv and run. All output goes to `out`/`err`; --out redirects the
/// primary output to a file.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace qdef::cli
