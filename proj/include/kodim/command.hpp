#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace kodim {

enum class Verb { Kappa3, Kappa4, Kappa6, Gromov, Table, CheckDomination, Entropy, Product6, Shape, Validate };
enum class OutputFormat { Text, Json };

std::string_view to_string(Verb v);
std::optional<Verb> verb_from_string(std::string_view s);
std::optional<OutputFormat> format_from_string(std::string_view s);

/// One CLI invocation. `input` is the raw payload text; it is parsed by run()
/// according to the verb.
struct Command {
  Verb verb = Verb::Kappa3;
  std::string input;
  OutputFormat format = OutputFormat::Text;
  /// Growth-fit tolerance for kappa4 plurigenera, root tolerance for entropy.
  std::optional<std::string> tolerance;
  /// 3 or 4; used by gromov and table.
  std::optional<int> dim;
};

struct RunResult {
  /// 0 success, 1 validation or precondition failure, 2 parse error.
  int exit_code = 0;
  std::string out;
  std::string err;
};

RunResult run(const Command& c);

}  // namespace kodim
