#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rstar::cli {

enum class Verb { Info, Ideals, Radical, Classify, StarCheck, Decompose, Localize, PidStar, PidA2, Suite };
enum class Format { Text, Json };

std::string to_string(Verb v);

struct Command {
  Verb verb = Verb::Info;
  std::string ring_spec;
  std::optional<std::vector<unsigned>> ideal;  // generator indices
  std::string domain = "Z";
  std::string family;
  std::optional<std::string> element;
  Format format = Format::Text;
  std::size_t max_order = 64;
  std::size_t star_cap = 16;
  std::size_t jobs = 1;
  std::optional<std::string> out;
  std::vector<std::string> rings;  // suite: replaces the corpus
  bool list_corpus = false;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

// args excludes the program name. Throws UsageError.
Command parse_command(const std::vector<std::string>& args);

int run_command(const Command& cmd, std::ostream& out, std::ostream& err);

// parse + run with exit-code mapping; what main() calls.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string usage();

}  // namespace rstar::cli
