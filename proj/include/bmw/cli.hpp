#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmw/algebra.hpp"
#include "bmw/kauffman.hpp"

namespace bmw::cli {

enum class OutputFormat { Text, Json };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Command {
  std::string name;  ///< dim, connectors, normalize, mul, kauffman, gram, verify, spanning
  int n = -1;
  int r = -1;
  std::vector<SliceWord> words;
  std::vector<AlgebraElement> elements;
  std::vector<bool> operand_is_element;  ///< command-line order of words and elements
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = kDefaultSeed;
  int max_gram_n = kDefaultGramLimit;
  bool unknot_one = false;  ///< kauffman: divide by d, shown in Z[l^{+-1}, z^{+-1}]
  bool help = false;
  std::string help_text;
};

/// Arguments without the program name. Throws UsageError or ParseError.
Command parse_input(const std::vector<std::string>& args);

struct Outcome {
  int exit_code = 0;  ///< 0 success, 1 verification failure, 2 usage or parse error
  std::string out;
  std::string err;
};

Outcome run_command(const Command& cmd);

/// parse_input then run_command, with errors mapped to exit code 2.
Outcome run(const std::vector<std::string>& args);

}  // namespace bmw::cli
