#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "descente/fermat.hpp"

namespace descente::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int io_error = 1;
inline constexpr int counterexample = 2;
inline constexpr int check_failed = 3;
inline constexpr int usage = 64;
inline constexpr int precondition = 65;
}  // namespace exit_code

enum class Format { text, jsonl };

struct Config {
    Natural bound = 1;
    Format format = Format::text;
    std::optional<std::string> cache_path;
    unsigned workers = 1;
    WeightMode weight_mode = WeightMode::modern;
};

/// Names accepted by `descent` and `check`.
const std::vector<std::string>& registered_instances();

/// Runs one command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace descente::cli
