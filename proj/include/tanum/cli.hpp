#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tanum::cli {

// 0 definitive positive, 1 definitive negative (no numbering / unsat / not
// TU), 2 usage or input error, 3 budget exceeded.
struct CommandResult {
    int exit_code = 0;
    std::string human_text;                 // printed without --json
    std::optional<std::string> json_payload;  // printed instead with --json
};

// args excludes the program name. Subcommands: check, bound, solve, decide,
// oracle, tu, reduce, verify; global flag --json.
CommandResult run(const std::vector<std::string>& args);

}  // namespace tanum::cli
