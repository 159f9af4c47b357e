#pragma once

#include <atomic>
#include <iostream>
#include <string>
#include <vector>

namespace inspire::cli {

// Cooperative interrupt (Ctrl-C): in-flight debates finish and their
// artifacts are flushed before exit.
std::atomic<bool>& interrupt_flag();

// Dispatches the subcommands (debate, tournament, evaluate, build-sft,
// build-dpo, analyze, fol-check, report). Returns 0 on success, 1 on user
// error, 2 on pipeline failure.
int execute(const std::vector<std::string>& args, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

}  // namespace inspire::cli
