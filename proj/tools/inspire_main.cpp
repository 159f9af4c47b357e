#include <csignal>

#include "inspire/cli/app.hpp"

namespace {

void handle_interrupt(int) { inspire::cli::interrupt_flag().store(true); }

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, handle_interrupt);
    std::vector<std::string> args(argv + 1, argv + argc);
    return inspire::cli::execute(args);
}
