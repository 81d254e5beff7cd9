#include "tanum/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    tanum::cli::CommandResult result = tanum::cli::run(args);
    const std::string& text = result.json_payload ? *result.json_payload : result.human_text;
    if (!text.empty()) {
        if (result.exit_code == 2 && !result.json_payload)
            std::cerr << text << '\n';
        else
            std::cout << text << '\n';
    }
    return result.exit_code;
}
