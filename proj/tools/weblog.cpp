#include <iostream>

#include "weblog/cli.hpp"

int main(int argc, char** argv) {
  auto parsed = weblog::parse_args(argc, argv);
  if (auto* exit = std::get_if<weblog::CliExit>(&parsed)) {
    (exit->code == weblog::kExitOk ? std::cout : std::cerr) << exit->message;
    return exit->code;
  }
  return weblog::run(std::get<weblog::RunConfig>(parsed), std::cout, std::cerr);
}
