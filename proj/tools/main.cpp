#include <iostream>

#include "app/run.hpp"

int main(int argc, char** argv) {
  const auto parsed = evenfix::app::parse_command_line(argc, argv, std::cout, std::cerr);
  if (!parsed.config) return parsed.exit_code;
  return evenfix::app::run(*parsed.config, std::cout, std::cerr);
}
