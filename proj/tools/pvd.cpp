#include <iostream>
#include <string>
#include <vector>

#include "pvd/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "help") {
    std::cerr << pvd::usage_text();
    return args.empty() ? 2 : 0;
  }
  try {
    pvd::Command cmd = pvd::parse_command(args);
    return pvd::run_command(cmd, std::cout, std::cerr);
  } catch (const pvd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pvd::exit_code_for(e.code());
  }
}
