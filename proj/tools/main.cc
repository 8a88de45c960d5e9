#include <iostream>

#include "baire/cli.hh"

int main(int argc, char** argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = baire::run_cli(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.status;
}
