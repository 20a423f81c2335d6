#include <vector>
#include <string>

#include "saddlecert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return saddlecert::dispatch(args);
}
