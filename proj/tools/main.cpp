#include <iostream>
#include <locale>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::locale::global(std::locale::classic());
  std::cout.imbue(std::locale::classic());
  std::cerr.imbue(std::locale::classic());
  std::ios::sync_with_stdio(false);
  return minusone::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
