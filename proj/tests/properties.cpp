#include <cstring>
#include <iostream>

#include "hyturan/verify.hpp"

int main(int argc, char** argv) {
  hyturan::verify::Options opts;
  opts.quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  return hyturan::verify::print_results(hyturan::verify::property_suites(opts), std::cout) == 0 ? 0 : 1;
}
