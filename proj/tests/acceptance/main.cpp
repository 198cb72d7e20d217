#include <cstdlib>
#include <iostream>
#include <string>

#include "criteria.hpp"

// Usage: catnet_acceptance [criterion ids...]
int main(int argc, char** argv) {
  catnet::acceptance::SuiteOptions opts;
  for (int i = 1; i < argc; ++i) opts.only.push_back(std::stoi(argv[i]));
  const auto results = catnet::acceptance::run_regression_suite(opts, std::cout);
  int failed = 0;
  for (const auto& r : results) failed += !r.pass;
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
