// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Arguments restrict the run to the listed criterion ids.

#include <iostream>
#include <string>
#include <vector>

#include "hopfkit/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<unsigned> only;
  for (int i = 1; i < argc; ++i) {
    try {
      only.push_back(static_cast<unsigned>(std::stoul(argv[i])));
    } catch (const std::exception&) {
      std::cerr << "usage: " << argv[0] << " [criterion id ...]\n";
      return 2;
    }
  }
  const auto results = hopfkit::run_acceptance(only, &std::cout);
  unsigned failed = 0;
  for (const auto& r : results) failed += !r.passed;
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
