// One PASS/FAIL line per acceptance criterion; details follow failures.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "ncalg/acceptance.hpp"

int main(int argc, char** argv) {
  bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  int failed = 0;
  ncalg::run_acceptance({}, [&](const ncalg::CriterionResult& r) {
    std::printf("%s %2d %s (%.1f s)\n", r.pass ? "PASS" : "FAIL", r.number, r.title.c_str(), r.seconds);
    if (!r.pass || verbose)
      for (auto& d : r.details) std::printf("        %s\n", d.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  });
  std::printf("%d/%d criteria pass\n", ncalg::acceptance_count() - failed, ncalg::acceptance_count());
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
