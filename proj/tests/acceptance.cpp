#include <iostream>

#include "swfkit/selftest.hpp"

// Prints one PASS/FAIL line per acceptance check; exits nonzero when any
// check fails.
int main() {
    int failures = swfkit::print_acceptance_report(std::cout);
    if (failures != 0) std::cerr << failures << " acceptance check(s) failed\n";
    return failures == 0 ? 0 : 1;
}
