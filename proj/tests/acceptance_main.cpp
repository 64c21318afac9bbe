// Acceptance suite driver: one line per criterion, nonzero exit on any
// unexpected failure.  `--quick` shrinks draw counts for a fast smoke pass.

#include <cstring>
#include <iostream>

#include "ybx/acceptance.hpp"

int main(int argc, char** argv) {
    ybx::AcceptanceOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) {
            opt.quick = true;
        } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            opt.seed = std::strtoull(argv[++i], nullptr, 10);
        } else if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) {
            opt.jobs = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: ybx_acceptance [--quick] [--seed S] [--jobs J]\n";
            return 2;
        }
    }
    return ybx::print_acceptance(ybx::run_acceptance(opt), std::cout);
}
