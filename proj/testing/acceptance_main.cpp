#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "acceptance.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = baranski::testing::kDefaultSeed;
    if (argc > 1) seed = std::stoull(argv[1]);
    bool ok = true;
    for (int id = 1; id <= 11; ++id) {
        const auto r = baranski::testing::run_criterion(id, seed);
        std::cout << baranski::testing::format_result(r) << std::endl;
        ok = ok && r.pass;
    }
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
