// Runs every verification criterion and prints one pass/fail line each.

#include "tropmin/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

int main(int argc, char** argv)
{
    uint64_t seed = 20240817;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--seed") == 0)
            seed = std::strtoull(argv[i + 1], nullptr, 10);

    auto results = tropmin::run_acceptance(seed);
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        std::printf("%s  %2d  %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.empty() ? "" : "  -- ", r.detail.c_str());
    }
    std::printf("%s (seed %llu)\n", all ? "all criteria passed" : "FAILURES present",
                static_cast<unsigned long long>(seed));
    return all ? 0 : 1;
}
