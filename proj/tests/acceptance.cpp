// One line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>

#include "brzeta/verify.hpp"

int main()
{
    int failures = 0;
    for (const auto& result : brzeta::verify::run_all()) {
        std::printf("criterion %2u %s\n", result.id, brzeta::verify::to_line(result).c_str());
        failures += result.passed() ? 0 : 1;
    }
    std::printf("%d of %zu criteria failed\n", failures, brzeta::verify::suites().size());
    return failures == 0 ? 0 : 1;
}
