// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is nonzero if any criterion fails.

#include <iostream>

#include <rc/verify.hpp>

int main(int argc, char **argv)
{
    rc::VerifyOptions options;
    if (argc > 1) {
        options.fixture_dir = argv[1];
    }
    bool ok = true;
    for (int id : rc::criteria_of(rc::Suite::all)) {
        const auto result = rc::run_criterion(id, options);
        std::cout << rc::format_result(result, true) << std::flush;
        ok = ok && result.passed;
    }
    return ok ? 0 : 1;
}
