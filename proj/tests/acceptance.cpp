#include <cstdio>
#include <cstring>
#include <string>

#include "zi/report.hpp"

// Usage: acceptance [--fast] [ids...]
int main(int argc, char** argv) {
    std::setvbuf(stdout, nullptr, _IOLBF, 0);
    zi::AcceptanceOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--fast") == 0) opt.fast = true;
        else opt.only.push_back(std::stoi(argv[i]));
    }
    int failed = 0, passed = 0, skipped = 0;
    zi::run_acceptance(opt, [&](const zi::CriterionResult& c) {
        std::printf("%s\n", c.line().c_str());
        if (c.skipped) ++skipped;
        else if (c.pass) ++passed;
        else ++failed;
    });
    std::printf("%d passed, %d failed, %d skipped\n", passed, failed, skipped);
    return failed == 0 ? 0 : 1;
}
