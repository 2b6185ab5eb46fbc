#include <cstdio>

#include "isodens/acceptance.hpp"

int main() {
    const auto results = isodens::run_acceptance();
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("criterion %2d [%s] %s: %s\n", r.id, r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    std::printf("%s\n", all_pass ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
    return all_pass ? 0 : 1;
}
