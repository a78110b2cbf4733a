#include <cstring>
#include <iostream>

#include "braidlab/acceptance.hpp"

int main(int argc, char** argv)
{
    braidlab::AcceptanceOptions opt;
    bool json = argc > 1 && std::strcmp(argv[1], "--json") == 0;
    if (!json)
        opt.on_result = [](const braidlab::CriterionResult& r) {
            std::cout << braidlab::acceptance_table({r}) << std::flush;
        };
    auto results = braidlab::run_acceptance(opt);
    if (json) std::cout << braidlab::acceptance_json(results) << "\n";
    int bad = braidlab::unexpected_failures(results);
    if (!json) std::cout << (bad ? std::to_string(bad) + " unexpected failure(s)" : "all criteria met or known") << "\n";
    return bad ? 1 : 0;
}
