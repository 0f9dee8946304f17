#ifndef INTAMP_EXAMPLES_CORPUS_HPP
#define INTAMP_EXAMPLES_CORPUS_HPP

#include <string>
#include <vector>

#include "intamp/classify.hpp"

namespace intamp {

struct ExampleAssertion {
    std::string name;
    bool pass{false};
};

struct ExampleReport {
    std::string id;
    std::vector<ExampleAssertion> assertions;
    bool all_pass() const {
        for (const auto& a : assertions)
            if (!a.pass) return false;
        return true;
    }
};

/** Identifiers of the bundled cases, in run order. */
std::vector<std::string> example_ids();

/** Run one bundled case; InputError on an unknown id. */
ExampleReport run_example(const std::string& id);

/** The endomorphism matrices behind the bundled cases, by id. */
CMEndo example_endo(const std::string& id);

}  // namespace intamp

#endif  // INTAMP_EXAMPLES_CORPUS_HPP
