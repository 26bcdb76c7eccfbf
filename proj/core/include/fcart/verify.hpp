#ifndef FCART_VERIFY_HPP
#define FCART_VERIFY_HPP

#include <string>
#include <vector>

#include "fcart/report.hpp"

namespace fcart {

// One record per checked identity instance; a suite passes iff every record
// agrees.
struct VerifySuiteResult {
    std::string suite;
    std::vector<json> records;
    std::size_t failures = 0;

    bool pass() const { return failures == 0; }
};

// graph: B_f identities (construction paths, t-shift, transition, theta
//        eigenvalues) over p in {2,3}, m <= 2, all n, random f
// lucas: Lucas/truncation agreement, digit round-trips, Pascal rule, T-map
//        fixed points over q in {2,3,4,7,9}
// dside: nu vs bracket-power members over the random corpus
// tau:   test-ideal laws basic_t(2),(3),(4) on the grid {n/q^2}
// oracle: univariate / monomial / integer-binomial / dense-extraction shadows
VerifySuiteResult verify_suite(const std::string& name, std::uint64_t seed = 20240801);

std::vector<std::string> verify_suite_names();

} // namespace fcart

#endif
