#pragma once

#include <string>
#include <vector>

#include "qtmoments/fock.hpp"
#include "qtmoments/partitions.hpp"

namespace qtmoments {

/// Moment routes that must agree.
enum class Method { Partitions, Operator, Cards, Motzkin, Cfrac };

const char* to_string(Method m);
std::vector<Method> all_methods();

/// The moment m_n through one route. Mode and gauge select the pairing of
/// the combinatorial and operator sides.
Polynomial moment_via(Method method, int n, NestingMode mode, ScalarGauge gauge, unsigned workers = 1);

struct VerifyOptions {
    std::vector<std::string> suites{"all"};
    int n_max = 8;
    unsigned workers = 1;
};

/// Names accepted in VerifyOptions::suites besides "all".
std::vector<std::string> verify_suite_names();

/// Runs the selected cross-checks; every returned report must be ok().
std::vector<CheckReport> run_verification(const VerifyOptions& options);

}  // namespace qtmoments
