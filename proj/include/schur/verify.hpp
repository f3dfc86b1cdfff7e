#ifndef SCHUR_VERIFY_HPP
#define SCHUR_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "schur/types.hpp"

namespace schur::verify {

// Schur parameter of random length 1..max_degree+1 with entries uniform (by
// area) in the disk of the given radius.
std::vector<Complex> random_gamma(std::mt19937_64& rng, int max_degree, double radius);

struct PropertyResult {
    std::string name;
    double measured = 0.0;  // worst residual, or worst slack for inequalities
    double threshold = 0.0;
    bool upper_bound = true;  // measured < threshold when true, measured > threshold otherwise
    bool passed = false;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    int trials = 500;
    // Check only this parameter instead of random draws.  Entries with
    // modulus >= 1 raise ContractViolation.
    std::optional<std::vector<Complex>> gamma;
};

// Mirror and determinant identities, coercivity and strict domination of the
// Schur polynomials, plus representation equivalence and Schur round trip.
std::vector<PropertyResult> run_property_suites(const VerifyOptions& opts);

std::string format_table(const std::vector<PropertyResult>& results);

}  // namespace schur::verify

#endif  // SCHUR_VERIFY_HPP
