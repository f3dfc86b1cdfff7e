#ifndef SCHUR_SCHUR_CORE_HPP
#define SCHUR_SCHUR_CORE_HPP

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "schur/types.hpp"

namespace schur {

// Prospective initial Taylor coefficients (c0, ..., cn) of a function
// bounded by one on the unit disk.
class CaratheodoryData {
public:
    // Throws ContractViolation on an empty list or non-finite entries.
    explicit CaratheodoryData(std::vector<Complex> coeffs);

    std::span<const Complex> coeffs() const { return coeffs_; }
    std::size_t degree() const { return coeffs_.size() - 1; }
    Complex operator[](std::size_t i) const { return coeffs_[i]; }

private:
    std::vector<Complex> coeffs_;
};

struct Interior {
    std::vector<Complex> gamma;  // length n+1, every |gamma_p| < 1
};

struct Boundary {
    std::vector<Complex> gamma_prefix;  // gamma_0..gamma_i, |gamma_i| = 1
    std::size_t unimodular_index = 0;   // i
};

enum class ExteriorReason { ModulusExceedsOne, UnimodularWithNonzeroTail };

struct Exterior {
    // For ModulusExceedsOne: the p with |gamma_p| > 1.  For
    // UnimodularWithNonzeroTail: the first p with gamma_p = infinity.
    std::size_t witness_index = 0;
    ExteriorReason reason = ExteriorReason::ModulusExceedsOne;
};

using SchurClassification = std::variant<Interior, Boundary, Exterior>;

// sigma_a(z) = (z + a) / (1 + conj(a) z).
Complex mobius(Complex a, Complex z);

// Inverse of mobius(a, .): w -> (w - a) / (1 - conj(a) w).
Complex mobius_inverse(Complex a, Complex w);

// One step of the Schur recursion: c^{(j)} -> c^{(j+1)}.  Requires
// c.size() >= 2, |gamma| < 1 and gamma == c[0].
std::vector<Complex> schur_step(std::span<const Complex> c, Complex gamma);

SchurClassification schur_parameters(const CaratheodoryData& c,
                                     const ToleranceConfig& tol = {});

// Unique data whose Schur parameter is gamma (all |gamma_p| < 1).
CaratheodoryData data_from_parameters(std::span<const Complex> gamma);

// Requires |gamma_p| < 1 for every entry; throws ContractViolation otherwise.
void require_interior_parameters(std::span<const Complex> gamma);

namespace series {

// Truncated power series arithmetic on coefficient arrays of equal length.
std::vector<Complex> multiply(std::span<const Complex> a, std::span<const Complex> b);
std::vector<Complex> divide(std::span<const Complex> num, std::span<const Complex> den);

}  // namespace series

}  // namespace schur

#endif  // SCHUR_SCHUR_CORE_HPP
