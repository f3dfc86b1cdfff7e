#ifndef SCHUR_DOMAINS_HPP
#define SCHUR_DOMAINS_HPP

#include <functional>
#include <string>
#include <string_view>

#include "schur/types.hpp"

namespace schur {

// A convex domain Omega != C given by its Riemann map P from the unit disk,
// together with P' and P^{-1}.
class DomainMap {
public:
    using Fn = std::function<Complex(Complex)>;

    DomainMap(std::string label, Fn map, Fn derivative, Fn inverse)
        : label_(std::move(label)),
          map_(std::move(map)),
          derivative_(std::move(derivative)),
          inverse_(std::move(inverse)) {}

    const std::string& label() const { return label_; }

    Complex map(Complex z) const { return map_(z); }
    Complex derivative(Complex z) const { return derivative_(z); }
    Complex inverse(Complex w) const { return inverse_(w); }

private:
    std::string label_;
    Fn map_, derivative_, inverse_;
};

// Right half-plane via the Cayley map (1+z)/(1-z).
DomainMap half_plane();

// Disk of the given center and radius via z -> center + radius z.
DomainMap disk(Complex center, double radius);

// Strip |Im w| < pi/2 via log((1+z)/(1-z)).
DomainMap strip();

// Parses "half-plane", "strip" or "disk:<re>,<im>,<r>".  Throws
// ContractViolation on anything else.
DomainMap domain_from_label(std::string_view label);

}  // namespace schur

#endif  // SCHUR_DOMAINS_HPP
