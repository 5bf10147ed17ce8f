#pragma once

namespace nm::oracle {

/// Smooth radial plateau: 1 for r <= inner, 0 for r >= outer, C-infinity
/// in between. The transition is the standard exp(-1/y) gluing
///   g(y) = f(1-y) / (f(y) + f(1-y)),  f(y) = exp(-1/y),
/// on y = (r - inner) / (outer - inner).
struct Cutoff {
    double inner = 0.5;
    double outer = 1.0;

    /// Throws DomainError unless 0 < inner < outer.
    void validate() const;

    double operator()(double r) const;
    double derivative(double r) const;
};

}  // namespace nm::oracle
