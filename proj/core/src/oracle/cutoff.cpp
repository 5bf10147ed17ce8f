#include "newton_mellin/oracle/cutoff.hpp"

#include <cmath>

#include "newton_mellin/error.hpp"

namespace nm::oracle {
namespace {

// g(y) = 1 / (1 + exp(h)),  h = 1/(1-y) - 1/y.
double exponent(double y) { return 1.0 / (1.0 - y) - 1.0 / y; }

}  // namespace

void Cutoff::validate() const {
    if (!(inner > 0.0 && inner < outer)) throw DomainError("cutoff requires 0 < inner < outer");
}

double Cutoff::operator()(double r) const {
    if (r <= inner) return 1.0;
    if (r >= outer) return 0.0;
    const double y = (r - inner) / (outer - inner);
    return 1.0 / (1.0 + std::exp(exponent(y)));
}

double Cutoff::derivative(double r) const {
    if (r <= inner || r >= outer) return 0.0;
    const double y = (r - inner) / (outer - inner);
    const double h = exponent(y);
    const double dh = 1.0 / ((1.0 - y) * (1.0 - y)) + 1.0 / (y * y);
    const double g = 1.0 / (1.0 + std::exp(h));
    const double one_minus_g = 1.0 / (1.0 + std::exp(-h));
    return -g * one_minus_g * dh / (outer - inner);
}

}  // namespace nm::oracle
