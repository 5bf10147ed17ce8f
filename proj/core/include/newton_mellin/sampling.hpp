#pragma once

#include <random>
#include <vector>

#include "newton_mellin/expansion.hpp"
#include "newton_mellin/newton.hpp"

namespace nm {

/// Shape of the random fiber-class expansions used by the property suites.
struct FiberSampleOptions {
    int max_terms = 6;
    std::vector<Rational> r_choices = {Rational(0), Rational(-1, 2), Rational(-1, 3), Rational(-2, 3),
                                       Rational(-5, 6)};
    int max_index = 4;
    int max_log_degree = 3;
};

/// Random fiber-class expansion that is nonzero modulo smooth functions.
/// Coefficients have modulus in [1/2, 2] and uniform phase.
Expansion random_fiber_expansion(std::mt19937_64& rng, const FiberSampleOptions& options = {});

/// Random infinity-side expansion with every m', m'' >= 1 (the image of
/// the forward transform).
Expansion random_hat_expansion(std::mt19937_64& rng, const FiberSampleOptions& options = {});

/// Random point set, coordinates p/q with |p| <= 12 and q in {1, 2, 3, 6}.
std::vector<Point> random_point_set(std::mt19937_64& rng, int max_points = 8);

}  // namespace nm
