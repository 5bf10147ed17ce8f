#include "newton_mellin/mellin.hpp"

#include <cmath>

namespace nm {

MellinEntry MellinTable::at(const MellinKey& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? MellinEntry{} : it->second;
}

void MellinTable::add_raw(const MellinKey& key, Complex raw) {
    auto& entry = entries_[key];
    entry.raw += raw;
    entry.normalized = normalization_factor(key.k) * entry.raw;
    if (entry.raw == Complex{}) entries_.erase(key);
}

double dominant_pole_coefficient(int ell) {
    double value = 1.0;
    for (int j = 1; j <= ell; ++j) value *= -0.5 * j;
    return value;
}

double normalization_factor(int k) {
    double value = 1.0;
    for (int j = 1; j <= k; ++j) value *= -2.0 / j;
    return value;
}

MellinTable mellin_coefficients(const Expansion& e) {
    // With a cutoff equal to 1 on the unit disc, the Mellin integral of the
    // model term w |t|^{2r} t^{m'} conj(t)^{m''} (log|t|)^l has the single
    // polar term w (-1)^l l! / 2^l (lambda - lambda_o)^{-(l+1)}; any other
    // cutoff only adds an entire function.
    MellinTable table;
    for (const auto& [exponent, poly] : e.terms()) {
        for (const auto& [k, w] : poly.terms()) {
            table.add_raw(MellinKey{exponent, k}, w * dominant_pole_coefficient(k));
        }
    }
    return table;
}

DecoratedPolygon nm_decorated_polygon(const MellinTable& table) {
    std::map<Point, Decoration> candidates;
    for (const auto& [key, entry] : table.entries()) {
        if (entry.normalized == Complex{}) continue;
        const Point p{key.exponent.x(), key.exponent.y()};
        // Entries iterate in increasing k for a fixed exponent.
        candidates[p] = Decoration{entry.normalized, key.k};
    }
    return DecoratedPolygon::from_candidates(candidates);
}

DecoratedPolygon nm_decorated_polygon(const Expansion& e) { return nm_decorated_polygon(mellin_coefficients(e)); }

}  // namespace nm
