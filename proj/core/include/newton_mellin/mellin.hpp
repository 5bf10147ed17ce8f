#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <utility>

#include "newton_mellin/expansion.hpp"
#include "newton_mellin/newton.hpp"

namespace nm {

/// (r, m', m'', k): the coefficient of (lambda - lambda_o)^{-(k+1)} in the
/// Mellin integral at the pole attached to the exponent (r, m', m'').
struct MellinKey {
    Exponent exponent;
    int k = 0;

    friend bool operator==(const MellinKey&, const MellinKey&) = default;
    friend std::strong_ordering operator<=>(const MellinKey& lhs, const MellinKey& rhs) {
        if (const auto c = lhs.exponent <=> rhs.exponent; c != 0) return c;
        return lhs.k <=> rhs.k;
    }
};

struct MellinEntry {
    Complex raw;         ///< c_{r,m',m'',k}
    Complex normalized;  ///< C = ((-2)^k / k!) c
};

class MellinTable {
public:
    using EntryMap = std::map<MellinKey, MellinEntry>;

    const EntryMap& entries() const& noexcept { return entries_; }
    EntryMap entries() && { return std::move(entries_); }
    bool empty() const noexcept { return entries_.empty(); }
    /// Zero entry when the key is absent.
    MellinEntry at(const MellinKey& key) const;

    /// Adds `raw` to the entry at `key`; entries with raw == 0 are dropped.
    void add_raw(const MellinKey& key, Complex raw);

private:
    EntryMap entries_;
};

/// (-1)^l l! / 2^l: leading Laurent coefficient of the Mellin integral of
/// |t|^{2r} t^{m'} conj(t)^{m''} (log|t|)^l at its pole.
double dominant_pole_coefficient(int ell);

/// (-2)^k / k!.
double normalization_factor(int k);

MellinTable mellin_coefficients(const Expansion& e);

/// Newton-Mellin polygon: hull over exponents carrying a nonzero normalized
/// coefficient, each vertex decorated by C_{r,m',m'',l} u^l with l maximal.
DecoratedPolygon nm_decorated_polygon(const MellinTable& table);
DecoratedPolygon nm_decorated_polygon(const Expansion& e);

}  // namespace nm
