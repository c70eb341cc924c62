#pragma once

#include "eqfix/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eqfix {

using Weight = std::int64_t;

/// An isolated fixed point: the isotropy weights of the circle on the
/// tangent space and, for Hamiltonian data, the moment map value.
struct FixedPoint {
    std::string id;
    std::vector<Weight> weights;
    std::optional<Rational> moment;

    /// Number of negative weights k_F.
    std::size_t negative_count() const;
    /// Morse index 2 k_F.
    std::size_t index() const { return 2 * negative_count(); }
    bool is_semifree() const;
};

struct FixedPointData {
    std::size_t n = 0;  // half the real dimension
    std::vector<FixedPoint> points;

    bool semifree() const;
    const FixedPoint& point(const std::string& id) const;
    /// Points ordered by (index, id).
    std::vector<FixedPoint> sorted_points() const;
};

/// N_k = number of fixed points with exactly k negative weights, 0 <= k <= n.
struct CountVector {
    std::vector<Integer> N;

    Integer total() const;
    friend bool operator==(const CountVector&, const CountVector&) = default;
    std::string to_string() const;
};

/// Throws ZeroWeight, WrongWeightCount or DuplicateId naming the offending point.
void validate(const FixedPointData& data);

CountVector counts(const FixedPointData& data);

struct MomentSplit {
    std::vector<FixedPoint> positive;
    std::vector<FixedPoint> negative;
};

/// Partition by the sign of the moment value. Throws MissingMomentValue or
/// ZeroIsCritical.
MomentSplit split_by_moment_sign(const FixedPointData& data);

}  // namespace eqfix
