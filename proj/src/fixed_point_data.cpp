#include "eqfix/fixed_point_data.hpp"

#include "eqfix/error.hpp"

#include <algorithm>
#include <set>

namespace eqfix {

std::size_t FixedPoint::negative_count() const {
    return static_cast<std::size_t>(std::count_if(weights.begin(), weights.end(), [](Weight w) { return w < 0; }));
}

bool FixedPoint::is_semifree() const {
    return std::all_of(weights.begin(), weights.end(), [](Weight w) { return w == 1 || w == -1; });
}

bool FixedPointData::semifree() const {
    return std::all_of(points.begin(), points.end(), [](const FixedPoint& p) { return p.is_semifree(); });
}

const FixedPoint& FixedPointData::point(const std::string& id) const {
    for (const auto& p : points) {
        if (p.id == id) return p;
    }
    throw Error(ErrorKind::InvalidArgument, "no fixed point with id '" + id + "'");
}

std::vector<FixedPoint> FixedPointData::sorted_points() const {
    std::vector<FixedPoint> out = points;
    std::sort(out.begin(), out.end(), [](const FixedPoint& a, const FixedPoint& b) {
        const auto ka = a.negative_count(), kb = b.negative_count();
        return ka != kb ? ka < kb : a.id < b.id;
    });
    return out;
}

Integer CountVector::total() const {
    Integer sum(0);
    for (const auto& v : N) sum += v;
    return sum;
}

std::string CountVector::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < N.size(); ++k) {
        if (k) out += ' ';
        out += N[k].get_str();
    }
    return out;
}

void validate(const FixedPointData& data) {
    std::set<std::string> seen;
    for (const auto& p : data.points) {
        if (p.weights.size() != data.n) {
            throw Error(ErrorKind::WrongWeightCount, "point '" + p.id + "' has " + std::to_string(p.weights.size()) +
                                                         " weights, expected " + std::to_string(data.n));
        }
        if (std::find(p.weights.begin(), p.weights.end(), Weight{0}) != p.weights.end())
            throw Error(ErrorKind::ZeroWeight, "point '" + p.id + "' has a zero weight");
        if (!seen.insert(p.id).second) throw Error(ErrorKind::DuplicateId, "point id '" + p.id + "' repeated");
    }
}

CountVector counts(const FixedPointData& data) {
    CountVector out{std::vector<Integer>(data.n + 1, Integer(0))};
    for (const auto& p : data.points) {
        const auto k = p.negative_count();
        if (k <= data.n) out.N[k] += 1;
    }
    return out;
}

MomentSplit split_by_moment_sign(const FixedPointData& data) {
    MomentSplit out;
    for (const auto& p : data.points) {
        if (!p.moment) throw Error(ErrorKind::MissingMomentValue, "point '" + p.id + "' has no moment value");
        if (*p.moment == 0)
            throw Error(ErrorKind::ZeroIsCritical, "point '" + p.id + "' has moment value 0; 0 is not a regular value");
        (*p.moment > 0 ? out.positive : out.negative).push_back(p);
    }
    return out;
}

}  // namespace eqfix
