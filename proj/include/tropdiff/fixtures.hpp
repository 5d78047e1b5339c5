#pragma once

// Worked examples replayed end-to-end by `tropdiff examples`.

#include <string>
#include <string_view>
#include <vector>

namespace tropdiff::fixtures {

// Staircase whose minimal basis {(1,4),(2,3),(4,1)} is strictly larger than its vertex set.
inline constexpr std::string_view kStaircase = "{(1,4),(2,3),(3,3),(4,1)}";

// Two unknowns, two parameters, over Q(sqrt 2).
inline constexpr std::string_view kQuadraticSystem = "x1[1,0]^2 - 4*x1[0,0]\n"
                                                     "x1[1,1]*x2[0,1] - x1[0,0] + 1\n"
                                                     "x2[2,0] - x1[1,0]\n";
inline constexpr std::string_view kQuadraticPhi1 = "t1^2 + sqrtd*t1*t2 + 1/2*t2^2";
inline constexpr std::string_view kQuadraticPhi2 =
    "1 - 1/2*sqrtd*t2 + 1/3*t1^3 + 1/2*sqrtd*t1^2*t2 + 1/2*t1*t2^2 + 1/12*sqrtd*t2^3";

// One unknown, four parameters: vertices rather than Newton polygons decide solutions.
inline constexpr std::string_view kWitnessPoly =
    "x1[0,0,1,0]*x1[0,0,0,1] + (-t1^2 + t2^2)*x1[1,0,1,0]";
inline constexpr std::string_view kWitnessPhi = "(t1 + t2)*t3 + (t1 - t2)*t4";

// 2t x' - x: no nonzero power series solution.
inline constexpr std::string_view kNoSeriesSolution = "2*t1*x1[1] - x1[0]";

struct FixtureResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<FixtureResult> replay_examples();

} // namespace tropdiff::fixtures
