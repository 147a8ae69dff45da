#pragma once

#include <optional>
#include <string>
#include <vector>

#include "socle/ring.hpp"

namespace testrings {

inline socle::RingHandle make(std::vector<std::string> vars, const std::string& defining, const std::string& id,
                              std::optional<std::vector<std::string>> decomposition = std::nullopt) {
    const auto P = socle::PolyRing::make(std::move(vars));
    std::optional<std::vector<socle::Ideal>> dec;
    if (decomposition) {
        dec.emplace();
        for (const auto& c : *decomposition) dec->push_back(socle::Ideal::parse(P, c));
    }
    return socle::RingPresentation::make(socle::Ideal::parse(P, defining), id, std::move(dec));
}

inline socle::RingHandle r2() { return make({"x", "y"}, "", "R2"); }
inline socle::RingHandle r3() { return make({"x", "y", "z"}, "", "R3"); }
inline socle::RingHandle hypersurface() {
    return make({"x", "y", "z"}, "x^2 + y^2 + z^2", "hypersurface", std::vector<std::string>{"x^2 + y^2 + z^2"});
}
inline socle::RingHandle artinian_type2() { return make({"x", "y"}, "x^2, x*y, y^2", "artinian_type2"); }
inline socle::RingHandle seqcm() { return make({"x", "y", "z"}, "x*y, x*z", "seqcm"); }
inline socle::RingHandle two_planes() { return make({"x", "y", "z", "w"}, "x*z, x*w, y*z, y*w", "two_planes"); }
inline socle::RingHandle sr_path() { return make({"a", "b", "c", "d"}, "a*c, a*d, b*d", "sr_path"); }

}  // namespace testrings
