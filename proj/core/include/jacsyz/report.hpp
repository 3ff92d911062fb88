#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacsyz/betti.hpp"

namespace jacsyz {

struct Cor1Checks {
    bool annihilation = false;       // every rho'_ij kills the partials
    bool computed_in_rho = false;    // computed minimal generators lie in <rho'_ij>
    bool rho_in_computed = false;    // every rho'_ij lies in <computed generators>
    bool degrees_ok = false;         // all exponents equal e+1
    bool count_ok = false;           // m = binom(n+1, 2)
    bool all() const {
        return annihilation && computed_in_rho && rho_in_computed && degrees_ok && count_ok;
    }
};

struct VerificationReport {
    bool normal_crossing = false;
    bool regular_sequence = false;
    std::vector<std::vector<int>> failing_edges;  // subsets I, ascending indices
    std::optional<BettiTable> computed;
    std::optional<BettiTable> predicted;
    bool match = false;
    std::vector<int> exponents;
    std::optional<Cor1Checks> cor1;

    bool hypotheses_ok() const { return normal_crossing && regular_sequence; }

    std::string to_json() const;
    std::string to_text() const;
};

}  // namespace jacsyz
