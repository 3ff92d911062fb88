#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jacsyz {

// Graded Betti numbers: rank c of the summand S(-e) at homological step k.
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;  // (k, e) -> c >= 1

    void add(int k, int e, long long c = 1);
    long long rank_at(int k, int e) const;
    long long total_rank(int k) const;
    int max_step() const;
    std::vector<int> twists_at(int k) const;  // with multiplicity, ascending

    bool operator==(const BettiTable&) const = default;

    // {"steps":[{"k":0,"twists":[{"e":0,"c":1}]},...]} with stable key order
    std::string to_json() const;
    // Macaulay2-style grid: columns = homological step, rows = e - k
    std::string to_text() const;
};

}  // namespace jacsyz
