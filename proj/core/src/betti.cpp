#include "jacsyz/betti.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jacsyz {

void BettiTable::add(int k, int e, long long c) {
    if (c <= 0) throw std::invalid_argument("Betti ranks must be positive");
    entries[{k, e}] += c;
}

long long BettiTable::rank_at(int k, int e) const {
    auto it = entries.find({k, e});
    return it == entries.end() ? 0 : it->second;
}

long long BettiTable::total_rank(int k) const {
    long long r = 0;
    for (const auto& [ke, c] : entries)
        if (ke.first == k) r += c;
    return r;
}

int BettiTable::max_step() const {
    int m = -1;
    for (const auto& [ke, c] : entries) m = std::max(m, ke.first);
    return m;
}

std::vector<int> BettiTable::twists_at(int k) const {
    std::vector<int> out;
    for (const auto& [ke, c] : entries)
        if (ke.first == k)
            for (long long i = 0; i < c; ++i) out.push_back(ke.second);
    std::sort(out.begin(), out.end());
    return out;
}

std::string BettiTable::to_json() const {
    std::ostringstream os;
    os << "{\"steps\":[";
    int maxk = max_step();
    bool first_step = true;
    for (int k = 0; k <= maxk; ++k) {
        bool any = false;
        for (const auto& [ke, c] : entries)
            if (ke.first == k) { any = true; break; }
        if (!any) continue;
        if (!first_step) os << ',';
        first_step = false;
        os << "{\"k\":" << k << ",\"twists\":[";
        bool first_tw = true;
        for (const auto& [ke, c] : entries) {
            if (ke.first != k) continue;
            if (!first_tw) os << ',';
            first_tw = false;
            os << "{\"e\":" << ke.second << ",\"c\":" << c << '}';
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

std::string BettiTable::to_text() const {
    if (entries.empty()) return "(empty)\n";
    int maxk = max_step();
    int rmin = 0, rmax = 0;
    bool first = true;
    for (const auto& [ke, c] : entries) {
        int r = ke.second - ke.first;
        rmin = first ? r : std::min(rmin, r);
        rmax = first ? r : std::max(rmax, r);
        first = false;
    }
    auto cell = [&](long long v) { return v ? std::to_string(v) : std::string("."); };
    // column widths
    std::vector<size_t> w(maxk + 1, 1);
    for (int k = 0; k <= maxk; ++k) {
        w[k] = std::max(w[k], std::to_string(k).size());
        w[k] = std::max(w[k], cell(total_rank(k)).size());
        for (int r = rmin; r <= rmax; ++r)
            w[k] = std::max(w[k], cell(rank_at(k, r + k)).size());
    }
    size_t lab = std::max(std::to_string(rmin).size(), std::to_string(rmax).size());
    lab = std::max(lab, std::string("total").size());
    std::ostringstream os;
    auto row_label = [&](const std::string& s) {
        os << std::string(lab - s.size(), ' ') << s << ": ";
    };
    os << std::string(lab + 2, ' ');
    for (int k = 0; k <= maxk; ++k)
        os << std::string(w[k] - std::to_string(k).size(), ' ') << k << (k < maxk ? " " : "");
    os << '\n';
    row_label("total");
    for (int k = 0; k <= maxk; ++k) {
        std::string s = cell(total_rank(k));
        os << std::string(w[k] - s.size(), ' ') << s << (k < maxk ? " " : "");
    }
    os << '\n';
    for (int r = rmin; r <= rmax; ++r) {
        row_label(std::to_string(r));
        for (int k = 0; k <= maxk; ++k) {
            std::string s = cell(rank_at(k, r + k));
            os << std::string(w[k] - s.size(), ' ') << s << (k < maxk ? " " : "");
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace jacsyz
