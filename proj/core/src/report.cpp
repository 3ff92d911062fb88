#include "jacsyz/report.hpp"

#include <sstream>

namespace jacsyz {

namespace {

std::string edges_json(const std::vector<std::vector<int>>& edges) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) os << ',';
        os << '[';
        for (size_t j = 0; j < edges[i].size(); ++j) {
            if (j) os << ',';
            os << edges[i][j];
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

std::string ints_json(const std::vector<int>& v) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ']';
    return os.str();
}

const char* b2s(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string VerificationReport::to_json() const {
    std::ostringstream os;
    os << "{\"hypotheses\":{\"normal_crossing\":" << b2s(normal_crossing)
       << ",\"regular_sequence\":" << b2s(regular_sequence)
       << ",\"failing_edges\":" << edges_json(failing_edges) << '}';
    os << ",\"computed\":" << (computed ? computed->to_json() : "null");
    os << ",\"predicted\":" << (predicted ? predicted->to_json() : "null");
    if (cor1) {
        os << ",\"checks\":{\"annihilation\":" << b2s(cor1->annihilation)
           << ",\"computed_in_rho\":" << b2s(cor1->computed_in_rho)
           << ",\"rho_in_computed\":" << b2s(cor1->rho_in_computed)
           << ",\"degrees_ok\":" << b2s(cor1->degrees_ok)
           << ",\"count_ok\":" << b2s(cor1->count_ok) << '}';
    }
    os << ",\"match\":" << b2s(match);
    os << ",\"exponents\":" << ints_json(exponents) << '}';
    return os.str();
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "hypotheses:\n";
    os << "  normal crossing:   " << (normal_crossing ? "yes" : "NO") << '\n';
    os << "  regular sequence:  " << (regular_sequence ? "yes" : "NO") << '\n';
    if (!failing_edges.empty()) {
        os << "  failing edges:     ";
        for (size_t i = 0; i < failing_edges.size(); ++i) {
            if (i) os << ' ';
            os << '{';
            for (size_t j = 0; j < failing_edges[i].size(); ++j) {
                if (j) os << ',';
                os << failing_edges[i][j];
            }
            os << '}';
        }
        os << '\n';
    }
    if (computed) os << "computed Betti table:\n" << computed->to_text();
    if (predicted) os << "predicted Betti table:\n" << predicted->to_text();
    if (cor1) {
        os << "checks:\n";
        os << "  rho' annihilate partials:      " << (cor1->annihilation ? "yes" : "NO") << '\n';
        os << "  computed generators in <rho'>: " << (cor1->computed_in_rho ? "yes" : "NO") << '\n';
        os << "  rho' in <computed generators>: " << (cor1->rho_in_computed ? "yes" : "NO") << '\n';
        os << "  degrees all e+1:               " << (cor1->degrees_ok ? "yes" : "NO") << '\n';
        os << "  count = binom(n+1,2):          " << (cor1->count_ok ? "yes" : "NO") << '\n';
    }
    if (!exponents.empty()) {
        os << "exponents: (";
        for (size_t i = 0; i < exponents.size(); ++i) {
            if (i) os << ',';
            os << exponents[i];
        }
        os << ")\n";
    }
    os << "match: " << (match ? "yes" : "NO") << '\n';
    return os.str();
}

}  // namespace jacsyz
