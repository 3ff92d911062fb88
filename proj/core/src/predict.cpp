#include "jacsyz/predict.hpp"

#include <stdexcept>

namespace jacsyz {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Prediction predict_smooth(int n, int d) {
    if (n < 2 || d < 2) throw std::invalid_argument("predict_smooth needs n >= 2 and d >= 2");
    Prediction p;
    for (int k = 0; k <= n + 1; ++k) p.table.add(k, k * (d - 1), binomial(n + 1, k));
    p.N = binomial(n + 1, 2);
    p.exponents.assign(p.N, d - 1);
    return p;
}

Prediction predict_nc_arrangement(int n, int d) {
    if (n < 2) throw std::invalid_argument("predict_nc_arrangement needs n >= 2");
    if (d <= n + 1) throw std::invalid_argument("predict_nc_arrangement needs d > n+1");
    Prediction p;
    p.table.add(0, 0, 1);
    p.table.add(1, d - 1, n + 1);
    for (int k = 2; k <= n + 1; ++k) {
        long long c = binomial(d + k - n - 4, k - 2) * binomial(d - 1, n + 1 - k);
        if (c > 0) p.table.add(k, 2 * d + k - n - 3, c);
    }
    p.N = p.table.total_rank(2);
    p.exponents.assign(p.N, d - n);  // step-2 twist (2d-n-1) minus e_1 (d-1)
    return p;
}

Prediction predict_toric(int n, int e) {
    if (n < 2 || e < 1) throw std::invalid_argument("predict_toric needs n >= 2 and e >= 1");
    Prediction p;
    p.table.add(0, 0, 1);
    p.table.add(1, e + n, n + 1);
    for (int k = 2; k <= n + 1; ++k) p.table.add(k, k * e + n + 1, binomial(n + 1, k));
    p.N = binomial(n + 1, 2);
    p.exponents.assign(p.N, e + 1);
    return p;
}

}  // namespace jacsyz
