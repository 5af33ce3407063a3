#include "hq/qcombinatorics.hpp"

#include <mutex>
#include <vector>

namespace hq {

Scalar q_int(int n) {
    if (n < 0) throw std::invalid_argument("q_int: negative argument");
    Scalar acc = Scalar::zero();
    for (int i = 0; i < n; ++i) acc += Scalar::q_power(i);
    return acc;
}

Scalar q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
    Scalar acc = Scalar::one();
    for (int i = 1; i <= n; ++i) acc *= q_int(i);
    return acc;
}

namespace {

// Pascal triangle rows, rebuilt whenever the field configuration changes.
struct BinomCache {
    std::mutex mu;
    std::uint64_t generation = 0;
    std::vector<std::vector<Scalar>> rows;
};

BinomCache& cache() {
    static BinomCache c;
    return c;
}

} // namespace

Scalar q_binom(int n, int i) {
    if (n < 0 || i < 0 || i > n) return Scalar::zero();
    auto& c = cache();
    std::lock_guard<std::mutex> lk(c.mu);
    if (c.generation != field_generation()) {
        c.rows.clear();
        c.generation = field_generation();
    }
    while (static_cast<int>(c.rows.size()) <= n) {
        int r = static_cast<int>(c.rows.size());
        std::vector<Scalar> row(static_cast<std::size_t>(r) + 1, Scalar::zero());
        row.front() = Scalar::one();
        row.back() = Scalar::one();
        for (int j = 1; j < r; ++j)
            row[static_cast<std::size_t>(j)] =
                Scalar::q_power(j) * c.rows.back()[static_cast<std::size_t>(j)] +
                c.rows.back()[static_cast<std::size_t>(j) - 1];
        c.rows.push_back(std::move(row));
    }
    return c.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

Scalar q_falling(int n, int m) {
    if (m <= 0 || m > n) throw std::invalid_argument("q_falling: requires 0 < m <= n");
    Scalar acc = Scalar::one();
    for (int i = 0; i < m; ++i) acc *= q_int(n - i);
    return acc;
}

Scalar q_multi_binom(int m, int t, int l) {
    if (t < 1 || t > m) throw std::invalid_argument("q_multi_binom: requires 1 <= t <= m");
    if (l < 1 || static_cast<long long>(l) * t > m)
        throw std::invalid_argument("q_multi_binom: requires 1 <= l <= m/t");
    Scalar acc = Scalar::one();
    for (int i = 0; i < l; ++i) acc *= q_binom(m - i * t, t);
    return acc;
}

} // namespace hq
