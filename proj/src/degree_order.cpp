#include "thetasym/degree_order.hpp"

#include <numeric>
#include <stdexcept>

namespace thetasym {

EntrySequence::EntrySequence(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
        if (entries_[i] < entries_[i + 1]) {
            throw std::invalid_argument("entry sequence must be weakly decreasing");
        }
    }
    if (!entries_.empty() && entries_.back() < 0) {
        throw std::invalid_argument("entry sequence must be non-negative");
    }
}

int EntrySequence::sum() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

int EntrySequence::rank() const {
    int q = static_cast<int>(entries_.size()) - 1;
    return sum() - (q * q) / 4;
}

int ord_entries(const EntrySequence& z) {
    long long m = static_cast<long long>(z.size());
    long long n = z.rank();
    long long acc = 0;
    for (long long i = 1; i <= m; ++i) {
        long long zi = z.entries()[static_cast<std::size_t>(i - 1)];
        acc += (m - i) * zi - zi * (zi + 1);
    }
    if (m % 2 != 0) {
        acc += n * (n + 1) - (m - 1) * (m - 3) * (2 * m - 1) / 24;
    } else {
        acc += n * n - m * (m - 2) * (2 * m - 5) / 24;
    }
    return static_cast<int>(acc);
}

int ord_closed(const Symbol& s) {
    return ord_entries(EntrySequence(s.entries()));
}

DegreeBreakdown ord_oracle(const Symbol& s) {
    const auto& a = s.top().entries();
    const auto& b = s.bottom().entries();
    int m1 = static_cast<int>(a.size());
    int m2 = static_cast<int>(b.size());
    int n = s.rank();

    DegreeBreakdown out;
    for (int i = 1; i <= m1; ++i) {
        out.deg_delta_A += (m1 - i) * a[static_cast<std::size_t>(i - 1)];
        out.deg_theta_A += a[static_cast<std::size_t>(i - 1)] * (a[static_cast<std::size_t>(i - 1)] + 1);
    }
    for (int j = 1; j <= m2; ++j) {
        out.deg_delta_B += (m2 - j) * b[static_cast<std::size_t>(j - 1)];
        out.deg_theta_B += b[static_cast<std::size_t>(j - 1)] * (b[static_cast<std::size_t>(j - 1)] + 1);
    }
    for (int x : a) {
        for (int y : b) out.deg_pi += std::max(x, y);
    }
    out.deg_group_order = (m1 + m2) % 2 != 0 ? n * (n + 1) : n * n;
    for (int arg = m1 + m2 - 2; arg >= 2; arg -= 2) {
        out.deg_q_power += arg * (arg - 1) / 2;
    }
    out.c = (a == b) ? m1 : (m1 + m2 - 1) / 2;
    out.total = out.deg_group_order + out.deg_delta_A + out.deg_delta_B + out.deg_pi
                - out.deg_theta_A - out.deg_theta_B - out.deg_q_power;
    return out;
}

int entry_move_ord_delta(const EntrySequence& z, int k, int l) {
    int m = static_cast<int>(z.size());
    if (!(1 <= k && k < l && l <= m)) {
        throw std::invalid_argument("entry move needs 1 <= k < l <= m");
    }
    const auto& e = z.entries();
    int zk = e[static_cast<std::size_t>(k - 1)];
    int zl = e[static_cast<std::size_t>(l - 1)];
    if (k >= 2 && e[static_cast<std::size_t>(k - 2)] < zk + 1) {
        throw std::invalid_argument("entry move would break monotonicity above k");
    }
    if (l < m && zl - 1 < e[static_cast<std::size_t>(l)]) {
        throw std::invalid_argument("entry move would break monotonicity below l");
    }
    return (l - k) + 2 * (zl - zk - 1);
}

} // namespace thetasym
