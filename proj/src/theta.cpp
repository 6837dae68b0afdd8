#include "thetasym/theta.hpp"

#include "thetasym/degree_order.hpp"

#include <algorithm>
#include <stdexcept>

namespace thetasym {

namespace {

bool is_orthogonal(GroupKind k) { return k == GroupKind::OPlus || k == GroupKind::OMinus; }

Partition drop_first(const Partition& p) {
    if (p.empty()) return p;
    std::vector<int> rest(p.parts().begin() + 1, p.parts().end());
    return Partition(rest);
}

/// Bipartition of the k-th canonical member at the upsilon level, in the
/// second member's family. Requires bounds already checked.
BiPartition theta_k_rows(const Partition& lam, const Partition& mu, Eps eps, int t, int k) {
    if (eps == Eps::Plus)
        return BiPartition{union_part(mu, t + k), union_part(drop_first(lam), lam.part(0) - k)};
    return BiPartition{union_part(drop_first(mu), mu.part(0) - k), union_part(lam, t + k)};
}

} // namespace

DualPair::DualPair(GroupTag first, GroupTag second) : first_(first), second_(second) {
    bool sp_first = first_.kind == GroupKind::Sp;
    bool sp_second = second_.kind == GroupKind::Sp;
    if (sp_first == sp_second || (sp_first && !is_orthogonal(second_.kind)) ||
        (sp_second && !is_orthogonal(first_.kind)))
        throw std::invalid_argument("dual pair needs one symplectic and one even orthogonal group");
}

Eps DualPair::eps() const {
    GroupKind ortho = first_.kind == GroupKind::Sp ? second_.kind : first_.kind;
    return ortho == GroupKind::OPlus ? Eps::Plus : Eps::Minus;
}

bool DualPair::stable_range() const {
    return 2 * first_.half_rank <= witt_index(second_);
}

int d_of(const DualPair& pair, int delta) {
    if (!defect_matches(pair.first().kind, delta))
        throw std::invalid_argument("defect does not belong to the pair's first member");
    int num = 0;
    switch (pair.first().kind) {
    case GroupKind::Sp: num = delta - 1; break;
    case GroupKind::OPlus: num = delta; break;
    case GroupKind::OMinus: num = delta - 2; break;
    }
    if (num % 4 != 0) throw std::logic_error("defect class out of step with group kind");
    return num / 4;
}

int tau(const DualPair& pair, int delta) {
    int d = d_of(pair, delta);
    int n = pair.first().half_rank;
    int nprime = pair.second().half_rank;
    return pair.eps() == Eps::Plus ? nprime - n + 2 * d : nprime - n - 1 - 2 * d;
}

int related_defect(const DualPair& pair, int delta) {
    if (!defect_matches(pair.first().kind, delta))
        throw std::invalid_argument("defect does not belong to the pair's first member");
    return pair.eps() == Eps::Plus ? 1 - delta : -1 - delta;
}

bool related(const Symbol& s, const Symbol& sprime, const DualPair& pair) {
    if (group_of(s) != pair.first() || group_of(sprime) != pair.second())
        throw std::invalid_argument("symbols are not in the pair's families");
    if (sprime.defect() != related_defect(pair, s.defect())) return false;
    BiPartition u = upsilon(s);
    BiPartition uprime = upsilon(sprime);
    if (pair.eps() == Eps::Plus)
        return interleaves(u.bottom, uprime.top) && interleaves(uprime.bottom, u.top);
    return interleaves(u.top, uprime.bottom) && interleaves(uprime.top, u.bottom);
}

Symbol theta_k_map(const Symbol& s, const DualPair& pair, int k) {
    if (group_of(s) != pair.first())
        throw std::invalid_argument("symbol is not in the pair's first family");
    BiPartition u = upsilon(s);
    int t = tau(pair, s.defect());
    if (t < 0)
        throw std::invalid_argument("theta_k is undefined when tau is negative");
    const Partition& removal_row = pair.eps() == Eps::Plus ? u.top : u.bottom;
    if (k < 0 || k > removal_row.part(0))
        throw std::invalid_argument("block index out of range");
    return upsilon_inv(theta_k_rows(u.top, u.bottom, pair.eps(), t, k),
                       related_defect(pair, s.defect()));
}

std::vector<Partition> strip_removals(const Partition& p, int boxes) {
    std::vector<Partition> out;
    if (boxes < 0 || boxes > p.norm()) return out;
    std::vector<int> picked;
    // Choose nu_i in [p_{i+1}, p_i] ascending at each position; the suffix
    // can still shed at most p_{i+1} boxes.
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == p.size()) {
            if (left == 0) out.push_back(Partition(picked));
            return;
        }
        int low = p.part(i + 1);
        int high = p.part(i);
        for (int v = low; v <= high; ++v) {
            int removed = high - v;
            if (removed > left || left - removed > low) continue;
            picked.push_back(v);
            self(self, i + 1, left - removed);
            picked.pop_back();
        }
    };
    rec(rec, 0, boxes);
    return out;
}

std::vector<Partition> strip_additions(const Partition& p, int boxes) {
    std::vector<Partition> out;
    if (boxes < 0) return out;
    std::vector<int> picked;
    // xi has p.size() + 1 slots; choose xi_i in [p_i, p_{i-1}] ascending at
    // each 1-based position (slot 1 absorbs any excess), and the suffix
    // after slot i can still absorb at most p_i boxes.
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == p.size() + 2) {
            if (left == 0) out.push_back(Partition(picked));
            return;
        }
        int low = p.part(i - 1);
        int high = i == 1 ? p.part(0) + boxes : p.part(i - 2);
        for (int v = low; v <= high; ++v) {
            int added = v - low;
            if (added > left) break;
            if (left - added > low) continue;
            picked.push_back(v);
            self(self, i + 1, left - added);
            picked.pop_back();
        }
    };
    rec(rec, 1, boxes);
    return out;
}

std::vector<ThetaBlock> theta_set(const Symbol& s, const DualPair& pair) {
    if (group_of(s) != pair.first())
        throw std::invalid_argument("symbol is not in the pair's first family");
    BiPartition u = upsilon(s);
    Eps eps = pair.eps();
    int t = tau(pair, s.defect());
    int dprime = related_defect(pair, s.defect());
    const Partition& removal_row = eps == Eps::Plus ? u.top : u.bottom;
    const Partition& addition_row = eps == Eps::Plus ? u.bottom : u.top;

    std::vector<ThetaBlock> blocks;
    for (int k = 0; k <= removal_row.part(0); ++k) {
        ThetaBlock block;
        block.k = k;
        if (t + k >= 0) {
            std::vector<Partition> removals = strip_removals(removal_row, k);
            std::vector<Partition> additions = strip_additions(addition_row, t + k);
            for (const Partition& r : removals)
                for (const Partition& a : additions) {
                    BiPartition rows = eps == Eps::Plus ? BiPartition{a, r} : BiPartition{r, a};
                    block.members.push_back(upsilon_inv(rows, dprime));
                }
            if (t >= 0) {
                Symbol dist =
                    upsilon_inv(theta_k_rows(u.top, u.bottom, eps, t, k), dprime);
                auto pos = std::find(block.members.begin(), block.members.end(), dist);
                if (pos == block.members.end())
                    throw std::logic_error("canonical member missing from its block");
                std::rotate(block.members.begin(), pos, pos + 1);
                block.distinguished = dist;
            }
        }
        blocks.push_back(std::move(block));
    }

    long long best = 0;
    bool any = false;
    for (const ThetaBlock& block : blocks)
        for (const Symbol& m : block.members) {
            long long o = ord_closed(m);
            if (!any || o > best) best = o;
            any = true;
        }
    if (any)
        for (ThetaBlock& block : blocks)
            for (const Symbol& m : block.members)
                if (ord_closed(m) == best) block.max_order_members.push_back(m);
    return blocks;
}

std::vector<Symbol> theta_members(const std::vector<ThetaBlock>& blocks) {
    std::vector<Symbol> out;
    for (const ThetaBlock& block : blocks)
        out.insert(out.end(), block.members.begin(), block.members.end());
    return out;
}

std::string to_string(const DualPair& pair) {
    return to_string(pair.first()) + "," + to_string(pair.second());
}

DualPair parse_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw std::invalid_argument("pair must be two comma-separated groups: " + text);
    return DualPair(parse_group(text.substr(0, comma)), parse_group(text.substr(comma + 1)));
}

} // namespace thetasym
