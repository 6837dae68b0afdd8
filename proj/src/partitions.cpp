#include "thetasym/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace thetasym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition part is negative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts not weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
}

int Partition::norm() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition dual(const Partition& p) {
    std::vector<int> cols;
    int width = p.part(0);
    cols.reserve(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) {
        int count = 0;
        for (int part : p.parts())
            if (part > i)
                ++count;
        cols.push_back(count);
    }
    return Partition(std::move(cols));
}

std::strong_ordering lex_cmp(const Partition& a, const Partition& b) {
    std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        if (a.part(i) != b.part(i))
            return a.part(i) <=> b.part(i);
    }
    return std::strong_ordering::equal;
}

Partition union_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.size() + b.size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<int>());
    return Partition(std::move(parts));
}

Partition union_part(const Partition& a, int extra) {
    return union_parts(a, Partition({extra}));
}

bool precq(const Partition& lam, const Partition& mu) {
    std::size_t len = std::max(lam.size(), mu.size());
    for (std::size_t i = 0; i < len; ++i) {
        if (lam.part(i) < mu.part(i) - 1 || lam.part(i) > mu.part(i))
            return false;
    }
    return true;
}

bool interleaves(const Partition& lam, const Partition& mu) {
    std::size_t len = std::max(lam.size(), mu.size()) + 1;
    for (std::size_t i = 0; i < len; ++i) {
        if (lam.part(i) > mu.part(i) || lam.part(i) < mu.part(i + 1))
            return false;
    }
    return true;
}

namespace {

void extend_partitions(std::vector<int>& stack, int remaining, int cap,
                       std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int next = std::min(cap, remaining); next >= 1; --next) {
        stack.push_back(next);
        extend_partitions(stack, remaining - next, next, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> stack;
    extend_partitions(stack, n, n, out);
    return out;
}

BiPartition bipartition_union(const BiPartition& a, const BiPartition& b) {
    return {union_parts(a.top, b.top), union_parts(a.bottom, b.bottom)};
}

std::vector<BiPartition> bipartitions_of(int n) {
    std::vector<BiPartition> out;
    for (int k = 0; k <= n; ++k) {
        for (const Partition& top : partitions_of(k))
            for (const Partition& bottom : partitions_of(n - k))
                out.push_back({top, bottom});
    }
    return out;
}

std::string to_string(const Partition& p) {
    if (p.empty())
        return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            os << ',';
        os << p.parts()[i];
    }
    return os.str();
}

std::string to_string(const BiPartition& bp) {
    return to_string(bp.top) + "|" + to_string(bp.bottom);
}

namespace {

std::vector<int> parse_int_row(const std::string& text, const char* what) {
    std::string trimmed;
    for (char c : text)
        if (c != ' ')
            trimmed += c;
    if (trimmed == "-")
        return {};
    if (trimmed.empty())
        throw std::invalid_argument(std::string(what) + ": empty row (use '-')");
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos <= trimmed.size()) {
        std::size_t comma = trimmed.find(',', pos);
        std::string item = trimmed.substr(pos, comma == std::string::npos
                                                   ? std::string::npos
                                                   : comma - pos);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument(std::string(what) + ": bad entry '" + item + "'");
        values.push_back(std::stoi(item));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return values;
}

} // namespace

Partition parse_partition(const std::string& text) {
    return Partition(parse_int_row(text, "partition"));
}

BiPartition parse_bipartition(const std::string& text) {
    std::size_t bar = text.find('|');
    if (bar == std::string::npos)
        throw std::invalid_argument("bipartition: missing '|'");
    return {parse_partition(text.substr(0, bar)), parse_partition(text.substr(bar + 1))};
}

} // namespace thetasym
