#include "polyidp/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "polyidp/errors.hpp"

namespace polyidp {

long long LatticePoint::sum() const {
    return std::accumulate(coords.begin(), coords.end(), 0LL);
}

bool LatticePoint::is_weakly_decreasing() const {
    return std::is_sorted(coords.begin(), coords.end(), std::greater<>());
}

LatticePoint LatticePoint::sorted_desc() const {
    LatticePoint out = *this;
    std::sort(out.coords.begin(), out.coords.end(), std::greater<>());
    return out;
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& other) {
    if (other.coords.size() > coords.size()) coords.resize(other.coords.size(), 0);
    for (std::size_t i = 0; i < other.coords.size(); ++i) coords[i] += other.coords[i];
    return *this;
}

LatticePoint operator*(int k, LatticePoint a) {
    for (int& c : a.coords) c *= k;
    return a;
}

std::size_t LatticePointHash::operator()(const LatticePoint& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int c : p.coords) {
        h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw InvalidPartition("negative part in " + polyidp::to_string(LatticePoint(parts_)));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidPartition("parts not weakly decreasing: " + polyidp::to_string(LatticePoint(parts_)));
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

LatticePoint Partition::padded(std::size_t n) const {
    if (parts_.size() > n)
        throw LengthExceedsAmbient("partition " + polyidp::to_string(*this) + " has more than " +
                                   std::to_string(n) + " parts");
    std::vector<int> c(parts_);
    c.resize(n, 0);
    return LatticePoint(std::move(c));
}

Partition Partition::from_point(const LatticePoint& p) {
    return Partition(p.sorted_desc().coords);
}

std::string to_string(Dominance d) {
    switch (d) {
        case Dominance::Less: return "Less";
        case Dominance::Greater: return "Greater";
        case Dominance::Equal: return "Equal";
        case Dominance::Incomparable: return "Incomparable";
    }
    return "?";
}

std::string to_string(const LatticePoint& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.coords.size(); ++i) os << (i ? "," : "") << p.coords[i];
    os << ')';
    return os.str();
}

std::string to_string(const Partition& p) { return to_string(LatticePoint(p.parts())); }

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const LatticePoint& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, Dominance d) { return os << to_string(d); }

Dominance compare_dominance(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw SizeMismatch("dominance undefined across sizes: " + to_string(a) + " vs " + to_string(b));
    if (a == b) return Dominance::Equal;
    const std::size_t len = std::max(a.length(), b.length());
    bool a_le = true, b_le = true;
    long long sa = 0, sb = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) a_le = false;
        if (sb > sa) b_le = false;
    }
    if (a_le) return Dominance::Less;
    if (b_le) return Dominance::Greater;
    return Dominance::Incomparable;
}

bool dominated_by(const Partition& a, const Partition& b) {
    const Dominance d = compare_dominance(a, b);
    return d == Dominance::Less || d == Dominance::Equal;
}

Partition partition_sum(std::span<const Partition> parts) {
    if (parts.empty()) throw EmptyInput("partition_sum of an empty list");
    std::size_t len = 0;
    for (const auto& p : parts) len = std::max(len, p.length());
    std::vector<int> acc(len, 0);
    for (const auto& p : parts)
        for (std::size_t i = 0; i < p.length(); ++i) acc[i] += p.part(i);
    return Partition(std::move(acc));
}

Partition scale(const Partition& p, int k) {
    std::vector<int> c(p.parts());
    for (int& x : c) x *= k;
    return Partition(std::move(c));
}

namespace {

// Depth-first generation of weakly decreasing sequences. `prefix_cap[i]`, when
// nonempty, bounds the i-th prefix sum from above.
void generate(std::vector<int>& cur, int remaining, int max_part, std::size_t max_length,
              const std::vector<long long>& prefix_cap, long long prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    const std::size_t i = cur.size();
    if (i >= max_length) return;
    // remaining boxes must fit into the rows left
    if (static_cast<long long>(max_part) * static_cast<long long>(max_length - i) < remaining) return;
    for (int v = std::min(max_part, remaining); v >= 1; --v) {
        if (!prefix_cap.empty() && prefix + v > prefix_cap[std::min(i, prefix_cap.size() - 1)]) continue;
        cur.push_back(v);
        generate(cur, remaining - v, v, max_length, prefix_cap, prefix + v, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_dominated(const Partition& lam, std::size_t max_length) {
    std::vector<long long> caps;
    long long s = 0;
    for (std::size_t i = 0; i < lam.length(); ++i) caps.push_back(s += lam.part(i));
    if (caps.empty()) caps.push_back(0);
    std::vector<Partition> out;
    std::vector<int> cur;
    generate(cur, lam.size(), lam.size() == 0 ? 0 : lam.part(0), max_length, caps, 0, out);
    return out;
}

std::vector<Partition> partitions_of(int size, std::size_t max_length) {
    std::vector<Partition> out;
    std::vector<int> cur;
    generate(cur, size, size, max_length, {}, 0, out);
    return out;
}

std::vector<Partition> antichain_max(std::span<const Partition> cands) {
    std::vector<Partition> uniq(cands.begin(), cands.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<Partition> out;
    for (const auto& a : uniq) {
        bool dominated = false;
        for (const auto& b : uniq) {
            if (a.size() != b.size() || a == b) continue;
            if (compare_dominance(a, b) == Dominance::Less) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(a);
    }
    return out;
}

std::vector<Partition> partitions_in_box(std::size_t max_length, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur(max_length, 0);
    // odometer over weakly decreasing vectors in [0, max_part]^max_length
    const auto rec = [&](auto&& self, std::size_t i, int cap) -> void {
        if (i == max_length) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            cur[i] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, max_part);
    std::sort(out.begin(), out.end(), [max_length](const Partition& a, const Partition& b) {
        return a.padded(max_length) < b.padded(max_length);
    });
    return out;
}

std::vector<LatticePoint> orbit(const LatticePoint& p) {
    std::vector<int> c = p.coords;
    std::sort(c.begin(), c.end());
    std::vector<LatticePoint> out;
    do {
        out.emplace_back(c);
    } while (std::next_permutation(c.begin(), c.end()));
    return out;
}

} // namespace polyidp
