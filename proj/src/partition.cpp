#include "ellbc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ellbc {

namespace {

void normalize(std::vector<int>& parts)
{
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("partition: negative part");
        if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition: parts must be weakly decreasing");
    }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(parts_); }

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int n) const
{
    if (n < length()) throw std::invalid_argument("partition: padding shorter than length");
    std::vector<int> out(parts_);
    out.resize(static_cast<std::size_t>(n), 0);
    return out;
}

std::string Partition::str() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (int x : p.parts()) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

bool contains(const Partition& kappa, const Partition& lambda)
{
    if (kappa.length() > lambda.length()) return false;
    for (int i = 1; i <= kappa.length(); ++i)
        if (kappa[i] > lambda[i]) return false;
    return true;
}

Partition conjugate(const Partition& lambda)
{
    std::vector<int> out(static_cast<std::size_t>(lambda[1]), 0);
    for (int j = 1; j <= lambda[1]; ++j) {
        int c = 0;
        while (lambda[c + 1] >= j) ++c;
        out[static_cast<std::size_t>(j - 1)] = c;
    }
    return Partition(std::move(out));
}

Partition rectangle(int m, int n)
{
    if (m < 0 || n < 0) throw std::invalid_argument("rectangle: negative side");
    return Partition(std::vector<int>(static_cast<std::size_t>(m > 0 ? n : 0), m));
}

Partition complement(const Partition& lambda, int m, int n)
{
    if (lambda.length() > n || lambda[1] > m) throw std::invalid_argument("complement: partition not inside m^n");
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = m - lambda[n + 1 - i];
    return Partition(std::move(out));
}

Partition add_rectangle(const Partition& lambda, int m, int n)
{
    if (lambda.length() > n) throw std::invalid_argument("add_rectangle: length exceeds n");
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = m + lambda[i];
    return Partition(std::move(out));
}

Partition concat_rectangle(const Partition& lambda, int m, int n)
{
    if (lambda[1] > m) throw std::invalid_argument("concat_rectangle: first part exceeds m");
    std::vector<int> out(static_cast<std::size_t>(n), m);
    out.insert(out.end(), lambda.parts().begin(), lambda.parts().end());
    return Partition(std::move(out));
}

bool strip_relation(const Partition& kappa, const Partition& lambda, int m, bool horizontal)
{
    if (m < 1) throw std::invalid_argument("strip_relation: m must be positive");
    if (!horizontal) return strip_relation(conjugate(kappa), conjugate(lambda), m, true);
    if (!contains(kappa, lambda)) return false;
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda[i] - kappa[i] > m) return false;
    return true;
}

PartitionStats stats(const Partition& lambda)
{
    PartitionStats s;
    s.size = lambda.size();
    s.length = lambda.length();
    for (int i = 1; i <= lambda.length(); ++i) s.nstat += (i - 1) * lambda[i];
    Partition c = conjugate(lambda);
    for (int i = 1; i <= c.length(); ++i) s.nstat_conj += (i - 1) * c[i];
    std::vector<int> dsq;
    for (int i = 1; i <= 2 * lambda.length(); ++i) dsq.push_back(2 * lambda[(i + 1) / 2]);
    s.double_square = Partition(std::move(dsq));
    return s;
}

bool box_less(const Partition& a, const Partition& b)
{
    int n = std::max(a.length(), b.length());
    auto pa = a.padded(n), pb = b.padded(n);
    return std::lexicographical_compare(pa.rbegin(), pa.rend(), pb.rbegin(), pb.rend());
}

std::vector<Partition> enumerate(int m, int n, const std::optional<Partition>& lower,
                                 const std::optional<Partition>& upper)
{
    if (m < 0 || n < 0) throw std::invalid_argument("enumerate: negative box");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int maxv) {
        if (static_cast<int>(cur.size()) == n) {
            Partition p(cur);
            if (lower && !contains(*lower, p)) return;
            if (upper && !contains(p, *upper)) return;
            out.push_back(std::move(p));
            return;
        }
        for (int v = 0; v <= maxv; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(m);
    std::sort(out.begin(), out.end(), box_less);
    return out;
}

std::vector<Partition> interval(const Partition& lower, const Partition& upper)
{
    if (!contains(lower, upper)) return {};
    return enumerate(upper[1], upper.length(), lower, upper);
}

std::vector<Partition> partitions_up_to(int max_size, int max_length)
{
    std::vector<Partition> out;
    for (const auto& p : enumerate(max_size, max_length))
        if (p.size() <= max_size) out.push_back(p);
    return out;
}

}  // namespace ellbc
