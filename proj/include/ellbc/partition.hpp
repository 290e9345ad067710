#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace ellbc {

// Weakly decreasing sequence of nonnegative parts; trailing zeros are stripped
// on construction so that equality and hashing see a canonical form.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    // 1-based access; parts beyond the length read as 0.
    int operator[](int i) const noexcept
    {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }
    const std::vector<int>& parts() const noexcept { return parts_; }

    // Padded to exactly n entries (n >= length()).
    std::vector<int> padded(int n) const;

    bool operator==(const Partition&) const = default;
    // Plain lexicographic order on the stored parts; only used for map keys.
    std::strong_ordering operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    std::string str() const;

private:
    std::vector<int> parts_;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

struct PartitionStats {
    int size = 0;
    int length = 0;
    int nstat = 0;
    int nstat_conj = 0;
    Partition double_square;
};

bool contains(const Partition& kappa, const Partition& lambda);
Partition conjugate(const Partition& lambda);
Partition complement(const Partition& lambda, int m, int n);
Partition add_rectangle(const Partition& lambda, int m, int n);
Partition concat_rectangle(const Partition& lambda, int m, int n);
Partition rectangle(int m, int n);

// kappa <_m lambda: kappa inside lambda and no row grows by more than m.
// With horizontal == false the test is applied to the conjugates.
bool strip_relation(const Partition& kappa, const Partition& lambda, int m, bool horizontal);

PartitionStats stats(const Partition& lambda);

// All partitions in the box m^n (and inside [lower, upper] when given),
// ordered by sorting the parts increasingly and comparing lexicographically.
std::vector<Partition> enumerate(int m, int n, const std::optional<Partition>& lower = std::nullopt,
                                 const std::optional<Partition>& upper = std::nullopt);

// Interval [lower, upper] in the containment order with the same ordering.
std::vector<Partition> interval(const Partition& lower, const Partition& upper);

// Partitions of total size <= max_size with at most max_length parts.
std::vector<Partition> partitions_up_to(int max_size, int max_length);

bool box_less(const Partition& a, const Partition& b);

}  // namespace ellbc
