#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lw {

/// A partition: weakly decreasing positive parts.  Trailing zeros are never
/// stored, so equality of the stored vectors is equality of partitions.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);

    const std::vector<long>& parts() const { return parts_; }
    long size() const;                    // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    long part(int i) const {              // 1-based, 0 beyond the length
        return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i - 1)] : 0;
    }
    bool empty() const { return parts_.empty(); }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;        // "4,3,1,1", "" for the empty partition
    static Partition parse(const std::string& s);

private:
    std::vector<long> parts_;
};

struct Cell {
    int i = 1;  // row, 1-based
    int j = 1;  // column, 1-based
};

struct OddHookCell {
    Cell cell;
    long hook = 0;
    int sign = 1;  // (-1)^(Lambda_i - i)
};

struct CoreQuotient {
    long c = 0;           // 2-core is the staircase (c, c-1, ..., 1)
    Partition lam, mu;    // ordered 2-quotient
    bool v_odd = false;   // parity of the number of vertical dominoes removed
};

Partition conjugate(const Partition& p);
bool cell_valid(const Partition& p, Cell c);
long hook_length(const Partition& p, Cell c);
std::vector<OddHookCell> odd_hook_cells(const Partition& p);
Partition remove_border_strip(const Partition& p, Cell c);

/// First-column hook lengths Lambda + delta_L = (Lambda_1+L-1, ..., Lambda_L).
std::vector<long> beta_numbers(const Partition& p, int L);

CoreQuotient two_core_quotient(const Partition& p);
CoreQuotient two_core_quotient_padded(const Partition& p, int L);  // L even, >= length
Partition from_core_quotient(long c, const Partition& lam, const Partition& mu);

/// Partitions of n in reverse-lexicographic order, starting from (n).
std::vector<Partition> partitions_of(long n);
void for_each_partition(long n, const std::function<void(const Partition&)>& f);
long partition_count(long n);

/// lambda + delta_r = (lambda_1 + r-1, ..., lambda_r); requires r >= length.
std::vector<long> plus_staircase(const Partition& p, int r);

}  // namespace lw
