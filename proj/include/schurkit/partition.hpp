#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "schurkit/rational.hpp"

namespace schurkit {

/// Integer partition in canonical form: strictly positive parts, non-increasing,
/// no trailing zeros. The empty sequence is the null partition. Partitions are
/// immutable values and serve as the index type for every basis in the kernel.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Accepts parts in any order; sorts descending and drops zeros.
    /// Negative parts are rejected.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Row i (0-based); zero beyond the last row.
    int row(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    Partition conjugate() const;

    /// Young-diagram inclusion: inner fits inside this shape row by row.
    bool contains(const Partition& inner) const;

    /// Multiplicity form r_i = number of parts equal to i.
    std::map<int, int> multiplicities() const;
    int multiplicity(int part) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Canonical total order: weight ascending, reverse-lexicographic within a
/// weight, so partitions_of(3) runs (3), (2,1), (1,1,1). All deterministic
/// output and matrix indexing uses this order.
bool canonical_less(const Partition& a, const Partition& b);

struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return canonical_less(a, b);
    }
};

struct PartitionPairLess {
    bool operator()(const std::pair<Partition, Partition>& a,
                    const std::pair<Partition, Partition>& b) const {
        if (a.first != b.first) return canonical_less(a.first, b.first);
        return canonical_less(a.second, b.second);
    }
};

/// Frobenius notation: arm and leg lengths measured from the main diagonal.
/// arms and legs are strictly decreasing and of equal length (the rank).
struct FrobeniusForm {
    std::vector<int> arms;
    std::vector<int> legs;
    int rank() const { return static_cast<int>(arms.size()); }
    int weight() const;
};

FrobeniusForm to_frobenius(const Partition& p);
Partition from_frobenius(const FrobeniusForm& f);

/// Centralizer order z_lambda = prod i^{r_i} r_i!.
Integer z_value(const Partition& p);

/// All partitions of n in canonical (reverse-lexicographic) order.
std::vector<Partition> partitions_of(int n);

/// All partitions of weight 0..n, canonical order (weights ascending).
std::vector<Partition> partitions_up_to(int n);

/// All sub-diagrams alpha contained in p, canonical order.
std::vector<Partition> subdiagrams(const Partition& p);

/// "[2,1]"; the null partition renders "[]".
std::string to_string(const Partition& p);
/// "(4,2|5,3)"; rank 0 renders "(|)".
std::string to_string(const FrobeniusForm& f);

/// Parses "[2,1]" or "(2,1)"; "[]" and "0" give the null partition.
/// Out-of-order parts are accepted; *canonicalized (when non-null) reports
/// whether sorting was needed.
Partition parse_partition(const std::string& text, bool* canonicalized = nullptr);

}  // namespace schurkit
