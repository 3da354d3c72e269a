#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schurkit/symfunc.hpp"

namespace schurkit {

/// Normalized scalar n-cochain over the outer Hopf algebra: a multilinear
/// form given by its values on tuples of Schur-basis partitions, extended
/// linearly. Values on the all-empty tuple are forced to 1 (normalization)
/// and tuples containing an empty slot evaluate unitaly (product of counits
/// on the remaining slots is the convention used throughout).
///
/// Cochain values are memoized per object; evaluation is thread-safe with
/// get-or-compute semantics.
class Cochain {
public:
    using Key = std::vector<Partition>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const;
    };
    using Table = std::map<Key, Rat, KeyLess>;

    Cochain() = default;

    /// The trivial cochain epsilon^{ox arity}.
    static Cochain counit(int arity);
    /// Table-defined cochain; keys must have all slots nonempty, values on
    /// keys with empty slots follow the unital convention, missing keys are 0.
    static Cochain table(int arity, Table values, std::string name = "table");
    /// Cochain defined by an arbitrary evaluator on all-nonempty keys.
    static Cochain function(int arity, std::function<Rat(const Key&)> fn,
                            std::string name);

    bool valid() const { return impl_ != nullptr; }
    int arity() const;
    const std::string& name() const;

    Rat operator()(const Key& key) const;
    Rat operator()(const Partition& a) const;
    Rat operator()(const Partition& a, const Partition& b) const;

    /// Multilinear evaluation: each slot is expanded in the Schur basis.
    Rat eval(const std::vector<SymFunc>& slots) const;
    Rat eval(const SymFunc& f) const;
    Rat eval(const TensorExp& t) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    explicit Cochain(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
};

/// Convolution product with respect to the outer coproduct, slotwise.
/// Abelian and associative; unit is Cochain::counit(arity).
Cochain convolve(const Cochain& a, const Cochain& b);

/// Convolutive inverse, by graded recursion on the total weight of the
/// argument tuple. Exists for every normalized cochain.
Cochain invert(const Cochain& c);

/// Face map d^i lifting an n-cochain to arity n+1 (i in 0..n+1).
Cochain face_map(const Cochain& c, int i);

/// Coboundary operator: the alternating convolution
/// d c = d0(c) * d1(c^{-1}) * d2(c) * ... Supported for arity 1 and 2.
Cochain coboundary(const Cochain& c);

enum class CochainClass { Trivial, Coboundary, Cocycle, Generic };
std::string to_string(CochainClass c);

struct Classify1Result {
    CochainClass verdict = CochainClass::Generic;
    int max_weight = 0;
    /// For a generic verdict: a pair with phi(s_a s_b) != phi(s_a) phi(s_b).
    std::optional<std::pair<Partition, Partition>> witness;
};

/// Cocycle test for 1-cochains: multiplicativity on all products of
/// total weight <= max_weight. The verdict is only "up to max_weight".
Classify1Result classify1(const Cochain& phi, int max_weight);

struct Classify2Result {
    CochainClass verdict = CochainClass::Generic;
    int max_weight = 0;
    /// Whether d(pi) evaluated to the trivial 3-cochain on all triples.
    bool is_cocycle = false;
    /// The gradewise preimage phi with d(phi) = pi, when one exists.
    std::optional<std::map<Partition, Rat, PartitionLess>> preimage;
    /// First pair at which the coboundary linear system is inconsistent.
    std::optional<std::pair<Partition, Partition>> coboundary_obstruction;
    /// A triple witnessing d(pi) != e when pi is not a cocycle.
    std::optional<std::vector<Partition>> cocycle_witness;
};

/// Classification of 2-cochains up to max_weight: trivial, coboundary (with
/// a recovered preimage, solved grade by grade), cocycle, or generic. A
/// coboundary verdict takes precedence over cocycle; every coboundary also
/// reports is_cocycle = true.
Classify2Result classify2(const Cochain& pi, int max_weight);

}  // namespace schurkit
