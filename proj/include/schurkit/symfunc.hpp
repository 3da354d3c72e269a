#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schurkit/partition.hpp"
#include "schurkit/rational.hpp"

namespace schurkit {

/// The five classical bases.
enum class Basis : char {
    Schur = 's',
    Complete = 'h',
    Elementary = 'e',
    Monomial = 'm',
    PowerSum = 'p',
};

char basis_letter(Basis b);
Basis basis_from_letter(char c);

/// Graded sparse linear combination over one basis with exact rational
/// coefficients. A value is either exact (a finite symmetric function) or
/// carries a weight cap, meaning it is the truncation of a series and holds
/// no information above the cap. Operations propagate the minimum cap of
/// their inputs. Immutable in spirit: mutators exist for construction only.
class SymFunc {
public:
    using TermMap = std::map<Partition, Rat, PartitionLess>;

    SymFunc() : basis_(Basis::Schur) {}
    explicit SymFunc(Basis b, std::optional<int> cap = std::nullopt)
        : basis_(b), cap_(cap) {}

    static SymFunc unit(Basis b = Basis::Schur);
    static SymFunc element(Basis b, const Partition& p, const Rat& coeff = Rat(1));

    Basis basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }
    std::optional<int> cap() const { return cap_; }
    bool exact() const { return !cap_.has_value(); }

    Rat coeff(const Partition& p) const;
    /// Accumulates; zero results and terms above the cap are dropped.
    void add(const Partition& p, const Rat& c);
    bool zero() const { return terms_.empty(); }
    int max_term_weight() const;
    SymFunc homogeneous(int w) const;
    /// True when every stored coefficient is an integer.
    bool integral() const;

    void set_cap(std::optional<int> cap);
    SymFunc truncated(int cap) const;

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const Rat& c);
    SymFunc operator-() const;
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const Rat& c) { return a *= c; }
    friend SymFunc operator*(const Rat& c, SymFunc a) { return a *= c; }

    /// Term-level equality: same basis, same cap, same coefficients.
    bool operator==(const SymFunc& o) const;
    bool operator!=(const SymFunc& o) const { return !(*this == o); }

private:
    Basis basis_;
    TermMap terms_;
    std::optional<int> cap_;
};

std::optional<int> min_cap(std::optional<int> a, std::optional<int> b);

/// Finite linear combination of pairs or triples of basis elements; the
/// value type of coproducts. Each slot carries its own basis tag.
class TensorExp {
public:
    using Key = std::vector<Partition>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const;
    };
    using TermMap = std::map<Key, Rat, KeyLess>;

    TensorExp() = default;
    explicit TensorExp(std::vector<Basis> slot_bases,
                       std::optional<int> cap = std::nullopt);

    int arity() const { return static_cast<int>(bases_.size()); }
    const std::vector<Basis>& slot_bases() const { return bases_; }
    const TermMap& terms() const { return terms_; }
    std::optional<int> cap() const { return cap_; }
    void set_cap(std::optional<int> cap) { cap_ = cap; }

    Rat coeff(const Key& k) const;
    void add(const Key& k, const Rat& c);
    bool zero() const { return terms_.empty(); }

    TensorExp& operator+=(const TensorExp& o);
    TensorExp& operator-=(const TensorExp& o);
    TensorExp& operator*=(const Rat& c);

    bool operator==(const TensorExp& o) const;
    bool operator!=(const TensorExp& o) const { return !(*this == o); }

    /// Slotwise basis conversion, distributing sums over the tensor terms.
    TensorExp converted(const std::vector<Basis>& targets) const;

private:
    std::vector<Basis> bases_;
    TermMap terms_;
    std::optional<int> cap_;
};

/// f ox g as an explicit tensor.
TensorExp tensor2(const SymFunc& f, const SymFunc& g);

/// Basis change. Exact for every route; power-sum targets may introduce
/// denominators, all other conversions of integral input stay integral.
SymFunc convert(const SymFunc& f, Basis target);

/// Abstract equality: do f and g expand to the same symmetric function?
bool equal_symfunc(const SymFunc& f, const SymFunc& g);

/// Schur scalar product. Bilinear, (s_lambda | s_mu) = delta.
Rat schur_scalar(const SymFunc& f, const SymFunc& g);

/// Convolutive inverse pairing (s_lambda | s_mu)^{-1}
/// = (-1)^{|mu|} delta_{lambda, mu'}.
int schur_scalar_inverse(const Partition& lambda, const Partition& mu);

/// Scalar product of two tensors, slotwise.
Rat schur_scalar_tensor(const TensorExp& a, const TensorExp& b);

/// Kostka number K_{mu,lambda} = (s_mu | h_lambda), computed through
/// iterated one-row products.
long long kostka(const Partition& mu, const Partition& lambda);

/// Square transition-matrix block at weight n: row lambda holds the
/// expansion of from_lambda in the `to` basis. Rows and columns are indexed
/// by partitions_of(n) in canonical order.
struct TransitionMatrix {
    Basis from;
    Basis to;
    std::vector<Partition> index;
    std::vector<std::vector<Rat>> entries;
};
TransitionMatrix transition_matrix(Basis from, Basis to, int n);

enum class MatrixCountKind { ZeroOne, NonNegative };

/// Brute-force count of matrices with row sums lambda and column sums mu,
/// entries in {0,1} or in the non-negative integers. Zero when the weights
/// differ.
long long matrix_count_check(MatrixCountKind kind, const Partition& lambda,
                             const Partition& mu);

}  // namespace schurkit
