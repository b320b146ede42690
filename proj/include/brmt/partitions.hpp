#pragma once

#include "brmt/permutations.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace brmt {

enum class Sign : unsigned char { one, star };

inline Sign opposite(Sign s) { return s == Sign::one ? Sign::star : Sign::one; }

// A tuple over {1, *} marking adjoint positions in a word.
class SignPattern {
  public:
    explicit SignPattern(std::vector<Sign> signs);
    // "x" is sign 1, "*" stars the letter it follows: "xx*" = (1, *).
    static SignPattern parse(std::string_view text);

    std::size_t size() const { return signs_.size(); }
    Sign operator[](std::size_t k) const { return signs_[k]; }  // 0-based
    const std::vector<Sign>& signs() const { return signs_; }
    SignPattern window(std::size_t start, std::size_t len) const;  // xi|D, 0-based start
    std::string str() const;

    friend bool operator==(const SignPattern&, const SignPattern&) = default;

  private:
    std::vector<Sign> signs_;
};

// Concatenated sign patterns, convenience for building words like (XX*)^p X* ...
SignPattern concat(const SignPattern& a, const SignPattern& b);
SignPattern repeat(const SignPattern& a, int times);

// An element of I(n), stored as its block-endpoint sequence
// [l(1), ..., l(r)] with l(r) = n; block t is {l(t-1)+1, ..., l(t)}.
class IntervalPartition {
  public:
    explicit IntervalPartition(std::vector<int> endpoints);
    static IntervalPartition full(int n);        // 1_n
    static IntervalPartition singletons(int n);  // 0_n
    static IntervalPartition parse(std::string_view text);  // "[2,4]"

    int n() const { return n_; }
    int block_count() const { return int(endpoints_.size()); }
    const std::vector<int>& endpoints() const { return endpoints_; }
    // 1-based inclusive range of block t, t in [0, block_count)
    std::pair<int, int> block(int t) const;
    // refinement order: *this <= other iff every block of *this lies in a block
    // of other, i.e. endpoints(other) is a subset of endpoints(*this)
    bool leq(const IntervalPartition& other) const;
    std::string str() const;

    friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;
    friend std::strong_ordering operator<=>(const IntervalPartition& a,
                                            const IntervalPartition& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.endpoints_ <=> b.endpoints_;
    }

  private:
    int n_;
    std::vector<int> endpoints_;
};

// endpoints(meet) = union of endpoint sets; the largest tau below both.
IntervalPartition meet(const IntervalPartition& sigma, const IntervalPartition& omega);
// endpoints(join) = intersection of endpoint sets; the smallest tau above both.
IntervalPartition join(const IntervalPartition& sigma, const IntervalPartition& omega);
// sigma ⊕ pi: endpoints of sigma, then endpoints of pi shifted by sigma.n.
IntervalPartition juxtapose(const IntervalPartition& sigma, const IntervalPartition& pi);
// sigma|D for the contiguous window D = {d_start+1, ..., d_start+d_len}.
IntervalPartition restrict_window(const IntervalPartition& sigma, int d_start, int d_len);

// Enumerates I(n) in lexicographic order of the interior-endpoint bitmask;
// |I(n)| = 2^(n-1).
void for_each_partition(int n, const std::function<void(const IntervalPartition&)>& fn);
std::vector<IntervalPartition> enumerate_partitions(int n);

// Every block (d+1..d+p) must satisfy xi_{d+1} != xi_{d+2}, ...,
// xi_{d+p-1} != xi_{d+p} and the cyclic closure xi_{d+p} != xi_{d+1}.
// Forces every block to have even size.
bool is_xi_alternating(const IntervalPartition& sigma, const SignPattern& xi);
// alt(xi), enumerated by backtracking over admissible block endpoints.
std::vector<IntervalPartition> enumerate_alt(const SignPattern& xi);

// A tuple of matrix identifiers (k_1, ..., k_n).
class LabelTuple {
  public:
    explicit LabelTuple(std::vector<int> labels);
    std::size_t size() const { return labels_.size(); }
    int operator[](std::size_t k) const { return labels_[k]; }  // 0-based
    const std::vector<int>& labels() const { return labels_; }

    friend bool operator==(const LabelTuple&, const LabelTuple&) = default;

  private:
    std::vector<int> labels_;
};

// omega(k): the maximal element of I(n) whose blocks carry constant labels.
IntervalPartition omega_of_labels(const LabelTuple& k);

// (i_1, ..., i_n) with every i_k in [N]; cyclic convention i_{n+1} = i_1.
class IndexTuple {
  public:
    IndexTuple(std::vector<int> indices, int N);
    std::size_t size() const { return indices_.size(); }
    int operator[](std::size_t k) const { return indices_[k]; }  // 0-based
    int N() const { return N_; }
    // i_{k+1} with wraparound, 0-based k in [0, n]
    int next(std::size_t k) const { return indices_[(k + 1) % indices_.size()]; }

  private:
    std::vector<int> indices_;
    int N_;
};

// iota(xi, i): maximal runs where consecutive xi-adjusted pairs
// (i_s, i_{s+1})^{xi_s} coincide.  For n = 1 this is always [1].
IntervalPartition iota(const SignPattern& xi, const IndexTuple& i);

// iota(alpha, xi, i): same run construction with alpha_s^{xi_s} applied to the
// pairs, where alpha^*(i,j) = alpha(j,i).  nullptr entries act as the identity.
IntervalPartition iota_permuted(const std::vector<const PermutationSpec*>& alphas,
                                const SignPattern& xi, const IndexTuple& i);

// alt(alpha, xi) = alt(xi) restricted to partitions on whose blocks the
// permutation labels are constant.
std::vector<IntervalPartition> enumerate_alt_permuted(const LabelTuple& alpha_labels,
                                                      const SignPattern& xi);

}  // namespace brmt
