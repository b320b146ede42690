#pragma once

#include "brmt/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace brmt {

using GridPoint = std::pair<int, int>;  // (i, j) with 1-based components in [N]

// A bijection on [N] x [N] used to relabel matrix entries.  Stored densely for
// N <= kDenseLimit; above that the defining closure is kept and bijectivity is
// only sampled.
class PermutationSpec {
  public:
    static constexpr int kDenseLimit = 1 << 12;

    PermutationSpec(int N, std::function<GridPoint(int, int)> map, std::string name = "");

    static PermutationSpec identity(int N);
    static PermutationSpec transpose(int N);
    // Partial m-transpose on an (m*n) x (m*n) grid: each n x n block is
    // transposed in place.
    static PermutationSpec partial_transpose(int m, int n);
    // Rows (i, j, i', j') meaning alpha(i,j) = (i',j'); must define a bijection.
    static PermutationSpec from_pairs(int N, const std::vector<std::array<int, 4>>& rows,
                                      std::string name = "");

    int N() const { return N_; }
    const std::string& name() const { return name_; }

    GridPoint apply(int i, int j) const;
    // alpha*(i,j) = alpha(j,i)
    GridPoint apply_star(int i, int j) const { return apply(j, i); }
    PermutationSpec star() const;

    bool is_identity_map() const;

  private:
    int N_;
    std::string name_;
    std::vector<std::int64_t> dense_;  // encoded targets, empty when using map_
    std::function<GridPoint(int, int)> map_;

    std::int64_t encode(int i, int j) const { return std::int64_t(i - 1) * N_ + (j - 1); }
};

struct PartialTransposeSpec {
    int m = 1;
    int n = 1;
    int N() const { return m * n; }
};

// #{(i,j,k) in [N]^3 : alpha(i,j) in {(j,k), (k,i)}}, computed exactly in O(N^2).
BigInt theta_condition_count(const PermutationSpec& alpha);
// Same count by direct enumeration of [N]^3; test oracle for the fast version.
BigInt theta_condition_count_brute(const PermutationSpec& alpha);

// {(i,j) : alpha(i,j) in {(i,k), (k,j)} for some k}.  For the partial
// m-transpose this set is exactly delta_set(m, n).
std::vector<GridPoint> chain_fixed_pairs(const PermutationSpec& alpha);

// count / N^theta, for condition sweeps.
double theta_ratio(const BigInt& count, int N, double theta);

// Delta_m = {(i,j) in [mn]^2 : i = j (mod n)}; cardinality n*m^2.
std::vector<GridPoint> delta_set(const PartialTransposeSpec& spec);

// Exact value of phi∘tr(X* · X^{Gamma,m}) for the bdiag family with
// N·phi(x*x) = beta:  equals beta / n.
Rational partial_transpose_cross_moment(const Rational& alpha_val, const Rational& beta_val,
                                        int m, int n);

}  // namespace brmt
