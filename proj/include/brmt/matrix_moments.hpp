#pragma once

#include "brmt/boolean_model.hpp"
#include "brmt/cumulants.hpp"
#include "brmt/partitions.hpp"
#include "brmt/permutations.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace brmt {

// Default cap on brute-force tuple enumeration; override per call or via the
// CLI's BOOLEAN_RMT_BUDGET.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class CountMethod { brute, blockwise, closed_form };

struct CountResult {
    IntervalPartition sigma;
    SignPattern xi;
    int N = 1;
    BigInt count;
    CountMethod method = CountMethod::brute;
    // N^2 (N-1)^{r-1}, attached exactly when sigma is xi-alternating
    std::optional<BigInt> closed_form;
};

// #{i in [N]^n : iota(xi, i) = sigma} by exhaustive enumeration.
CountResult count_tuples_brute(const IntervalPartition& sigma, const SignPattern& xi, int N,
                               std::uint64_t budget = kDefaultBudget);
// The iota(alpha, xi, ·) variant.
CountResult count_tuples_brute_permuted(const IntervalPartition& sigma,
                                        const std::vector<const PermutationSpec*>& alphas,
                                        const SignPattern& xi, int N,
                                        std::uint64_t budget = kDefaultBudget);

// Exact count for every sigma at once (one pass over [N]^n).
std::map<IntervalPartition, BigInt> count_histogram_brute(const SignPattern& xi, int N,
                                                          std::uint64_t budget = kDefaultBudget);
std::map<IntervalPartition, BigInt> count_histogram_brute_permuted(
    const std::vector<const PermutationSpec*>& alphas, const SignPattern& xi, int N,
    std::uint64_t budget = kDefaultBudget);

// Exact count in polynomial time: propagates the within-block index
// determinations and enforces the boundary inequalities by
// inclusion-exclusion over the block boundaries.
CountResult count_tuples_blockwise(const IntervalPartition& sigma, const SignPattern& xi, int N);

// X(k_1)^{xi_1} ... X(k_n)^{xi_n}, entries per label, with optional
// per-position permutation decorations (nullptr or missing = identity).
struct MixedWordSpec {
    LabelTuple labels;
    SignPattern xi;
    std::map<int, EntryModel> models;
    std::vector<const PermutationSpec*> perms;  // empty = undecorated

    MixedWordSpec(LabelTuple labels_, SignPattern xi_, std::map<int, EntryModel> models_,
                  std::vector<const PermutationSpec*> perms_ = {});
    bool decorated() const;
};

MixedWordSpec single_matrix_spec(SignPattern xi, EntryModel model,
                                 std::vector<const PermutationSpec*> perms = {});

enum class TraceMethod { brute, partition };

// Exact phi∘tr of the word at size N.  brute sums boolean_product_moment over
// all index tuples; partition sums count(sigma) * prod over blocks of
// sigma ∧ omega(k) of the entry moments.  The two agree exactly.
Rational trace_moment_exact(const MixedWordSpec& spec, int N, TraceMethod method,
                            std::uint64_t budget = kDefaultBudget);

// lim_N phi∘tr(X^{xi_1} ... X^{xi_n}) for the bdiag family: the alt(xi) sum.
Rational limit_bdiag(const SignPattern& xi, const BDiagonalLaw& law);

// Mixed-label limit: sum over sigma in alt(xi) refining omega(k) of the block
// products; equals the product over omega(k)-windows of limit_bdiag.
Rational limit_mixed(const LabelTuple& labels, const SignPattern& xi,
                     const std::map<int, BDiagonalLaw>& laws);

// Permutation-decorated limit: sum over alt(alpha, xi).
Rational limit_permuted(const LabelTuple& alpha_labels, const SignPattern& xi,
                        const BDiagonalLaw& law);
// Labels derived from the word's permutation decorations (pointer identity);
// requires a single matrix label backed by a bdiag_family model.
Rational limit_permuted(const MixedWordSpec& spec);

// Self-adjoint limit: 0 for odd n; for n = 2r the moment of the law
// integral_0^1 (alpha x + beta (1-x))^r dx, i.e. alpha^r when alpha = beta and
// (alpha^{r+1} - beta^{r+1}) / ((r+1)(alpha - beta)) otherwise.
Rational limit_selfadjoint(const Rational& alpha, const Rational& beta, int n);

// Exact phi∘tr(B_N^n) for the selfadjoint_family (entry identity is the
// unordered pair, b_{ji} = b*_{ij}; diagonal moments vanish).  partition uses
// the row-sum recursion over constrained index chains; brute enumerates.
Rational trace_moment_selfadjoint_exact(const EntryModel& model, int n, int N,
                                        TraceMethod method = TraceMethod::partition,
                                        std::uint64_t budget = kDefaultBudget);

}  // namespace brmt
