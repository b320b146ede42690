#include "brmt/matrix_moments.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace brmt {

namespace {

void check_budget(int N, int n, std::uint64_t budget) {
    BigInt tuples = bigint_pow(N, n);
    if (tuples > budget) throw std::runtime_error("enumeration budget exceeded: N^n > budget");
}

// Odometer over [N]^n (1-based values).
template <typename Fn>
void for_each_tuple(int N, int n, const Fn& fn) {
    std::vector<int> idx(std::size_t(n), 1);
    while (true) {
        fn(idx);
        int k = n - 1;
        while (k >= 0 && idx[std::size_t(k)] == N) {
            idx[std::size_t(k)] = 1;
            --k;
        }
        if (k < 0) break;
        ++idx[std::size_t(k)];
    }
}

// Endpoint sequence of the run partition of `pairs` (no allocation of a full
// IntervalPartition in the hot loop).
std::vector<int> run_endpoints(const std::vector<GridPoint>& pairs) {
    std::vector<int> eps;
    const int n = int(pairs.size());
    for (int s = 0; s + 1 < n; ++s)
        if (pairs[std::size_t(s)] != pairs[std::size_t(s + 1)]) eps.push_back(s + 1);
    eps.push_back(n);
    return eps;
}

std::optional<BigInt> closed_form_if_alt(const IntervalPartition& sigma, const SignPattern& xi,
                                         int N) {
    if (!is_xi_alternating(sigma, xi)) return std::nullopt;
    return BigInt(N) * N * bigint_pow(N - 1, sigma.block_count() - 1);
}

std::map<IntervalPartition, BigInt> histogram_impl(const std::vector<const PermutationSpec*>* alphas,
                                                   const SignPattern& xi, int N,
                                                   std::uint64_t budget) {
    const int n = int(xi.size());
    check_budget(N, n, budget);
    std::map<std::vector<int>, BigInt> eps_counts;
    std::vector<GridPoint> pairs(static_cast<std::size_t>(n));
    for_each_tuple(N, n, [&](const std::vector<int>& idx) {
        for (int s = 0; s < n; ++s) {
            int a = idx[std::size_t(s)], b = idx[std::size_t((s + 1) % n)];
            if (xi[std::size_t(s)] == Sign::star) std::swap(a, b);
            pairs[std::size_t(s)] =
                (alphas && (*alphas)[std::size_t(s)]) ? (*alphas)[std::size_t(s)]->apply(a, b)
                                                      : GridPoint{a, b};
        }
        ++eps_counts[run_endpoints(pairs)];
    });
    std::map<IntervalPartition, BigInt> out;
    for (auto& [eps, c] : eps_counts) out.emplace(IntervalPartition(eps), std::move(c));
    return out;
}

}  // namespace

std::map<IntervalPartition, BigInt> count_histogram_brute(const SignPattern& xi, int N,
                                                          std::uint64_t budget) {
    return histogram_impl(nullptr, xi, N, budget);
}

std::map<IntervalPartition, BigInt> count_histogram_brute_permuted(
    const std::vector<const PermutationSpec*>& alphas, const SignPattern& xi, int N,
    std::uint64_t budget) {
    if (alphas.size() != xi.size())
        throw std::invalid_argument("count_histogram_brute_permuted: length mismatch");
    return histogram_impl(&alphas, xi, N, budget);
}

CountResult count_tuples_brute(const IntervalPartition& sigma, const SignPattern& xi, int N,
                               std::uint64_t budget) {
    if (std::size_t(sigma.n()) != xi.size())
        throw std::invalid_argument("count_tuples_brute: length mismatch");
    const auto hist = count_histogram_brute(xi, N, budget);
    const auto it = hist.find(sigma);
    return CountResult{sigma, xi, N, it == hist.end() ? BigInt(0) : it->second,
                       CountMethod::brute, closed_form_if_alt(sigma, xi, N)};
}

CountResult count_tuples_brute_permuted(const IntervalPartition& sigma,
                                        const std::vector<const PermutationSpec*>& alphas,
                                        const SignPattern& xi, int N, std::uint64_t budget) {
    if (std::size_t(sigma.n()) != xi.size())
        throw std::invalid_argument("count_tuples_brute_permuted: length mismatch");
    const auto hist = count_histogram_brute_permuted(alphas, xi, N, budget);
    const auto it = hist.find(sigma);
    return CountResult{sigma, xi, N, it == hist.end() ? BigInt(0) : it->second,
                       CountMethod::brute, closed_form_if_alt(sigma, xi, N)};
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(std::size_t(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[std::size_t(x)] != x) {
            parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
            x = parent[std::size_t(x)];
        }
        return x;
    }
    void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[std::size_t(x)] = y;
    }
    int classes() {
        int c = 0;
        for (int v = 0; v < int(parent.size()); ++v)
            if (find(v) == v) ++c;
        return c;
    }
};

}  // namespace

CountResult count_tuples_blockwise(const IntervalPartition& sigma, const SignPattern& xi, int N) {
    const int n = sigma.n();
    if (std::size_t(n) != xi.size())
        throw std::invalid_argument("count_tuples_blockwise: length mismatch");
    if (N < 1) throw std::invalid_argument("count_tuples_blockwise: N must be positive");

    // iota(xi, i) = sigma is a conjunction over adjacencies s in [n-1]:
    // equality E_s inside blocks, negation of E_s at block boundaries, where
    //   xi_s != xi_{s+1}:  E_s <=> i_s = i_{s+2}
    //   xi_s  = xi_{s+1}:  E_s <=> i_s = i_{s+1} and i_{s+1} = i_{s+2}
    // (index positions cyclic, i_{n+1} = i_1).  Equalities merge index
    // variables; each negated boundary is handled by inclusion-exclusion.
    if (n == 1)
        return CountResult{sigma, xi, N, BigInt(N), CountMethod::blockwise,
                           closed_form_if_alt(sigma, xi, N)};

    const auto var = [n](int pos) { return (pos - 1) % n; };  // 1-based position -> variable
    const auto atoms = [&](int s) {
        std::vector<std::pair<int, int>> a;
        if (xi[std::size_t(s - 1)] != xi[std::size_t(s)]) {
            a.emplace_back(var(s), var(s + 2));
        } else {
            a.emplace_back(var(s), var(s + 1));
            a.emplace_back(var(s + 1), var(s + 2));
        }
        return a;
    };

    UnionFind base(n);
    std::vector<std::vector<std::pair<int, int>>> boundaries;
    {
        std::vector<bool> is_boundary(std::size_t(n), false);
        for (std::size_t k = 0; k + 1 < sigma.endpoints().size(); ++k)
            is_boundary[std::size_t(sigma.endpoints()[k])] = true;
        for (int s = 1; s <= n - 1; ++s) {
            if (is_boundary[std::size_t(s)])
                boundaries.push_back(atoms(s));
            else
                for (const auto& [x, y] : atoms(s)) base.unite(x, y);
        }
    }

    BigInt total = 0;
    const std::size_t m = boundaries.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        UnionFind uf = base;
        int bits = 0;
        for (std::size_t b = 0; b < m; ++b)
            if (mask >> b & 1) {
                ++bits;
                for (const auto& [x, y] : boundaries[b]) uf.unite(x, y);
            }
        const BigInt term = bigint_pow(N, uf.classes());
        total += (bits % 2) ? -term : term;
    }
    return CountResult{sigma, xi, N, std::move(total), CountMethod::blockwise,
                       closed_form_if_alt(sigma, xi, N)};
}

MixedWordSpec::MixedWordSpec(LabelTuple labels_, SignPattern xi_,
                             std::map<int, EntryModel> models_,
                             std::vector<const PermutationSpec*> perms_)
    : labels(std::move(labels_)), xi(std::move(xi_)), models(std::move(models_)),
      perms(std::move(perms_)) {
    if (labels.size() != xi.size()) throw std::invalid_argument("MixedWordSpec: length mismatch");
    if (!perms.empty() && perms.size() != xi.size())
        throw std::invalid_argument("MixedWordSpec: permutation decoration length mismatch");
    for (std::size_t s = 0; s < labels.size(); ++s)
        if (!models.count(labels[s]))
            throw std::invalid_argument("MixedWordSpec: missing entry model for label " +
                                        std::to_string(labels[s]));
}

bool MixedWordSpec::decorated() const {
    return std::any_of(perms.begin(), perms.end(), [](auto* p) { return p != nullptr; });
}

MixedWordSpec single_matrix_spec(SignPattern xi, EntryModel model,
                                 std::vector<const PermutationSpec*> perms) {
    const std::vector<int> ones(xi.size(), 1);
    std::map<int, EntryModel> models;
    models.emplace(1, std::move(model));
    return MixedWordSpec(LabelTuple(ones), std::move(xi), std::move(models), std::move(perms));
}

namespace {

Rational trace_brute(const MixedWordSpec& spec, int N, std::uint64_t budget) {
    const int n = int(spec.xi.size());
    check_budget(N, n, budget);
    if (!spec.perms.empty())
        for (auto* p : spec.perms)
            if (p && p->N() != N)
                throw std::invalid_argument("trace_moment_exact: permutation size != N");

    Rational total = 0;
    std::vector<GridPoint> pairs(static_cast<std::size_t>(n));
    for_each_tuple(N, n, [&](const std::vector<int>& idx) {
        for (int s = 0; s < n; ++s) {
            int a = idx[std::size_t(s)], b = idx[std::size_t((s + 1) % n)];
            if (spec.xi[std::size_t(s)] == Sign::star) std::swap(a, b);
            auto* perm = spec.perms.empty() ? nullptr : spec.perms[std::size_t(s)];
            pairs[std::size_t(s)] = perm ? perm->apply(a, b) : GridPoint{a, b};
        }
        // maximal runs of equal (label, grid position)
        Rational term = 1;
        int i = 0;
        while (i < n && term != 0) {
            int j = i;
            while (j < n && spec.labels[std::size_t(j)] == spec.labels[std::size_t(i)] &&
                   pairs[std::size_t(j)] == pairs[std::size_t(i)])
                ++j;
            std::vector<Sign> run(spec.xi.signs().begin() + i, spec.xi.signs().begin() + j);
            term *= spec.models.at(spec.labels[std::size_t(i)])
                        .entry_word_moment(SignPattern(std::move(run)), N);
            i = j;
        }
        total += term;
    });
    return total / N;
}

Rational trace_partition(const MixedWordSpec& spec, int N, std::uint64_t budget) {
    const int n = int(spec.xi.size());
    const IntervalPartition omega = omega_of_labels(spec.labels);
    std::map<IntervalPartition, BigInt> hist;
    if (spec.decorated()) hist = count_histogram_brute_permuted(spec.perms, spec.xi, N, budget);

    Rational total = 0;
    for_each_partition(n, [&](const IntervalPartition& sigma) {
        BigInt count;
        if (spec.decorated()) {
            const auto it = hist.find(sigma);
            if (it == hist.end()) return;
            count = it->second;
        } else {
            count = count_tuples_blockwise(sigma, spec.xi, N).count;
        }
        if (count == 0) return;
        Rational prod = 1;
        const IntervalPartition tau = meet(sigma, omega);
        for (int t = 0; t < tau.block_count() && prod != 0; ++t) {
            const auto [lo, hi] = tau.block(t);
            prod *= spec.models.at(spec.labels[std::size_t(lo - 1)])
                        .entry_word_moment(spec.xi.window(std::size_t(lo - 1),
                                                          std::size_t(hi - lo + 1)),
                                           N);
        }
        total += Rational(count) * prod;
    });
    return total / N;
}

}  // namespace

Rational trace_moment_exact(const MixedWordSpec& spec, int N, TraceMethod method,
                            std::uint64_t budget) {
    if (N < 1) throw std::invalid_argument("trace_moment_exact: N must be positive");
    return method == TraceMethod::brute ? trace_brute(spec, N, budget)
                                        : trace_partition(spec, N, budget);
}

Rational limit_bdiag(const SignPattern& xi, const BDiagonalLaw& law) {
    return bdiag_word_moment(law, xi);
}

Rational limit_mixed(const LabelTuple& labels, const SignPattern& xi,
                     const std::map<int, BDiagonalLaw>& laws) {
    if (labels.size() != xi.size()) throw std::invalid_argument("limit_mixed: length mismatch");
    for (std::size_t s = 0; s < labels.size(); ++s)
        if (!laws.count(labels[s]))
            throw std::invalid_argument("limit_mixed: missing law for label " +
                                        std::to_string(labels[s]));
    // Non-vanishing limit terms come from sigma in alt(xi) refining omega(k):
    // those are exactly the sigma with sigma ∧ omega(k) in alt(xi) whose
    // count keeps pace with N^{#sigma+1}.
    const IntervalPartition omega = omega_of_labels(labels);
    Rational total = 0;
    for (const auto& sigma : enumerate_alt(xi)) {
        if (!sigma.leq(omega)) continue;
        Rational term = 1;
        for (int t = 0; t < sigma.block_count() && term != 0; ++t) {
            const auto [lo, hi] = sigma.block(t);
            const auto& law = laws.at(labels[std::size_t(lo - 1)]);
            const int pairs = (hi - lo + 1) / 2;
            term *= xi[std::size_t(lo - 1)] == Sign::one ? law.alpha(pairs) : law.beta(pairs);
        }
        total += term;
    }
    return total;
}

Rational limit_permuted(const LabelTuple& alpha_labels, const SignPattern& xi,
                        const BDiagonalLaw& law) {
    Rational total = 0;
    for (const auto& sigma : enumerate_alt_permuted(alpha_labels, xi)) {
        Rational term = 1;
        for (int t = 0; t < sigma.block_count() && term != 0; ++t) {
            const auto [lo, hi] = sigma.block(t);
            const int pairs = (hi - lo + 1) / 2;
            term *= xi[std::size_t(lo - 1)] == Sign::one ? law.alpha(pairs) : law.beta(pairs);
        }
        total += term;
    }
    return total;
}

Rational limit_permuted(const MixedWordSpec& spec) {
    const auto first = spec.labels[0];
    for (std::size_t s = 0; s < spec.labels.size(); ++s)
        if (spec.labels[s] != first)
            throw std::invalid_argument("limit_permuted: single matrix label required");
    const auto& model = spec.models.at(first);
    if (model.kind() != EntryKind::bdiag_family)
        throw std::invalid_argument("limit_permuted: bdiag_family model required");
    // positions sharing a permutation object share a label; identity = 0
    std::vector<int> labels(spec.xi.size(), 0);
    if (!spec.perms.empty()) {
        std::vector<const PermutationSpec*> seen;
        for (std::size_t s = 0; s < spec.perms.size(); ++s) {
            auto* p = spec.perms[s];
            if (!p) continue;
            auto it = std::find(seen.begin(), seen.end(), p);
            if (it == seen.end()) {
                seen.push_back(p);
                it = std::prev(seen.end());
            }
            labels[s] = int(it - seen.begin()) + 1;
        }
    }
    return limit_permuted(LabelTuple(labels), spec.xi,
                          BDiagonalLaw(model.a_sequence(), model.b_sequence()));
}

Rational limit_selfadjoint(const Rational& alpha, const Rational& beta, int n) {
    if (n < 1) throw std::invalid_argument("limit_selfadjoint: n must be positive");
    if (alpha < 0 || beta < 0)
        throw std::invalid_argument("limit_selfadjoint: alpha, beta must be >= 0");
    if (n % 2) return 0;
    const int r = n / 2;
    const auto pow_r = [](const Rational& x, int e) {
        Rational out = 1;
        for (int k = 0; k < e; ++k) out *= x;
        return out;
    };
    if (alpha == beta) return pow_r(alpha, r);
    return (pow_r(alpha, r + 1) - pow_r(beta, r + 1)) / ((r + 1) * (alpha - beta));
}

namespace {

Rational selfadjoint_brute(const Rational& alpha, const Rational& beta, int n, int N,
                           std::uint64_t budget) {
    check_budget(N, n, budget);
    Rational total = 0;
    for_each_tuple(N, n, [&](const std::vector<int>& idx) {
        // entry of letter s is the unordered pair {i_s, i_{s+1}}; diagonal
        // letters have all moments zero
        for (int s = 0; s < n; ++s)
            if (idx[std::size_t(s)] == idx[std::size_t((s + 1) % n)]) return;
        Rational term = 1;
        int i = 0;
        while (i < n && term != 0) {
            const int a = idx[std::size_t(i)], b = idx[std::size_t((i + 1) % n)];
            int j = i;
            while (j < n) {
                const int c = idx[std::size_t(j)], d = idx[std::size_t((j + 1) % n)];
                if (std::minmax(c, d) != std::minmax(a, b)) break;
                ++j;
            }
            // within a run indices bounce between the two values, so signs
            // alternate; only length-2 runs have nonzero moments
            if (j - i != 2) {
                term = 0;
            } else {
                term *= (a < b ? alpha : beta) / N;
            }
            i = j;
        }
        total += term;
    });
    return total / N;
}

// Row-sum recursion: for fixed i the surviving tuples are chains
// (j_1, ..., j_r) with j_s != i, j_s != j_{s-1}; each j contributes alpha/N
// when j > i and beta/N when j < i.
Rational selfadjoint_rowsum(const Rational& alpha, const Rational& beta, int n, int N) {
    if (n % 2) return 0;
    const int r = n / 2;
    Rational total = 0;
    for (int i = 1; i <= N; ++i) {
        const int above = N - i, below = i - 1;
        Rational fa = alpha / N, fb = beta / N;
        for (int s = 2; s <= r; ++s) {
            const Rational sum = above * fa + below * fb;
            const Rational na = (alpha / N) * (sum - fa);
            fb = (beta / N) * (sum - fb);
            fa = na;
        }
        total += above * fa + below * fb;
    }
    return total / N;
}

}  // namespace

Rational trace_moment_selfadjoint_exact(const EntryModel& model, int n, int N, TraceMethod method,
                                        std::uint64_t budget) {
    if (n < 1 || N < 1)
        throw std::invalid_argument("trace_moment_selfadjoint_exact: n, N must be positive");
    const auto [alpha, beta] = model.selfadjoint_params();
    if (method == TraceMethod::brute) return selfadjoint_brute(alpha, beta, n, N, budget);
    return selfadjoint_rowsum(alpha, beta, n, N);
}

}  // namespace brmt
