#include "brmt/permutations.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace brmt {

PermutationSpec::PermutationSpec(int N, std::function<GridPoint(int, int)> map, std::string name)
    : N_(N), name_(std::move(name)) {
    if (N < 1) throw std::invalid_argument("PermutationSpec: N must be positive");
    if (N <= kDenseLimit) {
        dense_.assign(std::size_t(N) * N, -1);
        std::vector<char> hit(std::size_t(N) * N, 0);
        for (int i = 1; i <= N; ++i) {
            for (int j = 1; j <= N; ++j) {
                const auto [u, v] = map(i, j);
                if (u < 1 || u > N || v < 1 || v > N)
                    throw std::invalid_argument("PermutationSpec: image outside [N]^2");
                const auto t = encode(u, v);
                if (hit[std::size_t(t)])
                    throw std::invalid_argument("PermutationSpec: map is not injective");
                hit[std::size_t(t)] = 1;
                dense_[std::size_t(encode(i, j))] = t;
            }
        }
    } else {
        // Closure mode: verify bijectivity on a random sample only.
        map_ = std::move(map);
        std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
        std::uniform_int_distribution<int> pick(1, N);
        for (int t = 0; t < 4096; ++t) {
            const int i = pick(rng), j = pick(rng);
            const auto [u, v] = map_(i, j);
            if (u < 1 || u > N || v < 1 || v > N)
                throw std::invalid_argument("PermutationSpec: sampled image outside [N]^2");
        }
    }
}

GridPoint PermutationSpec::apply(int i, int j) const {
    if (i < 1 || i > N_ || j < 1 || j > N_)
        throw std::invalid_argument("PermutationSpec::apply: point outside [N]^2");
    if (!dense_.empty()) {
        const auto t = dense_[std::size_t(encode(i, j))];
        return {int(t / N_) + 1, int(t % N_) + 1};
    }
    return map_(i, j);
}

PermutationSpec PermutationSpec::identity(int N) {
    return PermutationSpec(
        N, [](int i, int j) { return GridPoint{i, j}; }, "identity");
}

PermutationSpec PermutationSpec::transpose(int N) {
    return PermutationSpec(
        N, [](int i, int j) { return GridPoint{j, i}; }, "transpose");
}

PermutationSpec PermutationSpec::partial_transpose(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("partial_transpose: m, n must be positive");
    // i = (I-1)n + a, j = (J-1)n + b; block (I,J) transposed: (a,b) -> (b,a).
    auto map = [n](int i, int j) {
        const int I = (i - 1) / n, a = (i - 1) % n;
        const int J = (j - 1) / n, b = (j - 1) % n;
        return GridPoint{I * n + b + 1, J * n + a + 1};
    };
    return PermutationSpec(m * n, map, "partial:" + std::to_string(m) + "," + std::to_string(n));
}

PermutationSpec PermutationSpec::from_pairs(int N, const std::vector<std::array<int, 4>>& rows,
                                            std::string name) {
    if (rows.size() != std::size_t(N) * N)
        throw std::invalid_argument("from_pairs: need exactly N^2 rows");
    std::vector<std::int64_t> tgt(std::size_t(N) * N, -1);
    for (const auto& r : rows) {
        const auto [i, j, u, v] = r;
        if (i < 1 || i > N || j < 1 || j > N || u < 1 || u > N || v < 1 || v > N)
            throw std::invalid_argument("from_pairs: entry outside [N]^2");
        auto& slot = tgt[std::size_t(i - 1) * N + (j - 1)];
        if (slot != -1) throw std::invalid_argument("from_pairs: duplicate source point");
        slot = std::int64_t(u - 1) * N + (v - 1);
    }
    auto map = [N, tgt = std::move(tgt)](int i, int j) {
        const auto t = tgt[std::size_t(i - 1) * N + (j - 1)];
        return GridPoint{int(t / N) + 1, int(t % N) + 1};
    };
    return PermutationSpec(N, map, std::move(name));
}

PermutationSpec PermutationSpec::star() const {
    const PermutationSpec self = *this;  // capture a copy so the closure owns storage
    return PermutationSpec(
        N_, [self](int i, int j) { return self.apply(j, i); },
        name_.empty() ? "star" : name_ + "*");
}

bool PermutationSpec::is_identity_map() const {
    for (int i = 1; i <= N_; ++i)
        for (int j = 1; j <= N_; ++j)
            if (apply(i, j) != GridPoint{i, j}) return false;
    return true;
}

BigInt theta_condition_count(const PermutationSpec& alpha) {
    // For fixed (i,j) with alpha(i,j) = (u,v): the form (j,k) matches iff u = j
    // (then k = v), the form (k,i) iff v = i (then k = u); both coincide iff
    // additionally u = v.
    const int N = alpha.N();
    BigInt total = 0;
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            const auto [u, v] = alpha.apply(i, j);
            int c = 0;
            if (u == j) ++c;
            if (v == i) ++c;
            if (u == j && v == i && u == v) --c;
            total += c;
        }
    }
    return total;
}

BigInt theta_condition_count_brute(const PermutationSpec& alpha) {
    const int N = alpha.N();
    BigInt total = 0;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            const auto uv = alpha.apply(i, j);
            for (int k = 1; k <= N; ++k)
                if (uv == GridPoint{j, k} || uv == GridPoint{k, i}) ++total;
        }
    return total;
}

std::vector<GridPoint> chain_fixed_pairs(const PermutationSpec& alpha) {
    const int N = alpha.N();
    std::vector<GridPoint> out;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            const auto [u, v] = alpha.apply(i, j);
            if (u == i || v == j) out.emplace_back(i, j);
        }
    return out;
}

double theta_ratio(const BigInt& count, int N, double theta) {
    return count.convert_to<double>() / std::pow(double(N), theta);
}

std::vector<GridPoint> delta_set(const PartialTransposeSpec& spec) {
    const int N = spec.N();
    std::vector<GridPoint> out;
    out.reserve(std::size_t(spec.n) * spec.m * spec.m);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if ((i - j) % spec.n == 0) out.emplace_back(i, j);
    return out;
}

Rational partial_transpose_cross_moment(const Rational& /*alpha_val*/, const Rational& beta_val,
                                        int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("partial_transpose_cross_moment: m, n must be positive");
    return beta_val / n;
}

}  // namespace brmt
