#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brmt/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace brmt;

namespace {

PermutationSpec random_permutation(std::mt19937_64& rng, int N) {
    std::vector<int> targets(std::size_t(N) * N);
    std::iota(targets.begin(), targets.end(), 0);
    std::shuffle(targets.begin(), targets.end(), rng);
    return PermutationSpec(N, [N, targets](int i, int j) {
        const int t = targets[std::size_t(i - 1) * N + (j - 1)];
        return GridPoint{t / N + 1, t % N + 1};
    });
}

}  // namespace

TEST_CASE("construction validates bijectivity") {
    CHECK_THROWS_AS(PermutationSpec(2, [](int, int) { return GridPoint{1, 1}; }),
                    std::invalid_argument);
    CHECK_THROWS_AS(PermutationSpec(2, [](int i, int j) { return GridPoint{i + 5, j}; }),
                    std::invalid_argument);
    CHECK_THROWS_AS(PermutationSpec(0, [](int i, int j) { return GridPoint{i, j}; }),
                    std::invalid_argument);

    // from_pairs: duplicate target
    std::vector<std::array<int, 4>> rows{{1, 1, 1, 1}, {1, 2, 1, 1}, {2, 1, 2, 1}, {2, 2, 2, 2}};
    CHECK_THROWS_AS(PermutationSpec::from_pairs(2, rows), std::invalid_argument);
    rows[1] = {1, 2, 1, 2};
    const auto ok = PermutationSpec::from_pairs(2, rows, "custom");
    CHECK(ok.apply(2, 1) == GridPoint{2, 1});
    CHECK(ok.is_identity_map());
}

TEST_CASE("identity, transpose, partial transpose") {
    const auto e = PermutationSpec::identity(3);
    CHECK(e.is_identity_map());
    const auto t = PermutationSpec::transpose(3);
    CHECK(t.apply(1, 2) == GridPoint{2, 1});
    CHECK_FALSE(t.is_identity_map());

    // m=2, n=2: entry (i,j) inside block (I,J) moves to the transposed slot
    const auto pt = PermutationSpec::partial_transpose(2, 2);
    CHECK(pt.N() == 4);
    CHECK(pt.apply(1, 1) == GridPoint{1, 1});
    CHECK(pt.apply(1, 2) == GridPoint{2, 1});  // inner (1,2) -> (2,1), same blocks
    CHECK(pt.apply(3, 1) == GridPoint{3, 1});  // inner (1,1) fixed
    CHECK(pt.apply(3, 2) == GridPoint{4, 1});
    CHECK(pt.apply(1, 3) == GridPoint{1, 3});
}

TEST_CASE("star is an involution") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const int N = 2 + int(rng() % 4);
        const auto a = random_permutation(rng, N);
        const auto astar = a.star();
        const auto back = astar.star();
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                CHECK(astar.apply(i, j) == a.apply(j, i));
                CHECK(back.apply(i, j) == a.apply(i, j));
            }
    }
    // transpose is its own kind of fixed point: t*(i,j) = t(j,i) = (i,j)
    const auto t = PermutationSpec::transpose(3);
    CHECK(t.star().is_identity_map());
}

TEST_CASE("chain-condition triple count") {
    std::mt19937_64 rng(11);
    for (int N = 2; N <= 6; ++N) {
        const auto e = PermutationSpec::identity(N);
        const auto t = PermutationSpec::transpose(N);
        CHECK(theta_condition_count(e) == theta_condition_count_brute(e));
        CHECK(theta_condition_count(t) == theta_condition_count_brute(t));
        // brute-force confirmed closed forms
        CHECK(theta_condition_count(e) == N);
        CHECK(theta_condition_count(t) == 2 * N * N - N);
        for (int trial = 0; trial < 3; ++trial) {
            const auto r = random_permutation(rng, N);
            CHECK(theta_condition_count(r) == theta_condition_count_brute(r));
        }
    }
    // the transpose fails count/N^2 -> 0: the ratio tends to 2
    const auto t20 = PermutationSpec::transpose(20);
    CHECK(theta_ratio(theta_condition_count(t20), 20, 2.0) == doctest::Approx(2.0 - 1.0 / 20));
}

TEST_CASE("delta set of the partial transpose") {
    CHECK(delta_set({1, 1}) == std::vector<GridPoint>{{1, 1}});
    CHECK(delta_set({1, 4}).size() == 4);  // m=1: the plain diagonal
    for (const auto& d : delta_set({1, 4})) CHECK(d.first == d.second);
    CHECK(delta_set({2, 2}).size() == 8);  // n m^2

    // the chain-compatible pairs of the partial transpose are exactly Delta_m
    for (const auto& [m, n] :
         {std::pair<int, int>{1, 2}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 4}, {4, 3}, {6, 2}}) {
        auto fixed = chain_fixed_pairs(PermutationSpec::partial_transpose(m, n));
        auto delta = delta_set({m, n});
        std::sort(fixed.begin(), fixed.end());
        std::sort(delta.begin(), delta.end());
        CHECK(fixed == delta);
        CHECK(delta.size() == std::size_t(n) * m * m);
        // the pair-count ratio is exactly 1/n
        CHECK(Rational(long(delta.size()), long(m * n) * (m * n)) == Rational(1, n));
    }
}

TEST_CASE("partial transpose cross moment") {
    CHECK(partial_transpose_cross_moment(1, 2, 3, 4) == Rational(1, 2));
    CHECK(partial_transpose_cross_moment(5, 2, 2, 1) == 2);  // n = 1: no decay
    CHECK(partial_transpose_cross_moment(3, 0, 2, 5) == 0);
    CHECK_THROWS_AS(partial_transpose_cross_moment(1, 1, 0, 2), std::invalid_argument);
}
