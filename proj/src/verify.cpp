#include "brmt/verify.hpp"

#include "brmt/boolean_model.hpp"
#include "brmt/cumulants.hpp"
#include "brmt/matrix_moments.hpp"
#include "brmt/partitions.hpp"
#include "brmt/permutations.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace brmt::verify {

namespace {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, int num_abs = 5, int den_max = 4) {
    std::uniform_int_distribution<int> num(-num_abs, num_abs);
    std::uniform_int_distribution<int> den(1, den_max);
    return Rational(num(rng), den(rng));
}

IntervalPartition random_partition(Rng& rng, int n) {
    std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t(1) << (n - 1)) - 1);
    const std::uint64_t m = mask(rng);
    std::vector<int> eps;
    for (int k = 1; k < n; ++k)
        if (m >> (k - 1) & 1) eps.push_back(k);
    eps.push_back(n);
    return IntervalPartition(std::move(eps));
}

SignPattern random_pattern(Rng& rng, int n) {
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<Sign> signs(static_cast<std::size_t>(n));
    for (auto& s : signs) s = bit(rng) ? Sign::star : Sign::one;
    return SignPattern(std::move(signs));
}

BDiagonalLaw random_law(Rng& rng, int terms) {
    std::vector<Rational> a, b;
    for (int m = 0; m < terms; ++m) {
        a.push_back(random_rational(rng));
        b.push_back(random_rational(rng));
    }
    return BDiagonalLaw(std::move(a), std::move(b));
}

CheckResult pass(std::string name, std::string detail) {
    return CheckResult{std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
    return CheckResult{std::move(name), false, std::move(detail)};
}

}  // namespace

CheckResult lattice_laws(int n_max, int cases, std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_int_distribution<int> pick_n(1, n_max);
    for (int c = 0; c < cases; ++c) {
        const int n = pick_n(rng);
        const auto s = random_partition(rng, n);
        const auto w = random_partition(rng, n);
        const auto t = random_partition(rng, n);
        const auto top = IntervalPartition::full(n);
        const auto bot = IntervalPartition::singletons(n);
        const bool ok =
            meet(s, w) == meet(w, s) && join(s, w) == join(w, s) &&
            meet(meet(s, w), t) == meet(s, meet(w, t)) &&
            join(join(s, w), t) == join(s, join(w, t)) && meet(s, s) == s && join(s, s) == s &&
            meet(s, join(s, w)) == s && join(s, meet(s, w)) == s && meet(s, top) == s &&
            join(s, bot) == s && meet(s, bot) == bot && join(s, top) == top &&
            // glb / lub against a random witness
            meet(s, w).leq(s) && meet(s, w).leq(w) && s.leq(join(s, w)) && w.leq(join(s, w)) &&
            (!(t.leq(s) && t.leq(w)) || t.leq(meet(s, w))) &&
            (!(s.leq(t) && w.leq(t)) || join(s, w).leq(t));
        if (!ok)
            return fail("lattice-laws", "failed on sigma=" + s.str() + " omega=" + w.str() +
                                            " tau=" + t.str());
    }
    return pass("lattice-laws", std::to_string(cases) + " randomized cases, n <= " +
                                    std::to_string(n_max));
}

CheckResult moment_cumulant_round_trip(int order_max, int cases, std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_int_distribution<int> pick_n(1, order_max);
    std::uniform_int_distribution<int> pick_ab(1, 3);
    for (int c = 0; c < cases; ++c) {
        const int n = pick_n(rng);
        const int ab_size = pick_ab(rng);
        Alphabet ab;
        for (int s = 0; s < ab_size; ++s) ab.add_symbol("a" + std::to_string(s));
        std::uniform_int_distribution<int> pick_sym(0, ab_size - 1);
        Word word(static_cast<std::size_t>(n));
        for (auto& s : word) s = pick_sym(rng);

        CumulantFunctional cum(ab, n);
        for (int lo = 0; lo < n; ++lo)
            for (int hi = lo + 1; hi <= n; ++hi)
                cum.set_value(Word(word.begin() + lo, word.begin() + hi), random_rational(rng));
        MomentFunctional mom(ab, n);
        for (int lo = 0; lo < n; ++lo)
            for (int hi = lo + 1; hi <= n; ++hi) {
                const Word sub(word.begin() + lo, word.begin() + hi);
                mom.set_value(sub, moments_from_cumulants(cum, sub));
            }
        for (int lo = 0; lo < n; ++lo)
            for (int hi = lo + 1; hi <= n; ++hi) {
                const Word sub(word.begin() + lo, word.begin() + hi);
                if (cumulants_from_moments(mom, sub) != cum.value(sub))
                    return fail("round-trip", "mismatch on a word of length " +
                                                      std::to_string(hi - lo));
            }
    }
    return pass("round-trip", std::to_string(cases) + " randomized cases, order <= " +
                                      std::to_string(order_max));
}

namespace {

// Shared sweep: for every n <= n_max, every xi, every N <= N_max, hand each
// (sigma, brute count) to the callback; returns the first failure message.
template <typename Fn>
std::string counting_sweep(int n_max, int N_max, const Fn& fn) {
    for (int n = 1; n <= n_max; ++n) {
        std::vector<SignPattern> patterns;
        {
            std::vector<Sign> signs(std::size_t(n), Sign::one);
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
                for (int k = 0; k < n; ++k)
                    signs[std::size_t(k)] = (mask >> k & 1) ? Sign::star : Sign::one;
                patterns.push_back(SignPattern(signs));
            }
        }
        for (const auto& xi : patterns) {
            for (int N = 2; N <= N_max; ++N) {
                const auto hist = count_histogram_brute(xi, N);
                std::string failure;
                for_each_partition(n, [&](const IntervalPartition& sigma) {
                    if (!failure.empty()) return;
                    const auto it = hist.find(sigma);
                    const BigInt brute = it == hist.end() ? BigInt(0) : it->second;
                    failure = fn(sigma, xi, N, brute);
                });
                if (!failure.empty()) return failure;
            }
        }
    }
    return {};
}

}  // namespace

CheckResult counting_oracle(int n_max, int N_max) {
    const std::string failure =
        counting_sweep(n_max, N_max,
                       [](const IntervalPartition& sigma, const SignPattern& xi, int N,
                          const BigInt& brute) -> std::string {
                           const auto bw = count_tuples_blockwise(sigma, xi, N);
                           if (bw.count != brute)
                               return "blockwise " + bw.count.str() + " != brute " + brute.str() +
                                      " at sigma=" + sigma.str() + " xi=" + xi.str() +
                                      " N=" + std::to_string(N);
                           if (!is_xi_alternating(sigma, xi) &&
                               brute > bigint_pow(N, sigma.block_count()))
                               return "bound N^r violated at sigma=" + sigma.str() +
                                      " xi=" + xi.str() + " N=" + std::to_string(N);
                           return {};
                       });
    if (!failure.empty()) return fail("counting-oracle", failure);
    return pass("counting-oracle", "blockwise == brute and <= N^r, n <= " +
                                       std::to_string(n_max) + ", N <= " + std::to_string(N_max));
}

CheckResult counting_closed_form(int n_max, int N_max) {
    long long alt_checked = 0, violations = 0;
    std::string first;
    counting_sweep(n_max, N_max,
                   [&](const IntervalPartition& sigma, const SignPattern& xi, int N,
                       const BigInt& brute) -> std::string {
                       if (is_xi_alternating(sigma, xi)) {
                           ++alt_checked;
                           const BigInt cf =
                               BigInt(N) * N * bigint_pow(N - 1, sigma.block_count() - 1);
                           if (brute != cf) {
                               ++violations;
                               if (first.empty())
                                   first = "sigma=" + sigma.str() + " xi=" + xi.str() +
                                           " N=" + std::to_string(N) + ": brute " + brute.str() +
                                           " != N^2(N-1)^(r-1) = " + cf.str();
                           }
                       } else if (brute > bigint_pow(N, sigma.block_count())) {
                           ++violations;
                           if (first.empty())
                               first = "bound N^r violated at sigma=" + sigma.str() +
                                       " xi=" + xi.str() + " N=" + std::to_string(N);
                       }
                       return {};  // keep sweeping; report in aggregate
                   });
    std::ostringstream detail;
    detail << alt_checked << " alternating (sigma, xi, N) cases";
    if (violations) detail << "; " << violations << " closed-form violations, first: " << first;
    if (violations) return fail("counting-closed-form", detail.str());
    return pass("counting-closed-form", detail.str());
}

namespace {

EntryModel random_bdiag_model(Rng& rng, int terms) {
    std::vector<Rational> a, b;
    for (int m = 0; m < terms; ++m) {
        a.push_back(random_rational(rng));
        b.push_back(random_rational(rng));
    }
    return EntryModel::bdiag_family(std::move(a), std::move(b));
}

}  // namespace

CheckResult oracle_equivalence(int len_max, int num_labels, int N_max, int cases,
                               std::uint64_t seed, bool with_permutations) {
    Rng rng(seed);
    std::uniform_int_distribution<int> pick_n(1, len_max);
    std::uniform_int_distribution<int> pick_N(1, N_max);
    std::uniform_int_distribution<int> pick_label(1, num_labels);
    for (int c = 0; c < cases; ++c) {
        const int n = pick_n(rng);
        const int N = pick_N(rng);
        const SignPattern xi = random_pattern(rng, n);
        std::vector<int> labels(static_cast<std::size_t>(n));
        for (auto& l : labels) l = pick_label(rng);
        std::map<int, EntryModel> models;
        for (int l = 1; l <= num_labels; ++l) models.emplace(l, random_bdiag_model(rng, 3));

        PermutationSpec tr = PermutationSpec::transpose(N);
        std::vector<const PermutationSpec*> perms;
        if (with_permutations) {
            std::uniform_int_distribution<int> pick_perm(0, 1);
            perms.resize(std::size_t(n), nullptr);
            for (auto& p : perms)
                if (pick_perm(rng)) p = &tr;
        }
        const MixedWordSpec spec(LabelTuple(labels), xi, models, perms);
        const Rational brute = trace_moment_exact(spec, N, TraceMethod::brute);
        const Rational part = trace_moment_exact(spec, N, TraceMethod::partition);
        if (brute != part)
            return fail(with_permutations ? "oracle-equivalence-permuted" : "oracle-equivalence",
                        "brute " + to_fraction_string(brute) + " != partition " +
                            to_fraction_string(part) + " at xi=" + xi.str() +
                            " N=" + std::to_string(N));
    }
    return pass(with_permutations ? "oracle-equivalence-permuted" : "oracle-equivalence",
                std::to_string(cases) + " randomized cases, length <= " +
                    std::to_string(len_max) + ", N <= " + std::to_string(N_max));
}

CheckResult pair_independence(int order, int law_terms, std::uint64_t seed) {
    Rng rng(seed);
    const BDiagonalLaw law = random_law(rng, law_terms);
    const MomentFunctional joint = bdiag_pair_moments(law, order);
    const auto report = check_boolean_independence(joint, {0, 1}, order);
    if (!report.independent()) {
        std::string w;
        if (!report.nonvanishing_mixed_cumulants.empty())
            for (int s : report.nonvanishing_mixed_cumulants.front().word)
                w += s == 0 ? "u" : "v";
        return fail("pair-independence",
                    "nonvanishing mixed cumulant / product failure, first word " + w);
    }
    return pass("pair-independence",
                "mixed cumulants of X*X, XX* vanish up to order " + std::to_string(order));
}

CheckResult product_law_patterns(int order, std::uint64_t seed) {
    Rng rng(seed);
    // random length <= 2 moments, phi(a) = phi(a*) = 0 forced on the a side
    const auto make_model = [&](bool zero_first) {
        Alphabet ab;
        ab.add_adjoint_pair("a", "a*");
        MomentFunctional m(ab, 2);
        for (const Word& w :
             {Word{0}, Word{1}, Word{0, 0}, Word{0, 1}, Word{1, 0}, Word{1, 1}})
            m.set_value(w, random_rational(rng));
        if (zero_first) {
            m.set_value(Word{0}, 0);
            m.set_value(Word{1}, 0);
        }
        return m;
    };
    const MomentFunctional a_model = make_model(true);
    const MomentFunctional b_model = make_model(false);
    const MomentFunctional y = product_of_boolean_letters_law(a_model, b_model, order);

    long long nonzero_expected = 0;
    std::string failure;
    Word w;
    std::function<void()> rec = [&]() {
        if (!w.empty() && failure.empty()) {
            const Rational b = cumulants_from_moments(y, w);
            bool star_one = w.size() % 2 == 0;
            for (std::size_t k = 0; star_one && k < w.size(); ++k)
                star_one = w[k] == (k % 2 == 0 ? 1 : 0);  // Y*, Y, Y*, Y, ...
            if (star_one && b != 0) ++nonzero_expected;
            if (!star_one && b != 0) {
                failure = "nonzero cumulant on a non-(*,1) pattern of length " +
                          std::to_string(w.size());
            }
        }
        if (int(w.size()) == order || !failure.empty()) return;
        for (int s = 0; s < 2; ++s) {
            w.push_back(s);
            rec();
            w.pop_back();
        }
    };
    rec();
    if (!failure.empty()) return fail("product-law", failure);
    return pass("product-law",
                "only (*,1)^k cumulants survive up to order " + std::to_string(order) + " (" +
                    std::to_string(nonzero_expected) + " nonzero alternating values)");
}

CheckResult mixed_factorization(int len_max, int num_labels, std::uint64_t seed) {
    Rng rng(seed);
    std::map<int, BDiagonalLaw> laws;
    for (int l = 1; l <= num_labels; ++l) laws.emplace(l, random_law(rng, 4));
    long long checked = 0;
    for (int n = 1; n <= len_max; ++n) {
        std::vector<int> labels(std::size_t(n), 1);
        std::vector<Sign> signs(std::size_t(n), Sign::one);
        const std::uint64_t label_lim = bigint_pow(num_labels, n).convert_to<std::uint64_t>();
        for (std::uint64_t lm = 0; lm < label_lim; ++lm) {
            std::uint64_t v = lm;
            for (int k = 0; k < n; ++k) {
                labels[std::size_t(k)] = int(v % std::uint64_t(num_labels)) + 1;
                v /= std::uint64_t(num_labels);
            }
            const LabelTuple kt(labels);
            const IntervalPartition omega = omega_of_labels(kt);
            for (std::uint64_t sm = 0; sm < (std::uint64_t(1) << n); ++sm) {
                for (int k = 0; k < n; ++k)
                    signs[std::size_t(k)] = (sm >> k & 1) ? Sign::star : Sign::one;
                const SignPattern xi(signs);
                const Rational lhs = limit_mixed(kt, xi, laws);
                Rational rhs = 1;
                for (int t = 0; t < omega.block_count() && rhs != 0; ++t) {
                    const auto [lo, hi] = omega.block(t);
                    rhs *= limit_bdiag(xi.window(std::size_t(lo - 1), std::size_t(hi - lo + 1)),
                                       laws.at(labels[std::size_t(lo - 1)]));
                }
                ++checked;
                if (lhs != rhs)
                    return fail("factorization",
                                "limit_mixed != window product at xi=" + xi.str());
            }
        }
    }
    return pass("factorization", std::to_string(checked) + " (labels, xi) cases, length <= " +
                                           std::to_string(len_max) + ", " +
                                           std::to_string(num_labels) + " labels");
}

CheckResult bdiag_convergence(std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_int_distribution<int> num(1, 5);
    const Rational alpha(num(rng), num(rng));
    const Rational beta(num(rng), num(rng));
    const SignPattern word = SignPattern::parse("xx*xx*");
    const BDiagonalLaw law({alpha}, {beta});
    const Rational limit = limit_bdiag(word, law);
    if (limit != alpha * alpha) return fail("convergence", "limit_bdiag != alpha_1^2");
    // with a nonzero alpha_2 the same pattern must give alpha_2 + alpha_1^2
    const Rational a2 = random_rational(rng) + 7;
    if (limit_bdiag(word, BDiagonalLaw({alpha, a2}, {beta})) != a2 + alpha * alpha)
        return fail("convergence", "limit_bdiag != alpha_2 + alpha_1^2");

    const auto spec =
        single_matrix_spec(word, EntryModel::bdiag_family({alpha}, {beta}));
    Rational prev_scaled = -1;
    for (int N : {8, 16, 32, 64}) {
        const Rational exact = trace_moment_exact(spec, N, TraceMethod::partition);
        if (exact != alpha * alpha * (N - 1) / N)
            return fail("convergence",
                        "exact value != alpha^2 (N-1)/N at N=" + std::to_string(N));
        const Rational scaled = (limit - exact) * N;  // = alpha_1^2 exactly
        if (prev_scaled >= 0 && scaled > prev_scaled)
            return fail("convergence", "N*error increased at N=" + std::to_string(N));
        prev_scaled = scaled;
    }
    return pass("convergence",
                "exact alpha^2 (N-1)/N and non-increasing N*error over N in {8,...,64}");
}

CheckResult bernoulli_selfadjoint() {
    for (int r = 1; r <= 5; ++r)
        if (limit_selfadjoint(1, 1, 2 * r) != 1)
            return fail("bernoulli-selfadjoint", "limit_selfadjoint(1,1," + std::to_string(2 * r) +
                                                     ") != 1");
    if (limit_selfadjoint(2, 1, 4) != Rational(7, 3))
        return fail("bernoulli-selfadjoint", "limit_selfadjoint(2,1,4) != 7/3");
    if (limit_selfadjoint(2, 1, 3) != 0)
        return fail("bernoulli-selfadjoint", "odd moment must vanish");

    // err(2N) <= (3/5) err(N) on each doubling pins the O(1/N) convergence
    for (const auto& [alpha, beta, n] :
         {std::tuple<int, int, int>{1, 1, 2}, {1, 1, 6}, {1, 1, 10}, {2, 1, 4}}) {
        const auto model = EntryModel::selfadjoint_family(alpha, beta);
        const Rational limit = limit_selfadjoint(alpha, beta, n);
        Rational prev_err = -1;
        for (int N : {10, 20, 40, 80, 160}) {
            const Rational err_raw =
                trace_moment_selfadjoint_exact(model, n, N, TraceMethod::partition) - limit;
            const Rational err = err_raw < 0 ? Rational(-err_raw) : err_raw;
            if (prev_err >= 0 && 5 * err > 3 * prev_err)
                return fail("bernoulli-selfadjoint",
                            "error ratio above 3/5 at N=" + std::to_string(N) + " for n=" +
                                std::to_string(n));
            prev_err = err;
        }
    }
    return pass("bernoulli-selfadjoint",
                "limits exact; error ratio <= 3/5 per doubling over N in {10,...,160}");
}

CheckResult partial_transpose_check(std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_int_distribution<int> num(1, 6);
    const Rational beta(num(rng), num(rng));
    const Rational alpha(num(rng), num(rng));
    for (const auto& [m, n] : {std::pair<int, int>{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
        const int N = m * n;
        const Rational closed = partial_transpose_cross_moment(alpha, beta, m, n);
        if (closed != beta / n)
            return fail("partial-transpose", "closed form != beta/n");
        const PermutationSpec pt = PermutationSpec::partial_transpose(m, n);
        const auto spec = single_matrix_spec(SignPattern::parse("x*x"),
                                             EntryModel::bdiag_family({alpha}, {beta}),
                                             {nullptr, &pt});
        for (TraceMethod method : {TraceMethod::brute, TraceMethod::partition}) {
            const Rational traced = trace_moment_exact(spec, N, method);
            if (traced != closed)
                return fail("partial-transpose",
                            "trace value " + to_fraction_string(traced) + " != beta/n = " +
                                to_fraction_string(closed) + " at m=" + std::to_string(m) +
                                " n=" + std::to_string(n));
        }
        // the chain-compatible pairs of the partial transpose are exactly Delta_m
        auto fixed = chain_fixed_pairs(pt);
        auto delta = delta_set(PartialTransposeSpec{m, n});
        std::sort(fixed.begin(), fixed.end());
        std::sort(delta.begin(), delta.end());
        if (fixed != delta || delta.size() != std::size_t(n) * m * m)
            return fail("partial-transpose", "Delta_m characterization failed");
    }
    return pass("partial-transpose",
                "beta/n matched by closed form and decorated trace on (m,n) in "
                "{(1,2),(2,2),(2,3),(3,2)}");
}

CheckResult partition_count(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        long long count = 0;
        for_each_partition(n, [&](const IntervalPartition&) { ++count; });
        if (count != (1LL << (n - 1)))
            return fail("partition-count", "|I(" + std::to_string(n) + ")| != 2^(n-1)");
    }
    return pass("partition-count", "|I(n)| = 2^(n-1) for n <= " + std::to_string(n_max));
}

std::vector<std::string> suite_names() {
    return {"lattice",   "round-trip",     "counting", "counting-closed-form",
            "oracle",    "pair-independence",  "product-law", "factorization",
            "convergence", "bernoulli", "partial-transpose", "structural", "all"};
}

std::vector<CheckResult> run_suite(const std::string& name, int n_max, int N_max, int order,
                                   int cases, std::uint64_t seed) {
    std::vector<CheckResult> out;
    const auto want = [&](const std::string& s) { return name == s || name == "all"; };
    if (want("lattice")) out.push_back(lattice_laws(n_max, cases, seed));
    if (want("round-trip")) out.push_back(moment_cumulant_round_trip(std::min(order, 8), cases, seed));
    if (want("counting")) out.push_back(counting_oracle(std::min(n_max, 7), std::min(N_max, 5)));
    if (want("counting-closed-form"))
        out.push_back(counting_closed_form(std::min(n_max, 7), std::min(N_max, 5)));
    if (want("oracle")) {
        out.push_back(oracle_equivalence(5, 2, std::min(N_max, 5), cases, seed));
        out.push_back(oracle_equivalence(4, 2, std::min(N_max, 5), cases / 2 + 1, seed + 1, true));
    }
    if (want("pair-independence")) out.push_back(pair_independence(std::min(order, 10), 5, seed));
    if (want("product-law")) out.push_back(product_law_patterns(std::min(order, 8), seed));
    if (want("factorization")) out.push_back(mixed_factorization(std::min(n_max, 8), 3, seed));
    if (want("convergence")) out.push_back(bdiag_convergence(seed));
    if (want("bernoulli")) out.push_back(bernoulli_selfadjoint());
    if (want("partial-transpose")) out.push_back(partial_transpose_check(seed));
    if (want("structural")) out.push_back(partition_count(std::clamp(n_max, 12, 20)));
    if (out.empty()) {
        std::string known;
        for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
        throw std::invalid_argument("unknown verify suite \"" + name + "\"; known suites: " +
                                    known);
    }
    return out;
}

}  // namespace brmt::verify
