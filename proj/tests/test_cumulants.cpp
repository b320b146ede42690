#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brmt/boolean_model.hpp"
#include "brmt/cumulants.hpp"

#include <random>

using namespace brmt;

namespace {

Rational rr(std::mt19937_64& rng, int num_abs = 5, int den_max = 4) {
    return Rational(int(rng() % (2 * num_abs + 1)) - num_abs, 1 + int(rng() % den_max));
}

}  // namespace

TEST_CASE("word table semantics") {
    Alphabet ab;
    ab.add_adjoint_pair("x", "x*");
    MomentFunctional m(ab, 3);
    CHECK(m.value(Word{0}) == 0);
    CHECK_FALSE(m.is_specified(Word{0}));
    m.set_value(Word{0}, 0);
    CHECK(m.is_specified(Word{0}));  // asserted zero, not defaulted
    m.set_value(Word{0, 1}, Rational(1, 2));
    CHECK(m.value(Word{0, 1}) == Rational(1, 2));
    CHECK_THROWS_AS(m.value(Word{0, 0, 1, 1}), std::out_of_range);
    CHECK_THROWS_AS(m.set_value(Word{7}, 1), std::invalid_argument);
    CHECK(m.alphabet().adjoint_of(0) == 1);
    CHECK(m.alphabet().adjoint_word(Word{0, 0, 1}) == Word{0, 1, 1});
}

TEST_CASE("moment from cumulants, small orders") {
    std::mt19937_64 rng(7);
    Alphabet ab;
    ab.add_symbol("a1");
    ab.add_symbol("a2");

    CumulantFunctional c(ab, 2);
    const Rational b1a = rr(rng), b1b = rr(rng), b2 = rr(rng);
    c.set_value(Word{0}, b1a);
    c.set_value(Word{1}, b1b);
    c.set_value(Word{0, 1}, b2);
    // n=1: phi(a) = b_1(a); n=2: phi(a1 a2) = b_2 + b_1 b_1
    CHECK(moments_from_cumulants(c, Word{0}) == b1a);
    CHECK(moments_from_cumulants(c, Word{0, 1}) == b2 + b1a * b1b);
    CHECK_THROWS_AS(moments_from_cumulants(c, Word{0, 1, 0}), std::out_of_range);
}

TEST_CASE("Bernoulli moments") {
    const Rational alpha(3, 2);
    const auto c = bernoulli_cumulants(alpha, 10);
    CHECK(moments_from_cumulants(c, Word(4, 0)) == alpha * alpha);
    for (int n = 1; n <= 10; ++n) {
        const Rational mom = moments_from_cumulants(c, Word(std::size_t(n), 0));
        if (n % 2) {
            CHECK(mom == 0);
        } else {
            Rational expect = 1;
            for (int k = 0; k < n / 2; ++k) expect *= alpha;
            CHECK(mom == expect);
        }
    }
}

TEST_CASE("cumulants from moments") {
    std::mt19937_64 rng(11);
    Alphabet ab;
    ab.add_symbol("a1");
    ab.add_symbol("a2");
    MomentFunctional m(ab, 2);
    for (const Word& w : {Word{0}, Word{1}, Word{0, 0}, Word{0, 1}, Word{1, 0}, Word{1, 1}})
        m.set_value(w, rr(rng));
    // b_2(a1,a2) = phi(a1 a2) - phi(a1) phi(a2)
    CHECK(cumulants_from_moments(m, Word{0, 1}) ==
          m.value(Word{0, 1}) - m.value(Word{0}) * m.value(Word{1}));
}

TEST_CASE("round trip on random data") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + int(rng() % 8);
        Alphabet ab;
        const int k = 1 + int(rng() % 2);
        for (int s = 0; s < k; ++s) ab.add_symbol("a" + std::to_string(s));
        Word word(static_cast<std::size_t>(n));
        for (auto& s : word) s = int(rng() % std::uint64_t(k));

        CumulantFunctional c(ab, n);
        for (int lo = 0; lo < n; ++lo)
            for (int hi = lo + 1; hi <= n; ++hi)
                c.set_value(Word(word.begin() + lo, word.begin() + hi), rr(rng));
        MomentFunctional m(ab, n);
        for (int lo = 0; lo < n; ++lo)
            for (int hi = lo + 1; hi <= n; ++hi) {
                const Word sub(word.begin() + lo, word.begin() + hi);
                m.set_value(sub, moments_from_cumulants(c, sub));
            }
        CHECK(cumulants_from_moments(m, word) == c.value(word));
    }
}

TEST_CASE("multilinearity under formal combinations") {
    // z acts as 2x + 3y: every moment containing z expands linearly, and the
    // cumulants must satisfy the same expansion.
    std::mt19937_64 rng(17);
    Alphabet ab;
    ab.add_symbol("x");
    ab.add_symbol("y");
    ab.add_symbol("z");
    const int order = 4;
    MomentFunctional m(ab, order);

    // random base values on words over {x, y}
    std::function<void(Word&)> fill = [&](Word& w) {
        if (!w.empty() && std::all_of(w.begin(), w.end(), [](int s) { return s < 2; }))
            m.set_value(w, rr(rng));
        if (int(w.size()) == order) return;
        for (int s = 0; s < 2; ++s) {
            w.push_back(s);
            fill(w);
            w.pop_back();
        }
    };
    Word tmp;
    fill(tmp);

    // extend to words containing z by expansion
    std::function<Rational(const Word&)> expanded = [&](const Word& w) -> Rational {
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k] == 2) {
                Word wx = w, wy = w;
                wx[k] = 0;
                wy[k] = 1;
                return 2 * expanded(wx) + 3 * expanded(wy);
            }
        return m.value(w);
    };
    std::function<void(Word&)> fill_z = [&](Word& w) {
        if (!w.empty() && std::any_of(w.begin(), w.end(), [](int s) { return s == 2; }))
            m.set_value(w, expanded(w));
        if (int(w.size()) == order) return;
        for (int s = 0; s < 3; ++s) {
            w.push_back(s);
            fill_z(w);
            w.pop_back();
        }
    };
    fill_z(tmp);

    // b(... z ...) = 2 b(... x ...) + 3 b(... y ...)
    std::function<void(Word&)> check = [&](Word& w) {
        for (std::size_t k = 0; !w.empty() && k < w.size(); ++k)
            if (w[k] == 2) {
                Word wx = w, wy = w;
                wx[k] = 0;
                wy[k] = 1;
                CHECK(cumulants_from_moments(m, w) ==
                      2 * cumulants_from_moments(m, wx) + 3 * cumulants_from_moments(m, wy));
                break;
            }
        if (int(w.size()) == order) return;
        for (int s = 0; s < 3; ++s) {
            w.push_back(s);
            check(w);
            w.pop_back();
        }
    };
    check(tmp);
}

TEST_CASE("independence check on a run-factorized pair") {
    std::mt19937_64 rng(19);
    // two algebras with random entry laws; joint moments forced by run splits
    Alphabet ab1;
    ab1.add_adjoint_pair("a", "a*");
    Alphabet ab2;
    ab2.add_adjoint_pair("b", "b*");
    const int order = 5;
    MomentFunctional ma(ab1, order), mb(ab2, order);
    std::function<void(Word&, MomentFunctional&)> fill = [&](Word& w, MomentFunctional& m) {
        if (!w.empty()) m.set_value(w, rr(rng, 3, 3));
        if (int(w.size()) == order) return;
        for (int s = 0; s < 2; ++s) {
            w.push_back(s);
            fill(w, m);
            w.pop_back();
        }
    };
    Word tmp;
    fill(tmp, ma);
    tmp.clear();
    fill(tmp, mb);

    const std::map<int, const MomentFunctional*> models{{0, &ma}, {1, &mb}};
    // joint functional over {a, a*, b, b*}
    Alphabet joint;
    joint.add_adjoint_pair("a", "a*", 0);
    joint.add_adjoint_pair("b", "b*", 1);
    MomentFunctional jm(joint, order);
    std::function<void(Word&)> fill_joint = [&](Word& w) {
        if (!w.empty()) {
            TaggedWord tw;
            for (int s : w) tw.push_back({s < 2 ? 0 : 1, s % 2});
            jm.set_value(w, boolean_product_moment(models, tw));
        }
        if (int(w.size()) == order) return;
        for (int s = 0; s < 4; ++s) {
            w.push_back(s);
            fill_joint(w);
            w.pop_back();
        }
    };
    tmp.clear();
    fill_joint(tmp);

    const auto report = check_boolean_independence(jm, {0, 0, 1, 1}, order);
    CHECK(report.independent());

    // single group: vacuously independent
    const auto vacuous = check_boolean_independence(jm, {0, 0, 0, 0}, order);
    CHECK(vacuous.nonvanishing_mixed_cumulants.empty());
}

TEST_CASE("independence check flags a classical-style functional") {
    Alphabet ab;
    ab.add_symbol("x", 0);
    ab.add_symbol("y", 1);
    MomentFunctional m(ab, 4);
    m.set_value(Word{0, 0}, 1);
    m.set_value(Word{1, 1}, 1);
    m.set_value(Word{0, 1, 0, 1}, 1);  // phi(xyxy) = phi(x^2) phi(y^2), not boolean
    const auto report = check_boolean_independence(m, {0, 1}, 4);
    CHECK_FALSE(report.independent());
    CHECK_FALSE(report.nonvanishing_mixed_cumulants.empty());
    CHECK_FALSE(report.product_formula_failures.empty());
}

TEST_CASE("B-diagonal law basics") {
    std::mt19937_64 rng(23);
    std::vector<Rational> alpha, beta;
    for (int k = 0; k < 4; ++k) {
        alpha.push_back(rr(rng));
        beta.push_back(rr(rng));
    }
    const BDiagonalLaw law(alpha, beta);
    CHECK(law.alpha(2) == alpha[1]);
    CHECK(law.alpha(9) == 0);  // beyond the stored prefix
    CHECK(law.cumulant(SignPattern::parse("xx*")) == alpha[0]);
    CHECK(law.cumulant(SignPattern::parse("x*x")) == beta[0]);
    CHECK(law.cumulant(SignPattern::parse("xx")) == 0);
    CHECK(law.cumulant(SignPattern::parse("x")) == 0);
    CHECK(law.cumulant(SignPattern::parse("xx*x")) == 0);

    CHECK(bdiag_word_moment(law, SignPattern::parse("xx*")) == alpha[0]);
    CHECK(bdiag_word_moment(law, SignPattern::parse("x*x")) == beta[0]);
    CHECK(bdiag_word_moment(law, SignPattern::parse("xx")) == 0);
    CHECK(bdiag_word_moment(law, SignPattern::parse("xx*xx*")) ==
          alpha[1] + alpha[0] * alpha[0]);
}

TEST_CASE("word moment equals the induced-cumulant moment") {
    std::mt19937_64 rng(29);
    std::vector<Rational> alpha, beta;
    for (int k = 0; k < 4; ++k) {
        alpha.push_back(rr(rng));
        beta.push_back(rr(rng));
    }
    const BDiagonalLaw law(alpha, beta);
    const CumulantFunctional induced = law.induced_cumulants(8);
    for (int n = 1; n <= 8; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            std::vector<Sign> signs(static_cast<std::size_t>(n));
            Word w(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) {
                const bool star = mask >> k & 1;
                signs[std::size_t(k)] = star ? Sign::star : Sign::one;
                w[std::size_t(k)] = star ? 1 : 0;
            }
            CHECK(bdiag_word_moment(law, SignPattern(signs)) ==
                  moments_from_cumulants(induced, w));
        }
    }
}

TEST_CASE("pair product factorization and independence") {
    std::mt19937_64 rng(31);
    std::vector<Rational> alpha, beta;
    for (int k = 0; k < 5; ++k) {
        alpha.push_back(rr(rng));
        beta.push_back(rr(rng));
    }
    const BDiagonalLaw law(alpha, beta);

    // p=1, tail=(1): both sides equal alpha_1 beta_1
    CHECK(verify_pair_product_factorization(law, 1, SignPattern::parse("x")));
    CHECK(bdiag_word_moment(law, SignPattern::parse("xx*x*x")) == alpha[0] * beta[0]);

    // all-zero law: trivially factorizes
    const BDiagonalLaw zero({}, {});
    CHECK(verify_pair_product_factorization(zero, 2, SignPattern::parse("xx*")));

    // exhaustive small sweep over p + m <= 5
    for (int p = 1; p <= 3; ++p)
        for (int m = 1; m + p <= 5; ++m)
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
                std::vector<Sign> tail(static_cast<std::size_t>(m));
                for (int k = 0; k < m; ++k)
                    tail[std::size_t(k)] = (mask >> k & 1) ? Sign::star : Sign::one;
                CHECK(verify_pair_product_factorization(law, p, SignPattern(tail), 4));
            }
}
