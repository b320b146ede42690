#include "brmt/cumulants.hpp"

#include <algorithm>
#include <stdexcept>

namespace brmt {

int Alphabet::add_symbol(std::string name, int tag) {
    const int id = size();
    symbols_.push_back(Symbol{std::move(name), tag, id});
    return id;
}

std::pair<int, int> Alphabet::add_adjoint_pair(std::string name, std::string star_name, int tag) {
    const int a = size();
    symbols_.push_back(Symbol{std::move(name), tag, a + 1});
    symbols_.push_back(Symbol{std::move(star_name), tag, a});
    return {a, a + 1};
}

void Alphabet::set_adjoint_pair(int a, int b) {
    symbols_.at(std::size_t(a)).adjoint = b;
    symbols_.at(std::size_t(b)).adjoint = a;
}

int Alphabet::find(std::string_view name) const {
    for (int id = 0; id < size(); ++id)
        if (symbols_[std::size_t(id)].name == name) return id;
    return -1;
}

Word Alphabet::adjoint_word(const Word& w) const {
    Word out(w.rbegin(), w.rend());
    for (int& s : out) s = adjoint_of(s);
    return out;
}

WordTable::WordTable(Alphabet alphabet, int max_order)
    : alphabet_(std::move(alphabet)), max_order_(max_order) {
    if (max_order_ < 1) throw std::invalid_argument("WordTable: max_order must be >= 1");
}

void WordTable::check_word(const Word& w) const {
    if (w.empty()) throw std::invalid_argument("WordTable: empty word");
    if (int(w.size()) > max_order_) throw std::out_of_range("WordTable: word exceeds max_order");
    for (int s : w)
        if (s < 0 || s >= alphabet_.size())
            throw std::invalid_argument("WordTable: symbol out of range");
}

void WordTable::set_value(const Word& w, Rational v) {
    check_word(w);
    values_[w] = std::move(v);
}

Rational WordTable::value(const Word& w) const {
    check_word(w);
    const auto it = values_.find(w);
    return it == values_.end() ? Rational(0) : it->second;
}

Rational moments_from_cumulants(const CumulantFunctional& c, const Word& word) {
    const int n = int(word.size());
    if (word.empty()) throw std::invalid_argument("moments_from_cumulants: empty word");
    if (n > c.max_order()) throw std::out_of_range("moments_from_cumulants: order overflow");
    Rational total = 0;
    for_each_partition(n, [&](const IntervalPartition& pi) {
        Rational term = 1;
        for (int t = 0; t < pi.block_count() && term != 0; ++t) {
            const auto [lo, hi] = pi.block(t);
            const Word sub(word.begin() + (lo - 1), word.begin() + hi);
            term *= c.value(sub);
        }
        total += term;
    });
    return total;
}

Rational cumulants_from_moments(const MomentFunctional& m, const Word& word) {
    const int n = int(word.size());
    if (word.empty()) throw std::invalid_argument("cumulants_from_moments: empty word");
    if (n > m.max_order()) throw std::out_of_range("cumulants_from_moments: order overflow");
    // bp[k] = b_k(w_1, ..., w_k)
    std::vector<Rational> bp(std::size_t(n) + 1);
    for (int k = 1; k <= n; ++k) {
        Rational v = m.value(Word(word.begin(), word.begin() + k));
        for (int j = 1; j < k; ++j)
            v -= bp[std::size_t(j)] * m.value(Word(word.begin() + j, word.begin() + k));
        bp[std::size_t(k)] = std::move(v);
    }
    return bp[std::size_t(n)];
}

namespace {

template <typename Fn>
void for_each_word(int alphabet_size, int max_len, const Fn& fn) {
    Word w;
    std::function<void()> rec = [&]() {
        if (!w.empty()) fn(w);
        if (int(w.size()) == max_len) return;
        for (int s = 0; s < alphabet_size; ++s) {
            w.push_back(s);
            rec();
            w.pop_back();
        }
    };
    rec();
}

}  // namespace

MomentFunctional moments_of(const CumulantFunctional& c, int order) {
    if (order > c.max_order()) throw std::out_of_range("moments_of: order overflow");
    MomentFunctional m(c.alphabet(), order);
    for_each_word(c.alphabet().size(), order,
                  [&](const Word& w) { m.set_value(w, moments_from_cumulants(c, w)); });
    return m;
}

IndependenceReport check_boolean_independence(const MomentFunctional& m,
                                              const std::vector<int>& group_of_symbol,
                                              int order) {
    if (int(group_of_symbol.size()) != m.alphabet().size())
        throw std::invalid_argument("check_boolean_independence: group map size mismatch");
    if (order > m.max_order())
        throw std::out_of_range("check_boolean_independence: order overflow");
    IndependenceReport report;
    for_each_word(m.alphabet().size(), order, [&](const Word& w) {
        if (w.size() < 2) return;
        bool mixed = false, adjacent_distinct = true;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            const int g0 = group_of_symbol[std::size_t(w[k])];
            const int g1 = group_of_symbol[std::size_t(w[k + 1])];
            if (g0 != g1) mixed = true;
            if (g0 == g1) adjacent_distinct = false;
        }
        if (mixed) {
            Rational b = cumulants_from_moments(m, w);
            if (b != 0) report.nonvanishing_mixed_cumulants.push_back({w, std::move(b)});
        }
        if (adjacent_distinct) {
            Rational prod = 1;
            for (int s : w) prod *= m.value(Word{s});
            Rational diff = m.value(w) - prod;
            if (diff != 0) report.product_formula_failures.push_back({w, std::move(diff)});
        }
    });
    return report;
}

BDiagonalLaw::BDiagonalLaw(std::vector<Rational> alpha, std::vector<Rational> beta, int max_order)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), max_order_(max_order) {
    if (max_order_ < 1) throw std::invalid_argument("BDiagonalLaw: max_order must be >= 1");
}

Rational BDiagonalLaw::alpha(int m) const {
    if (m < 1) throw std::invalid_argument("BDiagonalLaw::alpha: m must be >= 1");
    return m <= int(alpha_.size()) ? alpha_[std::size_t(m - 1)] : Rational(0);
}

Rational BDiagonalLaw::beta(int m) const {
    if (m < 1) throw std::invalid_argument("BDiagonalLaw::beta: m must be >= 1");
    return m <= int(beta_.size()) ? beta_[std::size_t(m - 1)] : Rational(0);
}

Rational BDiagonalLaw::cumulant(const SignPattern& xi) const {
    const std::size_t n = xi.size();
    if (n % 2) return 0;
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (xi[k] == xi[k + 1]) return 0;
    return xi[0] == Sign::one ? alpha(int(n) / 2) : beta(int(n) / 2);
}

CumulantFunctional BDiagonalLaw::induced_cumulants(int order) const {
    Alphabet ab;
    ab.add_adjoint_pair("X", "X*", 0);
    CumulantFunctional c(ab, order);
    for_each_word(2, order, [&](const Word& w) {
        std::vector<Sign> pat(w.size());
        for (std::size_t k = 0; k < w.size(); ++k)
            pat[k] = w[k] == 0 ? Sign::one : Sign::star;
        c.set_value(w, cumulant(SignPattern(std::move(pat))));
    });
    return c;
}

Rational bdiag_word_moment(const BDiagonalLaw& law, const SignPattern& xi) {
    if (int(xi.size()) > 2 * law.max_order())
        throw std::out_of_range("bdiag_word_moment: pattern exceeds 2*max_order");
    Rational total = 0;
    for (const auto& sigma : enumerate_alt(xi)) {
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

MomentFunctional bdiag_pair_moments(const BDiagonalLaw& law, int order) {
    Alphabet ab;
    const int u = ab.add_symbol("X*X", 0);  // expands to (*, 1)
    ab.add_symbol("XX*", 1);                // expands to (1, *)
    MomentFunctional m(ab, order);
    for_each_word(2, order, [&](const Word& w) {
        std::vector<Sign> pat;
        pat.reserve(2 * w.size());
        for (int s : w) {
            pat.push_back(s == u ? Sign::star : Sign::one);
            pat.push_back(s == u ? Sign::one : Sign::star);
        }
        m.set_value(w, bdiag_word_moment(law, SignPattern(std::move(pat))));
    });
    return m;
}

bool verify_pair_product_factorization(const BDiagonalLaw& law, int p, const SignPattern& tail,
                          int independence_order) {
    if (p < 1) throw std::invalid_argument("verify_pair_product_factorization: p must be >= 1");
    const SignPattern xxs = SignPattern::parse("xx*");
    const SignPattern star_tail = concat(SignPattern({Sign::star}), tail);
    const Rational lhs = bdiag_word_moment(law, concat(repeat(xxs, p), star_tail));
    const Rational rhs =
        bdiag_word_moment(law, repeat(xxs, p)) * bdiag_word_moment(law, star_tail);
    if (lhs != rhs) return false;
    const MomentFunctional joint = bdiag_pair_moments(law, independence_order);
    return check_boolean_independence(joint, {0, 1}, independence_order).independent();
}

CumulantFunctional bernoulli_cumulants(const Rational& variance, int max_order) {
    Alphabet ab;
    ab.add_symbol("X", 0);
    CumulantFunctional c(ab, max_order);
    if (max_order >= 2) c.set_value(Word{0, 0}, variance);
    return c;
}

}  // namespace brmt
