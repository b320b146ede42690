#pragma once

#include "brmt/partitions.hpp"
#include "brmt/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace brmt {

// Words over a finite alphabet of tagged symbols; a word is a sequence of
// symbol ids.  Starred letters are symbols in their own right, related to
// their partners by the involution.
using Word = std::vector<int>;

struct Symbol {
    std::string name;
    int tag = 0;       // algebra tag
    int adjoint = -1;  // symbol id of the adjoint (itself when self-adjoint)
};

class Alphabet {
  public:
    // Self-adjoint symbol.
    int add_symbol(std::string name, int tag = 0);
    // x and x* as an adjoint pair sharing one tag; returns their ids.
    std::pair<int, int> add_adjoint_pair(std::string name, std::string star_name, int tag = 0);
    // Marks two existing symbols as adjoints of each other.
    void set_adjoint_pair(int a, int b);

    int size() const { return int(symbols_.size()); }
    const Symbol& symbol(int id) const { return symbols_.at(std::size_t(id)); }
    int find(std::string_view name) const;  // -1 when absent
    int adjoint_of(int id) const { return symbols_.at(std::size_t(id)).adjoint; }
    Word adjoint_word(const Word& w) const;  // reverse and involute

  private:
    std::vector<Symbol> symbols_;
};

// Values on words of length <= max_order; unspecified words are zero, and
// is_specified() keeps "asserted zero" apart from "defaulted zero".
class WordTable {
  public:
    WordTable(Alphabet alphabet, int max_order);

    const Alphabet& alphabet() const { return alphabet_; }
    int max_order() const { return max_order_; }
    void set_value(const Word& w, Rational v);
    Rational value(const Word& w) const;
    bool is_specified(const Word& w) const { return values_.count(w) != 0; }
    const std::map<Word, Rational>& values() const { return values_; }

  protected:
    void check_word(const Word& w) const;

  private:
    Alphabet alphabet_;
    std::map<Word, Rational> values_;
    int max_order_;
};

class MomentFunctional : public WordTable {
  public:
    using WordTable::WordTable;
};

class CumulantFunctional : public WordTable {
  public:
    using WordTable::WordTable;
};

// The defining recurrence: phi(a_1 ... a_n) = sum over pi in I(n) of prod over blocks
// {l+1,...,l+k} of b_k(a_{l+1}, ..., a_{l+k}).
Rational moments_from_cumulants(const CumulantFunctional& c, const Word& word);

// Inverse of the recurrence above, by first-block decomposition
//   b_n(w) = phi(w) - sum_{k<n} b_k(w_{1..k}) phi(w_{k+1..n}).
Rational cumulants_from_moments(const MomentFunctional& m, const Word& word);

// Moments of every word up to `order`, filled from the cumulant table.
MomentFunctional moments_of(const CumulantFunctional& c, int order);

struct IndependenceReport {
    struct Entry {
        Word word;
        Rational value;
    };
    // mixed Boolean cumulants that fail to vanish
    std::vector<Entry> nonvanishing_mixed_cumulants;
    // adjacent-group-distinct words where phi(w) != prod phi(letters);
    // value stores the difference
    std::vector<Entry> product_formula_failures;
    bool independent() const {
        return nonvanishing_mixed_cumulants.empty() && product_formula_failures.empty();
    }
};

// group_of_symbol assigns each alphabet symbol to a group; mixed cumulants up
// to `order` must vanish, and the moment product formula must hold on words
// whose consecutive letters come from distinct groups.
IndependenceReport check_boolean_independence(const MomentFunctional& m,
                                              const std::vector<int>& group_of_symbol, int order);

// Determining sequences of a B-diagonal variable:
//   alpha_m = b_{2m}(X, X*, ..., X, X*),  beta_m = b_{2m}(X*, X, ..., X*, X);
// every non-alternating cumulant is zero, and the sequences are zero beyond
// the stored prefix.
class BDiagonalLaw {
  public:
    BDiagonalLaw(std::vector<Rational> alpha, std::vector<Rational> beta, int max_order = 64);

    int max_order() const { return max_order_; }
    const std::vector<Rational>& alpha_sequence() const { return alpha_; }
    const std::vector<Rational>& beta_sequence() const { return beta_; }
    Rational alpha(int m) const;  // 1-based pair count
    Rational beta(int m) const;

    // b_{|xi|}(X^{xi_1}, ..., X^{xi_n}); nonzero only on even strictly
    // alternating patterns
    Rational cumulant(const SignPattern& xi) const;

    // Cumulant functional on the two letters X, X* up to word length `order`.
    CumulantFunctional induced_cumulants(int order) const;

  private:
    std::vector<Rational> alpha_, beta_;
    int max_order_;
};

// phi(X^{xi_1} ... X^{xi_n}) = sum over sigma in alt(xi) of
// prod over blocks: alpha_{#B/2} when the block starts with sign 1,
// beta_{#B/2} when it starts with *.
Rational bdiag_word_moment(const BDiagonalLaw& law, const SignPattern& xi);

// Joint moment functional of u = X*X and v = XX* (both self-adjoint), with
// values derived from the law; the carrier for the pair-independence checks.
MomentFunctional bdiag_pair_moments(const BDiagonalLaw& law, int order);

// Checks phi((XX*)^p X* X^{tail}) = phi((XX*)^p) phi(X* X^{tail}),
// plus Boolean independence of X*X and XX* up to `independence_order`.
bool verify_pair_product_factorization(const BDiagonalLaw& law, int p, const SignPattern& tail,
                          int independence_order = 6);

// Bernoulli law of mean 0 and variance `variance`: b_n(X,...,X) = delta_{n,2} * variance.
CumulantFunctional bernoulli_cumulants(const Rational& variance, int max_order);

}  // namespace brmt
