#pragma once

#include "brmt/cumulants.hpp"

#include <map>
#include <vector>

namespace brmt {

enum class EntryKind { general, bdiag_family, selfadjoint_family };

// Finite-N law of a single generic matrix entry.  Stored values are the
// N-independent numerators; the actual moment is numerator / N, with N
// supplied at evaluation time.
class EntryModel {
  public:
    // phi((x x*)^m) = a_m / N, phi((x* x)^m) = b_m / N, all other sign words 0.
    static EntryModel bdiag_family(std::vector<Rational> a, std::vector<Rational> b);
    // Off-diagonal: phi(x x*) = alpha / N, phi(x* x) = beta / N, other words 0.
    // Diagonal entries carry all moments equal to zero.
    static EntryModel selfadjoint_family(Rational alpha, Rational beta);
    // Arbitrary word table of numerators on sign patterns.
    static EntryModel general(std::map<std::vector<Sign>, Rational> table);

    EntryKind kind() const { return kind_; }
    // {alpha, beta} of a selfadjoint_family
    std::pair<Rational, Rational> selfadjoint_params() const;
    std::vector<Rational> a_sequence() const { return a_; }
    std::vector<Rational> b_sequence() const { return b_; }

    // The N-independent numerator of phi(x^{xi_1} ... x^{xi_k}).
    Rational numerator_moment(const SignPattern& xi) const;
    // The finite-N entry moment, numerator / N.
    Rational entry_word_moment(const SignPattern& xi, int N) const;

  private:
    EntryModel() = default;
    EntryKind kind_ = EntryKind::general;
    std::vector<Rational> a_, b_;
    std::map<std::vector<Sign>, Rational> table_;
};

// A word whose letters carry an algebra tag plus the symbol within that
// algebra's alphabet; the carrier for run factorization.
struct TaggedLetter {
    int tag = 0;
    int symbol = 0;
    friend bool operator==(const TaggedLetter&, const TaggedLetter&) = default;
};
using TaggedWord = std::vector<TaggedLetter>;

// Boolean independence of the tag algebras forces
//   phi(w) = prod over maximal same-tag runs of the run's moment.
Rational boolean_product_moment(const std::map<int, const MomentFunctional*>& models,
                                const TaggedWord& w);

// Joint *-moment functional of Y = ab for Boolean independent {a,a*}, {b,b*}
// with phi(a) = phi(a*) = 0; Y-words are expanded (Y -> a b, Y* -> b* a*) and
// evaluated by run factorization.  Both models must use a two-symbol alphabet
// (letter, letter*).
MomentFunctional product_of_boolean_letters_law(const MomentFunctional& a_model,
                                                const MomentFunctional& b_model, int order);

}  // namespace brmt
