#include "brmt/boolean_model.hpp"

#include <stdexcept>

namespace brmt {

namespace {

// (x x*)^m or (x* x)^m: returns the pair count and leading sign, or m = 0.
std::pair<int, Sign> alternating_shape(const std::vector<Sign>& pat) {
    const std::size_t n = pat.size();
    if (n == 0 || n % 2) return {0, Sign::one};
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (pat[k] == pat[k + 1]) return {0, Sign::one};
    return {int(n) / 2, pat[0]};
}

}  // namespace

EntryModel EntryModel::bdiag_family(std::vector<Rational> a, std::vector<Rational> b) {
    EntryModel m;
    m.kind_ = EntryKind::bdiag_family;
    m.a_ = std::move(a);
    m.b_ = std::move(b);
    return m;
}

EntryModel EntryModel::selfadjoint_family(Rational alpha, Rational beta) {
    EntryModel m;
    m.kind_ = EntryKind::selfadjoint_family;
    m.a_ = {std::move(alpha)};
    m.b_ = {std::move(beta)};
    return m;
}

EntryModel EntryModel::general(std::map<std::vector<Sign>, Rational> table) {
    EntryModel m;
    m.kind_ = EntryKind::general;
    m.table_ = std::move(table);
    return m;
}

std::pair<Rational, Rational> EntryModel::selfadjoint_params() const {
    if (kind_ != EntryKind::selfadjoint_family)
        throw std::logic_error("selfadjoint_params: not a selfadjoint_family model");
    return {a_[0], b_[0]};
}

Rational EntryModel::numerator_moment(const SignPattern& xi) const {
    switch (kind_) {
        case EntryKind::general: {
            const auto it = table_.find(xi.signs());
            return it == table_.end() ? Rational(0) : it->second;
        }
        case EntryKind::bdiag_family: {
            const auto [m, lead] = alternating_shape(xi.signs());
            if (m == 0) return 0;
            const auto& seq = lead == Sign::one ? a_ : b_;
            return m <= int(seq.size()) ? seq[std::size_t(m - 1)] : Rational(0);
        }
        case EntryKind::selfadjoint_family: {
            const auto [m, lead] = alternating_shape(xi.signs());
            if (m != 1) return 0;
            return lead == Sign::one ? a_[0] : b_[0];
        }
    }
    return 0;
}

Rational EntryModel::entry_word_moment(const SignPattern& xi, int N) const {
    if (N < 1) throw std::invalid_argument("entry_word_moment: N must be positive");
    return numerator_moment(xi) / N;
}

Rational boolean_product_moment(const std::map<int, const MomentFunctional*>& models,
                                const TaggedWord& w) {
    if (w.empty()) throw std::invalid_argument("boolean_product_moment: empty word");
    Rational out = 1;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j].tag == w[i].tag) ++j;
        const auto it = models.find(w[i].tag);
        if (it == models.end())
            throw std::invalid_argument("boolean_product_moment: no model for tag " +
                                        std::to_string(w[i].tag));
        Word run;
        run.reserve(j - i);
        for (std::size_t k = i; k < j; ++k) run.push_back(w[k].symbol);
        out *= it->second->value(run);
        if (out == 0) return 0;
        i = j;
    }
    return out;
}

MomentFunctional product_of_boolean_letters_law(const MomentFunctional& a_model,
                                                const MomentFunctional& b_model, int order) {
    if (a_model.alphabet().size() != 2 || b_model.alphabet().size() != 2)
        throw std::invalid_argument(
            "product_of_boolean_letters_law: models must have a (letter, letter*) alphabet");
    if (a_model.value(Word{0}) != 0 || a_model.value(Word{1}) != 0)
        throw std::invalid_argument(
            "product_of_boolean_letters_law: requires phi(a) = phi(a*) = 0");
    const std::map<int, const MomentFunctional*> models{{0, &a_model}, {1, &b_model}};

    Alphabet ab;
    ab.add_adjoint_pair("Y", "Y*", 0);
    MomentFunctional out(ab, order);
    Word w;
    std::function<void()> rec = [&]() {
        if (!w.empty()) {
            TaggedWord expanded;
            expanded.reserve(2 * w.size());
            for (int s : w) {
                if (s == 0) {  // Y = a b
                    expanded.push_back({0, 0});
                    expanded.push_back({1, 0});
                } else {  // Y* = b* a*
                    expanded.push_back({1, 1});
                    expanded.push_back({0, 1});
                }
            }
            out.set_value(w, boolean_product_moment(models, expanded));
        }
        if (int(w.size()) == order) return;
        for (int s = 0; s < 2; ++s) {
            w.push_back(s);
            rec();
            w.pop_back();
        }
    };
    rec();
    return out;
}

}  // namespace brmt
