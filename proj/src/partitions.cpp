#include "brmt/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace brmt {

SignPattern::SignPattern(std::vector<Sign> signs) : signs_(std::move(signs)) {
    if (signs_.empty()) throw std::invalid_argument("SignPattern: length must be >= 1");
}

SignPattern SignPattern::parse(std::string_view text) {
    std::vector<Sign> out;
    for (char c : text) {
        if (c == 'x' || c == 'X') {
            out.push_back(Sign::one);
        } else if (c == '*') {
            if (out.empty() || out.back() == Sign::star)
                throw std::invalid_argument("SignPattern: '*' must follow a plain 'x'");
            out.back() = Sign::star;
        } else if (c != ' ') {
            throw std::invalid_argument(std::string("SignPattern: unexpected character '") + c +
                                        "'");
        }
    }
    return SignPattern(std::move(out));
}

SignPattern SignPattern::window(std::size_t start, std::size_t len) const {
    if (len < 1 || start + len > signs_.size())
        throw std::invalid_argument("SignPattern::window out of range");
    return SignPattern(std::vector<Sign>(signs_.begin() + start, signs_.begin() + start + len));
}

std::string SignPattern::str() const {
    std::string out;
    for (Sign s : signs_) {
        out += 'x';
        if (s == Sign::star) out += '*';
    }
    return out;
}

SignPattern concat(const SignPattern& a, const SignPattern& b) {
    std::vector<Sign> out = a.signs();
    out.insert(out.end(), b.signs().begin(), b.signs().end());
    return SignPattern(std::move(out));
}

SignPattern repeat(const SignPattern& a, int times) {
    if (times < 1) throw std::invalid_argument("repeat: times must be >= 1");
    std::vector<Sign> out;
    out.reserve(a.size() * std::size_t(times));
    for (int t = 0; t < times; ++t)
        out.insert(out.end(), a.signs().begin(), a.signs().end());
    return SignPattern(std::move(out));
}

IntervalPartition::IntervalPartition(std::vector<int> endpoints)
    : endpoints_(std::move(endpoints)) {
    if (endpoints_.empty()) throw std::invalid_argument("IntervalPartition: no endpoints");
    int prev = 0;
    for (int e : endpoints_) {
        if (e <= prev) throw std::invalid_argument("IntervalPartition: endpoints must increase");
        prev = e;
    }
    n_ = endpoints_.back();
}

IntervalPartition IntervalPartition::full(int n) { return IntervalPartition({n}); }

IntervalPartition IntervalPartition::singletons(int n) {
    std::vector<int> eps;
    eps.reserve(std::size_t(n > 0 ? n : 0));
    for (int k = 1; k <= n; ++k) eps.push_back(k);
    return IntervalPartition(std::move(eps));
}

IntervalPartition IntervalPartition::parse(std::string_view text) {
    std::string s(text);
    std::erase(s, ' ');
    if (s.size() < 3 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("IntervalPartition: expected \"[l1,l2,...]\"");
    std::vector<int> eps;
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        const int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("IntervalPartition: bad endpoint");
        eps.push_back(v);
    }
    return IntervalPartition(std::move(eps));
}

std::pair<int, int> IntervalPartition::block(int t) const {
    const int lo = (t == 0) ? 1 : endpoints_[std::size_t(t - 1)] + 1;
    return {lo, endpoints_[std::size_t(t)]};
}

bool IntervalPartition::leq(const IntervalPartition& other) const {
    if (n_ != other.n_) return false;
    return std::includes(endpoints_.begin(), endpoints_.end(), other.endpoints_.begin(),
                         other.endpoints_.end());
}

std::string IntervalPartition::str() const {
    std::string out = "[";
    for (std::size_t k = 0; k < endpoints_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(endpoints_[k]);
    }
    return out + "]";
}

IntervalPartition meet(const IntervalPartition& sigma, const IntervalPartition& omega) {
    if (sigma.n() != omega.n()) throw std::invalid_argument("meet: mismatched ground sets");
    std::vector<int> eps;
    std::set_union(sigma.endpoints().begin(), sigma.endpoints().end(), omega.endpoints().begin(),
                   omega.endpoints().end(), std::back_inserter(eps));
    return IntervalPartition(std::move(eps));
}

IntervalPartition join(const IntervalPartition& sigma, const IntervalPartition& omega) {
    if (sigma.n() != omega.n()) throw std::invalid_argument("join: mismatched ground sets");
    std::vector<int> eps;
    std::set_intersection(sigma.endpoints().begin(), sigma.endpoints().end(),
                          omega.endpoints().begin(), omega.endpoints().end(),
                          std::back_inserter(eps));
    return IntervalPartition(std::move(eps));  // n is a common endpoint, never empty
}

IntervalPartition juxtapose(const IntervalPartition& sigma, const IntervalPartition& pi) {
    std::vector<int> eps = sigma.endpoints();
    for (int e : pi.endpoints()) eps.push_back(e + sigma.n());
    return IntervalPartition(std::move(eps));
}

IntervalPartition restrict_window(const IntervalPartition& sigma, int d_start, int d_len) {
    if (d_start < 0 || d_len < 1 || d_start + d_len > sigma.n())
        throw std::invalid_argument("restrict_window: window out of range");
    const int lo = d_start + 1, hi = d_start + d_len;
    std::vector<int> eps;
    for (int e : sigma.endpoints()) {
        if (e >= lo && e < hi) eps.push_back(e - d_start);
    }
    eps.push_back(d_len);
    return IntervalPartition(std::move(eps));
}

void for_each_partition(int n, const std::function<void(const IntervalPartition&)>& fn) {
    if (n < 1) throw std::invalid_argument("for_each_partition: n must be >= 1");
    if (n > 62) throw std::invalid_argument("for_each_partition: n too large to enumerate");
    const std::uint64_t limit = std::uint64_t(1) << (n - 1);
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        std::vector<int> eps;
        for (int k = 1; k < n; ++k)
            if (mask >> (k - 1) & 1) eps.push_back(k);
        eps.push_back(n);
        fn(IntervalPartition(std::move(eps)));
    }
}

std::vector<IntervalPartition> enumerate_partitions(int n) {
    std::vector<IntervalPartition> out;
    out.reserve(n <= 20 ? (std::size_t(1) << (n - 1)) : 0);
    for_each_partition(n, [&](const IntervalPartition& p) { out.push_back(p); });
    return out;
}

bool is_xi_alternating(const IntervalPartition& sigma, const SignPattern& xi) {
    if (std::size_t(sigma.n()) != xi.size())
        throw std::invalid_argument("is_xi_alternating: length mismatch");
    for (int t = 0; t < sigma.block_count(); ++t) {
        const auto [lo, hi] = sigma.block(t);
        for (int s = lo; s < hi; ++s)
            if (xi[std::size_t(s - 1)] == xi[std::size_t(s)]) return false;
        if (xi[std::size_t(hi - 1)] == xi[std::size_t(lo - 1)]) return false;  // cyclic closure
    }
    return true;
}

namespace {

// Appends to out all ways to split positions [from+1 .. n] (1-based) into
// xi-alternating blocks, given the endpoints chosen so far.
void alt_backtrack(const SignPattern& xi, int from, std::vector<int>& eps,
                   std::vector<IntervalPartition>& out) {
    const int n = int(xi.size());
    if (from == n) {
        out.emplace_back(eps);
        return;
    }
    const Sign first = xi[std::size_t(from)];
    for (int end = from + 2; end <= n; end += 2) {
        // both adjacent pairs brought in by this extension must alternate
        if (end > from + 2 && xi[std::size_t(end - 3)] == xi[std::size_t(end - 2)]) break;
        if (xi[std::size_t(end - 2)] == xi[std::size_t(end - 1)]) break;
        if (xi[std::size_t(end - 1)] == first) continue;  // cyclic closure fails
        eps.push_back(end);
        alt_backtrack(xi, end, eps, out);
        eps.pop_back();
    }
}

}  // namespace

std::vector<IntervalPartition> enumerate_alt(const SignPattern& xi) {
    std::vector<IntervalPartition> out;
    if (xi.size() % 2) return out;  // alternating blocks are even, so n must be even
    std::vector<int> eps;
    alt_backtrack(xi, 0, eps, out);
    std::sort(out.begin(), out.end());
    return out;
}

LabelTuple::LabelTuple(std::vector<int> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw std::invalid_argument("LabelTuple: length must be >= 1");
}

IntervalPartition omega_of_labels(const LabelTuple& k) {
    std::vector<int> eps;
    for (std::size_t s = 0; s + 1 < k.size(); ++s)
        if (k[s] != k[s + 1]) eps.push_back(int(s) + 1);
    eps.push_back(int(k.size()));
    return IntervalPartition(std::move(eps));
}

IndexTuple::IndexTuple(std::vector<int> indices, int N) : indices_(std::move(indices)), N_(N) {
    if (indices_.empty()) throw std::invalid_argument("IndexTuple: length must be >= 1");
    if (N_ < 1) throw std::invalid_argument("IndexTuple: N must be positive");
    for (int v : indices_)
        if (v < 1 || v > N_) throw std::invalid_argument("IndexTuple: index outside [N]");
}

namespace {

// The xi-adjusted pair of position s (0-based): (i_s, i_{s+1})^{xi_s}.
inline GridPoint adjusted_pair(const SignPattern& xi, const IndexTuple& i, std::size_t s) {
    const int a = i[s], b = i.next(s);
    return xi[s] == Sign::star ? GridPoint{b, a} : GridPoint{a, b};
}

IntervalPartition runs_to_partition(const std::vector<GridPoint>& pairs) {
    const int n = int(pairs.size());
    std::vector<int> eps;
    for (int s = 0; s + 1 < n; ++s)
        if (pairs[std::size_t(s)] != pairs[std::size_t(s + 1)]) eps.push_back(s + 1);
    eps.push_back(n);
    return IntervalPartition(std::move(eps));
}

}  // namespace

IntervalPartition iota(const SignPattern& xi, const IndexTuple& i) {
    if (xi.size() != i.size()) throw std::invalid_argument("iota: length mismatch");
    std::vector<GridPoint> pairs(xi.size());
    for (std::size_t s = 0; s < xi.size(); ++s) pairs[s] = adjusted_pair(xi, i, s);
    return runs_to_partition(pairs);
}

IntervalPartition iota_permuted(const std::vector<const PermutationSpec*>& alphas,
                                const SignPattern& xi, const IndexTuple& i) {
    if (alphas.size() != xi.size() || xi.size() != i.size())
        throw std::invalid_argument("iota_permuted: length mismatch");
    std::vector<GridPoint> pairs(xi.size());
    for (std::size_t s = 0; s < xi.size(); ++s) {
        // alpha^{xi_s}(i_s, i_{s+1}): apply alpha to the xi-flipped pair
        const auto [a, b] = adjusted_pair(xi, i, s);
        pairs[s] = alphas[s] ? alphas[s]->apply(a, b) : GridPoint{a, b};
    }
    return runs_to_partition(pairs);
}

std::vector<IntervalPartition> enumerate_alt_permuted(const LabelTuple& alpha_labels,
                                                      const SignPattern& xi) {
    if (alpha_labels.size() != xi.size())
        throw std::invalid_argument("enumerate_alt_permuted: length mismatch");
    const IntervalPartition omega = omega_of_labels(alpha_labels);
    std::vector<IntervalPartition> out;
    for (const auto& sigma : enumerate_alt(xi))
        if (sigma.leq(omega)) out.push_back(sigma);
    return out;
}

}  // namespace brmt
