#include "pav/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pav {

Permutation::Permutation(std::vector<int> w) : w_(std::move(w)) {
    std::vector<char> seen(w_.size() + 1, 0);
    for (int v : w_) {
        if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

std::string Permutation::str() const {
    std::string s;
    bool commas = size() > 9;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (commas && i) s += ',';
        s += std::to_string(w_[i]);
    }
    return s;
}

Permutation parse_pattern(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty pattern");
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string::npos) next = text.size();
            const std::string tok = text.substr(pos, next - pos);
            if (tok.empty()) throw std::invalid_argument("empty entry in pattern '" + text + "'");
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("bad entry in pattern '" + text + "'");
            w.push_back(v);
            pos = next + 1;
            if (next == text.size()) break;
        }
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("pattern '" + text + "' must be digits 1-9 or a comma list");
            w.push_back(ch - '0');
        }
    }
    return Permutation(std::move(w));
}

Permutation standardize(const std::vector<int>& values) {
    std::vector<int> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)]; });
    std::vector<int> w(values.size());
    for (std::size_t r = 0; r < idx.size(); ++r) w[static_cast<std::size_t>(idx[r])] = static_cast<int>(r) + 1;
    return Permutation(std::move(w));
}

namespace {

// Depth-first search over increasing position tuples whose values realize the
// pattern's relative order; counts all completions (or stops at the first if
// stop_early), pruning as soon as a partial tuple is inconsistent.
void search(const Permutation& sigma, const Permutation& pi, int depth, int start,
            std::vector<int>& chosen, BigInt& count, bool stop_early) {
    const int k = sigma.size(), n = pi.size();
    if (depth == k) {
        ++count;
        return;
    }
    // Not enough positions left to finish.
    for (int p = start; p <= n - (k - depth - 1); ++p) {
        const int v = pi(p);
        bool ok = true;
        for (int i = 0; i < depth; ++i) {
            if ((sigma(i + 1) < sigma(depth + 1)) != (pi(chosen[static_cast<std::size_t>(i)]) < v)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(p);
        search(sigma, pi, depth + 1, p + 1, chosen, count, stop_early);
        chosen.pop_back();
        if (stop_early && count > 0) return;
    }
}

}  // namespace

BigInt occurrences_naive(const Permutation& sigma, const Permutation& pi) {
    BigInt count(0);
    if (sigma.size() == 0 || sigma.size() > pi.size()) return count;
    std::vector<int> chosen;
    search(sigma, pi, 0, 1, chosen, count, false);
    return count;
}

bool avoids(const Permutation& pi, const Permutation& sigma) {
    if (sigma.size() == 0) return true;  // the empty pattern never occurs
    if (sigma.size() > pi.size()) return true;
    BigInt count(0);
    std::vector<int> chosen;
    search(sigma, pi, 0, 1, chosen, count, true);
    return count == 0;
}

Permutation apply_symmetry(const Permutation& p, Symmetry op) {
    const int n = p.size();
    std::vector<int> w(static_cast<std::size_t>(n));
    switch (op) {
        case Symmetry::inverse:
            for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(p(i)) - 1] = i;
            break;
        case Symmetry::reverse:
            for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(n - i)] = p(i);
            break;
        case Symmetry::complement:
            for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i) - 1] = n + 1 - p(i);
            break;
    }
    return Permutation(std::move(w));
}

PatternStats pattern_stats(const Permutation& sigma) {
    const int k = sigma.size();
    if (k == 0) throw std::invalid_argument("pattern_stats of empty pattern");
    PatternStats st;
    st.descents = 1;  // the last index always counts
    for (int i = 1; i < k; ++i)
        if (sigma(i) > sigma(i + 1)) ++st.descents;
    st.lambda = k + st.descents;
    for (int i = 1; i <= k; ++i)
        if (sigma(i) == k) st.max_pos = i;
    // prefix minima / suffix maxima for the separated-split set
    std::vector<int> sufmax(static_cast<std::size_t>(k) + 2, 0);
    for (int i = k; i >= 1; --i)
        sufmax[static_cast<std::size_t>(i)] = std::max(sufmax[static_cast<std::size_t>(i) + 1], sigma(i));
    int premin = sigma(1);
    for (int q = 1; q < k; ++q) {
        premin = std::min(premin, sigma(q));
        if (premin > sufmax[static_cast<std::size_t>(q) + 1]) st.delta.push_back(q);
    }
    return st;
}

bool inversion_order_leq(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("inversion order needs equal sizes");
    const int n = a.size();
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (a(i) > a(j) && b(i) < b(j)) return false;
    return true;
}

}  // namespace pav
