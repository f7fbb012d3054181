#include "stci/semigroup.hpp"

#include <cstdint>
#include <unordered_set>

namespace stci {

namespace {

using Small = long long;
using SmallVec = std::vector<Small>;

struct VecHash {
    size_t operator()(const SmallVec& v) const {
        size_t h = 1469598103934665603ull;
        for (Small x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

struct Searcher {
    const std::vector<SmallVec>& gens;
    // suffix_support[i][k]: some generator j >= i has a nonzero k-th coordinate
    std::vector<std::vector<bool>> suffix_support;
    std::unordered_set<SmallVec, VecHash> failed;  // (index, residual) states
    SmallVec solution;

    explicit Searcher(const std::vector<SmallVec>& g) : gens(g) {
        const size_t n = gens.empty() ? 0 : gens.front().size();
        suffix_support.assign(gens.size() + 1, std::vector<bool>(n, false));
        for (size_t i = gens.size(); i-- > 0;) {
            suffix_support[i] = suffix_support[i + 1];
            for (size_t k = 0; k < n; ++k)
                if (gens[i][k] != 0) suffix_support[i][k] = true;
        }
    }

    bool dfs(size_t i, SmallVec& residual, SmallVec& coeffs) {
        bool residual_zero = true;
        for (Small x : residual)
            if (x != 0) { residual_zero = false; break; }
        if (residual_zero) {
            solution = coeffs;
            solution.resize(gens.size(), 0);
            return true;
        }
        if (i == gens.size()) return false;
        for (size_t k = 0; k < residual.size(); ++k)
            if (residual[k] != 0 && !suffix_support[i][k]) return false;

        SmallVec key = residual;
        key.push_back(static_cast<Small>(i));
        if (failed.count(key)) return false;

        Small max_c = -1;
        for (size_t k = 0; k < residual.size(); ++k) {
            if (gens[i][k] == 0) continue;
            Small c = residual[k] / gens[i][k];
            if (max_c < 0 || c < max_c) max_c = c;
        }
        for (Small c = max_c; c >= 0; --c) {
            for (size_t k = 0; k < residual.size(); ++k) residual[k] -= c * gens[i][k];
            coeffs[i] = c;
            if (dfs(i + 1, residual, coeffs)) return true;
            for (size_t k = 0; k < residual.size(); ++k) residual[k] += c * gens[i][k];
            coeffs[i] = 0;
        }
        failed.insert(std::move(key));
        return false;
    }
};

}  // namespace

std::optional<NonnegCombination> semigroup_membership(const IntVec& target,
                                                      const std::vector<IntVec>& generators) {
    if (generators.empty()) throw std::invalid_argument("generator list must be nonempty");
    const size_t n = target.size();
    if (!is_nonnegative(target))
        throw std::invalid_argument("semigroup membership target has a negative coordinate");
    for (const IntVec& g : generators) {
        if (g.size() != n) throw dimension_error("generator dimension mismatch");
        if (!is_nonnegative(g))
            throw std::invalid_argument("semigroup generator has a negative coordinate");
        if (is_zero(g)) throw std::invalid_argument("semigroup generator is zero");
    }

    std::vector<SmallVec> gens(generators.size());
    for (size_t i = 0; i < generators.size(); ++i) {
        gens[i].resize(n);
        for (size_t k = 0; k < n; ++k) gens[i][k] = to_int64(generators[i][k], "semigroup_membership");
    }
    SmallVec residual(n);
    for (size_t k = 0; k < n; ++k) residual[k] = to_int64(target[k], "semigroup_membership");

    Searcher s(gens);
    SmallVec coeffs(gens.size(), 0);
    if (!s.dfs(0, residual, coeffs)) return std::nullopt;

    NonnegCombination result;
    result.coefficients.reserve(gens.size());
    for (Small c : s.solution) result.coefficients.emplace_back(c);
    return result;
}

IntVec expand_combination(const NonnegCombination& comb, const std::vector<IntVec>& generators) {
    if (comb.coefficients.size() != generators.size())
        throw dimension_error("combination length does not match generator count");
    if (generators.empty()) return {};
    IntVec r(generators.front().size(), Int(0));
    for (size_t i = 0; i < generators.size(); ++i)
        for (size_t j = 0; j < r.size(); ++j) r[j] += comb.coefficients[i] * generators[i][j];
    return r;
}

}  // namespace stci
