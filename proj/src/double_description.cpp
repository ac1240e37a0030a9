#include "mckay/double_description.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace mckay {

namespace {

// Zero sets of all rays in one flat array, `words` 64-bit words per ray.
class ZeroSets {
public:
    explicit ZeroSets(std::size_t bits) : words_((bits + 63) / 64) {}

    std::size_t words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_ ? data_.size() / words_ : count_; }

    void push(const std::uint64_t* src) {
        if (words_ == 0) {
            ++count_;
            return;
        }
        data_.insert(data_.end(), src, src + words_);
    }
    std::uint64_t* at(std::size_t i) { return data_.data() + i * words_; }
    const std::uint64_t* at(std::size_t i) const { return data_.data() + i * words_; }
    void clear() {
        data_.clear();
        count_ = 0;
    }

private:
    std::size_t words_;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> data_;
};

void set_bit(std::uint64_t* z, std::size_t k) { z[k / 64] |= std::uint64_t{1} << (k % 64); }

// x <- s*x - t*y, then primitive.
IntVector combine(const Integer& s, const IntVector& x, const Integer& t, const IntVector& y) {
    IntVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = s * x[i] - t * y[i];
    return make_primitive(std::move(out));
}

}  // namespace

ConeGenerators double_description(std::size_t dim, const std::vector<IntVector>& inequalities,
                                  const std::vector<IntVector>& equations, DoubleDescriptionStats* stats) {
    std::vector<IntVector> lineality;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVector e(dim, 0);
        e[i] = 1;
        lineality.push_back(std::move(e));
    }

    // Equations only shrink the lineality space.
    for (const auto& e : equations) {
        auto it = std::find_if(lineality.begin(), lineality.end(), [&](const IntVector& l) { return sgn(dot(e, l)) != 0; });
        if (it == lineality.end()) continue;
        const IntVector pivot = *it;
        const Integer pe = dot(e, pivot);
        lineality.erase(it);
        for (auto& l : lineality) {
            const Integer le = dot(e, l);
            if (sgn(le) != 0) l = combine(pe, l, le, pivot);
        }
    }
    const std::size_t base_dim = lineality.size();

    const std::size_t m = inequalities.size();
    std::vector<IntVector> rays;
    ZeroSets zeros(m);
    const std::size_t words = zeros.words();
    std::vector<std::uint64_t> processed(words, 0);
    std::vector<std::uint64_t> scratch(words, 0);

    for (std::size_t k = 0; k < m; ++k) {
        const IntVector& a = inequalities[k];

        auto lit = std::find_if(lineality.begin(), lineality.end(), [&](const IntVector& l) { return sgn(dot(a, l)) != 0; });
        if (lit != lineality.end()) {
            IntVector pivot = *lit;
            Integer pa = dot(a, pivot);
            if (sgn(pa) < 0) {
                for (auto& x : pivot) x = -x;
                pa = -pa;
            }
            lineality.erase(lit);
            for (auto& l : lineality) {
                const Integer la = dot(a, l);
                if (sgn(la) != 0) l = combine(pa, l, la, pivot);
            }
            for (std::size_t i = 0; i < rays.size(); ++i) {
                const Integer ra = dot(a, rays[i]);
                if (sgn(ra) != 0) rays[i] = combine(pa, rays[i], ra, pivot);
                set_bit(zeros.at(i), k);
            }
            rays.push_back(std::move(pivot));
            zeros.push(processed.data());
            set_bit(processed.data(), k);
            continue;
        }

        std::vector<Integer> value(rays.size());
        std::vector<std::size_t> pos, neg, zero;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            value[i] = dot(a, rays[i]);
            const int s = sgn(value[i]);
            (s > 0 ? pos : s < 0 ? neg : zero).push_back(i);
        }

        std::vector<IntVector> next_rays;
        ZeroSets next_zeros(m);
        next_rays.reserve(pos.size() + zero.size());
        for (auto i : pos) {
            next_rays.push_back(rays[i]);
            next_zeros.push(zeros.at(i));
        }
        for (auto i : zero) {
            next_rays.push_back(rays[i]);
            next_zeros.push(zeros.at(i));
            set_bit(next_zeros.at(next_zeros.size() - 1), k);
        }

        if (!neg.empty() && !pos.empty()) {
            // Pointed dimension of the current cone.
            const std::size_t pointed = base_dim - lineality.size();
            const std::size_t needed = pointed >= 2 ? pointed - 2 : 0;
            const std::size_t total = rays.size();
            for (auto p : pos) {
                const auto* zp = zeros.at(p);
                for (auto q : neg) {
                    const auto* zq = zeros.at(q);
                    std::size_t common = 0;
                    for (std::size_t w = 0; w < words; ++w) {
                        scratch[w] = zp[w] & zq[w];
                        common += static_cast<std::size_t>(std::popcount(scratch[w]));
                    }
                    if (common < needed) continue;
                    if (stats) ++stats->adjacency_tests;
                    bool adjacent = true;
                    for (std::size_t t = 0; t < total && adjacent; ++t) {
                        if (t == p || t == q) continue;
                        const auto* zt = zeros.at(t);
                        bool contains = true;
                        for (std::size_t w = 0; w < words; ++w) {
                            if ((zt[w] & scratch[w]) != scratch[w]) {
                                contains = false;
                                break;
                            }
                        }
                        if (contains) adjacent = false;
                    }
                    if (!adjacent) continue;
                    // value[p] > 0 > value[q]
                    next_rays.push_back(combine(value[p], rays[q], value[q], rays[p]));
                    next_zeros.push(scratch.data());
                    set_bit(next_zeros.at(next_zeros.size() - 1), k);
                }
            }
        }

        rays = std::move(next_rays);
        zeros = std::move(next_zeros);
        set_bit(processed.data(), k);
        if (stats) stats->max_intermediate_rays = std::max(stats->max_intermediate_rays, rays.size());
    }

    // Canonical form: lineality as primitive RREF rows, rays reduced modulo it.
    ConeGenerators out;
    RatMatrix lin_rows;
    for (const auto& l : lineality) lin_rows.push_back(to_rational(l));
    const Echelon ech = row_echelon(lin_rows, dim);
    for (const auto& row : ech.rows) out.lineality.push_back(clear_denominators(row));
    for (const auto& r : rays) {
        IntVector v = ech.rows.empty() ? r : clear_denominators(reduce_modulo(ech, to_rational(r)));
        if (!is_zero(v)) out.rays.push_back(make_primitive(std::move(v)));
    }
    std::sort(out.rays.begin(), out.rays.end(), [](const IntVector& a, const IntVector& b) { return lex_less(a, b); });
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

}  // namespace mckay
