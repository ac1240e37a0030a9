#include "mckay/group.hpp"

#include <numeric>
#include <sstream>

#include "mckay/error.hpp"
#include "mckay/lattice.hpp"

namespace mckay {

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t m) {
    const std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace

Character AbelianGroupData::trivial() const {
    return Character{std::vector<std::int64_t>(orders_.size(), 0)};
}

Character AbelianGroupData::weight(std::size_t label) const {
    if (label < 1 || label > n_) throw Error(ErrorCode::BadShape, "weight label out of range");
    Character c;
    c.residues.reserve(orders_.size());
    for (std::size_t j = 0; j < orders_.size(); ++j) c.residues.push_back(weights_[j][label - 1]);
    return c;
}

Character AbelianGroupData::add(const Character& a, const Character& b) const {
    Character c;
    c.residues.resize(orders_.size());
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        c.residues[j] = reduce(a.residues[j] + b.residues[j], orders_[j]);
    }
    return c;
}

Character AbelianGroupData::negate(const Character& a) const {
    Character c;
    c.residues.resize(orders_.size());
    for (std::size_t j = 0; j < orders_.size(); ++j) c.residues[j] = reduce(-a.residues[j], orders_[j]);
    return c;
}

Character AbelianGroupData::scale(const Character& a, std::int64_t k) const {
    Character c;
    c.residues.resize(orders_.size());
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        const std::int64_t km = reduce(k, orders_[j]);
        c.residues[j] = static_cast<std::int64_t>(
            (static_cast<__int128>(km) * a.residues[j]) % orders_[j]);
    }
    return c;
}

Character AbelianGroupData::degree(std::span<const std::int64_t> m) const {
    if (m.size() != n_) throw Error(ErrorCode::BadShape, "degree: vector length differs from n");
    Character c = trivial();
    for (std::size_t i = 0; i < n_; ++i) c = add(c, scale(weight(i + 1), m[i]));
    return c;
}

bool AbelianGroupData::in_kernel_of_degree(std::span<const std::int64_t> m) const {
    return degree(m) == trivial();
}

std::size_t AbelianGroupData::index_of(const Character& c) const {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        idx = idx * static_cast<std::size_t>(orders_[j]) + static_cast<std::size_t>(c.residues[j]);
    }
    return idx;
}

Character AbelianGroupData::character_at(std::size_t index) const {
    Character c;
    c.residues.resize(orders_.size());
    for (std::size_t j = orders_.size(); j-- > 0;) {
        const auto m = static_cast<std::size_t>(orders_[j]);
        c.residues[j] = static_cast<std::int64_t>(index % m);
        index /= m;
    }
    return c;
}

std::int64_t AbelianGroupData::weight_order(std::size_t label) const {
    const Character w = weight(label);
    std::int64_t l = 1;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        const std::int64_t o = orders_[j] / std::gcd(orders_[j], w.residues[j]);
        l = std::lcm(l, o);
    }
    return l;
}

AbelianGroupData build_group(std::vector<std::int64_t> orders, std::vector<std::vector<std::int64_t>> weights) {
    if (orders.empty()) throw Error(ErrorCode::BadShape, "no cyclic factors given");
    for (auto o : orders) {
        if (o < 1) throw Error(ErrorCode::BadShape, "cyclic factor order must be >= 1");
    }
    if (weights.size() != orders.size()) {
        throw Error(ErrorCode::BadShape, "weight matrix needs one row per cyclic factor");
    }
    const std::size_t n = weights.front().size();
    if (n == 0) throw Error(ErrorCode::BadShape, "at least one weight is required");
    for (const auto& row : weights) {
        if (row.size() != n) throw Error(ErrorCode::BadShape, "weight rows have different lengths");
    }

    AbelianGroupData g;
    g.n_ = n;
    g.order_ = 1;
    for (std::size_t j = 0; j < orders.size(); ++j) {
        g.order_ *= orders[j];
        for (auto& x : weights[j]) x = reduce(x, orders[j]);
    }
    g.orders_ = std::move(orders);
    g.weights_ = std::move(weights);

    // The weight columns and r_j e_j must span Z^k.
    const std::size_t k = g.orders_.size();
    IntMatrix gens;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector v(k);
        for (std::size_t j = 0; j < k; ++j) v[j] = static_cast<long>(g.weights_[j][i]);
        gens.push_back(std::move(v));
    }
    for (std::size_t j = 0; j < k; ++j) {
        IntVector v(k, 0);
        v[j] = static_cast<long>(g.orders_[j]);
        gens.push_back(std::move(v));
    }
    if (!spans_unit_lattice(gens, k)) {
        throw Error(ErrorCode::NonGenerating, "the weights do not generate the character group");
    }
    return g;
}

AbelianGroupData cyclic_group(std::int64_t r, const std::vector<std::int64_t>& weights) {
    return build_group({r}, {weights});
}

std::string describe(const AbelianGroupData& group) {
    std::ostringstream os;
    if (group.is_cyclic_presentation()) {
        os << "1/" << group.order() << "(";
        for (std::size_t i = 0; i < group.dimension(); ++i) os << (i ? "," : "") << group.weights()[0][i];
        os << ")";
        return os.str();
    }
    for (std::size_t j = 0; j < group.factors(); ++j) os << (j ? "x" : "") << group.orders()[j];
    os << ":";
    for (std::size_t j = 0; j < group.factors(); ++j) {
        if (j) os << ";";
        for (std::size_t i = 0; i < group.dimension(); ++i) os << (i ? "," : "") << group.weights()[j][i];
    }
    return os.str();
}

std::string character_name(const AbelianGroupData& group, const Character& c) {
    if (group.is_cyclic_presentation()) return "rho_" + std::to_string(c.residues[0]);
    std::string s = "rho_(";
    for (std::size_t j = 0; j < c.residues.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(c.residues[j]);
    }
    return s + ")";
}

}  // namespace mckay
