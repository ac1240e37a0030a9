#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mckay {

/// Element of the character group G* = Z/r_1 + ... + Z/r_k, written
/// additively: residue j lies in [0, r_j).
struct Character {
    std::vector<std::int64_t> residues;

    auto operator<=>(const Character&) const = default;
};

/// A finite abelian group G acting diagonally on affine n-space, given as a
/// product of cyclic factors together with the n weight characters
/// rho_1..rho_n. Immutable once built; the weights are validated to
/// generate G*.
///
/// The field characteristic never enters: everything downstream is
/// combinatorial. The usual hypothesis that it does not divide r is a
/// modelling assumption only.
class AbelianGroupData {
public:
    const std::vector<std::int64_t>& orders() const noexcept { return orders_; }
    /// k x n, entry (j, i) is the j-th residue of rho_{i+1}.
    const std::vector<std::vector<std::int64_t>>& weights() const noexcept { return weights_; }

    std::int64_t order() const noexcept { return order_; }
    std::size_t factors() const noexcept { return orders_.size(); }
    std::size_t dimension() const noexcept { return n_; }

    Character trivial() const;
    /// rho_{label}, label in [1, n].
    Character weight(std::size_t label) const;
    Character add(const Character& a, const Character& b) const;
    Character negate(const Character& a) const;
    Character scale(const Character& a, std::int64_t k) const;
    /// deg(m) = sum_i m_i rho_i.
    Character degree(std::span<const std::int64_t> m) const;
    bool in_kernel_of_degree(std::span<const std::int64_t> m) const;

    /// Canonical vertex index: lexicographic on residues, so the trivial
    /// character is index 0 and Z/r with generator 1 gives rho_j -> j.
    std::size_t index_of(const Character& c) const;
    Character character_at(std::size_t index) const;

    bool is_cyclic_presentation() const noexcept { return orders_.size() == 1; }
    /// Order of rho_{label} in G*.
    std::int64_t weight_order(std::size_t label) const;

    bool operator==(const AbelianGroupData& other) const {
        return orders_ == other.orders_ && weights_ == other.weights_;
    }

private:
    friend AbelianGroupData build_group(std::vector<std::int64_t> orders,
                                        std::vector<std::vector<std::int64_t>> weights);

    std::vector<std::int64_t> orders_;
    std::vector<std::vector<std::int64_t>> weights_;
    std::int64_t order_ = 1;
    std::size_t n_ = 0;
};

/// Validates shapes, reduces the weights and checks that rho_1..rho_n
/// generate G* through the Hermite normal form of the weights augmented
/// with diag(orders). Throws BadShape or NonGenerating.
AbelianGroupData build_group(std::vector<std::int64_t> orders,
                             std::vector<std::vector<std::int64_t>> weights);

/// Shorthand for the cyclic action of type 1/r(a_1,...,a_n).
AbelianGroupData cyclic_group(std::int64_t r, const std::vector<std::int64_t>& weights);

/// "1/7(1,2)" for cyclic presentations, "2x2:1,0;0,1" otherwise.
std::string describe(const AbelianGroupData& group);

/// "rho_3" in the cyclic case, "rho_(1,0)" otherwise.
std::string character_name(const AbelianGroupData& group, const Character& c);

}  // namespace mckay
