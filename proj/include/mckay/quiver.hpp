#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mckay/group.hpp"

namespace mckay {

/// Dense row-major integer matrix for the small incidence data.
class SmallMatrix {
public:
    SmallMatrix() = default;
    SmallMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<std::int64_t> row(std::size_t i) const;
    std::vector<std::int64_t> column(std::size_t j) const;
    std::vector<std::int64_t> apply(std::span<const std::int64_t> x) const;

    bool operator==(const SmallMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// The arrow a_i^rho, running from tail = rho + rho_i to head = rho.
struct Arrow {
    Character rho;
    std::size_t label = 0;  // 1..n
    Character head;
    Character tail;
    std::size_t head_index = 0;
    std::size_t tail_index = 0;
};

class McKayQuiver {
public:
    const AbelianGroupData& group() const noexcept { return group_; }
    const std::vector<Character>& vertices() const noexcept { return vertices_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }
    /// Column index of a_label^{vertex}: blocks by vertex, labels ascending.
    std::size_t arrow_index(std::size_t vertex, std::size_t label) const {
        return vertex * group_.dimension() + (label - 1);
    }

private:
    friend McKayQuiver build_quiver(const AbelianGroupData& group);

    AbelianGroupData group_;
    std::vector<Character> vertices_;
    std::vector<Arrow> arrows_;
};

/// Vertices in canonical order and all n*r arrows; strong connectivity is
/// verified (throws Internal if violated, which a validated group rules out).
McKayQuiver build_quiver(const AbelianGroupData& group);

/// B: r x nr vertex-arrow incidence (column e_head - e_tail).
/// C: B stacked over D. D: n x nr label indicator.
struct IncidenceData {
    SmallMatrix B;
    SmallMatrix C;
    SmallMatrix D;
};

IncidenceData incidence_matrices(const McKayQuiver& quiver);

/// Signed traversal counts of a walk plus its type D v.
struct PathVector {
    std::vector<std::int64_t> v;
    std::vector<std::int64_t> type;
};

struct SignedArrow {
    std::size_t arrow = 0;
    int direction = 1;  // +1 along the orientation, -1 against
};

/// Vector of a walk given as a sequence of signed arrows.
PathVector path_vector(const McKayQuiver& quiver, std::span<const SignedArrow> walk);

/// c_{i,j}^rho for i < j and every rho, ordered by (rho, i, j).
std::vector<std::vector<std::int64_t>> kernel_generators_cij(const McKayQuiver& quiver);

/// Exponent pair of a binomial z^plus - z^minus.
struct Binomial {
    std::vector<std::int64_t> plus;
    std::vector<std::int64_t> minus;
};

/// The relations of the quiver as binomials, one per c_{i,j}^rho.
std::vector<Binomial> relation_binomials(const McKayQuiver& quiver);

/// Renders e.g. "z_2^{rho_1}z_1^{rho_0} - z_1^{rho_2}z_2^{rho_0}"; factors of
/// each monomial appear in arrow order.
std::string render_binomial(const McKayQuiver& quiver, const Binomial& b);

/// A directed path from `from` to `to` whose label counts m are the
/// lexicographically smallest in N^n with deg(m) = from - to.
PathVector directed_path(const McKayQuiver& quiver, const Character& from, const Character& to);

/// Same path as an ordered arrow sequence.
std::vector<SignedArrow> directed_walk(const McKayQuiver& quiver, const Character& from, const Character& to);

/// Closed walk from `base` of type m: |m_1| label-1 steps, then label 2,
/// and so on; forward when m_i > 0, backward when m_i < 0. Throws NotInM
/// when deg(m) is nontrivial.
PathVector cycle_from_type(const McKayQuiver& quiver, const Character& base, std::span<const std::int64_t> m);

/// u in N^{nr} with B u = theta, routed greedily one source/sink pair at a
/// time along directed paths. Throws BadTheta when sum(theta) != 0.
std::vector<std::int64_t> theta_decompose(const McKayQuiver& quiver, std::span<const std::int64_t> theta);

/// A single closed walk from `base` whose vector is u, for u in ker_Z(B).
/// Disconnected cycle components are joined to `base` by paths traversed
/// there and back. Throws BadShape if B u != 0.
std::vector<SignedArrow> closed_walk(const McKayQuiver& quiver, const Character& base,
                                     std::span<const std::int64_t> u);

}  // namespace mckay
