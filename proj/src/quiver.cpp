#include "mckay/quiver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "mckay/error.hpp"

namespace mckay {

std::vector<std::int64_t> SmallMatrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<std::int64_t> SmallMatrix::column(std::size_t j) const {
    std::vector<std::int64_t> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<std::int64_t> SmallMatrix::apply(std::span<const std::int64_t> x) const {
    std::vector<std::int64_t> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    }
    return y;
}

McKayQuiver build_quiver(const AbelianGroupData& group) {
    McKayQuiver q;
    q.group_ = group;
    const auto r = static_cast<std::size_t>(group.order());
    const std::size_t n = group.dimension();
    q.vertices_.reserve(r);
    for (std::size_t v = 0; v < r; ++v) q.vertices_.push_back(group.character_at(v));
    q.arrows_.reserve(n * r);
    for (std::size_t v = 0; v < r; ++v) {
        for (std::size_t i = 1; i <= n; ++i) {
            Arrow a;
            a.rho = q.vertices_[v];
            a.label = i;
            a.head = a.rho;
            a.tail = group.add(a.rho, group.weight(i));
            a.head_index = v;
            a.tail_index = group.index_of(a.tail);
            q.arrows_.push_back(std::move(a));
        }
    }

    // Strong connectivity: everything reachable from vertex 0 both ways.
    auto reach = [&](bool forward) {
        std::vector<bool> seen(r, false);
        std::deque<std::size_t> queue{0};
        seen[0] = true;
        while (!queue.empty()) {
            const auto x = queue.front();
            queue.pop_front();
            for (const auto& a : q.arrows_) {
                const auto from = forward ? a.tail_index : a.head_index;
                const auto to = forward ? a.head_index : a.tail_index;
                if (from == x && !seen[to]) {
                    seen[to] = true;
                    queue.push_back(to);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    };
    if (!reach(true) || !reach(false)) throw Error(ErrorCode::Internal, "McKay quiver is not strongly connected");
    return q;
}

IncidenceData incidence_matrices(const McKayQuiver& quiver) {
    const std::size_t r = quiver.vertex_count();
    const std::size_t n = quiver.group().dimension();
    const std::size_t m = quiver.arrow_count();
    IncidenceData data{SmallMatrix(r, m), SmallMatrix(r + n, m), SmallMatrix(n, m)};
    for (std::size_t k = 0; k < m; ++k) {
        const auto& a = quiver.arrows()[k];
        data.B(a.head_index, k) += 1;
        data.B(a.tail_index, k) -= 1;
        data.D(a.label - 1, k) = 1;
    }
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < r; ++i) data.C(i, k) = data.B(i, k);
        for (std::size_t i = 0; i < n; ++i) data.C(r + i, k) = data.D(i, k);
    }
    return data;
}

PathVector path_vector(const McKayQuiver& quiver, std::span<const SignedArrow> walk) {
    PathVector p{std::vector<std::int64_t>(quiver.arrow_count(), 0),
                 std::vector<std::int64_t>(quiver.group().dimension(), 0)};
    for (const auto& s : walk) {
        p.v[s.arrow] += s.direction;
        p.type[quiver.arrows()[s.arrow].label - 1] += s.direction;
    }
    return p;
}

std::vector<std::vector<std::int64_t>> kernel_generators_cij(const McKayQuiver& quiver) {
    const auto& g = quiver.group();
    const std::size_t n = g.dimension();
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t v = 0; v < quiver.vertex_count(); ++v) {
        const auto& rho = quiver.vertices()[v];
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = i + 1; j <= n; ++j) {
                std::vector<std::int64_t> c(quiver.arrow_count(), 0);
                const auto rho_i = g.index_of(g.add(rho, g.weight(i)));
                const auto rho_j = g.index_of(g.add(rho, g.weight(j)));
                c[quiver.arrow_index(v, i)] += 1;
                c[quiver.arrow_index(rho_i, j)] += 1;
                c[quiver.arrow_index(v, j)] -= 1;
                c[quiver.arrow_index(rho_j, i)] -= 1;
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

std::vector<Binomial> relation_binomials(const McKayQuiver& quiver) {
    std::vector<Binomial> out;
    for (const auto& c : kernel_generators_cij(quiver)) {
        Binomial b{std::vector<std::int64_t>(c.size(), 0), std::vector<std::int64_t>(c.size(), 0)};
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] > 0) b.plus[k] = c[k];
            if (c[k] < 0) b.minus[k] = -c[k];
        }
        out.push_back(std::move(b));
    }
    return out;
}

std::string render_binomial(const McKayQuiver& quiver, const Binomial& b) {
    auto monomial = [&](const std::vector<std::int64_t>& e) {
        std::string s;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            const auto& a = quiver.arrows()[k];
            std::string z = "z_" + std::to_string(a.label) + "^{" + character_name(quiver.group(), a.rho) + "}";
            s += e[k] == 1 ? z : "(" + z + ")^" + std::to_string(e[k]);
        }
        return s.empty() ? std::string("1") : s;
    };
    return monomial(b.plus) + " - " + monomial(b.minus);
}

std::vector<SignedArrow> directed_walk(const McKayQuiver& quiver, const Character& from, const Character& to) {
    const auto& g = quiver.group();
    const std::size_t n = g.dimension();
    const auto r = static_cast<std::size_t>(g.order());
    const Character target = g.add(from, g.negate(to));

    // reachable[i]: characters expressible with labels i+1..n.
    std::vector<std::vector<bool>> reachable(n + 1, std::vector<bool>(r, false));
    reachable[n][0] = true;
    for (std::size_t i = n; i-- > 0;) {
        const auto ord = g.weight_order(i + 1);
        for (std::size_t x = 0; x < r; ++x) {
            if (!reachable[i + 1][x]) continue;
            Character c = g.character_at(x);
            for (std::int64_t k = 0; k < ord; ++k) {
                reachable[i][g.index_of(c)] = true;
                c = g.add(c, g.weight(i + 1));
            }
        }
    }

    std::vector<std::int64_t> m(n, 0);
    Character rest = target;
    for (std::size_t i = 0; i < n; ++i) {
        while (!reachable[i + 1][g.index_of(rest)]) {
            ++m[i];
            rest = g.add(rest, g.negate(g.weight(i + 1)));
        }
    }

    std::vector<SignedArrow> walk;
    Character x = from;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::int64_t k = 0; k < m[i]; ++k) {
            x = g.add(x, g.negate(g.weight(i + 1)));
            walk.push_back({quiver.arrow_index(g.index_of(x), i + 1), 1});
        }
    }
    return walk;
}

PathVector directed_path(const McKayQuiver& quiver, const Character& from, const Character& to) {
    const auto walk = directed_walk(quiver, from, to);
    return path_vector(quiver, walk);
}

PathVector cycle_from_type(const McKayQuiver& quiver, const Character& base, std::span<const std::int64_t> m) {
    const auto& g = quiver.group();
    if (m.size() != g.dimension()) throw Error(ErrorCode::BadShape, "type vector length differs from n");
    if (!g.in_kernel_of_degree(m)) throw Error(ErrorCode::NotInM, "deg(m) is not the trivial character");
    std::vector<SignedArrow> walk;
    Character x = base;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const Character w = g.weight(i + 1);
        for (std::int64_t k = 0; k < std::abs(m[i]); ++k) {
            if (m[i] > 0) {
                x = g.add(x, g.negate(w));
                walk.push_back({quiver.arrow_index(g.index_of(x), i + 1), 1});
            } else {
                walk.push_back({quiver.arrow_index(g.index_of(x), i + 1), -1});
                x = g.add(x, w);
            }
        }
    }
    return path_vector(quiver, walk);
}

std::vector<std::int64_t> theta_decompose(const McKayQuiver& quiver, std::span<const std::int64_t> theta) {
    if (theta.size() != quiver.vertex_count()) throw Error(ErrorCode::BadTheta, "theta needs one entry per vertex");
    if (std::accumulate(theta.begin(), theta.end(), std::int64_t{0}) != 0) {
        throw Error(ErrorCode::BadTheta, "theta entries must sum to zero");
    }
    std::vector<std::int64_t> rest(theta.begin(), theta.end());
    std::vector<std::int64_t> u(quiver.arrow_count(), 0);
    while (true) {
        auto neg = std::find_if(rest.begin(), rest.end(), [](auto x) { return x < 0; });
        if (neg == rest.end()) break;
        auto pos = std::find_if(rest.begin(), rest.end(), [](auto x) { return x > 0; });
        const auto s = static_cast<std::size_t>(neg - rest.begin());
        const auto t = static_cast<std::size_t>(pos - rest.begin());
        const std::int64_t units = std::min(-*neg, *pos);
        // B v = e_t - e_s for a directed path s -> t.
        const auto p = directed_path(quiver, quiver.vertices()[s], quiver.vertices()[t]);
        for (std::size_t k = 0; k < u.size(); ++k) u[k] += units * p.v[k];
        rest[s] += units;
        rest[t] -= units;
    }
    return u;
}

std::vector<SignedArrow> closed_walk(const McKayQuiver& quiver, const Character& base,
                                     std::span<const std::int64_t> u) {
    const std::size_t r = quiver.vertex_count();
    const auto& arrows = quiver.arrows();
    if (u.size() != arrows.size()) throw Error(ErrorCode::BadShape, "vector length differs from nr");
    std::vector<std::int64_t> balance(r, 0);
    for (std::size_t k = 0; k < u.size(); ++k) {
        balance[arrows[k].head_index] += u[k];
        balance[arrows[k].tail_index] -= u[k];
    }
    if (std::any_of(balance.begin(), balance.end(), [](auto x) { return x != 0; })) {
        throw Error(ErrorCode::BadShape, "vector is not in ker(B)");
    }

    struct Edge {
        std::size_t to;
        SignedArrow step;
    };
    std::vector<std::vector<Edge>> out(r);
    auto add_step = [&](std::size_t k, int dir) {
        const auto& a = arrows[k];
        if (dir > 0) out[a.tail_index].push_back({a.head_index, {k, 1}});
        else out[a.head_index].push_back({a.tail_index, {k, -1}});
    };
    for (std::size_t k = 0; k < u.size(); ++k) {
        for (std::int64_t c = 0; c < std::abs(u[k]); ++c) add_step(k, u[k] > 0 ? 1 : -1);
    }

    // Join every component carrying edges to the base vertex.
    const std::size_t start = quiver.group().index_of(base);
    std::vector<std::size_t> parent(r);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t x = 0; x < r; ++x) {
        for (const auto& e : out[x]) parent[find(x)] = find(e.to);
    }
    for (std::size_t target = 0; target < r; ++target) {
        if (out[target].empty() || find(target) == find(start)) continue;
        // Undirected BFS from start to target.
        std::vector<std::ptrdiff_t> via(r, -1);
        std::vector<int> via_dir(r, 0);
        std::vector<std::size_t> prev(r, r);
        std::deque<std::size_t> queue{start};
        prev[start] = start;
        while (!queue.empty() && prev[target] == r) {
            const auto x = queue.front();
            queue.pop_front();
            for (std::size_t k = 0; k < arrows.size(); ++k) {
                const auto& a = arrows[k];
                std::size_t y = r;
                int dir = 0;
                if (a.tail_index == x) y = a.head_index, dir = 1;
                else if (a.head_index == x) y = a.tail_index, dir = -1;
                if (y == r || prev[y] != r) continue;
                prev[y] = x;
                via[y] = static_cast<std::ptrdiff_t>(k);
                via_dir[y] = dir;
                queue.push_back(y);
            }
        }
        for (std::size_t y = target; y != start; y = prev[y]) {
            const auto k = static_cast<std::size_t>(via[y]);
            add_step(k, via_dir[y]);
            add_step(k, -via_dir[y]);
            parent[find(y)] = find(prev[y]);
        }
    }

    // Hierholzer.
    std::vector<std::size_t> next(r, 0);
    std::vector<std::pair<std::size_t, SignedArrow>> stack{{start, {0, 0}}};
    std::vector<SignedArrow> circuit;
    while (!stack.empty()) {
        const auto x = stack.back().first;
        if (next[x] < out[x].size()) {
            const auto& e = out[x][next[x]++];
            stack.push_back({e.to, e.step});
        } else {
            if (stack.size() > 1) circuit.push_back(stack.back().second);
            stack.pop_back();
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    return circuit;
}

}  // namespace mckay
