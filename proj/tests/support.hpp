#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mckay/group_spec.hpp"
#include "mckay/moduli.hpp"

namespace fixtures {

using namespace mckay;

inline RatVector rv(std::initializer_list<long> xs) {
    RatVector out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

inline IntVector iv(std::initializer_list<long> xs) {
    IntVector out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

// 1/11(1,2,8) with the parameter of the worked fan example.
inline AbelianGroupData eleven() { return cyclic_group(11, {1, 2, 8}); }
inline GitParameter eleven_theta() { return GitParameter::make(rv({1, 1, 1, 1, -7, -9, 1, 1, 1, 8, 1})); }

struct Facet {
    IntVector a;
    long b;
};

// Reference facet list; label k is index k-1.
inline std::vector<Facet> table_facets() {
    return {{iv({2, 4, 5}), 159}, {iv({3, 6, 2}), 112}, {iv({1, 2, 8}), 96}, {iv({7, 3, 1}), 78},
            {iv({6, 1, 4}), 70},  {iv({1, 0, 0}), 0},   {iv({0, 1, 0}), 0},  {iv({0, 0, 1}), 0}};
}

// Reference vertices with their facet labels.
inline std::vector<std::pair<RatVector, std::set<int>>> table_vertices() {
    return {{rv({0, 0, 78}), {4, 6, 7}},  {rv({0, 21, 15}), {1, 4, 6}}, {rv({0, 26, 11}), {1, 5, 6}},
            {rv({0, 70, 0}), {5, 6, 8}},  {rv({22, 0, 23}), {1, 2, 7}}, {rv({96, 0, 0}), {3, 7, 8}},
            {rv({4, 0, 50}), {2, 4, 7}},  {rv({4, 9, 23}), {1, 2, 4}},  {rv({4, 46, 0}), {3, 5, 8}},
            {rv({72, 0, 3}), {1, 3, 7}},  {rv({4, 34, 3}), {1, 3, 5}}};
}

// Reference label -> canonical index, or -1 when a facet is missing.
inline std::map<int, int> renumbering(const HPolyhedron& h) {
    std::map<int, int> out;
    const auto facets = table_facets();
    for (std::size_t k = 0; k < facets.size(); ++k) {
        out[static_cast<int>(k) + 1] = -1;
        for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
            if (clear_denominators(h.inequalities[i].a) == facets[k].a && h.inequalities[i].b == facets[k].b) {
                out[static_cast<int>(k) + 1] = static_cast<int>(i);
            }
        }
    }
    return out;
}

inline std::vector<int> expected_b_10_7_6() {
    return {0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 1};
}

inline std::vector<int> expected_b_8_3_1() {
    return {0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 0, 0, 1};
}

// Groups exercised by the property suites; the last one is non-cyclic.
inline std::vector<std::string> suite_specs() {
    return {"1/2(1)", "1/3(1,1,1)", "1/7(1,2)", "1/5(1,2,2)", "2x2:1,0;0,1"};
}

}  // namespace fixtures
