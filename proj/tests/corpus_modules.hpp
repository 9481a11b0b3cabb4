#pragma once

// Small module families shared by the property tests.

#include <vector>

#include "gps/algebra.hpp"

namespace testing_corpus {

using gps::BaseRing;
using gps::Factor;
using gps::GradedModule;
using gps::GradingGroup;
using gps::Int;

inline GradedModule cyclic(Int n)
{
    return GradedModule(BaseRing::modular(n), GradingGroup({2}), {{n, {0}}});
}

inline GradedModule integers() { return GradedModule(BaseRing::integers(), GradingGroup({2}), {{0, {0}}}); }

inline GradedModule z_times_z()
{
    return GradedModule(BaseRing::integers(), GradingGroup({2}), {{0, {0}}, {0, {1}}});
}

// Z_n for 2 <= n <= 36, then Z_p x Z_q (p <= q) under every degree pattern
// over Z_2 and Z_2 x Z_2, over Z and over Z_lcm(p, q).
inline std::vector<GradedModule> finite_family()
{
    std::vector<GradedModule> out;
    for (Int n = 2; n <= 36; ++n)
        out.push_back(cyclic(n));
    const std::vector<Int> orders{2, 3, 4, 8, 9};
    const std::vector<std::vector<Int>> groups{{2}, {2, 2}};
    for (Int p : orders)
        for (Int q : orders) {
            if (q < p)
                continue;
            for (const auto& g : groups) {
                const GradingGroup group(g);
                const auto degrees = group.elements();
                for (std::size_t a = 0; a < degrees.size(); ++a)
                    for (std::size_t b = 0; b < degrees.size(); ++b) {
                        for (Int ring : {Int{0}, gps::lcm(p, q)}) {
                            const BaseRing r = ring == 0 ? BaseRing::integers() : BaseRing::modular(ring);
                            out.emplace_back(r, group, std::vector<Factor>{{p, degrees[a]}, {q, degrees[b]}});
                        }
                    }
            }
        }
    return out;
}

}  // namespace testing_corpus
