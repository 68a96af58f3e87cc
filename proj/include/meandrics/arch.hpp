// Noncrossing arch configurations over 2n bridges: the geometric substrate
// for meander counting. A configuration is stored as a fixpoint-free
// involution `match` on 0..2n-1 whose chords never cross; the canonical
// serialization is the balanced-parenthesis word read left to right.
#pragma once

#include "meandrics/numeric.hpp"

#include <functional>
#include <string>
#include <vector>

namespace meandrics {

struct ArchConfig {
    int order_2n = 0;              // number of bridges, always even
    std::vector<int> match;        // match[i] = partner of bridge i

    bool is_valid() const;
    std::string dyck() const;      // "(" opens an arch, ")" closes one
    bool operator==(const ArchConfig&) const = default;
};

ArchConfig arch_from_dyck(const std::string& word);

// All catalan(n) configurations of order 2n, in lexicographic order of the
// parenthesis word with '(' < ')'. The callback form streams without
// materializing; the vector form collects.
void for_each_arch(int n, const std::function<void(const ArchConfig&)>& fn);
std::vector<ArchConfig> enumerate_arches(int n);

ArchConfig rainbow(int n);         // match[i] = 2n-1-i, n concentric arches

// Closed loops formed when `a` is drawn above the river line and the mirror
// image of `b` below: the cycle count of the composed involutions, halved.
int glue_components(const ArchConfig& a, const ArchConfig& b);

// Arches of `a` that span the midpoint between bridges n-1 and n.
int winding(const ArchConfig& a);

}  // namespace meandrics
