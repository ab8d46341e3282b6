#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "jacklaurent/error.hpp"

namespace jl {

/// Box (i, j): row i, column j, both 1-indexed, rows downward.
struct Box {
    int i = 1;
    int j = 1;
    friend auto operator<=>(const Box&, const Box&) = default;
};

using BoxSet = std::set<Box>;

/// Partition as a weakly decreasing sequence of positive parts; empty = empty partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    /// 1-indexed part; 0 beyond the length.
    int part(int r) const {
        return (r >= 1 && r <= length()) ? parts_[r - 1] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }
    int box_count() const;
    bool empty() const { return parts_.empty(); }
    bool contains(Box b) const { return b.i >= 1 && b.j >= 1 && b.j <= part(b.i); }
    BoxSet boxes() const;

    Partition conjugate() const;
    /// Row-end corners (λ \ x still a diagram), in row order.
    std::vector<Box> removable_boxes() const;
    /// Co-corners (λ ∪ x still a diagram), in row order.
    std::vector<Box> addable_boxes() const;

    Partition with_box(Box b) const;     // throws if not addable
    Partition without_box(Box b) const;  // throws if not removable

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

struct Bipartition {
    Partition lambda;
    Partition mu;
    int box_count() const { return lambda.box_count() + mu.box_count(); }
    friend bool operator==(const Bipartition&, const Bipartition&) = default;
    friend bool operator<(const Bipartition& a, const Bipartition& b) {
        if (a.lambda == b.lambda) return a.mu < b.mu;
        return a.lambda < b.lambda;
    }
};

/// componentwise inclusion of the two diagrams
bool subset_of(const Bipartition& a, const Bipartition& b);

struct Rectangle {
    int n = 1;
    int m = 1;
    Rectangle() = default;
    Rectangle(int n_, int m_);
    bool contains(Box b) const { return b.i >= 1 && b.i <= n && b.j >= 1 && b.j <= m; }
    bool contains(const Partition& p) const { return p.length() <= n && p.part(1) <= m; }
    bool contains(const Bipartition& a) const { return contains(a.lambda) && contains(a.mu); }
    BoxSet boxes() const;
    Partition full() const;  // the n x m rectangle as a partition
    friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

/// Central symmetry (i,j) -> (n-i+1, m-j+1); involution on the rectangle.
Box theta(Box x, const Rectangle& rect);
BoxSet theta(const BoxSet& s, const Rectangle& rect);

/// omega(λ, μ) = (λ, π \ θ(μ)); involution on bipartitions inside the rectangle.
Bipartition omega(const Bipartition& a, const Rectangle& rect);

BoxSet box_union(const BoxSet& a, const BoxSet& b);
BoxSet box_intersect(const BoxSet& a, const BoxSet& b);
BoxSet box_diff(const BoxSet& a, const BoxSet& b);

bool is_young(const BoxSet& s);
Partition partition_from_boxes(const BoxSet& s);  // throws unless is_young

/// Connected components under edge adjacency, ordered NE to SW:
/// increasing minimal row, ties broken by decreasing minimal column.
std::vector<BoxSet> connected_components(const BoxSet& s);

/// Grid of λ against θ(μ) with the intersection shaded and the paired
/// components of λ∩θ(μ) and π\(λ∪θ(μ)) labelled.
std::string render_ascii(const Bipartition& a, const Rectangle& rect);

}  // namespace jl
