#include "jacklaurent/diagrams.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace jl {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw Error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
    }
}

int Partition::box_count() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

BoxSet Partition::boxes() const {
    BoxSet s;
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= part(i); ++j) s.insert({i, j});
    return s;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= part(1); ++j) {
        int cnt = 0;
        for (int i = 1; i <= length(); ++i)
            if (part(i) >= j) ++cnt;
        c.push_back(cnt);
    }
    return Partition(std::move(c));
}

std::vector<Box> Partition::removable_boxes() const {
    std::vector<Box> out;
    for (int i = 1; i <= length(); ++i)
        if (part(i) > part(i + 1)) out.push_back({i, part(i)});
    return out;
}

std::vector<Box> Partition::addable_boxes() const {
    std::vector<Box> out;
    for (int i = 1; i <= length() + 1; ++i) {
        int prev = (i == 1) ? -1 : part(i - 1);  // -1 marks "no bound"
        if (i == 1 || part(i) < prev) out.push_back({i, part(i) + 1});
    }
    return out;
}

Partition Partition::with_box(Box b) const {
    if (b.i < 1 || b.j != part(b.i) + 1 || (b.i > 1 && part(b.i - 1) < b.j))
        throw Error("box is not addable");
    std::vector<int> p = parts_;
    if (b.i > length()) p.push_back(1);
    else p[b.i - 1] += 1;
    return Partition(std::move(p));
}

Partition Partition::without_box(Box b) const {
    if (b.i < 1 || b.i > length() || b.j != part(b.i) || part(b.i + 1) == part(b.i))
        throw Error("box is not removable");
    std::vector<int> p = parts_;
    p[b.i - 1] -= 1;
    if (p[b.i - 1] == 0) p.erase(p.begin() + (b.i - 1));
    return Partition(std::move(p));
}

bool subset_of(const Bipartition& a, const Bipartition& b) {
    auto leq = [](const Partition& x, const Partition& y) {
        for (int i = 1; i <= x.length(); ++i)
            if (x.part(i) > y.part(i)) return false;
        return true;
    };
    return leq(a.lambda, b.lambda) && leq(a.mu, b.mu);
}

Rectangle::Rectangle(int n_, int m_) : n(n_), m(m_) {
    if (n < 1 || m < 1) throw Error("rectangle requires n >= 1 and m >= 1");
}

BoxSet Rectangle::boxes() const {
    BoxSet s;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) s.insert({i, j});
    return s;
}

Partition Rectangle::full() const { return Partition(std::vector<int>(n, m)); }

Box theta(Box x, const Rectangle& rect) {
    if (!rect.contains(x)) throw Error("box outside the rectangle");
    return {rect.n - x.i + 1, rect.m - x.j + 1};
}

BoxSet theta(const BoxSet& s, const Rectangle& rect) {
    BoxSet out;
    for (const Box& b : s) out.insert(theta(b, rect));
    return out;
}

Bipartition omega(const Bipartition& a, const Rectangle& rect) {
    if (!rect.contains(a)) throw Error("bipartition does not fit inside the rectangle");
    BoxSet rest = box_diff(rect.boxes(), theta(a.mu.boxes(), rect));
    return {a.lambda, partition_from_boxes(rest)};
}

BoxSet box_union(const BoxSet& a, const BoxSet& b) {
    BoxSet r = a;
    r.insert(b.begin(), b.end());
    return r;
}

BoxSet box_intersect(const BoxSet& a, const BoxSet& b) {
    BoxSet r;
    for (const Box& x : a)
        if (b.count(x)) r.insert(x);
    return r;
}

BoxSet box_diff(const BoxSet& a, const BoxSet& b) {
    BoxSet r;
    for (const Box& x : a)
        if (!b.count(x)) r.insert(x);
    return r;
}

bool is_young(const BoxSet& s) {
    if (s.empty()) return true;
    std::map<int, std::pair<int, int>> rows;  // row -> (max col, count)
    int max_row = 0;
    for (const Box& b : s) {
        if (b.i < 1 || b.j < 1) return false;
        auto& [mx, cnt] = rows[b.i];
        mx = std::max(mx, b.j);
        ++cnt;
        max_row = std::max(max_row, b.i);
    }
    int prev = INT32_MAX;
    for (int i = 1; i <= max_row; ++i) {
        auto it = rows.find(i);
        if (it == rows.end()) return false;  // gap row above a nonempty one
        auto [mx, cnt] = it->second;
        if (mx != cnt) return false;  // row not a prefix of columns
        if (mx > prev) return false;
        prev = mx;
    }
    return true;
}

Partition partition_from_boxes(const BoxSet& s) {
    if (!is_young(s)) throw Error("box set is not a Young diagram");
    std::map<int, int> rows;
    for (const Box& b : s) rows[b.i] = std::max(rows[b.i], b.j);
    std::vector<int> parts;
    for (auto& [i, len] : rows) parts.push_back(len);
    return Partition(std::move(parts));
}

std::vector<BoxSet> connected_components(const BoxSet& s) {
    std::vector<BoxSet> comps;
    BoxSet left = s;
    while (!left.empty()) {
        BoxSet comp;
        std::vector<Box> stack{*left.begin()};
        left.erase(left.begin());
        while (!stack.empty()) {
            Box b = stack.back();
            stack.pop_back();
            comp.insert(b);
            for (Box nb : {Box{b.i - 1, b.j}, Box{b.i + 1, b.j}, Box{b.i, b.j - 1}, Box{b.i, b.j + 1}}) {
                auto it = left.find(nb);
                if (it != left.end()) {
                    left.erase(it);
                    stack.push_back(nb);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    auto key = [](const BoxSet& c) {
        int min_row = INT32_MAX, min_col = INT32_MAX;
        for (const Box& b : c) {
            min_row = std::min(min_row, b.i);
            min_col = std::min(min_col, b.j);
        }
        return std::pair<int, int>{min_row, -min_col};
    };
    std::sort(comps.begin(), comps.end(),
              [&key](const BoxSet& a, const BoxSet& b) { return key(a) < key(b); });
    return comps;
}

std::string render_ascii(const Bipartition& a, const Rectangle& rect) {
    if (!rect.contains(a)) throw Error("bipartition does not fit inside the rectangle");
    BoxSet lam = a.lambda.boxes();
    BoxSet tmu = theta(a.mu.boxes(), rect);
    BoxSet inter = box_intersect(lam, tmu);
    BoxSet off = box_diff(rect.boxes(), box_union(lam, tmu));
    std::vector<BoxSet> comps = connected_components(box_union(inter, off));

    std::ostringstream os;
    for (int i = 1; i <= rect.n; ++i) {
        os << "  ";
        for (int j = 1; j <= rect.m; ++j) {
            Box b{i, j};
            if (inter.count(b)) os << '#';
            else if (lam.count(b)) os << 'L';
            else if (tmu.count(b)) os << 'T';
            else os << '.';
        }
        os << '\n';
    }
    if (!comps.empty()) {
        os << "components:\n";
        for (std::size_t c = 0; c < comps.size(); ++c) {
            bool on = inter.count(*comps[c].begin()) > 0;
            os << "  nu_" << (c + 1) << (on ? " (in lambda): " : " (vacant): ");
            bool first = true;
            for (const Box& b : comps[c]) {
                if (!first) os << " ";
                os << "(" << b.i << "," << b.j << ")";
                first = false;
            }
            os << '\n';
        }
    }
    return os.str();
}

}  // namespace jl
