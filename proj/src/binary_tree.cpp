#include "ancat/binary_tree.hpp"

#include <algorithm>
#include <functional>

#include "ancat/errors.hpp"

namespace ancat {

BinaryTree::BinaryTree() = default;

BinaryTree BinaryTree::leaf() { return BinaryTree(); }

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right) {
    auto n = std::make_shared<Node>();
    n->leaves = left.leaf_count() + right.leaf_count();
    n->l = std::move(left.node_);
    n->r = std::move(right.node_);
    return BinaryTree(std::move(n));
}

BinaryTree BinaryTree::left() const {
    if (is_leaf()) throw DomainError("leaf has no children");
    return BinaryTree(node_->l);
}

BinaryTree BinaryTree::right() const {
    if (is_leaf()) throw DomainError("leaf has no children");
    return BinaryTree(node_->r);
}

int BinaryTree::leaf_count() const { return node_ ? node_->leaves : 1; }

int BinaryTree::compare(const BinaryTree& a, const BinaryTree& b) {
    if (a.node_ == b.node_) return 0; // shared structure
    if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? -1 : 1;
    if (a.is_leaf()) return 0;
    if (int c = compare(a.left(), b.left()); c != 0) return c;
    return compare(a.right(), b.right());
}

std::vector<BinaryTree> enumerate_trees(int m) {
    if (m < 0) throw DomainError("tree size must be non-negative");
    std::vector<std::vector<BinaryTree>> by_size(m + 1);
    by_size[0] = {BinaryTree::leaf()};
    for (int k = 1; k <= m; ++k) {
        for (int i = 0; i < k; ++i)
            for (const auto& l : by_size[i])
                for (const auto& r : by_size[k - 1 - i])
                    by_size[k].push_back(BinaryTree::node(l, r));
        std::sort(by_size[k].begin(), by_size[k].end());
    }
    return by_size[m];
}

namespace {

void build_normal_form(const BinaryTree& b, int m, int s, int t, NormalForm& out) {
    if (b.is_leaf()) return; // leaf [s,s] already sits at (s, m-s)
    GridPoint bp{s, m - t};
    out.branch_points.insert(bp);
    out.leaf_span[bp] = {s, t};
    int t_left = s + b.left().leaf_count() - 1;
    // left child attaches by a run of unit y-edges up to (s, m-t_left)
    for (int y = m - t + 1; y <= m - t_left; ++y)
        out.edges.insert(right_edge({s, y}));
    // right child by a run of unit x-edges out to (t_left+1, m-t)
    for (int x = s + 1; x <= t_left + 1; ++x)
        out.edges.insert(left_edge({x, m - t}));
    build_normal_form(b.left(), m, s, t_left, out);
    build_normal_form(b.right(), m, t_left + 1, t, out);
}

} // namespace

std::set<GridPoint> NormalForm::vertices() const {
    std::set<GridPoint> v;
    v.insert({0, 0});
    for (const auto& e : edges) {
        v.insert(e.anchor);
        v.insert(e.other_end());
    }
    return v;
}

bool NormalForm::contains_vertex(GridPoint p) const {
    if (p.x == 0 && p.y == 0) return true;
    // every non-root vertex carries its parent edge
    if (p.x >= 1 && edges.count(left_edge(p))) return true;
    if (p.y >= 1 && edges.count(right_edge(p))) return true;
    // it may also be the far end of a child edge
    if (edges.count(GridEdge{{p.x + 1, p.y}, EdgeSide::L})) return true;
    if (edges.count(GridEdge{{p.x, p.y + 1}, EdgeSide::R})) return true;
    return false;
}

NormalForm normal_form(const BinaryTree& b) {
    NormalForm out;
    out.m = b.internal_count();
    build_normal_form(b, out.m, 0, out.m, out);
    return out;
}

std::set<GridPoint> internal_vertices(const BinaryTree& b) {
    auto nf = normal_form(b);
    nf.branch_points.erase(GridPoint{0, 0});
    return nf.branch_points;
}

namespace {

// Rebuilds the whole tree with `replacement` substituted at preorder
// position `target` (counting internal nodes only).
BinaryTree replace_at(const BinaryTree& b, int target, int& counter,
                      const BinaryTree& replacement) {
    if (b.is_leaf()) return b;
    int my_index = counter++;
    if (my_index == target) return replacement;
    BinaryTree l = replace_at(b.left(), target, counter, replacement);
    BinaryTree r = replace_at(b.right(), target, counter, replacement);
    return BinaryTree::node(l, r);
}

void collect_flips(const BinaryTree& whole, const BinaryTree& sub, int& counter,
                   std::vector<Flip>& out) {
    if (sub.is_leaf()) return;
    int here = counter++;
    if (!sub.left().is_leaf()) {
        // (A.B).C -> A.(B.C)
        BinaryTree rotated = BinaryTree::node(
            sub.left().left(), BinaryTree::node(sub.left().right(), sub.right()));
        int c = 0;
        out.push_back({replace_at(whole, here, c, rotated), FlipDirection::forward});
    }
    if (!sub.right().is_leaf()) {
        // A.(B.C) -> (A.B).C
        BinaryTree rotated = BinaryTree::node(
            BinaryTree::node(sub.left(), sub.right().left()), sub.right().right());
        int c = 0;
        out.push_back({replace_at(whole, here, c, rotated), FlipDirection::backward});
    }
    collect_flips(whole, sub.left(), counter, out);
    collect_flips(whole, sub.right(), counter, out);
}

} // namespace

std::vector<Flip> flips(const BinaryTree& b) {
    std::vector<Flip> out;
    int counter = 0;
    collect_flips(b, b, counter, out);
    return out;
}

namespace {

BinaryTree parse_at(std::string_view text, std::size_t& pos) {
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    char c = text[pos];
    if (c == '(') {
        ++pos;
        BinaryTree l = parse_at(text, pos);
        BinaryTree r = parse_at(text, pos);
        if (pos >= text.size() || text[pos] != ')')
            throw ParseError("expected ')'", pos);
        ++pos;
        return BinaryTree::node(l, r);
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
        ++pos;
        return BinaryTree::leaf();
    }
    throw ParseError("expected '(' or a letter", pos);
}

} // namespace

BinaryTree parse_paren(std::string_view text) {
    std::size_t pos = 0;
    BinaryTree b = parse_at(text, pos);
    if (pos != text.size()) throw ParseError("trailing input", pos);
    return b;
}

namespace {

void print_to(const BinaryTree& b, int& next_leaf, std::string& out) {
    if (b.is_leaf()) {
        if (next_leaf >= 26)
            throw DomainError("print_paren supports at most 26 leaves");
        out.push_back(static_cast<char>('a' + next_leaf++));
        return;
    }
    out.push_back('(');
    print_to(b.left(), next_leaf, out);
    print_to(b.right(), next_leaf, out);
    out.push_back(')');
}

} // namespace

std::string print_paren(const BinaryTree& b) {
    std::string out;
    int next_leaf = 0;
    print_to(b, next_leaf, out);
    return out;
}

} // namespace ancat
