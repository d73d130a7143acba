#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ancat/grid.hpp"

namespace ancat {

/// Immutable binary tree (a parenthesization of its leaves). Copies share
/// structure, so values are cheap to pass around and safe across threads.
class BinaryTree {
public:
    /// A single leaf.
    BinaryTree();
    static BinaryTree leaf();
    static BinaryTree node(BinaryTree left, BinaryTree right);

    bool is_leaf() const { return !node_; }
    BinaryTree left() const;
    BinaryTree right() const;

    int leaf_count() const;
    /// Number of internal nodes (= leaf_count() - 1).
    int internal_count() const { return leaf_count() - 1; }

    /// Shape-lexicographic order with Leaf < Node; ties broken left then right.
    static int compare(const BinaryTree& a, const BinaryTree& b);
    friend bool operator==(const BinaryTree& a, const BinaryTree& b) {
        return compare(a, b) == 0;
    }
    friend bool operator<(const BinaryTree& a, const BinaryTree& b) {
        return compare(a, b) < 0;
    }

private:
    struct Node {
        std::shared_ptr<const Node> l, r;
        int leaves;
    };
    explicit BinaryTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_; // null = leaf
};

/// Grid normal form of a tree with m+1 leaves inside G_m: leaves sit at
/// (x, m-x), the root at (0,0), and every internal node covering the leaf
/// range [s,t] sits at the coordinate-wise minimum (s, m-t).
struct NormalForm {
    int m = 0;
    std::set<GridEdge> edges;
    std::set<GridPoint> branch_points;
    std::map<GridPoint, std::pair<int, int>> leaf_span;

    std::set<GridPoint> vertices() const;
    bool contains_vertex(GridPoint p) const;
};

/// All binary trees with m+1 leaves in shape-lexicographic order.
/// The count is the Catalan number C_m; m = 0 yields the single leaf.
std::vector<BinaryTree> enumerate_trees(int m);

NormalForm normal_form(const BinaryTree& b);

/// Branch points of the normal form minus the root (0,0).
std::set<GridPoint> internal_vertices(const BinaryTree& b);

enum class FlipDirection { forward, backward };

struct Flip {
    BinaryTree tree;
    FlipDirection direction;
};

/// Every tree one local rotation away. Forward flips rewrite (A.B).C into
/// A.(B.C) somewhere and are exactly the Tamari covers.
std::vector<Flip> flips(const BinaryTree& b);

/// Parses "((a(bc))(de))"-style parenthesizations: a leaf is one letter,
/// a node is '(' <tree> <tree> ')'.
BinaryTree parse_paren(std::string_view text);
std::string print_paren(const BinaryTree& b);

} // namespace ancat
