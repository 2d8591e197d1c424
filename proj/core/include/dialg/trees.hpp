#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dialg {

/// Selects one of the two dialgebra products.
enum class Product : std::uint8_t {
    Left,  // ⊣
    Right, // ⊢
};

const char* symbol(Product p);

inline constexpr int kDefaultTreeCap = 5;
/// Largest degree the shared catalog tabulates.
inline constexpr int kMaxTreeDegree = 7;

/// A planar binary tree with `degree` internal nodes and degree+1 leaves,
/// leaves numbered 0..degree from left to right.
///
/// The shape is stored as its preorder code: 1 for an internal node, 0 for
/// a leaf. `index` is the shape's position in enumerate_trees(degree).
struct Tree {
    int degree = 0;
    std::size_t index = 0;
    std::vector<std::uint8_t> code;

    /// Parenthesised leaf notation, e.g. "(|(||))" for the right comb in Y_2.
    std::string shape() const;
    /// Conventional label ("[21]", "[123]", ...) in degrees 1..3, else shape().
    std::string name() const;

    friend bool operator==(const Tree& a, const Tree& b) { return a.code == b.code; }
};

/// All trees of Y_m in canonical order.
///
/// Order: by left-subtree size ascending, then left subtree, then right
/// subtree (recursively). Position 0 is always the right comb, in which
/// leaf 0 hangs off the root; the last position is the left comb.
/// Throws CapExceeded if m > cap and IndexOutOfRange if m < 1.
const std::vector<Tree>& enumerate_trees(int m, int cap = kDefaultTreeCap);

/// Y_m including the degenerate single-leaf tree Y_0, without cap checks.
/// Internal indexing helper for the cochain code.
const std::vector<Tree>& trees_of_degree(int m);

std::size_t catalan(int m);

/// d_i: delete leaf i and contract its parent. Requires degree >= 2 and
/// 0 <= i <= degree, else IndexOutOfRange.
const Tree& face(const Tree& y, int i);

/// The product selector ∘_i attached to leaf i of y:
///   0 < i < m : ⊣ if leaf i is a left child, ⊢ if a right child;
///   i = 0     : ⊣ iff leaf 0 hangs off the root;
///   i = m     : ⊢ iff leaf m hangs off the root.
Product prod_label(const Tree& y, int i);

/// Index-only fast paths used by the coboundary loops. face_index also
/// accepts degree 1, mapping to the single-leaf tree of Y_0.
std::size_t face_index(int degree, std::size_t tree_index, int i);
Product prod_label(int degree, std::size_t tree_index, int i);

/// Index of the right comb (all ⊣) and the left comb (all ⊢) in Y_m.
std::size_t right_comb_index(int m);
std::size_t left_comb_index(int m);

} // namespace dialg
