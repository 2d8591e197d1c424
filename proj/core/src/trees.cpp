#include "dialg/trees.hpp"

#include "dialg/error.hpp"

#include <array>
#include <map>

namespace dialg {

const char* symbol(Product p)
{
    return p == Product::Left ? "⊣" : "⊢";
}

namespace {

struct Node {
    int left = -1;
    int right = -1;
    int parent = -1;
    bool leaf() const { return left < 0; }
};

struct ParsedTree {
    std::vector<Node> nodes;  // nodes[0] is the root
    std::vector<int> leaves;  // node id of leaf i
};

int parse_node(const std::vector<std::uint8_t>& code, std::size_t& pos, int parent, ParsedTree& t)
{
    const int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back(Node{-1, -1, parent});
    if (code.at(pos++) == 0) {
        t.leaves.push_back(id);
        return id;
    }
    const int l = parse_node(code, pos, id, t);
    const int r = parse_node(code, pos, id, t);
    t.nodes[id].left = l;
    t.nodes[id].right = r;
    return id;
}

ParsedTree parse(const std::vector<std::uint8_t>& code)
{
    ParsedTree t;
    std::size_t pos = 0;
    parse_node(code, pos, -1, t);
    return t;
}

void emit(const ParsedTree& t, int id, std::vector<std::uint8_t>& out)
{
    const Node& n = t.nodes[id];
    if (n.leaf()) {
        out.push_back(0);
        return;
    }
    out.push_back(1);
    emit(t, n.left, out);
    emit(t, n.right, out);
}

std::vector<std::vector<std::uint8_t>> generate(int m)
{
    if (m == 0)
        return {{0}};
    std::vector<std::vector<std::uint8_t>> out;
    for (int l = 0; l < m; ++l) {
        const auto lefts = generate(l);
        const auto rights = generate(m - 1 - l);
        for (const auto& a : lefts)
            for (const auto& b : rights) {
                std::vector<std::uint8_t> code{1};
                code.insert(code.end(), a.begin(), a.end());
                code.insert(code.end(), b.begin(), b.end());
                out.push_back(std::move(code));
            }
    }
    return out;
}

std::vector<std::uint8_t> delete_leaf(const std::vector<std::uint8_t>& code, int i)
{
    ParsedTree t = parse(code);
    const int leaf = t.leaves.at(static_cast<std::size_t>(i));
    const int p = t.nodes[leaf].parent;
    const int sibling = t.nodes[p].left == leaf ? t.nodes[p].right : t.nodes[p].left;
    const int g = t.nodes[p].parent;
    int root = 0;
    if (g < 0) {
        root = sibling;
    } else {
        if (t.nodes[g].left == p)
            t.nodes[g].left = sibling;
        else
            t.nodes[g].right = sibling;
    }
    std::vector<std::uint8_t> out;
    emit(t, root, out);
    return out;
}

Product label_of(const std::vector<std::uint8_t>& code, int m, int i)
{
    const ParsedTree t = parse(code);
    const Node& leaf = t.nodes[t.leaves.at(static_cast<std::size_t>(i))];
    const bool parent_is_root = leaf.parent == 0;
    if (i == 0)
        return parent_is_root ? Product::Left : Product::Right;
    if (i == m)
        return parent_is_root ? Product::Right : Product::Left;
    const bool is_left_child = t.nodes[leaf.parent].left == t.leaves[static_cast<std::size_t>(i)];
    return is_left_child ? Product::Left : Product::Right;
}

// Tables for Y_0 .. Y_kMaxTreeDegree, built once on first use. Read-only
// afterwards, so concurrent readers need no locking.
struct Catalog {
    std::array<std::vector<Tree>, kMaxTreeDegree + 1> trees;
    std::array<std::vector<std::vector<std::size_t>>, kMaxTreeDegree + 1> faces;
    std::array<std::vector<std::vector<Product>>, kMaxTreeDegree + 1> labels;

    Catalog()
    {
        for (int m = 0; m <= kMaxTreeDegree; ++m) {
            std::size_t idx = 0;
            for (auto& code : generate(m))
                trees[m].push_back(Tree{m, idx++, std::move(code)});
        }
        for (int m = 1; m <= kMaxTreeDegree; ++m) {
            std::map<std::vector<std::uint8_t>, std::size_t> lower;
            for (const auto& t : trees[m - 1])
                lower.emplace(t.code, t.index);
            for (const auto& t : trees[m]) {
                std::vector<std::size_t> f;
                std::vector<Product> lab;
                for (int i = 0; i <= m; ++i) {
                    f.push_back(lower.at(delete_leaf(t.code, i)));
                    lab.push_back(label_of(t.code, m, i));
                }
                faces[m].push_back(std::move(f));
                labels[m].push_back(std::move(lab));
            }
        }
    }
};

const Catalog& catalog()
{
    static const Catalog c;
    return c;
}

void check_degree(int m)
{
    if (m < 0 || m > kMaxTreeDegree)
        throw Error(ErrorKind::CapExceeded, "tree degree " + std::to_string(m) +
                                                " outside the tabulated range 0.." +
                                                std::to_string(kMaxTreeDegree));
}

void check_leaf(int m, int i)
{
    if (i < 0 || i > m)
        throw Error(ErrorKind::IndexOutOfRange,
                    "leaf index " + std::to_string(i) + " not in 0.." + std::to_string(m));
}

} // namespace

std::string Tree::shape() const
{
    std::string out;
    std::vector<int> pending;  // children still to emit per open node
    for (auto c : code) {
        if (c == 1) {
            out += '(';
            pending.push_back(2);
            continue;
        }
        out += '|';
        while (!pending.empty() && --pending.back() == 0) {
            out += ')';
            pending.pop_back();
        }
    }
    return out;
}

std::string Tree::name() const
{
    static const char* const y2[] = {"[21]", "[12]"};
    static const char* const y3[] = {"[321]", "[213]", "[131]", "[312]", "[123]"};
    switch (degree) {
    case 1: return "[1]";
    case 2: return y2[index];
    case 3: return y3[index];
    default: return shape();
    }
}

const std::vector<Tree>& enumerate_trees(int m, int cap)
{
    if (m < 1)
        throw Error(ErrorKind::IndexOutOfRange, "tree degree must be at least 1");
    if (m > cap || m > kMaxTreeDegree)
        throw Error(ErrorKind::CapExceeded,
                    "tree degree " + std::to_string(m) + " above cap " + std::to_string(cap));
    return catalog().trees[m];
}

const std::vector<Tree>& trees_of_degree(int m)
{
    check_degree(m);
    return catalog().trees[m];
}

std::size_t catalan(int m)
{
    std::size_t c = 1;
    for (int k = 0; k < m; ++k)
        c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

const Tree& face(const Tree& y, int i)
{
    if (y.degree < 2)
        throw Error(ErrorKind::IndexOutOfRange, "faces are defined from degree 2 up");
    return catalog().trees[y.degree - 1][face_index(y.degree, y.index, i)];
}

Product prod_label(const Tree& y, int i)
{
    return prod_label(y.degree, y.index, i);
}

std::size_t face_index(int degree, std::size_t tree_index, int i)
{
    check_degree(degree);
    if (degree < 1)
        throw Error(ErrorKind::IndexOutOfRange, "the single-leaf tree has no faces");
    check_leaf(degree, i);
    return catalog().faces[degree].at(tree_index)[static_cast<std::size_t>(i)];
}

Product prod_label(int degree, std::size_t tree_index, int i)
{
    check_degree(degree);
    if (degree < 1)
        throw Error(ErrorKind::IndexOutOfRange, "the single-leaf tree has no labels");
    check_leaf(degree, i);
    return catalog().labels[degree].at(tree_index)[static_cast<std::size_t>(i)];
}

std::size_t right_comb_index(int m)
{
    check_degree(m);
    return 0;
}

std::size_t left_comb_index(int m)
{
    return trees_of_degree(m).size() - 1;
}

} // namespace dialg
