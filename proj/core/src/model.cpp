#include "dialg/model.hpp"

#include "dialg/error.hpp"
#include "dialg/examples.hpp"

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <span>

namespace dialg {

namespace {

struct Pos {
    std::size_t line = 0;
    std::size_t col = 0;
};

[[noreturn]] void fail(ErrorKind kind, Pos at, const std::string& msg)
{
    throw Error(kind, fmt::format("line {}, column {}: {}", at.line, at.col, msg));
}

struct Token {
    std::string text;
    Pos pos;
    bool is_tuple = false;
    std::vector<Token> items; // tuple elements
};

std::vector<Token> tokenize(std::string_view line, std::size_t lineno)
{
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (i < line.size()) {
        const char c = line[i];
        if (is_space(c)) {
            ++i;
            continue;
        }
        if (c == '#')
            break;
        Token tok;
        tok.pos = {lineno, i + 1};
        if (c == '(') {
            tok.is_tuple = true;
            ++i;
            for (;;) {
                while (i < line.size() && is_space(line[i]))
                    ++i;
                const std::size_t start = i;
                while (i < line.size() && line[i] != ',' && line[i] != ')' && line[i] != '#')
                    ++i;
                if (i >= line.size() || line[i] == '#')
                    fail(ErrorKind::ParseError, tok.pos, "unterminated tuple");
                std::size_t end = i;
                while (end > start && is_space(line[end - 1]))
                    --end;
                if (end == start)
                    fail(ErrorKind::ParseError, {lineno, start + 1}, "empty tuple element");
                tok.items.push_back({std::string(line.substr(start, end - start)), {lineno, start + 1}, false, {}});
                if (line[i++] == ')')
                    break;
            }
        } else if (c == ')' || c == ',') {
            fail(ErrorKind::ParseError, tok.pos, fmt::format("unexpected '{}'", c));
        } else {
            const std::size_t start = i;
            while (i < line.size() && !is_space(line[i]) && line[i] != '(' && line[i] != '#')
                ++i;
            tok.text = std::string(line.substr(start, i - start));
        }
        out.push_back(std::move(tok));
    }
    return out;
}

std::size_t parse_count(const Token& t, const char* what)
{
    if (t.is_tuple)
        fail(ErrorKind::ParseError, t.pos, fmt::format("expected {}, found a tuple", what));
    std::size_t v = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        fail(ErrorKind::ParseError, t.pos, fmt::format("expected {}, found '{}'", what, t.text));
    return v;
}

std::size_t parse_index(const Token& t, std::size_t bound, const char* what)
{
    const std::size_t v = parse_count(t, what);
    if (v >= bound)
        fail(ErrorKind::ParseError, t.pos, fmt::format("{} {} out of range (must be below {})", what, v, bound));
    return v;
}

Scalar parse_scalar(Field f, const Token& t)
{
    try {
        return Scalar::parse(f, t.text);
    } catch (const Error& e) {
        fail(ErrorKind::BadScalar, t.pos, fmt::format("'{}' is not an element of {}", t.text, f.name()));
    }
}

const Token& tuple_arg(const std::vector<Token>& toks, std::size_t i, std::size_t arity)
{
    const Token& t = toks[i];
    if (!t.is_tuple)
        fail(ErrorKind::ParseError, t.pos, fmt::format("expected a tuple, found '{}'", t.text));
    if (t.items.size() != arity)
        fail(ErrorKind::ParseError, t.pos,
             fmt::format("expected a tuple of {} entries, found {}", arity, t.items.size()));
    return t;
}

void expect_arity(const std::vector<Token>& toks, std::size_t n, const char* usage)
{
    if (toks.size() != n) {
        const Pos at = toks.size() > n ? toks[n].pos : toks.front().pos;
        fail(ErrorKind::ParseError, at, fmt::format("expected '{}'", usage));
    }
}

std::string word(const Token& t, const char* what)
{
    if (t.is_tuple)
        fail(ErrorKind::ParseError, t.pos, fmt::format("expected {}, found a tuple", what));
    return t.text;
}

class Parser {
public:
    Parser(std::string_view text, std::optional<Field> override) : override_(override)
    {
        if (override_)
            model_.field = *override_;
        std::size_t lineno = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos)
                end = text.size();
            ++lineno;
            auto toks = tokenize(text.substr(start, end - start), lineno);
            if (!toks.empty())
                lines_.push_back(std::move(toks));
            last_line_ = lineno;
            start = end + 1;
        }
    }

    Model run()
    {
        while (cur_ < lines_.size()) {
            const auto& toks = lines_[cur_];
            const Token& head = toks.front();
            const std::string kw = word(head, "a keyword");
            if (kw == "field") {
                parse_field(toks);
                ++cur_;
                continue;
            }
            if (kw != "dialgebra" && kw != "morphism" && kw != "deformation" && kw != "iso")
                fail(ErrorKind::ParseError, head.pos, fmt::format("unknown section '{}'", kw));
            expect_arity(toks, 2, (kw + " <name>").c_str());
            const Token name_tok = toks[1];
            const std::string name = word(name_tok, "a name");
            if (!names_.insert(name).second)
                fail(ErrorKind::ParseError, name_tok.pos, fmt::format("duplicate name '{}'", name));
            seen_block_ = true;
            const std::size_t begin = ++cur_;
            while (cur_ < lines_.size() && !(lines_[cur_].size() == 1 && lines_[cur_][0].text == "end" &&
                                             !lines_[cur_][0].is_tuple))
                ++cur_;
            if (cur_ == lines_.size())
                fail(ErrorKind::ParseError, {last_line_, 1}, fmt::format("missing 'end' for {} '{}'", kw, name));
            const std::span<const std::vector<Token>> body(lines_.data() + begin, cur_ - begin);
            if (kw == "dialgebra")
                parse_dialgebra(name, name_tok.pos, body);
            else if (kw == "morphism")
                parse_morphism(name, name_tok.pos, body);
            else if (kw == "deformation")
                parse_deformation(name, name_tok.pos, body);
            else
                parse_iso(name, name_tok.pos, body);
            ++cur_; // skip 'end'
        }
        return std::move(model_);
    }

private:
    void parse_field(const std::vector<Token>& toks)
    {
        if (seen_block_ || seen_field_)
            fail(ErrorKind::ParseError, toks[0].pos, "the field must be declared once, before any section");
        seen_field_ = true;
        if (toks.size() < 2)
            fail(ErrorKind::ParseError, toks[0].pos, "expected 'field rationals' or 'field gf <p>'");
        const std::string kind = word(toks[1], "a field");
        Field f = Field::rationals();
        if (kind == "rationals") {
            expect_arity(toks, 2, "field rationals");
        } else if (kind == "gf") {
            expect_arity(toks, 3, "field gf <p>");
            const std::size_t p = parse_count(toks[2], "a prime");
            try {
                f = Field::gf(p);
            } catch (const Error&) {
                fail(ErrorKind::BadScalar, toks[2].pos, fmt::format("{} is not a prime below 2^31", p));
            }
        } else {
            fail(ErrorKind::ParseError, toks[1].pos, fmt::format("unknown field '{}'", kind));
        }
        if (!override_)
            model_.field = f;
    }

    const Dialgebra& lookup_dialgebra(const Token& t)
    {
        const std::string name = word(t, "a dialgebra name");
        for (const auto& d : model_.dialgebras)
            if (d.name == name)
                return d;
        fail(ErrorKind::UnknownReference, t.pos, fmt::format("unknown dialgebra '{}'", name));
    }

    const DialgebraMorphism& lookup_morphism(const Token& t)
    {
        const std::string name = word(t, "a morphism name");
        for (const auto& m : model_.morphisms)
            if (m.name == name)
                return m;
        fail(ErrorKind::UnknownReference, t.pos, fmt::format("unknown morphism '{}'", name));
    }

    void parse_dialgebra(const std::string& name, Pos at, std::span<const std::vector<Token>> body)
    {
        const Field f = model_.field;
        std::optional<Dialgebra> d;
        for (const auto& toks : body) {
            const std::string kw = word(toks[0], "a keyword");
            if (kw == "dim") {
                if (d)
                    fail(ErrorKind::ParseError, toks[0].pos, "dim given twice");
                expect_arity(toks, 2, "dim <n>");
                const std::size_t n = parse_count(toks[1], "a dimension");
                if (n == 0)
                    fail(ErrorKind::ParseError, toks[1].pos, "dimension must be positive");
                d = Dialgebra::zero(name, f, n);
                continue;
            }
            if (!d)
                fail(ErrorKind::ParseError, toks[0].pos, "dim must come first");
            if (kw == "basis") {
                if (toks.size() != d->dim + 1)
                    fail(ErrorKind::ParseError, toks[0].pos, fmt::format("expected {} basis names", d->dim));
                for (std::size_t i = 0; i < d->dim; ++i)
                    d->basis_names[i] = word(toks[i + 1], "a basis name");
            } else if (kw == "L" || kw == "R") {
                Tensor3& t = kw == "L" ? d->left : d->right;
                if (toks.size() < 2)
                    fail(ErrorKind::ParseError, toks[0].pos, "expected at least one (i,j,k, value) tuple");
                for (std::size_t n = 1; n < toks.size(); ++n) {
                    const Token& tup = tuple_arg(toks, n, 4);
                    const std::size_t i = parse_index(tup.items[0], d->dim, "index");
                    const std::size_t j = parse_index(tup.items[1], d->dim, "index");
                    const std::size_t k = parse_index(tup.items[2], d->dim, "index");
                    t(i, j, k) = parse_scalar(f, tup.items[3]);
                }
            } else {
                fail(ErrorKind::ParseError, toks[0].pos, fmt::format("unknown dialgebra entry '{}'", kw));
            }
        }
        if (!d)
            fail(ErrorKind::ParseError, at, fmt::format("dialgebra '{}' has no dim", name));
        model_.dialgebras.push_back(std::move(*d));
    }

    void parse_morphism(const std::string& name, Pos at, std::span<const std::vector<Token>> body)
    {
        const Field f = model_.field;
        std::optional<Dialgebra> source, target;
        std::optional<Matrix> map;
        for (const auto& toks : body) {
            const std::string kw = word(toks[0], "a keyword");
            if (kw == "source" || kw == "target") {
                expect_arity(toks, 2, (kw + " <dialgebra>").c_str());
                if (map)
                    fail(ErrorKind::ParseError, toks[0].pos, "source and target must precede the map");
                (kw == "source" ? source : target) = lookup_dialgebra(toks[1]);
                continue;
            }
            if (!source || !target)
                fail(ErrorKind::ParseError, toks[0].pos, "source and target must come first");
            if (!map)
                map = Matrix(f, target->dim, source->dim);
            if (kw == "identity") {
                expect_arity(toks, 1, "identity");
                if (source->dim != target->dim)
                    fail(ErrorKind::ParseError, toks[0].pos, "identity needs equal dimensions");
                map = Matrix::identity(f, source->dim);
            } else if (kw == "map") {
                if (toks.size() < 2)
                    fail(ErrorKind::ParseError, toks[0].pos, "expected at least one (row,col, value) tuple");
                for (std::size_t n = 1; n < toks.size(); ++n) {
                    const Token& tup = tuple_arg(toks, n, 3);
                    const std::size_t r = parse_index(tup.items[0], target->dim, "row");
                    const std::size_t c = parse_index(tup.items[1], source->dim, "column");
                    (*map)(r, c) = parse_scalar(f, tup.items[2]);
                }
            } else {
                fail(ErrorKind::ParseError, toks[0].pos, fmt::format("unknown morphism entry '{}'", kw));
            }
        }
        if (!source || !target)
            fail(ErrorKind::ParseError, at, fmt::format("morphism '{}' needs a source and a target", name));
        if (!map)
            map = Matrix(f, target->dim, source->dim);
        model_.morphisms.push_back({name, std::move(*source), std::move(*target), std::move(*map)});
    }

    // Shared header handling for deformation and iso blocks: 'morphism' then 'order'.
    struct Header {
        const DialgebraMorphism* psi = nullptr;
        std::optional<int> order;
    };

    bool parse_header(Header& h, const std::vector<Token>& toks)
    {
        const std::string kw = word(toks[0], "a keyword");
        if (kw == "morphism") {
            expect_arity(toks, 2, "morphism <name>");
            if (h.psi)
                fail(ErrorKind::ParseError, toks[0].pos, "morphism given twice");
            h.psi = &lookup_morphism(toks[1]);
            return true;
        }
        if (kw == "order") {
            expect_arity(toks, 2, "order <N>");
            if (!h.psi)
                fail(ErrorKind::ParseError, toks[0].pos, "morphism must precede order");
            if (h.order)
                fail(ErrorKind::ParseError, toks[0].pos, "order given twice");
            const std::size_t n = parse_count(toks[1], "an order");
            if (n > static_cast<std::size_t>(kDefaultOrderCap))
                fail(ErrorKind::CapExceeded, toks[1].pos,
                     fmt::format("order {} exceeds the truncation cap {}", n, kDefaultOrderCap));
            h.order = static_cast<int>(n);
            return true;
        }
        if (!h.psi || !h.order)
            fail(ErrorKind::ParseError, toks[0].pos, "morphism and order must come first");
        return false;
    }

    void parse_deformation(const std::string& name, Pos at, std::span<const std::vector<Token>> body)
    {
        const Field f = model_.field;
        Header h;
        std::optional<TruncatedDeformation> th;
        for (const auto& toks : body) {
            if (parse_header(h, toks))
                continue;
            if (!th) {
                th = TruncatedDeformation::trivial(*h.psi, *h.order);
                th->name = name;
            }
            const std::string kw = toks[0].text;
            if (kw == "FD" || kw == "FE") {
                if (toks.size() < 4)
                    fail(ErrorKind::ParseError, toks[0].pos, fmt::format("expected '{} <n> L|R (i,j,k, v)...'", kw));
                const std::size_t n = parse_order(toks[1], *h.order);
                const std::string slot = word(toks[2], "L or R");
                if (slot != "L" && slot != "R")
                    fail(ErrorKind::ParseError, toks[2].pos, fmt::format("expected L or R, found '{}'", slot));
                Cochain& c = (kw == "FD" ? th->fD : th->fE)[n];
                const std::size_t dim = c.shape.dim_d;
                const std::size_t tree = slot == "L" ? right_comb_index(2) : left_comb_index(2);
                for (std::size_t m = 3; m < toks.size(); ++m) {
                    const Token& tup = tuple_arg(toks, m, 4);
                    const std::size_t args[] = {parse_index(tup.items[0], dim, "index"),
                                                parse_index(tup.items[1], dim, "index")};
                    const std::size_t k = parse_index(tup.items[2], dim, "index");
                    c.value(tree, args)[k] = parse_scalar(f, tup.items[3]);
                }
            } else if (kw == "psi") {
                if (toks.size() < 3)
                    fail(ErrorKind::ParseError, toks[0].pos, "expected 'psi <n> (row,col, v)...'");
                const std::size_t n = parse_order(toks[1], *h.order);
                Cochain& c = th->psis[n];
                for (std::size_t m = 2; m < toks.size(); ++m) {
                    const Token& tup = tuple_arg(toks, m, 3);
                    const std::size_t r = parse_index(tup.items[0], c.shape.dim_m, "row");
                    const std::size_t args[] = {parse_index(tup.items[1], c.shape.dim_d, "column")};
                    c.value(0, args)[r] = parse_scalar(f, tup.items[2]);
                }
            } else {
                fail(ErrorKind::ParseError, toks[0].pos, fmt::format("unknown deformation entry '{}'", kw));
            }
        }
        if (!h.psi || !h.order)
            fail(ErrorKind::ParseError, at, fmt::format("deformation '{}' needs a morphism and an order", name));
        if (!th) {
            th = TruncatedDeformation::trivial(*h.psi, *h.order);
            th->name = name;
        }
        model_.deformations.push_back(std::move(*th));
    }

    void parse_iso(const std::string& name, Pos at, std::span<const std::vector<Token>> body)
    {
        const Field f = model_.field;
        Header h;
        std::optional<FormalIso> iso;
        for (const auto& toks : body) {
            if (parse_header(h, toks))
                continue;
            if (!iso)
                iso = FormalIso::identity(f, h.psi->source.dim, h.psi->target.dim, *h.order);
            const std::string kw = toks[0].text;
            if (kw != "phiD" && kw != "phiE")
                fail(ErrorKind::ParseError, toks[0].pos, fmt::format("unknown iso entry '{}'", kw));
            if (toks.size() < 3)
                fail(ErrorKind::ParseError, toks[0].pos, fmt::format("expected '{} <n> (row,col, v)...'", kw));
            const std::size_t n = parse_order(toks[1], *h.order);
            Matrix& m = (kw == "phiD" ? iso->phiD : iso->phiE)[n];
            for (std::size_t k = 2; k < toks.size(); ++k) {
                const Token& tup = tuple_arg(toks, k, 3);
                const std::size_t r = parse_index(tup.items[0], m.rows(), "row");
                const std::size_t c = parse_index(tup.items[1], m.cols(), "column");
                m(r, c) = parse_scalar(f, tup.items[2]);
            }
        }
        if (!h.psi || !h.order)
            fail(ErrorKind::ParseError, at, fmt::format("iso '{}' needs a morphism and an order", name));
        if (!iso)
            iso = FormalIso::identity(f, h.psi->source.dim, h.psi->target.dim, *h.order);
        model_.isos.push_back({name, h.psi->name, std::move(*iso)});
    }

    static std::size_t parse_order(const Token& t, int order)
    {
        const std::size_t n = parse_count(t, "an order");
        if (n < 1 || n > static_cast<std::size_t>(order))
            fail(ErrorKind::ParseError, t.pos, fmt::format("coefficient order {} outside 1..{}", n, order));
        return n;
    }

    std::optional<Field> override_;
    Model model_;
    std::vector<std::vector<Token>> lines_;
    std::size_t cur_ = 0;
    std::size_t last_line_ = 0;
    bool seen_block_ = false;
    bool seen_field_ = false;
    std::set<std::string> names_;
};

bool same_dialgebra(const Dialgebra& a, const Dialgebra& b)
{
    return a.name == b.name && a.field == b.field && a.dim == b.dim && a.basis_names == b.basis_names &&
           a.left == b.left && a.right == b.right;
}

bool same_morphism(const DialgebraMorphism& a, const DialgebraMorphism& b)
{
    return a.name == b.name && same_dialgebra(a.source, b.source) && same_dialgebra(a.target, b.target) &&
           a.map == b.map;
}

template <class T, class Eq>
bool same_list(const std::vector<T>& a, const std::vector<T>& b, Eq eq)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!eq(a[i], b[i]))
            return false;
    return true;
}

template <class T>
const T& find_named(const std::vector<T>& items, std::string_view name, const char* what)
{
    for (const auto& it : items)
        if (it.name == name)
            return it;
    throw Error(ErrorKind::UnknownReference, fmt::format("unknown {} '{}'", what, name));
}

void write_matrix_entries(std::string& out, const char* prefix, const Matrix& m)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero())
                out += fmt::format("  {} ({},{}, {})\n", prefix, r, c, m(r, c).to_string());
}

} // namespace

const Dialgebra& Model::dialgebra(std::string_view name) const { return find_named(dialgebras, name, "dialgebra"); }
const DialgebraMorphism& Model::morphism(std::string_view name) const
{
    return find_named(morphisms, name, "morphism");
}
const TruncatedDeformation& Model::deformation(std::string_view name) const
{
    return find_named(deformations, name, "deformation");
}
const NamedIso& Model::iso(std::string_view name) const { return find_named(isos, name, "iso"); }

bool operator==(const Model& a, const Model& b)
{
    return a.field == b.field && same_list(a.dialgebras, b.dialgebras, same_dialgebra) &&
           same_list(a.morphisms, b.morphisms, same_morphism) &&
           same_list(a.deformations, b.deformations,
                     [](const TruncatedDeformation& x, const TruncatedDeformation& y) {
                         return x.name == y.name && same_morphism(x.psi, y.psi) && x == y;
                     }) &&
           same_list(a.isos, b.isos, [](const NamedIso& x, const NamedIso& y) {
               return x.name == y.name && x.morphism == y.morphism && x.iso == y.iso;
           });
}

Model parse_model(std::string_view text, std::optional<Field> field_override)
{
    return Parser(text, field_override).run();
}

Model load_model(const std::string& path, std::optional<Field> field_override)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw Error(ErrorKind::ParseError, fmt::format("cannot read '{}'", path));
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return parse_model(text, field_override);
}

std::string serialize_model(const Model& m)
{
    std::string out = fmt::format("field {}\n", m.field.name());
    for (const auto& d : m.dialgebras) {
        out += fmt::format("\ndialgebra {}\n  dim {}\n  basis", d.name, d.dim);
        for (const auto& b : d.basis_names)
            out += " " + b;
        out += "\n";
        for (Product p : {Product::Left, Product::Right}) {
            const Tensor3& t = d.tensor(p);
            for (std::size_t i = 0; i < d.dim; ++i)
                for (std::size_t j = 0; j < d.dim; ++j)
                    for (std::size_t k = 0; k < d.dim; ++k)
                        if (!t(i, j, k).is_zero())
                            out += fmt::format("  {} ({},{},{}, {})\n", p == Product::Left ? "L" : "R", i, j, k,
                                               t(i, j, k).to_string());
        }
        out += "end\n";
    }
    for (const auto& psi : m.morphisms) {
        out += fmt::format("\nmorphism {}\n  source {}\n  target {}\n", psi.name, psi.source.name, psi.target.name);
        if (psi.source.dim == psi.target.dim && psi.map == Matrix::identity(m.field, psi.source.dim))
            out += "  identity\n";
        else
            write_matrix_entries(out, "map", psi.map);
        out += "end\n";
    }
    for (const auto& th : m.deformations) {
        out += fmt::format("\ndeformation {}\n  morphism {}\n  order {}\n", th.name, th.psi.name, th.order());
        for (int n = 1; n <= th.order(); ++n) {
            for (const char* side : {"FD", "FE"}) {
                const Cochain& c = side[1] == 'D' ? th.fD[n] : th.fE[n];
                const std::size_t dim = c.shape.dim_d;
                for (Product p : {Product::Left, Product::Right}) {
                    const std::size_t tree = p == Product::Left ? right_comb_index(2) : left_comb_index(2);
                    for (std::size_t i = 0; i < dim; ++i)
                        for (std::size_t j = 0; j < dim; ++j) {
                            const std::size_t args[] = {i, j};
                            const auto v = c.value(tree, args);
                            for (std::size_t k = 0; k < v.size(); ++k)
                                if (!v[k].is_zero())
                                    out += fmt::format("  {} {} {} ({},{},{}, {})\n", side, n,
                                                       p == Product::Left ? "L" : "R", i, j, k, v[k].to_string());
                        }
                }
            }
            write_matrix_entries(out, fmt::format("psi {}", n).c_str(), cochain_map(th.psis[n]));
        }
        out += "end\n";
    }
    for (const auto& iso : m.isos) {
        out += fmt::format("\niso {}\n  morphism {}\n  order {}\n", iso.name, iso.morphism, iso.iso.order());
        for (int n = 1; n <= iso.iso.order(); ++n) {
            write_matrix_entries(out, fmt::format("phiD {}", n).c_str(), iso.iso.phiD[n]);
            write_matrix_entries(out, fmt::format("phiE {}", n).c_str(), iso.iso.phiE[n]);
        }
        out += "end\n";
    }
    return out;
}

std::vector<ModelIssue> validate_model(const Model& m)
{
    std::vector<ModelIssue> issues;
    for (const auto& d : m.dialgebras) {
        const CheckReport r = check_dialgebra(d);
        if (!r.valid)
            issues.push_back({d.name, r.violations.front().describe()});
    }
    for (const auto& psi : m.morphisms) {
        const CheckReport r = check_morphism(psi);
        if (!r.valid)
            issues.push_back({psi.name, r.violations.front().describe()});
    }
    for (const auto& th : m.deformations) {
        const DeformationReport r = verify_deformation(th);
        if (!r.valid)
            issues.push_back({th.name, fmt::format("order {}: {}", *r.first_failing_order, r.failing_identity)});
    }
    return issues;
}

Model bundled_model(Field f)
{
    Model m;
    m.field = f;
    m.dialgebras = examples::dialgebras(f);
    m.morphisms = examples::morphisms(f);
    return m;
}

} // namespace dialg
