// dialg: command-line front end to the dialgebra deformation workbench.
//
// Exit codes: 0 success or property holds, 1 property fails or an
// obstruction blocks, 2 input error.

#include "dialg/error.hpp"
#include "dialg/model.hpp"
#include "dialg/selftest.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <optional>
#include <string>
#include <vector>

using namespace dialg;

namespace {

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

// Text lines or key=value records, chosen by --format.
class Out {
public:
    explicit Out(bool records) : records_(records) {}

    template <class... Args>
    void text(fmt::format_string<Args...> f, Args&&... args)
    {
        if (!records_)
            fmt::print("{}\n", fmt::format(f, std::forward<Args>(args)...));
    }
    template <class V>
    void rec(std::string_view key, const V& value)
    {
        if (records_)
            fmt::print("{}={}\n", key, value);
    }
    bool records() const { return records_; }

private:
    bool records_;
};

struct Options {
    std::string model_path;
    std::string field;
    std::string format = "text";
    std::string object;
    std::string deformation;
    std::optional<int> degree;
    std::optional<int> order;
    std::optional<int> to;
    int samples = 10;
    std::uint64_t seed = 1;
};

std::optional<Field> parse_field_flag(const std::string& s)
{
    if (s.empty())
        return std::nullopt;
    if (s == "rationals" || s == "q")
        return Field::rationals();
    if (s.rfind("gf:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            p = std::stoull(s.substr(3));
        } catch (const std::exception&) {
            throw Error(ErrorKind::BadScalar, "--field expects gf:<p>, got '" + s + "'");
        }
        return Field::gf(p);
    }
    throw Error(ErrorKind::BadScalar, "--field expects 'rationals' or gf:<p>, got '" + s + "'");
}

template <class T>
const T& pick(const std::vector<T>& items, const std::string& name, const char* what, const char* flag)
{
    if (name.empty()) {
        if (items.size() == 1)
            return items.front();
        throw Error(ErrorKind::UnknownReference,
                    fmt::format("the model has {} {}s; choose one with {}", items.size(), what, flag));
    }
    for (const auto& it : items)
        if (it.name == name)
            return it;
    throw Error(ErrorKind::UnknownReference, fmt::format("unknown {} '{}'", what, name));
}

std::string vec(std::span<const Scalar> v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + v[i].to_string();
    return s + ")";
}

std::string args_text(const std::vector<std::size_t>& idx)
{
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i)
        s += (i ? "," : "") + std::to_string(idx[i]);
    return s + ")";
}

// Nonzero values of a cochain, one per (tree, arguments).
void print_cochain(Out& out, const std::string& label, const Cochain& c)
{
    const int n = c.degree();
    const auto& trees = trees_of_degree(n);
    std::size_t shown = 0;
    for (std::size_t y = 0; y < trees.size(); ++y)
        for (MultiIndex it(static_cast<std::size_t>(n), c.shape.dim_d); !it.done(); ++it) {
            const auto v = c.value(y, *it);
            if (is_zero(v))
                continue;
            ++shown;
            out.text("  {} {} {} = {}", label, trees[y].name(), args_text(*it), vec(v));
            out.rec(fmt::format("{}[{}]{}", label, trees[y].name(), args_text(*it)), vec(v));
        }
    if (shown == 0)
        out.text("  {} = 0", label);
}

void print_mor_cochain(Out& out, const std::string& prefix, const MorphismCochain& a)
{
    print_cochain(out, prefix + "_D", a.xi);
    print_cochain(out, prefix + "_E", a.pi);
    print_cochain(out, prefix + "_psi", a.phi);
}

// Makes sure the objects a command works on are what they claim to be.
void require_dialgebra(const Dialgebra& d)
{
    const CheckReport r = check_dialgebra(d);
    if (!r.valid)
        throw Error(ErrorKind::ShapeMismatch,
                    fmt::format("'{}' is not a dialgebra: {}", d.name, r.violations.front().describe()));
}

void require_morphism(const DialgebraMorphism& psi)
{
    require_dialgebra(psi.source);
    require_dialgebra(psi.target);
    const CheckReport r = check_morphism(psi);
    if (!r.valid)
        throw Error(ErrorKind::ShapeMismatch,
                    fmt::format("'{}' is not a morphism: {}", psi.name, r.violations.front().describe()));
}

void require_deformation(const TruncatedDeformation& th)
{
    require_morphism(th.psi);
    const DeformationReport r = verify_deformation(th);
    if (!r.valid)
        throw Error(ErrorKind::InvalidDeformation,
                    fmt::format("'{}' fails at order {}: {}", th.name, *r.first_failing_order, r.failing_identity));
}

std::string deformation_text(const TruncatedDeformation& th)
{
    Model m;
    m.field = th.psi.source.field;
    m.dialgebras.push_back(th.psi.source);
    if (th.psi.target.name != th.psi.source.name)
        m.dialgebras.push_back(th.psi.target);
    m.morphisms.push_back(th.psi);
    m.deformations.push_back(th);
    return serialize_model(m);
}

int cmd_check(const Model& m, Out& out)
{
    int failures = 0;
    auto report = [&](const char* kind, const std::string& name, bool ok, const std::string& why) {
        failures += !ok;
        if (ok)
            out.text("PASS {} {}", kind, name);
        else
            out.text("FAIL {} {}: {}", kind, name, why);
        out.rec(fmt::format("{}.{}", kind, name), ok ? "pass" : "fail");
    };
    for (const auto& d : m.dialgebras) {
        const CheckReport r = check_dialgebra(d);
        report("dialgebra", d.name, r.valid, r.valid ? "" : r.violations.front().describe());
    }
    for (const auto& psi : m.morphisms) {
        const CheckReport r = check_morphism(psi);
        report("morphism", psi.name, r.valid, r.valid ? "" : r.violations.front().describe());
    }
    for (const auto& th : m.deformations) {
        const DeformationReport r = verify_deformation(th);
        report("deformation", th.name, r.valid,
               r.valid ? "" : fmt::format("order {}: {}", *r.first_failing_order, r.failing_identity));
    }
    for (const auto& iso : m.isos)
        report("iso", iso.name, true, "");
    out.rec("failures", failures);
    return failures == 0 ? kOk : kFails;
}

int cmd_trees(const Options& o, Out& out)
{
    std::vector<int> degrees;
    if (o.degree)
        degrees.push_back(*o.degree);
    else
        degrees = {1, 2, 3};
    for (int m : degrees) {
        const auto& ys = enumerate_trees(m);
        out.text("Y_{}: {} trees", m, ys.size());
        out.rec(fmt::format("Y_{}.count", m), ys.size());
        for (const Tree& y : ys) {
            std::string faces, labels;
            for (int i = 0; i <= m; ++i) {
                if (m >= 2)
                    faces += (i ? " " : "") + face(y, i).name();
                labels += std::string(i ? " " : "") + symbol(prod_label(y, i));
            }
            if (m < 2)
                faces = "-";
            out.text("  {:>3}  {:<8} {:<22} faces: {:<40} labels: {}", y.index, y.name(), y.shape(), faces, labels);
            const std::string key = fmt::format("Y_{}[{}]", m, y.index);
            out.rec(key + ".name", y.name());
            out.rec(key + ".shape", y.shape());
            out.rec(key + ".faces", faces);
            out.rec(key + ".labels", labels);
        }
    }
    return kOk;
}

int cmd_cohomology(const Model& m, const Options& o, Out& out)
{
    const Dialgebra& d = pick(m.dialgebras, o.object, "dialgebra", "--object");
    require_dialgebra(d);
    const Representation adj = adjoint_rep(d);
    std::vector<int> degrees;
    if (o.degree)
        degrees.push_back(*o.degree);
    else
        degrees = {0, 1, 2, 3};
    out.rec("object", d.name);
    for (int n : degrees) {
        const Cohomology h = cohomology(d, adj, n);
        out.text("HY^{} = {}", n, h.dim);
        out.rec(fmt::format("HY^{}", n), h.dim);
        out.rec(fmt::format("cocycles^{}", n), h.cocycle_dim);
        out.rec(fmt::format("coboundaries^{}", n), h.coboundary_dim);
    }
    return kOk;
}

int cmd_mor_cohomology(const Model& m, const Options& o, Out& out)
{
    const DialgebraMorphism& psi = pick(m.morphisms, o.object, "morphism", "--object");
    require_morphism(psi);
    const MorphismComplex c(psi);
    std::vector<int> degrees;
    if (o.degree)
        degrees.push_back(*o.degree);
    else
        degrees = {1, 2, 3};
    out.rec("object", psi.name);
    for (int n : degrees) {
        const std::size_t h = c.cohomology_dim(n);
        out.text("HY^{}({}, {}) = {}", n, psi.name, psi.name, h);
        out.rec(fmt::format("HY^{}", n), h);
    }
    return kOk;
}

int cmd_deform_verify(const Model& m, const Options& o, Out& out)
{
    std::vector<const TruncatedDeformation*> targets;
    if (o.deformation.empty())
        for (const auto& th : m.deformations)
            targets.push_back(&th);
    else
        targets.push_back(&m.deformation(o.deformation));
    if (targets.empty())
        throw Error(ErrorKind::UnknownReference, "the model has no deformations");
    int failures = 0;
    for (const auto* th : targets) {
        const DeformationReport r = verify_deformation(*th);
        out.rec(th->name + ".valid", r.valid ? "true" : "false");
        if (r.valid) {
            out.text("PASS {}: valid to order {}", th->name, th->order());
        } else {
            ++failures;
            out.text("FAIL {}: first failure at order {}: {}", th->name, *r.first_failing_order, r.failing_identity);
            out.rec(th->name + ".first_failing_order", *r.first_failing_order);
            out.rec(th->name + ".failing_identity", r.failing_identity);
        }
    }
    return failures == 0 ? kOk : kFails;
}

const TruncatedDeformation& pick_deformation(const Model& m, const Options& o)
{
    const TruncatedDeformation& th = pick(m.deformations, o.deformation, "deformation", "--deformation");
    require_deformation(th);
    return th;
}

int cmd_infinitesimal(const Model& m, const Options& o, Out& out)
{
    const TruncatedDeformation& th = pick_deformation(m, o);
    const MorphismComplex c(th.psi);
    const MorphismCochain t1 = infinitesimal(th);
    const CocycleReport lead = leading_cocycle_check(c, th);
    out.text("infinitesimal of {}:", th.name);
    print_mor_cochain(out, "theta1", t1);
    const bool cocycle = c.coboundary(t1).is_zero();
    out.text("2-cocycle: {}", cocycle ? "yes" : "no");
    out.rec("cocycle", cocycle ? "true" : "false");
    if (lead.leading_order) {
        out.text("leading nonzero order: {} ({})", *lead.leading_order, lead.ok ? "cocycle" : lead.residual);
        out.rec("leading_order", *lead.leading_order);
    }
    return cocycle && lead.ok ? kOk : kFails;
}

void print_certificate(Out& out, const ExtendOutcome& e)
{
    out.text("rank delta^2 = {}, rank [delta^2 | Ob] = {}", e.rank_coboundary, e.rank_augmented);
    out.rec("rank_coboundary", e.rank_coboundary);
    out.rec("rank_augmented", e.rank_augmented);
}

int cmd_obstruction(const Model& m, const Options& o, Out& out)
{
    TruncatedDeformation th = pick_deformation(m, o);
    if (o.order) {
        if (*o.order > th.order())
            throw Error(ErrorKind::OrderMismatch,
                        fmt::format("--order {} exceeds the order {} of '{}'", *o.order, th.order(), th.name));
        th = th.truncated(*o.order);
    }
    const MorphismComplex c(th.psi);
    const ExtendOutcome e = extend_step(c, th);
    const CocycleReport cyc = obstruction_cocycle_check(c, e.obstruction);
    out.text("obstruction of {} at order {}:", th.name, th.order());
    out.rec("order", th.order());
    print_mor_cochain(out, "Ob", e.obstruction.cochain);
    out.text("3-cocycle: {}", cyc.ok ? "yes" : "no (" + cyc.residual + ")");
    out.rec("cocycle", cyc.ok ? "true" : "false");
    print_certificate(out, e);
    const bool exact = e.extended.has_value();
    out.text("coboundary: {}", exact ? "yes, extends to order " + std::to_string(th.order() + 1) : "no, extension blocked");
    out.rec("coboundary", exact ? "true" : "false");
    return exact && cyc.ok ? kOk : kFails;
}

int cmd_extend(const Model& m, const Options& o, Out& out)
{
    const TruncatedDeformation& th = pick_deformation(m, o);
    const int target = o.to.value_or(th.order() + 1);
    const ExtendReport r = extend_to_order(th, target);
    out.text("{}: order {} -> {} (target {})", th.name, th.order(), r.reached_order(), target);
    out.rec("start", th.order());
    out.rec("reached", r.reached_order());
    out.rec("target", target);
    out.rec("hy3_vanishes", r.hy3_vanishes ? "true" : "false");
    if (r.hy3_vanishes)
        out.text("HY^3 vanishes: extension to any order is guaranteed");
    if (r.halted) {
        out.text("obstructed at order {}: Ob is not a coboundary", r.reached_order() + 1);
        print_certificate(out, *r.halted);
        out.text("nonzero obstruction values:");
        print_mor_cochain(out, "Ob", r.halted->obstruction.cochain);
        return kFails;
    }
    if (!out.records()) {
        TruncatedDeformation ext = r.reached;
        ext.name = th.name + "_ext";
        out.text("");
        out.text("{}", deformation_text(ext));
    }
    return kOk;
}

int cmd_trivialize(const Model& m, const Options& o, Out& out)
{
    const TruncatedDeformation& th = pick_deformation(m, o);
    const MorphismComplex c(th.psi);
    TruncatedDeformation cur = th;
    int step = 0;
    while (auto lead = leading_order(cur)) {
        TrivializeResult t;
        try {
            t = trivialize_step(c, cur);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotACoboundary)
                throw;
            out.text("step {}: theta_{} is not a coboundary", step + 1, *lead);
            out.text("{}", e.what());
            out.rec("trivialized", "false");
            out.rec("blocked_at", *lead);
            return kFails;
        }
        ++step;
        const int k = t.m + 1;
        out.text("step {}: removed theta_{} with 1 + xi t^{}, 1 + pi t^{}", step, k, k, k);
        out.rec(fmt::format("step{}.order", step), k);
        print_cochain(out, "xi", map_cochain(c.field(), t.phi.phiD[k]));
        print_cochain(out, "pi", map_cochain(c.field(), t.phi.phiE[k]));
        cur = t.result;
    }
    out.text("{} is equivalent to the trivial deformation ({} step{})", th.name, step, step == 1 ? "" : "s");
    out.rec("trivialized", "true");
    out.rec("steps", step);
    return kOk;
}

int cmd_rigidity(const Model& m, const Options& o, Out& out)
{
    const DialgebraMorphism& psi = pick(m.morphisms, o.object, "morphism", "--object");
    require_morphism(psi);
    RigidityOptions opts;
    opts.samples = o.samples;
    opts.seed = o.seed;
    if (o.order)
        opts.order = *o.order;
    const RigidityReport r = rigidity_probe(psi, opts);
    out.text("HY^2({}, {}) = {}", psi.name, psi.name, r.hy2_dim);
    out.text("verdict: {}", r.verdict);
    out.rec("object", psi.name);
    out.rec("hy2", r.hy2_dim);
    out.rec("rigid", r.rigid ? "true" : "false");
    out.rec("verdict", r.verdict);
    if (r.rigid) {
        out.text("trivialized {}/{} sampled deformations of order {}", r.trivialized, r.samples, opts.order);
        out.rec("samples", r.samples);
        out.rec("trivialized", r.trivialized);
    } else if (r.witness) {
        out.text("witness 2-cocycle outside im delta:");
        print_mor_cochain(out, "w", *r.witness);
    }
    return r.rigid && r.trivialized == r.samples ? kOk : kFails;
}

int cmd_selftest(Out& out)
{
    const SelftestReport r = run_selftest();
    if (out.records()) {
        out.rec("passed", r.passed);
        out.rec("total", r.total);
        out.rec("ok", r.ok ? "true" : "false");
    } else {
        fmt::print("{}", r.text);
    }
    return r.ok ? kOk : kFails;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"dialg: exact cohomology and deformation workbench for dialgebras and their morphisms"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--field", o.field, "Override the model field: rationals or gf:<p>");
    app.add_option("--format", o.format, "Output format: text (default) or records (key=value lines)")
        ->check(CLI::IsMember({"text", "records"}));

    auto model_cmd = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("model", o.model_path, "Model file, or - for standard input")->required();
        return sub;
    };
    auto add_object = [&](CLI::App* sub, const char* what) {
        sub->add_option("--object", o.object, what);
    };
    auto add_deformation = [&](CLI::App* sub) {
        sub->add_option("--deformation", o.deformation, "Deformation name (may be omitted if the model has one)");
    };

    CLI::App* check = model_cmd("check", "Check every dialgebra, morphism and deformation in a model");
    CLI::App* trees = app.add_subcommand("trees", "Print trees of Y_m with faces and product labels");
    trees->add_option("--degree", o.degree, "Tree degree m (default: 1, 2 and 3)")->check(CLI::Range(1, 5));
    CLI::App* coh = model_cmd("cohomology", "HY^n(D, D) of a dialgebra");
    add_object(coh, "Dialgebra name");
    coh->add_option("--degree", o.degree, "Degree n (default: 0..3)")->check(CLI::Range(0, 4));
    CLI::App* mcoh = model_cmd("mor-cohomology", "HY^n(psi, psi) of a morphism");
    add_object(mcoh, "Morphism name");
    mcoh->add_option("--degree", o.degree, "Degree n (default: 1..3)")->check(CLI::Range(1, 4));
    CLI::App* verify = model_cmd("deform-verify", "Verify truncated deformations order by order");
    add_deformation(verify);
    CLI::App* inf = model_cmd("infinitesimal", "Print theta_1 and check the leading coefficient is a 2-cocycle");
    add_deformation(inf);
    CLI::App* obs = model_cmd("obstruction", "Obstruction class of an order-N deformation");
    add_deformation(obs);
    obs->add_option("--order", o.order, "Truncate the deformation to order N first")->check(CLI::Range(1, 6));
    CLI::App* ext = model_cmd("extend", "Extend a deformation order by order");
    add_deformation(ext);
    ext->add_option("--to", o.to, "Target order N* (default: one more than the current order)")
        ->check(CLI::Range(0, 1000));
    CLI::App* triv = model_cmd("trivialize", "Trivialize a deformation step by step");
    add_deformation(triv);
    CLI::App* rig = model_cmd("rigidity-probe", "HY^2(psi, psi) and trivialization of sampled deformations");
    add_object(rig, "Morphism name");
    rig->add_option("--order", o.order, "Order of the sampled deformations (default 6)")->check(CLI::Range(1, 6));
    rig->add_option("--samples", o.samples, "Number of sampled deformations (default 10)")->check(CLI::Range(0, 1000));
    rig->add_option("--seed", o.seed, "Sampling seed (default 1)");
    CLI::App* self = app.add_subcommand("selftest", "Run the invariant suite on the bundled models");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    Out out(o.format == "records");
    try {
        const std::optional<Field> field = parse_field_flag(o.field);
        if (trees->parsed())
            return cmd_trees(o, out);
        if (self->parsed())
            return cmd_selftest(out);
        const Model m = load_model(o.model_path, field);
        if (check->parsed())
            return cmd_check(m, out);
        if (coh->parsed())
            return cmd_cohomology(m, o, out);
        if (mcoh->parsed())
            return cmd_mor_cohomology(m, o, out);
        if (verify->parsed())
            return cmd_deform_verify(m, o, out);
        if (inf->parsed())
            return cmd_infinitesimal(m, o, out);
        if (obs->parsed())
            return cmd_obstruction(m, o, out);
        if (ext->parsed())
            return cmd_extend(m, o, out);
        if (triv->parsed())
            return cmd_trivialize(m, o, out);
        if (rig->parsed())
            return cmd_rigidity(m, o, out);
    } catch (const Error& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kInputError;
    }
    return kInputError;
}
