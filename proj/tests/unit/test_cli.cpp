#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args)
{
    Run r;
    const std::string cmd = std::string(DIALG_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p))
        r.out.append(buf, n);
    const int raw = pclose(p);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string model(const char* name) { return std::string(DIALG_MODELS_DIR) + "/" + name; }

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

std::string temp_model(const char* name, const char* text)
{
    const std::string path = std::string(DIALG_TEMP_DIR) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("check")
{
    const Run ok = run("check " + model("bundled.dl"));
    CHECK(ok.status == 0);
    CHECK(has(ok, "PASS dialgebra K"));
    CHECK(has(ok, "PASS morphism sum_Z2_Z1"));

    const Run bad = run("check " + model("z_example.dl"));
    CHECK(bad.status == 1);
    CHECK(has(bad, "PASS deformation z_equal"));
    CHECK(has(bad, "FAIL deformation z_mismatched"));

    const std::string broken = temp_model("broken.dl", "dialgebra X\n dim 1\n L (0,0,0, 1)\nend\n");
    const Run axiom = run("check " + broken);
    CHECK(axiom.status == 1);
    CHECK(has(axiom, "FAIL dialgebra X: axiom 2"));
}

TEST_CASE("input errors exit with 2")
{
    CHECK(run("check /nonexistent/model.dl").status == 2);
    CHECK(run("cohomology " + model("bundled.dl") + " --object Nope").status == 2);
    CHECK(run("cohomology " + model("bundled.dl")).status == 2); // several dialgebras, no --object
    CHECK(run("--field gf:4 cohomology " + model("bundled.dl") + " --object K").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("trees --degree 9").status == 2);
    const Run parse = run("check " + temp_model("parse.dl", "dialgebra K\n dim 1\n L (0,0,0, 1/0)\nend\n"));
    CHECK(parse.status == 2);
    CHECK(has(parse, "line 3, column"));
    const Run unknown = run("check " + temp_model("ref.dl", "morphism f\n source A\n target A\nend\n"));
    CHECK(unknown.status == 2);
    CHECK(has(unknown, "unknown dialgebra 'A'"));
    const std::string invalid = temp_model("invalid.dl", "dialgebra X\n dim 1\n L (0,0,0, 1)\nend\n");
    CHECK(run("cohomology " + invalid).status == 2);
    CHECK(run("extend " + model("one_plus_t.dl") + " --deformation one_plus_t --to 9").status == 2);
    CHECK(run("obstruction " + model("z_example.dl") + " --deformation z_mismatched").status == 2);
}

TEST_CASE("cohomology reports")
{
    const Run k = run("cohomology " + model("bundled.dl") + " --object K --degree 2");
    CHECK(k.status == 0);
    CHECK(k.out == "HY^2 = 0\n");
    const Run z = run("cohomology " + model("bundled.dl") + " --object Z1");
    CHECK(z.out == "HY^0 = 1\nHY^1 = 1\nHY^2 = 2\nHY^3 = 5\n");
    const Run rec = run("--format records cohomology " + model("bundled.dl") + " --object Z1 --degree 2");
    CHECK(has(rec, "object=Z1\n"));
    CHECK(has(rec, "HY^2=2\n"));
    const Run mor = run("mor-cohomology " + model("bundled.dl") + " --object id_Z1 --degree 2");
    CHECK(mor.status == 0);
    CHECK(mor.out == "HY^2(id_Z1, id_Z1) = 2\n");
    const Run gf = run("--field gf:5 cohomology " + model("bundled.dl") + " --object N --degree 1");
    CHECK(gf.status == 0);
    CHECK(gf.out == "HY^1 = 0\n");
}

TEST_CASE("model from standard input")
{
    const Run r = run("cohomology - --object K --degree 1 < " + model("one_plus_t.dl"));
    CHECK(r.status == 0);
    CHECK(r.out == "HY^1 = 0\n");
}

TEST_CASE("deformation commands")
{
    const std::string z = model("z_example.dl");
    CHECK(run("deform-verify " + z + " --deformation z_equal").status == 0);
    const Run mismatched = run("deform-verify " + z + " --deformation z_mismatched");
    CHECK(mismatched.status == 1);
    CHECK(has(mismatched, "first failure at order 1"));

    const Run inf = run("infinitesimal " + z + " --deformation z_equal");
    CHECK(inf.status == 0);
    CHECK(has(inf, "theta1_psi [1] (0) = (2)"));
    CHECK(has(inf, "2-cocycle: yes"));

    const Run blocked = run("extend " + z + " --deformation z_unequal --to 2");
    CHECK(blocked.status == 1);
    CHECK(has(blocked, "order 1 -> 1"));
    CHECK(has(blocked, "Ob_D [213] (0,0,0) = (-1)"));
    CHECK(has(blocked, "Ob_D [312] (0,0,0) = (-2)"));
    CHECK(has(blocked, "rank delta^2 = 2, rank [delta^2 | Ob] = 3"));

    const Run reached = run("extend " + z + " --deformation z_equal --to 4");
    CHECK(reached.status == 0);
    CHECK(has(reached, "order 1 -> 4"));
    CHECK(has(reached, "deformation z_equal_ext"));

    const Run ob = run("obstruction " + z + " --deformation z_equal");
    CHECK(ob.status == 0);
    CHECK(has(ob, "3-cocycle: yes"));
    CHECK(run("obstruction " + z + " --deformation z_unequal").status == 1);

    const std::string k = model("one_plus_t.dl");
    const Run triv = run("trivialize " + k + " --deformation one_plus_t_3");
    CHECK(triv.status == 0);
    CHECK(has(triv, "equivalent to the trivial deformation (1 step)"));
    CHECK(run("trivialize " + z + " --deformation z_equal").status == 1);
}

TEST_CASE("extended deformation output reparses")
{
    const Run reached = run("extend " + model("z_example.dl") + " --deformation z_equal --to 3");
    REQUIRE(reached.status == 0);
    const std::string text = reached.out.substr(reached.out.find("field"));
    const std::string path = temp_model("extended.dl", text.c_str());
    const Run again = run("deform-verify " + path);
    CHECK(again.status == 0);
    CHECK(has(again, "valid to order 3"));
}

TEST_CASE("rigidity probe")
{
    const Run k = run("rigidity-probe " + model("one_plus_t.dl") + " --samples 3 --order 3");
    CHECK(k.status == 0);
    CHECK(has(k, "HY^2(id_K, id_K) = 0"));
    CHECK(has(k, "verdict: rigid"));
    CHECK(has(k, "trivialized 3/3"));
    const Run z = run("rigidity-probe " + model("z_example.dl"));
    CHECK(z.status == 1);
    CHECK(has(z, "not decided"));
}

TEST_CASE("trees table")
{
    const Run r = run("trees --degree 3");
    CHECK(r.status == 0);
    CHECK(has(r, "Y_3: 5 trees"));
    CHECK(has(r, "[131]"));
    const Run rec = run("--format records trees --degree 2");
    CHECK(has(rec, "Y_2[0].name=[21]\n"));
    CHECK(has(rec, "Y_2[0].labels=⊣ ⊣ ⊣\n"));
}

TEST_CASE("reports are deterministic")
{
    for (const std::string& args : {std::string("trees"), "cohomology " + model("bundled.dl") + " --object N",
                                    "extend " + model("z_example.dl") + " --deformation z_equal --to 3",
                                    "rigidity-probe " + model("one_plus_t.dl") + " --samples 2"}) {
        const Run a = run(args);
        const Run b = run(args);
        CHECK(a.out == b.out);
        CHECK(a.status == b.status);
    }
}
