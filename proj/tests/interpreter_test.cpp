#include <doctest.h>

#include "eco/interpreter.hpp"
#include "eco/pipeline.hpp"
#include "test_support.hpp"

using eco::RunOutcome;
using eco::RuntimeError;
using eco::run_program;
using eco::UserThrow;
using eco::Value;

namespace {

// full pipeline for a source program, then interpret the emitted text
RunOutcome run_source(const std::string& src,
                      eco::InterpreterOptions options = {}) {
    std::vector<eco::Diagnostic> diags;
    auto core_text = eco::emit_sources({{"t.eco", src}}, &diags);
    if (!core_text) {
        std::string what = "check failed:";
        for (const auto& d : diags) what += "\n  " + eco::format_diagnostic(d);
        throw std::runtime_error(what);
    }
    return run_program(*core_text, "main", options);
}

RunOutcome run_fixture(const std::string& name,
                       eco::InterpreterOptions options = {}) {
    std::string path = testutil::fixture_path(name);
    auto core_text = eco::emit_sources({{path, testutil::read_file(path)}});
    REQUIRE(core_text.has_value());
    return run_program(*core_text, "main", options);
}

template <typename F>
std::string error_code_of(F&& f) {
    try {
        f();
    } catch (const RuntimeError& e) {
        return e.code;
    }
    return "";
}

}  // namespace

TEST_CASE("hello program: exit 0 and stdout") {
    RunOutcome out = run_fixture("runtime/ok_hello.eco");
    CHECK(out.exit_code == 0);
    CHECK(out.stdout_text == "ok\n");
    CHECK(out.error_text.empty());
}

TEST_CASE("uncaught user throw exits 1") {
    RunOutcome out = run_fixture("runtime/user_throw.eco");
    CHECK(out.exit_code == 1);
    CHECK(out.error_text == "uncaught error: boom");
}

TEST_CASE("step budget exits 2 with R104") {
    eco::InterpreterOptions opts;
    opts.max_steps = 5000;
    RunOutcome out = run_fixture("runtime/loop_forever.eco", opts);
    CHECK(out.exit_code == 2);
    CHECK(out.error_text.find("R104") != std::string::npos);
}

TEST_CASE("runaway recursion is stopped, not crashed") {
    RunOutcome out = run_source(
        "class Main {\n"
        "    static method Down(n) { return Main.Down(n + 1); }\n"
        "    static method main() { Main.Down(0); }\n"
        "}");
    CHECK(out.exit_code == 2);
    CHECK(out.error_text.find("call depth") != std::string::npos);
}

TEST_CASE("printing a self-containing list terminates") {
    RunOutcome out = run_source(
        "class Main { static method main() {\n"
        "    var l = [1];\n"
        "    l.push(l);\n"
        "    print(l);\n"
        "} }");
    CHECK(out.exit_code == 0);
    CHECK(out.stdout_text.find("[...]") != std::string::npos);
}

TEST_CASE("catch binds the thrown value") {
    RunOutcome out = run_source(
        "class Main { static method main() { try { throw \"x\"; } catch (m) "
        "{ print(m); } } }");
    CHECK(out.exit_code == 0);
    CHECK(out.stdout_text == "x\n");
}

TEST_CASE("print formats every value shape") {
    RunOutcome out = run_source(
        "class P { }\n"
        "class Main { static method main() {\n"
        "    print(42);\n"
        "    print(0 - 7);\n"
        "    print(true);\n"
        "    print(\"raw text\");\n"
        "    print(null);\n"
        "    print([1, [true, \"s\"], []]);\n"
        "    print(new P());\n"
        "} }");
    CHECK(out.exit_code == 0);
    CHECK(out.stdout_text ==
          "42\n-7\ntrue\nraw text\nnull\n[1, [true, s], []]\n<P#0>\n");
}

TEST_CASE("value semantics: primitives by value, lists by identity") {
    RunOutcome out = run_source(
        "class Main { static method main() {\n"
        "    var a = [1];\n"
        "    var b = a;\n"
        "    b.push(2);\n"
        "    print(a);\n"
        "    print(a == b);\n"
        "    print([1] == [1]);\n"
        "    print(\"x\" == \"x\");\n"
        "    print(1 == true);\n"
        "} }");
    CHECK(out.stdout_text == "[1, 2]\ntrue\nfalse\ntrue\nfalse\n");
}

TEST_CASE("list builtins") {
    RunOutcome out = run_source(
        "class Main { static method main() {\n"
        "    var l = [10, 20, 30];\n"
        "    print(l.size());\n"
        "    print(l.get(1));\n"
        "    l.set(1, 99);\n"
        "    print(l[1]);\n"
        "    l.remove_at(0);\n"
        "    print(l);\n"
        "    l.push(7);\n"
        "    print(l);\n"
        "    l[0] = 1;\n"
        "    print(l);\n"
        "} }");
    CHECK(out.stdout_text ==
          "3\n20\n99\n[99, 30]\n[99, 30, 7]\n[1, 30, 7]\n");
}

TEST_CASE("arithmetic edge cases are R104") {
    CHECK(run_source("class Main { static method main() { print(1 / 0); } }")
              .error_text.find("R104") != std::string::npos);
    CHECK(run_source("class Main { static method main() { print(1 % 0); } }")
              .exit_code == 2);
    CHECK(run_source("class Main { static method main() { var big = "
                     "9223372036854775807; print(big + 1); } }")
              .exit_code == 2);
    CHECK(run_source(
              "class Main { static method main() { var l = [1]; print(l[5]); "
              "} }")
              .exit_code == 2);
}

TEST_CASE("'this' in a static context is a runtime error") {
    RunOutcome out = run_source(
        "class Main { static method main() { print(this); } }");
    CHECK(out.exit_code == 2);
    CHECK(out.error_text.find("static context") != std::string::npos);
}

TEST_CASE("dead objects reject method calls and field access") {
    RunOutcome out = run_source(
        "class P { var x; method M() { return 1; } }\n"
        "class Main { static method main() {\n"
        "    var p = new P();\n"
        "    delete p;\n"
        "    p.M();\n"
        "} }");
    CHECK(out.exit_code == 2);
    CHECK(out.error_text.find("destroyed") != std::string::npos);

    RunOutcome field = run_source(
        "class P { var x; }\n"
        "class Main { static method main() {\n"
        "    var p = new P();\n"
        "    delete p;\n"
        "    print(p.x);\n"
        "} }");
    CHECK(field.exit_code == 2);
}

TEST_CASE("assignment right-hand sides that mutate their own target are "
          "handled safely") {
    // the RHS shrinks the list the assignment indexes into
    RunOutcome shrink = run_source(
        "class Main {\n"
        "    static method Pop(l) { l.remove_at(0); l.remove_at(0); return "
        "9; }\n"
        "    static method main() {\n"
        "        var l = [1, 2];\n"
        "        l[1] = Main.Pop(l);\n"
        "    }\n"
        "}");
    CHECK(shrink.exit_code == 2);
    CHECK(shrink.error_text.find("out of range") != std::string::npos);

    // the RHS destroys the object whose field is being assigned
    RunOutcome destroyed = run_source(
        "class P { var f; }\n"
        "class Main {\n"
        "    static method Kill(p) { delete p; return 1; }\n"
        "    static method main() {\n"
        "        var p = new P();\n"
        "        p.f = Main.Kill(p);\n"
        "    }\n"
        "}");
    CHECK(destroyed.exit_code == 2);
    CHECK(destroyed.error_text.find("destroyed") != std::string::npos);

    // a benign RHS mutation of the same list lands on the final state
    RunOutcome grow = run_source(
        "class Main {\n"
        "    static method Grow(l) { l.push(0); return 9; }\n"
        "    static method main() {\n"
        "        var l = [1];\n"
        "        l[1] = Main.Grow(l);\n"
        "        print(l);\n"
        "    }\n"
        "}");
    CHECK(grow.exit_code == 0);
    CHECK(grow.stdout_text == "[1, 9]\n");
}

TEST_CASE("method and constructor arity mismatches are R104") {
    CHECK(run_source("class P { method M(a) { return a; } }\n"
                     "class Main { static method main() { new P().M(); } }")
              .exit_code == 2);
    CHECK(run_source("class P { constructor(a) { } }\n"
                     "class Main { static method main() { new P(); } }")
              .exit_code == 2);
}

TEST_CASE("inheritance: methods and fields flow down, this stays dynamic") {
    RunOutcome out = run_source(
        "class Base { var b; method Who() { return \"base\"; } method Get() "
        "{ return this.Who(); } }\n"
        "class Derived extends Base { method Who() { return \"derived\"; } "
        "}\n"
        "class Main { static method main() {\n"
        "    var d = new Derived();\n"
        "    d.b = 3;\n"
        "    print(d.Get());\n"
        "    print(d.b);\n"
        "    print(new Base().Get());\n"
        "} }");
    CHECK(out.stdout_text == "derived\n3\nbase\n");
}

TEST_CASE("dispatch order equals attach order") {
    RunOutcome out = run_fixture("runtime/order_probe.eco");
    CHECK(out.exit_code == 0);
    CHECK(out.stdout_text == "a\nb\nc\n");
}

TEST_CASE("a veto aborts later behaviors and propagates to the caller") {
    RunOutcome out = run_fixture("runtime/veto_abort.eco");
    CHECK(out.exit_code == 0);
    CHECK(out.stdout_text == "a\nstop\n");
}

TEST_CASE("runtime error fixtures map to their codes") {
    struct Row {
        const char* file;
        const char* code;
    };
    for (const Row& row : {Row{"runtime/r100_second_attach.eco", "R100"},
                           Row{"runtime/r101_destroy_order.eco", "R101"},
                           Row{"runtime/r103_absent_classer.eco", "R103"},
                           Row{"runtime/r105_post_throw.eco", "R105"}}) {
        CAPTURE(row.file);
        RunOutcome out = run_fixture(row.file);
        CHECK(out.exit_code == 2);
        CHECK(out.error_text.find(row.code) != std::string::npos);
    }
}

TEST_CASE("write barrier: support field write exits 2 with R102, own field "
          "write exits 0") {
    RunOutcome bad = run_fixture("runtime/barrier_support_write.eco");
    CHECK(bad.exit_code == 2);
    CHECK(bad.error_text.find("R102") != std::string::npos);

    RunOutcome good = run_fixture("runtime/barrier_self_write.eco");
    CHECK(good.exit_code == 0);
}

TEST_CASE("write barrier soundness matrix") {
    // one program skeleton; the behavior body varies per row
    auto program = [](const std::string& behavior_body) {
        return "extensible class S {\n"
               "    var x;\n"
               "    var bag;\n"
               "    constructor() { this.x = 0; this.bag = [0]; }\n"
               "    extend Ping(o);\n"
               "    method Poke(o) { call_e_method(Ping, o); }\n"
               "}\n"
               "class P { var f; }\n"
               "extend S class W {\n"
               "    var s;\n"
               "    var mine;\n"
               "    constructor(s0) { this.s = s0; this.mine = 0; }\n"
               "    extend Ping(o) { " + behavior_body + " }\n"
               "}\n"
               "class Main { static method main() {\n"
               "    var s = new S();\n"
               "    new W(s);\n"
               "    var outside = new P();\n"
               "    s.Poke(outside);\n"
               "} }";
    };
    struct Row {
        const char* body;
        int exit_code;
    };
    const Row rows[] = {
        // own extension object: allowed
        {"this.mine = 1;", 0},
        // the support object: barred
        {"this.s.x = 1;", 2},
        // a preexisting unrelated object: barred
        {"o.f = 1;", 2},
        // an object allocated during the behavior: allowed
        {"var p = new P(); p.f = 1;", 0},
        // an object allocated inside a helper call during the behavior
        {"var p = this.MakeP(); p.f = 1;", 0},
        // reads of the support are unrestricted
        {"var v = this.s.x; this.mine = v;", 0},
        // list mutation is not a field assignment
        {"this.s.bag.push(1);", 0},
    };
    for (const Row& row : rows) {
        CAPTURE(row.body);
        std::string src = program(row.body);
        // the helper row needs an extra method on W
        std::string helper_marker = "MakeP";
        if (std::string(row.body).find(helper_marker) != std::string::npos) {
            auto pos = src.find("    extend Ping(o) {");
            src.insert(pos, "    method MakeP() { return new P(); }\n");
        }
        RunOutcome out = run_source(src);
        CHECK(out.exit_code == row.exit_code);
        if (row.exit_code == 2)
            CHECK(out.error_text.find("R102") != std::string::npos);
    }
}

TEST_CASE("nested dispatch: the innermost barrier frame wins") {
    // Leaf's behavior may not assign fields of its own support (the Mid
    // object), even though the enclosing Mid frame could
    RunOutcome inner_write = run_source(
        "extensible class Root { extend Tick(); method Go() { "
        "call_e_method(Tick); } }\n"
        "class Cellx { var f; }\n"
        "extensible extend Root class Mid {\n"
        "    var kept;\n"
        "    extend Kick();\n"
        "    constructor(r) { this.kept = null; }\n"
        "    extend Tick() { this.kept = null; call_e_method(Kick); }\n"
        "    method Keep(c) { this.kept = c; }\n"
        "}\n"
        "extend Mid class Leaf {\n"
        "    var m;\n"
        "    constructor(m0) { this.m = m0; }\n"
        "    extend Kick() { var c = new Cellx(); this.m.Keep(c); }\n"
        "}\n"
        "class Main { static method main() {\n"
        "    var r = new Root();\n"
        "    var m = new Mid(r);\n"
        "    new Leaf(m);\n"
        "    r.Go();\n"
        "} }");
    CHECK(inner_write.exit_code == 2);
    CHECK(inner_write.error_text.find("R102") != std::string::npos);
}

TEST_CASE("allocations made inside a nested dispatch stay writable for the "
          "outer behavior") {
    RunOutcome out = run_source(
        "extensible class Root { extend Tick(); method Go() { "
        "call_e_method(Tick); } }\n"
        "class Cellx { var f; }\n"
        "extensible extend Root class Mid {\n"
        "    var box;\n"
        "    extend Kick();\n"
        "    constructor(r) { this.box = []; }\n"
        "    extend Tick() {\n"
        "        call_e_method(Kick);\n"
        "        var c = this.box[0];\n"
        "        c.f = 5;\n"
        "        print(c.f);\n"
        "    }\n"
        "    method Box() { return this.box; }\n"
        "}\n"
        "extend Mid class Leaf {\n"
        "    var m;\n"
        "    constructor(m0) { this.m = m0; }\n"
        "    extend Kick() { this.m.Box().push(new Cellx()); }\n"
        "}\n"
        "class Main { static method main() {\n"
        "    var r = new Root();\n"
        "    var m = new Mid(r);\n"
        "    new Leaf(m);\n"
        "    r.Go();\n"
        "} }");
    CHECK(out.error_text.empty());
    CHECK(out.exit_code == 0);
    CHECK(out.stdout_text == "5\n");
}

TEST_CASE("nested dispatch with clean ownership runs to completion") {
    RunOutcome out = run_source(
        "extensible class Root { extend Tick(); method Go() { "
        "call_e_method(Tick); } }\n"
        "extensible extend Root class Mid {\n"
        "    var log;\n"
        "    extend Kick();\n"
        "    constructor(r) { this.log = []; }\n"
        "    extend Tick() { this.log.push(\"mid\"); call_e_method(Kick); }\n"
        "    method Log() { return this.log; }\n"
        "}\n"
        "extend Mid class Leaf {\n"
        "    var log;\n"
        "    constructor(m) { this.log = []; }\n"
        "    extend Kick() { this.log.push(\"leaf\"); }\n"
        "    method Log() { return this.log; }\n"
        "}\n"
        "class Main { static method main() {\n"
        "    var r = new Root();\n"
        "    var m = new Mid(r);\n"
        "    var l = new Leaf(m);\n"
        "    r.Go();\n"
        "    print(m.Log());\n"
        "    print(l.Log());\n"
        "} }");
    CHECK(out.exit_code == 0);
    CHECK(out.stdout_text == "[mid]\n[leaf]\n");
}

TEST_CASE("equivalence: pre-compiled programs match hand-desugared "
          "references") {
    for (const char* base : {"cell", "box", "chain"}) {
        CAPTURE(base);
        std::string src_path =
            testutil::fixture_path(std::string("equiv/") + base + ".eco");
        auto compiled =
            eco::emit_sources({{src_path, testutil::read_file(src_path)}});
        REQUIRE(compiled.has_value());
        RunOutcome from_pipeline = run_program(*compiled);
        RunOutcome from_reference = run_program(testutil::read_file(
            testutil::fixture_path(std::string("equiv/") + base +
                                   "_ref.core.eco")));
        CHECK(from_pipeline.exit_code == from_reference.exit_code);
        CHECK(from_pipeline.stdout_text == from_reference.stdout_text);
    }
}

TEST_CASE("same program twice gives identical observables") {
    std::string path = testutil::fixture_path("equiv/box.eco");
    auto core = eco::emit_sources({{path, testutil::read_file(path)}});
    REQUIRE(core.has_value());
    RunOutcome a = run_program(*core);
    RunOutcome b = run_program(*core);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.stdout_text == b.stdout_text);
    CHECK(a.error_text == b.error_text);
}

TEST_CASE("run_program honors the entry name") {
    RunOutcome out = run_program(
        "// eco-core v1\n"
        "class Main {\n"
        "    static method other() {\n"
        "        print(\"other\");\n"
        "    }\n"
        "}\n",
        "other");
    CHECK(out.exit_code == 0);
    CHECK(out.stdout_text == "other\n");
}

TEST_CASE("harness-level calls raise typed errors") {
    eco::CoreParseResult core = eco::parse_core(
        "// eco-core v1\nclass P { var x; method M(a) { return a; } }\n",
        "t");
    REQUIRE(core.ok());
    eco::Interpreter interp(core.core);
    Value p = interp.make_instance("P", {});
    CHECK(interp.call_method(p, "M", {Value(7LL)}).as_int() == 7);
    CHECK(error_code_of([&] { interp.call_method(p, "M", {}); }) == "R104");
    CHECK(error_code_of([&] { interp.call_method(p, "Nope", {}); }) ==
          "R104");
    CHECK(error_code_of([&] { interp.make_instance("Q", {}); }) == "R104");
    interp.eco_destroy(p);
    CHECK(error_code_of([&] { interp.call_method(p, "M", {Value(1LL)}); }) ==
          "R104");
}
