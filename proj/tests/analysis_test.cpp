#include <doctest.h>

#include <algorithm>

#include "eco/analysis.hpp"
#include "eco/parser.hpp"
#include "test_support.hpp"

using eco::AnalysisResult;
using eco::analyze;
using eco::ClassKind;
using eco::ParseResult;
using eco::parse_source;

namespace {

AnalysisResult analyze_text(const std::string& src) {
    ParseResult parsed = parse_source(src, "t.eco");
    REQUIRE(parsed.ok());
    return analyze(parsed.module);
}

std::vector<std::string> codes_of(const AnalysisResult& r) {
    std::vector<std::string> out;
    for (const auto& d : r.diags) out.push_back(d.code);
    return out;
}

}  // namespace

TEST_CASE("graph.eco alone resolves with the full signature set") {
    ParseResult parsed = parse_source(
        testutil::read_file(testutil::stdlib_path("graph.eco")), "graph.eco");
    REQUIRE(parsed.ok());
    AnalysisResult r = analyze(parsed.module);
    REQUIRE(r.ok());
    const eco::ClassInfo* graph = r.table.find("Graph");
    REQUIRE(graph != nullptr);
    CHECK(graph->kind == ClassKind::Extensible);
    CHECK(graph->is_extensible);
    CHECK(graph->emethod_sigs.size() == 12);
    CHECK(r.table.sig_arity("Graph", "Check_AddEdge") == 2);
    CHECK(r.table.sig_arity("Graph", "Post_AddEdge") == 3);
    CHECK(r.table.sig_arity("Graph", "Post_AddVertex") == 1);
    CHECK(!r.table.sig_arity("Graph", "Nope").has_value());
}

TEST_CASE("two classes named Graph reject the second") {
    AnalysisResult r = analyze_text("class Graph { }\nclass Graph { }");
    REQUIRE(r.diags.size() == 1);
    CHECK(r.diags[0].code == "E030");
    CHECK(r.diags[0].line == 2);
}

TEST_CASE("extends of an undeclared class") {
    AnalysisResult r = analyze_text("class A extends B { }");
    REQUIRE(r.diags.size() == 1);
    CHECK(r.diags[0].code == "E001");
}

TEST_CASE("new of an undeclared class") {
    AnalysisResult r = analyze_text(
        "class A { method m() { return new B(); } }");
    REQUIRE(r.diags.size() == 1);
    CHECK(r.diags[0].code == "E001");
}

TEST_CASE("inheritance cycles are rejected") {
    AnalysisResult r =
        analyze_text("class A extends B { }\nclass B extends A { }");
    REQUIRE(r.diags.size() == 1);
    CHECK(r.diags[0].code == "E003");
}

TEST_CASE("each static rule fixture produces exactly its code") {
    struct Row {
        const char* file;
        const char* code;
    };
    const Row rows[] = {
        {"static/e001_unknown_base.eco", "E001"},
        {"static/e003_cycle.eco", "E003"},
        {"static/e010_plain_support.eco", "E010"},
        {"static/e011_no_signature.eco", "E011"},
        {"static/e012_outside_extensible.eco", "E012"},
        {"static/e013_missing_support_param.eco", "E013"},
        {"static/e020_dynamic_without_extend.eco", "E020"},
        {"static/e021_public_classer_ctor.eco", "E021"},
        {"static/e022_wrong_support.eco", "E022"},
        {"static/e023_sig_in_plain_class.eco", "E023"},
        {"static/e030_duplicate_class.eco", "E030"},
    };
    for (const Row& row : rows) {
        CAPTURE(row.file);
        ParseResult parsed = parse_source(
            testutil::read_file(testutil::fixture_path(row.file)), row.file);
        REQUIRE(parsed.ok());
        AnalysisResult r = analyze(parsed.module);
        REQUIRE(r.diags.size() == 1);
        CHECK(r.diags[0].code == row.code);
    }
}

TEST_CASE("parse-level fixture produces E002") {
    ParseResult parsed = parse_source(
        testutil::read_file(testutil::fixture_path("static/e002_parse.eco")),
        "e002_parse.eco");
    REQUIRE(parsed.diags.size() == 1);
    CHECK(parsed.diags[0].code == "E002");
}

TEST_CASE("more E-rule probes") {
    SUBCASE("call_e_method with unknown signature") {
        AnalysisResult r = analyze_text(
            "extensible class S { method m() { call_e_method(Nope); } }");
        CHECK(codes_of(r) == std::vector<std::string>{"E012"});
    }
    SUBCASE("call_e_method arity mismatch") {
        AnalysisResult r = analyze_text(
            "extensible class S { extend Ping(a); method m() { "
            "call_e_method(Ping); } }");
        CHECK(codes_of(r) == std::vector<std::string>{"E012"});
    }
    SUBCASE("call_e_method in a constructor is rejected") {
        AnalysisResult r = analyze_text(
            "extensible class S { extend Ping(); constructor() { "
            "call_e_method(Ping); } }");
        CHECK(codes_of(r) == std::vector<std::string>{"E012"});
    }
    SUBCASE("call_e_method in a static method is rejected") {
        AnalysisResult r = analyze_text(
            "extensible class S { extend Ping(); static method m() { "
            "call_e_method(Ping); } }");
        CHECK(codes_of(r) == std::vector<std::string>{"E012"});
    }
    SUBCASE("behavior arity must match the signature") {
        AnalysisResult r = analyze_text(
            "extensible class S { extend Ping(a); }\n"
            "extend S class X { constructor(s) { } extend Ping() { } }");
        CHECK(codes_of(r) == std::vector<std::string>{"E011"});
    }
    SUBCASE("behavior in an extensible extender may dispatch its own sigs") {
        AnalysisResult r = analyze_text(
            "extensible class S { extend Tick(); }\n"
            "extensible extend S class M { extend Kick(); constructor(s) { } "
            "extend Tick() { call_e_method(Kick); } }");
        CHECK(r.ok());
    }
    SUBCASE("signatures inherit through the base chain") {
        AnalysisResult r = analyze_text(
            "extensible class Base { extend Ping(); }\n"
            "extensible class S extends Base { }\n"
            "extend S class X { constructor(s) { } extend Ping() { } }");
        CHECK(r.ok());
    }
    SUBCASE("classer with no constructor is E013") {
        AnalysisResult r = analyze_text(
            "extensible class S { }\n"
            "dynamic extend S class C { }");
        CHECK(codes_of(r) == std::vector<std::string>{"E013"});
    }
    SUBCASE("E022 via this receiver") {
        AnalysisResult r = analyze_text(
            "extensible class S { method m() { return this.{S}; } }");
        CHECK(codes_of(r) == std::vector<std::string>{"E022"});
    }
    SUBCASE("E022 via the support parameter of an extender constructor") {
        AnalysisResult r = analyze_text(
            "extensible class S { }\n"
            "extensible class T { }\n"
            "dynamic extend T class C { private constructor(t) { } }\n"
            "extend S class X { constructor(s) { var p = s.{C}; } }");
        CHECK(codes_of(r) == std::vector<std::string>{"E022"});
    }
    SUBCASE("classer over an ancestor of the receiver class is fine") {
        AnalysisResult r = analyze_text(
            "extensible class S { }\n"
            "class D extends S { method m() { return this.{C}; } }\n"
            "dynamic extend S class C { private constructor(s) { } }");
        CHECK(r.ok());
    }
    SUBCASE("unknown receiver class defers the classer check to runtime") {
        AnalysisResult r = analyze_text(
            "class M { method m(g) { return g.{Whatever}; } }");
        CHECK(r.ok());
    }
    SUBCASE("user identifiers may not begin with __eco") {
        AnalysisResult r = analyze_text("class M { var __eco_registry; }");
        CHECK(codes_of(r) == std::vector<std::string>{"E002"});
    }
}

TEST_CASE("diagnostics within one file come out sorted by position") {
    AnalysisResult r = analyze_text(
        "class A {\n"
        "}\n"
        "class B extends Nope {\n"
        "    var f;\n"
        "    var f;\n"
        "}\n"
        "class A {\n"
        "}\n");
    REQUIRE(r.diags.size() == 3);
    CHECK(r.diags[0].line == 3);  // unknown base
    CHECK(r.diags[1].line == 5);  // duplicate member
    CHECK(r.diags[2].line == 7);  // duplicate class
}

TEST_CASE("the full corpus passes with zero diagnostics") {
    eco::CheckResult checked =
        eco::check_sources(testutil::load_stdlib(testutil::all_stdlib_names()));
    for (const auto& d : checked.diags)
        MESSAGE(eco::format_diagnostic(d));
    CHECK(checked.ok);
}

TEST_CASE("diagnostics are order-independent across files") {
    eco::SourceFile a{"a.eco", "class X { var f; var f; }"};
    eco::SourceFile b{"b.eco", "class Y extends Nope { }"};
    eco::CheckResult ab = eco::check_sources({a, b});
    eco::CheckResult ba = eco::check_sources({b, a});
    auto key = [](const eco::Diagnostic& d) {
        return d.code + "|" + d.file + "|" + std::to_string(d.line) + "|" +
               std::to_string(d.col);
    };
    std::vector<std::string> ka, kb;
    for (const auto& d : ab.diags) ka.push_back(key(d));
    for (const auto& d : ba.diags) kb.push_back(key(d));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    CHECK(ka == kb);
    // and within one run, sorted by file order then position
    REQUIRE(ab.diags.size() == 2);
    CHECK(ab.diags[0].file == "a.eco");
    CHECK(ab.diags[1].file == "b.eco");
}
