#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pqr/ingest.hpp"
#include "pqr/structure.hpp"

using namespace pqr;

TEST_CASE("permutation group file parses and realizes") {
    GroupSpec s = parse_group_file("degree 5\ngen (1 2 3 4 5)\ngen (1 2 3)\n");
    CHECK(s.kind == GroupSpec::Kind::perm_cycles);
    CHECK(s.degree == 5);
    CHECK(s.cycle_gens.size() == 2);
    GroupPtr g = realize(s);
    CHECK(g->order_u64() == 60);
}

TEST_CASE("matrix group file over Z/25 parses and realizes") {
    GroupSpec s = parse_group_file("mod 25 dim 2\ngen [[1,1],[0,1]]\ngen [[1,0],[1,1]]\n");
    CHECK(s.kind == GroupSpec::Kind::matrix_mod_m);
    CHECK(s.modulus == 25);
    GroupPtr g = realize(s);
    CHECK(g->order_u64() == 15000);
}

TEST_CASE("unclosed cycle is a positioned syntax error") {
    try {
        parse_group_file("degree 5\ngen (1 2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("')'") != std::string::npos);
    }
}

TEST_CASE("out-of-range and duplicate points are rejected") {
    CHECK_THROWS_AS(parse_group_file("degree 3\ngen (1 2 4)\n"), ParseError);
    CHECK_THROWS_AS(parse_group_file("degree 4\ngen (1 2 1)\n"), ParseError);
    CHECK_THROWS_AS(parse_group_file("degree 4\ngen (1 2)(2 3)\n"), ParseError);
    CHECK_THROWS_AS(parse_group_file("degree 4\ngen ()\n"), ParseError);
}

TEST_CASE("matrix shape errors are rejected") {
    CHECK_THROWS_AS(parse_group_file("mod 5 dim 2\ngen [[1,0],[0]]\n"), ParseError);
    CHECK_THROWS_AS(parse_group_file("mod 5 dim 2\ngen [[1,0]]\n"), ParseError);
    CHECK_THROWS_AS(parse_group_file("mod 5 dim 2\ngen [[1,7],[0,1]]\n"), ParseError);
    // singular generator
    CHECK_THROWS_AS(parse_group_file("mod 4 dim 2\ngen [[2,0],[0,2]]\n"), ParseError);
}

TEST_CASE("header taxonomy is enforced") {
    CHECK_THROWS_AS(parse_group_file("gen (1 2)\n"), ParseError);            // gens before header
    CHECK_THROWS_AS(parse_group_file("degree 3\ndegree 4\n"), ParseError);   // two headers
    CHECK_THROWS_AS(parse_group_file("degree 0\n"), ParseError);
    CHECK_THROWS_AS(parse_group_file("mod 1 dim 2\n"), ParseError);
    CHECK_THROWS_AS(parse_group_file("field 6 dim 2\n"), ParseError);        // not a prime power
    CHECK_THROWS_AS(parse_group_file("field 121 dim 2\n"), ParseError);      // above the table
    CHECK_THROWS_AS(parse_group_file("degree 3\nfrobnicate 1\n"), ParseError);
    CHECK_THROWS_AS(parse_group_file(""), ParseError);                       // no header at all
    CHECK_THROWS_AS(parse_group_file("degree 3\nexpect order 2 junk\n"), ParseError);
    CHECK_THROWS_AS(parse_group_file("degree 3\nexpect order 6\nexpect order 6\n"), ParseError);
}

TEST_CASE("declared order is validated at realization") {
    GroupSpec s = parse_group_file("degree 3\ngen (1 2 3)\nexpect order 6\n");
    CHECK(s.expected.order == 6);
    CHECK_THROWS_AS(realize(s), ValidationError);
    s.expected.order = 3;
    CHECK(realize(s)->order_u64() == 3);
}

TEST_CASE("empty generator list realizes the trivial group") {
    GroupPtr g = realize(parse_group_file("name E\ndegree 4\n"));
    CHECK(g->order_u64() == 1);
    CHECK(g->degree() == 4);
}

TEST_CASE("serialization round-trips") {
    GroupSpec s = parse_group_file(
        "name K4\ndegree 4\nexpect order 4\nexpect classes 4\ngen (1 2)(3 4)\ngen (1 3)(2 4)\n");
    GroupSpec t = parse_group_file(serialize_group_spec(s));
    CHECK(t.name == "K4");
    CHECK(t.degree == 4);
    CHECK(t.expected.order == 4);
    CHECK(t.expected.class_count == 4);
    CHECK(t.cycle_gens == s.cycle_gens);

    GroupSpec m = parse_group_file("field 9 dim 2\nexpect center 2\ngen [[0,1],[2,0]]\n");
    GroupSpec m2 = parse_group_file(serialize_group_spec(m));
    CHECK(m2.field_q == 9);
    CHECK(m2.expected.center_order == 2);
    CHECK(m2.matrix_gens == m.matrix_gens);
}

TEST_CASE("comments and blank lines are ignored") {
    GroupSpec s = parse_group_file("# a comment\n\ndegree 3  # trailing\ngen (1 2 3)\n");
    CHECK(realize(s)->order_u64() == 3);
}

TEST_CASE("manifest parsing catches structural mistakes") {
    CHECK_THROWS_AS(parse_manifest("entry X\nfile x.grp\n"), ParseError);  // unterminated
    CHECK_THROWS_AS(parse_manifest("entry X\nend\n"), ParseError);         // no realization
    CHECK_THROWS_AS(parse_manifest("entry X\nfile a\nbuiltin extraspecial 3 1 p\nend\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_manifest("entry X\nfile a\norder 5\norder 5\nend\n"), ParseError);
    auto es = parse_manifest(
        "entry X\nbuiltin extraspecial 3 1 p\norder 27\n"
        "multiplier 1 source somewhere\natlas 2 63 2A source atlas\n"
        "provenance note one\nend\n");
    CHECK(es.size() == 1);
    CHECK(es[0].expected.multiplier_order == 1);
    CHECK(es[0].expected.atlas_names.size() == 1);
    CHECK(es[0].expected.atlas_names[0].label == "2A");
    CHECK(es[0].provenance.size() == 1);
}

TEST_CASE("the bundled corpus loads and validates") {
    auto entries = corpus();
    CHECK(entries.size() >= 30);
    std::set<std::string> names;
    for (const auto& e : entries) names.insert(e.name);
    for (const char* want :
         {"C2", "C30", "Q8", "A4", "S4", "F42", "A5", "S5", "A6", "A7", "SL2(5)", "SL2(7)",
          "SL2(8)", "SL2(9)", "SL3(2)", "SL3(3)", "SU3(3)", "Sz(8)", "3.A6", "3.A7", "SL2(Z/25)",
          "3^(1+2)", "5^(1+2)", "2^(1+4)+", "2^(1+4)-"})
        CHECK_MESSAGE(names.count(want) == 1, want);
}

TEST_CASE("corpus spot checks against published group data") {
    auto entries = corpus();

    const auto& sz = find_entry(entries, "Sz(8)");
    CHECK(sz.group->order_u64() == 29120);
    CHECK(sz.group->classes().count() == 11);

    const auto& a7c = find_entry(entries, "3.A7");
    CHECK(a7c.group->order_u64() == 7560);
    CHECK(center(a7c.group)->order_u64() == 3);
    CHECK(a7c.expected.quotient_order == 2520);

    CHECK(find_entry(entries, "SL3(3)").group->order_u64() == 5616);

    const auto& su = find_entry(entries, "SU3(3)");
    CHECK(su.expected.atlas_names.size() >= 3);
    for (const auto& an : su.expected.atlas_names) {
        auto cls = atlas_matches(*su.group, an);
        CHECK_MESSAGE(!cls.empty(), an.label);
        if (an.label == "2A") CHECK(cls.size() == 1);
    }

    CHECK_THROWS_AS(find_entry(entries, "M11"), NoneFoundError);
}

TEST_CASE("optional corpus entries may be absent") {
    auto entries = corpus();
    bool saw_optional = false;
    for (const auto& e : entries)
        if (e.optional_entry && !e.group) saw_optional = true;
    CHECK(saw_optional);  // the bundled manifest carries one unrealized optional entry
}
