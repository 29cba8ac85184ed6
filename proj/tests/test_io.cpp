#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "hopf/hzf.hpp"

using namespace hopf;

namespace {

struct TempDir {
    std::string path;
    TempDir() {
        char tmpl[] = "/tmp/hopfio-XXXXXX";
        path = mkdtemp(tmpl);
    }
    std::string file(const std::string& name) const { return path + "/" + name; }
};

}  // namespace

TEST_CASE("algebra files round-trip byte-stably") {
    Field f = Field::rational_functions({"alpha"});
    HopfPtr h4 = make_sweedler_h4(f);
    std::string text = hzf::algebra_to_text(*h4);
    HopfPtr back = hzf::algebra_from_text(text);
    CHECK(back->name == "H4");
    CHECK(back->field == f);
    CHECK(structure_equal(*h4, *back, h4->basis.elements()).all_pass());
    CHECK(check_hopf(*back).all_pass());
    // Byte stability: serializing the parse reproduces the bytes.
    CHECK(hzf::algebra_to_text(*back) == text);
}

TEST_CASE("rule-backed algebras serialize by rule name") {
    Field f = Field::rational_functions({"q"});
    HopfPtr kz = make_group_algebra_kZ(f, 6);
    std::string text = hzf::algebra_to_text(*kz, "kZ");
    HopfPtr back = hzf::algebra_from_text(text);
    CHECK_FALSE(back->basis.is_finite());
    CHECK(back->basis.rule_window() == 6);
    CHECK(back->mult.apply(BasisId("g", {2}), BasisId("g", {5})) ==
          LinComb::basis(f, BasisId("g", {7})));
    // Unknown rules are rejected.
    CHECK_THROWS_AS((void)hzf::algebra_from_text(
                        "{\"field\":\"Q\",\"basis\":{\"rule\":\"mystery\",\"window\":3},\"unit\":\"e\"}"),
                    Error);
}

TEST_CASE("dual units serialize as combinations") {
    Field f = Field::rationals();
    Fixture toys = load_fixture("Z2-toys");
    HopfPtr d = toys.algebra("kZ2-dual");
    std::string text = hzf::algebra_to_text(*d);
    CHECK(text.find("\"unit\": {") != std::string::npos);
    HopfPtr back = hzf::algebra_from_text(text);
    CHECK(back->unit == d->unit);
    CHECK(structure_equal(*d, *back, d->basis.elements()).all_pass());
}

TEST_CASE("form files round-trip") {
    TempDir dir;
    Field f = Field::rational_functions({"alpha"});
    HopfPtr h4 = make_sweedler_h4(f);
    BilinearForm p = h4_braiding(h4, "alpha");
    hzf::save_form(dir.file("p.form.json"), p);
    BilinearForm back = hzf::load_form(dir.file("p.form.json"), h4, h4);
    for (const auto& a : h4->basis.elements())
        for (const auto& b : h4->basis.elements()) CHECK(back(a, b) == p(a, b));
}

TEST_CASE("counit-product default in form files") {
    Field f = Field::rationals();
    HopfPtr z2 = make_cyclic_group_algebra(f, 2);
    BilinearForm form = hzf::form_from_text(
        "{\"left\":\"kZ2\",\"right\":\"kZ2\",\"default\":\"counit-product\",\"entries\":[]}", z2, z2);
    for (const auto& a : z2->basis.elements())
        for (const auto& b : z2->basis.elements())
            CHECK(form(a, b) == z2->counit.apply(a) * z2->counit.apply(b));
}

TEST_CASE("datum and product files rebuild and revalidate") {
    TempDir dir;
    Fixture toys = load_fixture("Z2-toys");
    ProductPtr z4 = toys.product("Z4-crossed");

    hzf::save_datum(dir.file("z4.datum.json"), *z4->datum);
    DatumPtr omega = hzf::load_datum(dir.file("z4.datum.json"));
    CHECK(check_extending_structure(*omega).all_pass());

    hzf::save_product(dir.file("z4.hzf"), *z4);
    ProductPtr back = hzf::load_product(dir.file("z4.hzf"));
    CHECK(back->provenance == Provenance::Crossed);
    CHECK(structure_equal(*z4->hopf, *back->hopf, z4->hopf->basis.elements()).all_pass());
}

TEST_CASE("quadruple files round-trip against their product") {
    TempDir dir;
    Fixture fx = load_fixture("Borel-double(1)");
    ProductPtr dbl = fx.product();
    Quadruple quad{fx.form("p"), fx.form("tau"), flip_dual(fx.form("lambda")), fx.form("lambda")};
    hzf::save_quad(dir.file("q.json"), quad);
    Quadruple back = hzf::load_quad(dir.file("q.json"), *dbl);
    const auto& wl = dbl->datum->base->basis.elements();
    const auto& wr = dbl->datum->hpart->basis.elements();
    for (const auto& a : wl)
        for (const auto& b : wl) CHECK(back.p(a, b) == quad.p(a, b));
    for (const auto& h : wr)
        for (const auto& a : wl) CHECK(back.v(h, a) == quad.v(h, a));
}

TEST_CASE("io failures carry the right error kind") {
    CHECK_THROWS_AS((void)hzf::read_file("/nonexistent/path"), Error);
    CHECK_THROWS_AS((void)hzf::algebra_from_text("{\"field\":\"F9:\"}"), std::exception);
    Field f = Field::rationals();
    CHECK_THROWS_AS((void)Scalar::parse(f, "2*"), Error);
    CHECK_THROWS_AS((void)Scalar::parse(f, "q"), Error);  // undeclared parameter
    CHECK_THROWS_AS((void)BasisId::parse("(a,b"), Error);
}
