#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "hagge4/errors.hpp"
#include "hagge4/svg_render.hpp"

#include "test_support.hpp"

using namespace hagge;

namespace {

size_t count_of(const std::string& text, const std::string& needle) {
    size_t n = 0;
    for (size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

std::string render(Figure figure, int size_px = 800) {
    RenderSpec spec;
    spec.figure = figure;
    spec.size_px = size_px;
    return render_svg(testsup::example_config(), spec);
}

} // namespace

TEST_CASE("configuration figure structure") {
    const std::string svg = render(Figure::Config);

    CHECK(count_of(svg, "class=\"hyperbola\"") == 2);
    CHECK(count_of(svg, "class=\"main-circle\"") == 1);
    CHECK(count_of(svg, "class=\"axis\"") == 2);
    CHECK(count_of(svg, "class=\"pencil-h\"") == 4);
    CHECK(count_of(svg, "class=\"pencil-n\"") == 4);
    CHECK(count_of(svg, "class=\"pencil-g\"") == 4);
    CHECK(count_of(svg, "class=\"point-marker\"") == 22);
    CHECK(count_of(svg, "class=\"point-label\"") == 22);
    CHECK(count_of(svg, "class=\"center-line\"") == 0);

    CHECK(svg.find(">M_c<") != std::string::npos);
    CHECK(svg.find(">P<") != std::string::npos);
    CHECK(svg.find(">A<") != std::string::npos);
}

TEST_CASE("Hagge figure structure") {
    const std::string svg = render(Figure::Hagge);

    CHECK(count_of(svg, "class=\"main-circle\"") == 5);
    CHECK(count_of(svg, "class=\"hyperbola\"") == 0);
    CHECK(count_of(svg, "class=\"axis\"") == 2);
    CHECK(count_of(svg, "class=\"center-line\"") == 1);
    CHECK(count_of(svg, "class=\"letter-line\"") == 4);
    CHECK(count_of(svg, "class=\"point-marker\"") == 42);
    CHECK(count_of(svg, "class=\"point-label\"") == 10);

    for (const char* label : {">P<", ">O<", ">Q1<", ">Q2<", ">Q3<", ">Q4<"})
        CHECK(svg.find(label) != std::string::npos);

    // Q4 = (29/6, -17/6) appears as a circle center, x formatted %.6g.
    CHECK(svg.find("cx=\"4.83333\"") != std::string::npos);
}

TEST_CASE("output is deterministic and self-contained") {
    for (const Figure fig : {Figure::Config, Figure::Hagge}) {
        const std::string svg1 = render(fig);
        const std::string svg2 = render(fig);
        CHECK(svg1 == svg2);

        CHECK(svg1.rfind("<svg ", 0) == 0);
        CHECK(svg1.find("viewBox=\"") != std::string::npos);
        CHECK(svg1.find("width=\"800\"") != std::string::npos);
        // World coordinates are mapped by hand; no transform attributes.
        CHECK(svg1.find("transform=") == std::string::npos);
        CHECK(svg1.find("http://") == svg1.find("http://www.w3.org/2000/svg"));
        CHECK(svg1.substr(svg1.size() - 7) == "</svg>\n");
    }
}

TEST_CASE("size is validated and honored") {
    CHECK(render(Figure::Config, 400).find("width=\"400\"") != std::string::npos);
    CHECK(render(Figure::Hagge, 100).find("width=\"100\"") != std::string::npos);

    RenderSpec spec;
    spec.figure = Figure::Config;
    spec.size_px = 99;
    CHECK_THROWS_AS(render_svg(testsup::example_config(), spec), InvalidParameter);
}

TEST_CASE("different configurations render different figures") {
    RenderSpec spec;
    spec.figure = Figure::Hagge;
    const std::string svg1 = render_svg(testsup::example_config(), spec);
    const std::string svg2 = render_svg(
        QuadConfig::make(testsup::rat("1"), testsup::rat("-1"), testsup::rat("2"),
                         testsup::rat("5")),
        spec);
    CHECK(svg1 != svg2);
    CHECK(count_of(svg2, "class=\"main-circle\"") == 5);
}
