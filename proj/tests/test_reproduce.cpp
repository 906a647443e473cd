#include "rootsys/core.hpp"
#include "rootsys/reproduce.hpp"

#include <doctest.h>

using namespace rootsys;

TEST_CASE("scopes") {
    CHECK(reproduce_scopes().size() == 6);
    CHECK_THROWS_AS(reproduce({"nonsense", 1}), Error);
}

TEST_CASE("affine scope is deterministic across worker counts") {
    auto a = reproduce({"affine", 1});
    auto b = reproduce({"affine", 3});
    CHECK(format_report_text(a) == format_report_text(b));
    CHECK(!a.empty());
    for (auto& c : a) CHECK(c.criterion == 2);
}

TEST_CASE("report formats") {
    std::vector<Check> v{{5, "x", "1", "1", true}, {5, "y", "2", "3", false}};
    auto t = format_report_text(v);
    CHECK(t.find("5\tPASS\tx") != std::string::npos);
    CHECK(t.find("total 2 pass 1 fail 1") != std::string::npos);
    CHECK(format_report_json(v).find("\"pass\": false") != std::string::npos);
}
