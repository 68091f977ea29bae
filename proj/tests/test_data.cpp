#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>

#include "shiha/data.hpp"

using namespace shiha::data;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/shiha_test_" + name) {
        std::ofstream f(path, std::ios::binary);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("builtin datasets have the reference shapes") {
    const auto names = builtin_names();
    REQUIRE(names.size() == 4);

    const Dataset d1 = builtin_dataset("failure_times");
    CHECK(d1.values.size() == 24);
    CHECK(*std::min_element(d1.values.begin(), d1.values.end()) ==
          doctest::Approx(2.998).epsilon(1e-12));
    CHECK(*std::max_element(d1.values.begin(), d1.values.end()) ==
          doctest::Approx(138.5).epsilon(1e-12));

    const Dataset d2 = builtin_dataset("vinyl_chloride");
    CHECK(d2.values.size() == 34);
    CHECK(d2.values.front() == doctest::Approx(5.1).epsilon(1e-12));
    CHECK(*std::min_element(d2.values.begin(), d2.values.end()) ==
          doctest::Approx(0.1).epsilon(1e-12));

    const Dataset d3 = builtin_dataset("karachi_precipitation");
    CHECK(d3.values.size() == 59);

    const Dataset d4 = builtin_dataset("electronic_components");
    CHECK(d4.values.size() == 15);
    const double sum = std::accumulate(d4.values.begin(), d4.values.end(), 0.0);
    CHECK(sum == doctest::Approx(413.2).epsilon(1e-10));
    CHECK(sum / 15.0 == doctest::Approx(27.547).epsilon(1e-4));

    for (const auto& n : names) {
        const Dataset d = builtin_dataset(n);
        CHECK(d.name == n);
        CHECK_FALSE(d.source.empty());
        for (double v : d.values) CHECK(v > 0.0);
    }
    CHECK_THROWS_AS(builtin_dataset("unknown"), std::invalid_argument);
}

TEST_CASE("csv loading without header") {
    TempFile f("plain.csv", "1.0\n2.0\n3.5\n");
    const Dataset d = load_csv(f.path);
    REQUIRE(d.values.size() == 3);
    CHECK(d.values[0] == 1.0);
    CHECK(d.values[2] == 3.5);
    CHECK(d.name == "shiha_test_plain");
}

TEST_CASE("csv loading with header and column selection") {
    TempFile f("cols.csv", "id,time,label\n1,0.5,a\n2,1.25,b\n3,2.0,c\n");
    const Dataset byname = load_csv(f.path, "time");
    REQUIRE(byname.values.size() == 3);
    CHECK(byname.values[1] == 1.25);
    const Dataset byindex = load_csv(f.path, "1");
    CHECK(byindex.values == byname.values);
    CHECK_THROWS_AS(load_csv(f.path, "missing"), std::invalid_argument);
}

TEST_CASE("csv errors carry the offending row") {
    TempFile neg("neg.csv", "1.0\n-1.0\n");
    try {
        load_csv(neg.path);
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("row 2") != std::string::npos);
    }
    TempFile junk("junk.csv", "time\n1.0\nabc\n");
    CHECK_THROWS_AS(load_csv(junk.path), std::runtime_error);
    CHECK_THROWS_AS(load_csv("/nonexistent/file.csv"), std::runtime_error);
    TempFile empty("empty.csv", "");
    CHECK_THROWS_AS(load_csv(empty.path), std::runtime_error);
}

TEST_CASE("csv round trip through quoting and blank lines") {
    TempFile f("quote.csv", "\"time\"\n\"1.5\"\n\n2.5\n");
    const Dataset d = load_csv(f.path);
    REQUIRE(d.values.size() == 2);
    CHECK(d.values[0] == 1.5);
    CHECK(d.values[1] == 2.5);
}
