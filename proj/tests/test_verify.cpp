#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "sl3qt/verify.hpp"

using namespace sl3qt;
namespace fs = std::filesystem;

TEST_CASE("first table and its exponent rows") {
    Quadrilateral Q = load_quadrilateral(SL3QT_DATA_DIR);
    TableData t = step1_table(Q, Q.webs[0]);
    CHECK(t.cols.size() == 7);
    CHECK(t.alpha == std::vector<i64>{0, 1, 0, 0, 0, 0, 0});
    CHECK(t.alpha2 == std::vector<i64>{0, 0, 1, 1, 0, 0, 0});
    CHECK(render_table(1, Q.s, t) == read_file(SL3QT_GOLDEN_DIR "/table_case1.txt"));
    // alpha of the (1,2)_1 term at v3
    CHECK(commutation_exponent(Q.F.eps[1], Q.F.at[0], t.exps[1]) == ThirdInt{3});
}

TEST_CASE("golden trace renderings") {
    Quadrilateral Q = load_quadrilateral(SL3QT_DATA_DIR);
    CHECK(render_all_traces(Q) == read_file(SL3QT_GOLDEN_DIR "/traces.txt"));
}

TEST_CASE("hand cancellation for the third web") {
    Quadrilateral Q = load_quadrilateral(SL3QT_DATA_DIR);
    TableData t = step1_table(Q, Q.webs[2]);
    LaurentPoly sum(Q.s.size());
    for (std::size_t k = 0; k < t.cols.size(); ++k)
        if (t.cols[k] == "(1,2)_2" || t.cols[k] == "(1,2)_3") {
            CHECK_FALSE(is_laurent(step1_image(Q, LaurentPoly::monomial(t.exps[k]))).has_value());
            sum += LaurentPoly::monomial(t.exps[k]);
        }
    auto img = is_laurent(step1_image(Q, sum));
    REQUIRE(img);
    CHECK(is_multiplicity_free(*img));
}

TEST_CASE("flip check report") {
    Quadrilateral Q = load_quadrilateral(SL3QT_DATA_DIR);
    for (auto st : all_states()) {
        FlipCheck fc = flip_check(Q, 2, st);
        CHECK(fc.ok);
        CHECK(fc.report.find("classical, before flip") != std::string::npos);
    }
}

TEST_CASE("corrupted golden file is reported") {
    fs::path dir = fs::temp_directory_path() / "sl3qt_golden_test";
    fs::create_directories(dir);
    for (int c = 1; c <= 6; ++c) {
        std::string name = "table_case" + std::to_string(c) + ".txt";
        fs::copy_file(fs::path(SL3QT_GOLDEN_DIR) / name, dir / name, fs::copy_options::overwrite_existing);
    }
    { std::ofstream(dir / "table_case4.txt", std::ios::app) << "extra\n"; }
    SuiteOptions opt{SL3QT_DATA_DIR, dir.string(), 5};
    int failed = 0;
    for (auto& r : verify_suite(opt))
        if (!r.pass) {
            ++failed;
            CHECK(r.criterion == 2);
            CHECK(r.detail.find("--- golden") != std::string::npos);
        }
    CHECK(failed == 1);
    fs::remove_all(dir);
}
