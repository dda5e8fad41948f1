#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oregonator/frame_io.hpp"

using namespace oreg;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const char* name) {
    return fs::temp_directory_path() / name;
}

} // namespace

TEST_CASE("PBM round trip on a binary frame") {
    std::mt19937 rng(31);
    std::bernoulli_distribution bit(0.3);
    IntField2D f(9, 6);
    for (auto& v : f) v = bit(rng);
    const auto path = temp_file("oreg_test.pbm");
    write_pbm(path, f);
    CHECK(read_pbm(path) == f);
    fs::remove(path);
}

TEST_CASE("PBM rejects non-binary frames") {
    IntField2D f(2, 2, 0);
    f.at(0, 0) = 3;
    CHECK_THROWS(write_pbm(temp_file("oreg_bad.pbm"), f));
}

TEST_CASE("integer PGM round trip is exact, including negatives") {
    std::mt19937 rng(32);
    std::uniform_int_distribution<std::int64_t> val(-17, 12);
    IntField2D f(7, 5);
    for (auto& v : f) v = val(rng);
    const auto path = temp_file("oreg_test_int.pgm");
    write_pgm(path, f);
    CHECK(read_pgm_int(path) == f);
    fs::remove(path);
}

TEST_CASE("real PGM round trip preserves values to quantization accuracy") {
    std::mt19937 rng(33);
    std::uniform_real_distribution<double> val(0.1, 2.0);
    RealField2D f(6, 6);
    for (auto& v : f) v = val(rng);
    const auto path = temp_file("oreg_test_real.pgm");
    write_pgm(path, f);
    const auto g = read_pgm_real(path);
    for (int k = 0; k < 6; ++k)
        for (int j = 0; j < 6; ++j)
            CHECK(g.at(j, k) == doctest::Approx(f.at(j, k)).epsilon(1e-3));
    fs::remove(path);
}

TEST_CASE("CSV has the documented header and one row per cell per frame") {
    IntField2D a(2, 2, 0), b(2, 2, 1);
    const auto path = temp_file("oreg_test.csv");
    write_frames_csv(path, {a, b});
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,j,k,value");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 8);
    fs::remove(path);
}

TEST_CASE("frame filenames are zero padded") {
    CHECK(frame_filename(0, ".pbm") == "frame_000000.pbm");
    CHECK(frame_filename(123, ".pgm") == "frame_000123.pgm");
}

TEST_CASE("ascii rendering") {
    IntField2D f(3, 2, 0);
    f.at(1, 0) = 1;
    CHECK(render_ascii(f) == ".#.\n...\n");
}

TEST_CASE("identical frames serialize byte-identically") {
    std::mt19937 rng(34);
    std::bernoulli_distribution bit(0.5);
    IntField2D f(8, 8);
    for (auto& v : f) v = bit(rng);
    const auto p1 = temp_file("oreg_det1.pbm"), p2 = temp_file("oreg_det2.pbm");
    write_pbm(p1, f);
    write_pbm(p2, f);
    std::ifstream a(p1), b(p2);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    fs::remove(p1);
    fs::remove(p2);
}
