#include "oregonator/frame_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oreg {

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

// Skips whitespace and '#' comments, returns the next token.
std::string next_token(std::istream& in) {
    std::string tok;
    for (;;) {
        int c = in.peek();
        if (c == EOF) throw std::runtime_error("unexpected end of netpbm file");
        if (std::isspace(c)) {
            in.get();
        } else if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else {
            in >> tok;
            return tok;
        }
    }
}

std::string read_comment(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] == '#') return line;
    return {};
}

} // namespace

void write_pbm(const std::filesystem::path& path, const IntField2D& f) {
    if (!all_binary(f)) throw std::domain_error("PBM requires binary field");
    auto out = open_out(path);
    out << "P1\n" << f.width() << " " << f.height() << "\n";
    for (int k = 0; k < f.height(); ++k) {
        for (int j = 0; j < f.width(); ++j) out << (j ? " " : "") << f.at(j, k);
        out << "\n";
    }
}

IntField2D read_pbm(const std::filesystem::path& path) {
    auto in = open_in(path);
    if (next_token(in) != "P1") throw std::runtime_error("not a P1 PBM: " + path.string());
    const int w = std::stoi(next_token(in));
    const int h = std::stoi(next_token(in));
    IntField2D f(w, h);
    for (int k = 0; k < h; ++k)
        for (int j = 0; j < w; ++j) f.at(j, k) = std::stoll(next_token(in));
    if (!all_binary(f)) throw std::runtime_error("PBM with non-binary values");
    return f;
}

void write_pgm(const std::filesystem::path& path, const IntField2D& f) {
    const auto [lo_it, hi_it] = std::minmax_element(f.begin(), f.end());
    const std::int64_t lo = *lo_it;
    const std::int64_t span = *hi_it - lo;
    if (span > 65535) throw std::domain_error("integer field range exceeds PGM maxval 65535");
    auto out = open_out(path);
    out << "P2\n# offset " << lo << "\n" << f.width() << " " << f.height() << "\n"
        << std::max<std::int64_t>(span, 1) << "\n";
    for (int k = 0; k < f.height(); ++k) {
        for (int j = 0; j < f.width(); ++j) out << (j ? " " : "") << (f.at(j, k) - lo);
        out << "\n";
    }
}

IntField2D read_pgm_int(const std::filesystem::path& path) {
    std::istringstream cm(read_comment(path));
    std::string hash, key;
    std::int64_t lo = 0;
    cm >> hash >> key >> lo;
    if (key != "offset") throw std::runtime_error("PGM lacks '# offset' comment");

    auto in = open_in(path);
    if (next_token(in) != "P2") throw std::runtime_error("not a P2 PGM: " + path.string());
    const int w = std::stoi(next_token(in));
    const int h = std::stoi(next_token(in));
    next_token(in); // maxval
    IntField2D f(w, h);
    for (int k = 0; k < h; ++k)
        for (int j = 0; j < w; ++j) f.at(j, k) = std::stoll(next_token(in)) + lo;
    return f;
}

void write_pgm(const std::filesystem::path& path, const RealField2D& f) {
    const auto [lo_it, hi_it] = std::minmax_element(f.begin(), f.end());
    const double lo = *lo_it, hi = *hi_it;
    const double span = hi > lo ? hi - lo : 1.0;
    auto out = open_out(path);
    out.precision(17);
    out << "P2\n# range " << lo << " " << hi << "\n" << f.width() << " " << f.height()
        << "\n65535\n";
    for (int k = 0; k < f.height(); ++k) {
        for (int j = 0; j < f.width(); ++j) {
            const long g = std::lround((f.at(j, k) - lo) / span * 65535.0);
            out << (j ? " " : "") << g;
        }
        out << "\n";
    }
}

RealField2D read_pgm_real(const std::filesystem::path& path) {
    std::istringstream cm(read_comment(path));
    std::string hash, key;
    double lo = 0.0, hi = 0.0;
    cm >> hash >> key >> lo >> hi;
    if (key != "range") throw std::runtime_error("PGM lacks '# range' comment");
    const double span = hi > lo ? hi - lo : 1.0;

    auto in = open_in(path);
    if (next_token(in) != "P2") throw std::runtime_error("not a P2 PGM: " + path.string());
    const int w = std::stoi(next_token(in));
    const int h = std::stoi(next_token(in));
    next_token(in); // maxval
    RealField2D f(w, h);
    for (int k = 0; k < h; ++k)
        for (int j = 0; j < w; ++j)
            f.at(j, k) = lo + std::stod(next_token(in)) / 65535.0 * span;
    return f;
}

void write_frames_csv(const std::filesystem::path& path,
                      const std::vector<IntField2D>& frames) {
    auto out = open_out(path);
    out << "n,j,k,value\n";
    for (std::size_t n = 0; n < frames.size(); ++n)
        for (int k = 0; k < frames[n].height(); ++k)
            for (int j = 0; j < frames[n].width(); ++j)
                out << n << "," << j << "," << k << "," << frames[n].at(j, k) << "\n";
}

std::string frame_filename(int index, const std::string& ext) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "frame_%06d", index);
    return std::string(buf) + ext;
}

std::string render_ascii(const IntField2D& f) {
    std::string s;
    s.reserve(static_cast<std::size_t>(f.height()) * (f.width() + 1));
    for (int k = 0; k < f.height(); ++k) {
        for (int j = 0; j < f.width(); ++j) s += f.at(j, k) == 0 ? '.' : '#';
        s += '\n';
    }
    return s;
}

} // namespace oreg
