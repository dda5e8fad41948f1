#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "oregonator/field.hpp"

namespace oreg {

// PBM P1 (ASCII), binary fields only.
void write_pbm(const std::filesystem::path& path, const IntField2D& f);
IntField2D read_pbm(const std::filesystem::path& path);

// PGM P2 (ASCII). Integer fields use an exact offset mapping recorded in the
// comment line ("# offset <lo>", gray = value - lo); real fields quantize to
// [0, 65535] with "# range <lo> <hi>".
void write_pgm(const std::filesystem::path& path, const IntField2D& f);
IntField2D read_pgm_int(const std::filesystem::path& path);
void write_pgm(const std::filesystem::path& path, const RealField2D& f);
RealField2D read_pgm_real(const std::filesystem::path& path);

// "n,j,k,value" rows for a frame sequence, with header.
void write_frames_csv(const std::filesystem::path& path, const std::vector<IntField2D>& frames);

std::string frame_filename(int index, const std::string& ext); // frame_%06d<ext>

std::string render_ascii(const IntField2D& f); // '.' for 0, '#' otherwise

} // namespace oreg
