#pragma once

// Raw certificate constants as exact rational strings. Parsed once by
// load_certificate().

namespace saddlecert::detail {

extern const char* const kQx[3][3];
extern const char* const kQy[3][3];
extern const char* const kSx[8][8][3];
extern const char* const kSy[8][8][3];
extern const char* const kCx[8][9];
extern const char* const kCy[10][9];

}  // namespace saddlecert::detail
