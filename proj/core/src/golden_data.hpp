#pragma once

namespace repsq::golden::data {
extern const char* const kTableA;
extern const char* const kTableB;
extern const char* const kKnownSolutions;
}  // namespace repsq::golden::data
