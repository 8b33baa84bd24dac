#pragma once

#include <cstdlib>
#include <string>

#include <doctest.h>

#include "zpsum/corpus.hpp"
#include "zpsum/error.hpp"

// Seed for the random corpora; ZPSUM_SEED overrides the fixed default.
inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("ZPSUM_SEED")) return std::stoull(s);
  return zpsum::kDefaultSeed;
}

#define CHECK_ERROR(expr, expected_code)                              \
  do {                                                                \
    bool thrown_ = false;                                             \
    try {                                                             \
      (void)(expr);                                                   \
    } catch (const zpsum::Error& e_) {                                \
      thrown_ = true;                                                 \
      CHECK_MESSAGE(e_.code() == (expected_code), e_.what());         \
    }                                                                 \
    CHECK_MESSAGE(thrown_, "no error from " #expr);                   \
  } while (0)
