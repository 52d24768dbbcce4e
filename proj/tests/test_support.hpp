#pragma once

// Minimal check harness shared by the test binaries: CHECK-style macros
// print the failing location and keep going; finish() prints a summary
// and yields the process exit code.

#include <exception>
#include <iostream>
#include <string>

namespace testsupport {

inline int checks = 0;
inline int failures = 0;

inline void fail(const char* file, int line, const std::string& what) {
  ++failures;
  std::cerr << file << ":" << line << ": FAILED: " << what << "\n";
}

inline int finish(const char* name) {
  std::cout << name << ": " << (checks - failures) << "/" << checks
            << " checks passed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace testsupport

#define CHECK(cond)                                             \
  do {                                                          \
    ++testsupport::checks;                                      \
    if (!(cond)) testsupport::fail(__FILE__, __LINE__, #cond);  \
  } while (0)

#define CHECK_MSG(cond, msg)                                              \
  do {                                                                    \
    ++testsupport::checks;                                                \
    if (!(cond)) {                                                        \
      testsupport::fail(__FILE__, __LINE__, std::string(#cond) + " -- " + \
                                                std::string(msg));        \
    }                                                                     \
  } while (0)

#define CHECK_THROWS_AS(stmt, Ex)                                         \
  do {                                                                    \
    ++testsupport::checks;                                                \
    int outcome_ = 0; /* 0 = nothing thrown, 1 = right type, 2 = wrong */ \
    std::string what_;                                                    \
    try {                                                                 \
      stmt;                                                               \
    } catch (const Ex&) {                                                 \
      outcome_ = 1;                                                       \
    } catch (const std::exception& e_) {                                  \
      outcome_ = 2;                                                       \
      what_ = e_.what();                                                  \
    }                                                                     \
    if (outcome_ == 0) {                                                  \
      testsupport::fail(__FILE__, __LINE__, "no exception from: " #stmt); \
    } else if (outcome_ == 2) {                                           \
      testsupport::fail(__FILE__, __LINE__, "wrong exception type (" +    \
                                                what_ + ") from: " #stmt); \
    }                                                                     \
  } while (0)
