#pragma once

#include <gtest/gtest.h>

#include "symscat/core.hpp"

// Asserts that `statement` throws symscat::Error with the given code.
#define EXPECT_SYMSCAT_ERROR(statement, expected_code)                                      \
  do {                                                                                      \
    bool symscat_thrown_ = false;                                                           \
    try {                                                                                   \
      statement;                                                                            \
    } catch (const ::symscat::Error& symscat_e_) {                                          \
      symscat_thrown_ = true;                                                               \
      EXPECT_EQ(symscat_e_.code(), expected_code) << symscat_e_.what();                     \
    }                                                                                       \
    EXPECT_TRUE(symscat_thrown_) << "expected " << ::symscat::to_string(expected_code);     \
  } while (false)
