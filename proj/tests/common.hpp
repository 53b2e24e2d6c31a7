#pragma once

#include <gtest/gtest.h>

#include <string>

#include "wbh/wbh.hpp"

namespace wbh::test {

inline std::string data_path(const std::string& rel) { return std::string(WBH_DATA_DIR) + "/" + rel; }

inline std::string failures_of(const AxiomReport& r) {
  std::string s;
  for (const auto& id : r.failures()) s += id + " ";
  return s.empty() ? "none" : s;
}

inline std::vector<WeakBraidedBimonad> reference_instances() { return {g2(), k2(), z2(), nz(), sl()}; }

inline TensorMap endo(const Mat& m) { return TensorMap({m.rows()}, {m.cols()}, m); }

}  // namespace wbh::test

#define EXPECT_REPORT_PASSES(rep) EXPECT_TRUE((rep).all_pass()) << "failing: " << ::wbh::test::failures_of(rep)
