#include <gtest/gtest.h>

#include <string>

#include "curvalpha/curvalpha.h"

namespace {

TEST(CApi, VersionAndStatusStrings) {
  EXPECT_STREQ(cva_version(), "1.0.0");
  EXPECT_STREQ(cva_status_string(CVA_OK), "ok");
  EXPECT_NE(std::string(cva_status_string(CVA_ERR_DEGENERATE_PLANE)), "");
}

TEST(CApi, ParseWaveVector) {
  cva_wave_vector v{};
  ASSERT_EQ(cva_parse_wave_vector("9,11", &v), CVA_OK);
  EXPECT_EQ(v.k1, 9);
  EXPECT_EQ(v.k2, 11);
  EXPECT_EQ(cva_parse_wave_vector("9;11", &v), CVA_ERR_PARSE);
  EXPECT_NE(std::string(cva_last_error()), "");
  EXPECT_EQ(cva_parse_wave_vector(nullptr, &v), CVA_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(cva_parse_wave_vector("1,2", nullptr), CVA_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ContextValidation) {
  cva_context* ctx = nullptr;
  ASSERT_EQ(cva_context_create(&ctx), CVA_OK);
  EXPECT_EQ(cva_context_set_area(ctx, "0"), CVA_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(cva_context_set_area(ctx, "x"), CVA_ERR_PARSE);
  EXPECT_EQ(cva_context_set_digits(ctx, 0), CVA_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(cva_context_set_digits(ctx, 61), CVA_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(cva_context_set_digits(ctx, 20), CVA_OK);
  EXPECT_EQ(cva_context_set_area(nullptr, "1"), CVA_ERR_INVALID_ARGUMENT);
  cva_context_destroy(ctx);
  cva_context_destroy(nullptr);
}

TEST(CApi, Curvature) {
  cva_curvature* h = nullptr;
  ASSERT_EQ(cva_curvature_compute(nullptr, {1, 0}, {0, 1}, "0", &h), CVA_OK);
  EXPECT_STREQ(cva_curvature_raw(h, 1), "-1/8");
  EXPECT_STREQ(cva_curvature_normalized(h, 0), "-0.5");
  EXPECT_STREQ(cva_curvature_closed(h, 1), "-1/9");
  EXPECT_STREQ(cva_curvature_beta(h, 1), "0");
  EXPECT_EQ(cva_curvature_bracket_sign(h), -1);
  cva_curvature_destroy(h);

  h = nullptr;
  EXPECT_EQ(cva_curvature_compute(nullptr, {1, 0}, {-1, 0}, "0", &h), CVA_ERR_DEGENERATE_PLANE);
  EXPECT_EQ(h, nullptr);
  EXPECT_EQ(cva_curvature_compute(nullptr, {0, 0}, {1, 0}, "0", &h), CVA_ERR_ZERO_MODE);
  EXPECT_EQ(cva_curvature_compute(nullptr, {1, 0}, {0, 1}, "-1", &h), CVA_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(cva_curvature_compute(nullptr, {1, 0}, {0, 1}, "1/0", &h), CVA_ERR_PARSE);
}

TEST(CApi, CurvatureUsesContextArea) {
  cva_context* ctx = nullptr;
  ASSERT_EQ(cva_context_create(&ctx), CVA_OK);
  ASSERT_EQ(cva_context_set_area(ctx, "2"), CVA_OK);
  cva_curvature* h = nullptr;
  ASSERT_EQ(cva_curvature_compute(ctx, {1, 0}, {0, 1}, "0", &h), CVA_OK);
  EXPECT_STREQ(cva_curvature_raw(h, 1), "-1/4");
  EXPECT_STREQ(cva_curvature_normalized(h, 1), "-1/4");
  cva_curvature_destroy(h);
  cva_context_destroy(ctx);
}

TEST(CApi, Alpha0) {
  cva_alpha0* h = nullptr;
  ASSERT_EQ(cva_alpha0_compute(nullptr, {9, 11}, {11, 12}, "1", &h), CVA_OK);
  EXPECT_EQ(cva_alpha0_exists(h), 1);
  EXPECT_EQ(cva_alpha0_below_cap(h), 1);
  EXPECT_EQ(cva_alpha0_positive_roots(h), 1);
  EXPECT_STREQ(cva_alpha0_reason(h), "threshold");
  EXPECT_STREQ(cva_alpha0_value(h), "0.0936057798171");
  EXPECT_NE(std::string(cva_alpha0_json(h)).find("\"exists\":true"), std::string::npos);
  cva_alpha0_destroy(h);

  ASSERT_EQ(cva_alpha0_compute(nullptr, {5, 0}, {5, 1}, "1", &h), CVA_OK);
  EXPECT_EQ(cva_alpha0_exists(h), 0);
  EXPECT_EQ(cva_alpha0_value(h), nullptr);
  cva_alpha0_destroy(h);
}

TEST(CApi, SweepAndScan) {
  cva_sweep* s = nullptr;
  ASSERT_EQ(cva_sweep_compute(nullptr, {9, 11}, {11, 12}, "0", "1", 200, &s), CVA_OK);
  EXPECT_EQ(cva_sweep_rows(s), 200u);
  EXPECT_EQ(cva_sweep_bracket_sign(s, 0), -1);
  EXPECT_EQ(cva_sweep_bracket_sign(s, 199), 1);
  EXPECT_EQ(std::string(cva_sweep_csv(s)).rfind("alpha,curvature_raw", 0), 0u);
  cva_sweep_destroy(s);
  EXPECT_EQ(cva_sweep_compute(nullptr, {9, 11}, {11, 12}, "1", "0", 10, &s), CVA_ERR_INVALID_ARGUMENT);

  cva_wave_vector eps[] = {{1, 1}};
  cva_scan* h = nullptr;
  ASSERT_EQ(cva_scan_compute(nullptr, 1, 3, eps, 1, "1", &h), CVA_OK);
  EXPECT_EQ(cva_scan_records(h), 9u);
  EXPECT_NE(std::string(cva_scan_summary_json(h)).find("measured"), std::string::npos);
  cva_scan_destroy(h);
  EXPECT_EQ(cva_scan_compute(nullptr, 1, 3, nullptr, 0, "1", &h), CVA_ERR_INVALID_ARGUMENT);
}

TEST(CApi, Verify) {
  cva_verify* h = nullptr;
  ASSERT_EQ(cva_verify_run(1, 20, 12, "2", &h), CVA_OK);
  EXPECT_EQ(cva_verify_passed(h), 1);
  EXPECT_NE(std::string(cva_verify_report(h)).find("PASS"), std::string::npos);
  cva_verify_destroy(h);
  EXPECT_EQ(cva_verify_run(1, 0, 12, "2", &h), CVA_ERR_INVALID_ARGUMENT);
}

}  // namespace
