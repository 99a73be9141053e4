// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "lfs/mask.hpp"

namespace lfs {

/// Which views enter the report.
enum class EvalMode { SynthesizedOnly, AllViews, CentralOnly };

const char* eval_mode_name(EvalMode m);

struct ViewScore {
    ViewIndex view;
    double psnr_db = 0.0;      // valid only when !psnr_infinite
    bool psnr_infinite = false;
    double ssim = 0.0;
};

struct Aggregate {
    int view_count = 0;
    double mean_psnr_db = 0.0;   // over finite entries
    bool psnr_infinite = false;  // all entries were infinite
    int psnr_excluded = 0;       // infinite entries left out of the mean
    double mean_ssim = 0.0;
};

struct MetricsReport {
    std::string strategy;
    std::string interpolator;
    int level = 0;  // 0 when not a grid-level run
    EvalMode mode = EvalMode::SynthesizedOnly;
    std::vector<ViewScore> scores;  // sorted by view index
    Aggregate aggregate;
};

/// 10*log10(255^2 / MSE) with the MSE pooled over all pixels and all three
/// channels jointly. Returns +infinity for identical images.
double psnr(const ViewImage& a, const ViewImage& b);

/// Single-scale SSIM: 11x11 Gaussian window (sigma 1.5), K1=0.01, K2=0.03,
/// dynamic range 255, per channel then averaged, mean over the
/// valid-window map. Requires min(width, height) >= 11.
double ssim(const ViewImage& a, const ViewImage& b);

MetricsReport score_reconstruction(const LightField& reconstructed,
                                   const LightField& ground_truth,
                                   const ViewMask& mask, EvalMode mode);

} // namespace lfs
