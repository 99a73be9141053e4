// SPDX-License-Identifier: Apache-2.0

#include "lfs/metrics.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

namespace lfs {

const char* eval_mode_name(EvalMode m) {
    switch (m) {
    case EvalMode::SynthesizedOnly: return "synth";
    case EvalMode::AllViews:        return "all";
    case EvalMode::CentralOnly:     return "central";
    }
    return "?";
}

double psnr(const ViewImage& a, const ViewImage& b) {
    if (!a.same_size(b))
        throw Error("psnr: dimension mismatch");
    const auto& sa = a.samples();
    const auto& sb = b.samples();
    unsigned long long sse = 0;
    for (std::size_t i = 0; i < sa.size(); ++i) {
        const long d = static_cast<long>(sa[i]) - sb[i];
        sse += static_cast<unsigned long long>(d * d);
    }
    if (sse == 0)
        return std::numeric_limits<double>::infinity();
    const double mse = static_cast<double>(sse) / sa.size();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

namespace {

constexpr int kWindow = 11;
constexpr double kSigma = 1.5;
constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);

Eigen::VectorXd gaussian_kernel() {
    Eigen::VectorXd k(kWindow);
    const double c = (kWindow - 1) / 2.0;
    for (int i = 0; i < kWindow; ++i)
        k[i] = std::exp(-(i - c) * (i - c) / (2.0 * kSigma * kSigma));
    return k / k.sum();
}

// Separable valid-mode Gaussian filtering: output is (h-10) x (w-10).
Eigen::ArrayXXd filter_valid(const Eigen::ArrayXXd& img,
                             const Eigen::VectorXd& k) {
    const auto h = img.rows();
    const auto w = img.cols();
    Eigen::ArrayXXd rows = Eigen::ArrayXXd::Zero(h - kWindow + 1, w);
    for (int t = 0; t < kWindow; ++t)
        rows += k[t] * img.middleRows(t, h - kWindow + 1);
    Eigen::ArrayXXd out = Eigen::ArrayXXd::Zero(h - kWindow + 1, w - kWindow + 1);
    for (int t = 0; t < kWindow; ++t)
        out += k[t] * rows.middleCols(t, w - kWindow + 1);
    return out;
}

Eigen::ArrayXXd channel_plane(const ViewImage& img, int c) {
    Eigen::ArrayXXd p(img.height(), img.width());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            p(y, x) = img.at(x, y, c);
    return p;
}

} // namespace

double ssim(const ViewImage& a, const ViewImage& b) {
    if (!a.same_size(b))
        throw Error("ssim: dimension mismatch");
    if (a.width() < kWindow || a.height() < kWindow)
        throw Error("ssim: image smaller than the 11x11 window");

    const Eigen::VectorXd k = gaussian_kernel();
    double total = 0.0;
    for (int c = 0; c < 3; ++c) {
        const Eigen::ArrayXXd pa = channel_plane(a, c);
        const Eigen::ArrayXXd pb = channel_plane(b, c);

        const Eigen::ArrayXXd mu1 = filter_valid(pa, k);
        const Eigen::ArrayXXd mu2 = filter_valid(pb, k);
        const Eigen::ArrayXXd mu1_sq = mu1 * mu1;
        const Eigen::ArrayXXd mu2_sq = mu2 * mu2;
        const Eigen::ArrayXXd mu12 = mu1 * mu2;
        const Eigen::ArrayXXd sigma1_sq = filter_valid(pa * pa, k) - mu1_sq;
        const Eigen::ArrayXXd sigma2_sq = filter_valid(pb * pb, k) - mu2_sq;
        const Eigen::ArrayXXd sigma12 = filter_valid(pa * pb, k) - mu12;

        const Eigen::ArrayXXd num =
            (2.0 * mu12 + kC1) * (2.0 * sigma12 + kC2);
        const Eigen::ArrayXXd den =
            (mu1_sq + mu2_sq + kC1) * (sigma1_sq + sigma2_sq + kC2);
        total += (num / den).mean();
    }
    return total / 3.0;
}

MetricsReport score_reconstruction(const LightField& reconstructed,
                                   const LightField& ground_truth,
                                   const ViewMask& mask, EvalMode mode) {
    if (reconstructed.rows() != ground_truth.rows() ||
        reconstructed.cols() != ground_truth.cols() ||
        reconstructed.rows() != mask.rows() ||
        reconstructed.cols() != mask.cols())
        throw Error("score_reconstruction: dimension mismatch");
    if (!reconstructed.complete())
        throw Error("score_reconstruction: reconstruction is incomplete");
    if (!ground_truth.complete())
        throw Error("score_reconstruction: ground truth is incomplete");

    std::vector<ViewIndex> selected;
    switch (mode) {
    case EvalMode::SynthesizedOnly:
        selected = mask.positions(ViewRole::Output);
        break;
    case EvalMode::AllViews:
        for (int u = 0; u < mask.rows(); ++u)
            for (int v = 0; v < mask.cols(); ++v)
                if (mask.role({u, v}) != ViewRole::Unused)
                    selected.push_back({u, v});
        break;
    case EvalMode::CentralOnly:
        selected = {{(mask.rows() - 1) / 2, (mask.cols() - 1) / 2}};
        break;
    }

    MetricsReport report;
    report.mode = mode;
    double psnr_sum = 0.0;
    double ssim_sum = 0.0;
    int finite = 0;
    for (ViewIndex idx : selected) {
        const ViewImage& rec = reconstructed.view(idx);
        const ViewImage& gt = ground_truth.view(idx);
        ViewScore score;
        score.view = idx;
        const double p = psnr(rec, gt);
        if (std::isinf(p)) {
            score.psnr_infinite = true;
        } else {
            score.psnr_db = p;
            psnr_sum += p;
            ++finite;
        }
        score.ssim = ssim(rec, gt);
        ssim_sum += score.ssim;
        report.scores.push_back(score);
    }

    Aggregate& agg = report.aggregate;
    agg.view_count = static_cast<int>(selected.size());
    agg.psnr_excluded = agg.view_count - finite;
    if (finite == 0) {
        agg.psnr_infinite = true;
    } else {
        agg.mean_psnr_db = psnr_sum / finite;
    }
    agg.mean_ssim = agg.view_count ? ssim_sum / agg.view_count : 0.0;
    return report;
}

} // namespace lfs
