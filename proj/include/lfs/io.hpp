// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "lfs/metrics.hpp"
#include "lfs/plan.hpp"
#include "lfs/synthetic.hpp"

namespace lfs {

// ---- PNG (the single image codec; 8-bit RGB, no alpha) ----

ViewImage read_png(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const ViewImage& img);

// ---- Dataset: directory of per-view PNGs ----

struct CropSpec {
    int width = 0;
    int height = 0;
};

/// `file_template` names one file per grid position: either both {u} and
/// {v}, or a running index {i} laid out by `row_major`.
struct DatasetConfig {
    std::filesystem::path root;
    int rows = 0;
    int cols = 0;
    std::string file_template = "v{u}_{v}.png";
    bool row_major = true;
    std::optional<CropSpec> crop;

    std::filesystem::path path_for(ViewIndex idx) const;
    void validate() const;
};

DatasetConfig load_dataset_config(const std::filesystem::path& json_path);
void save_dataset_config(const DatasetConfig& config,
                         const std::filesystem::path& json_path);

LightField load_lightfield(const DatasetConfig& config);

/// Writes one PNG per view under root. The light field must be complete.
void save_lightfield(const LightField& lf, const std::filesystem::path& root,
                     const std::string& file_template);

/// Sparse variant used for subsampled datasets: writes only populated slots.
void save_lightfield_sparse(const LightField& lf,
                            const std::filesystem::path& root,
                            const std::string& file_template);

// ---- Mask text format: "rows cols" then rows lines over {I,O,U} ----

std::string mask_to_text(const ViewMask& mask);
ViewMask mask_from_text(const std::string& text);
void save_mask(const ViewMask& mask, const std::filesystem::path& path);
ViewMask load_mask(const std::filesystem::path& path);

// ---- Plan dump: one step per line ----
// `stage target_u target_v mode src1_u src1_v [.. src4_u src4_v]`

std::string plan_to_text(const ReconstructionPlan& plan);
ReconstructionPlan plan_from_text(const std::string& text, const ViewMask& mask,
                                  const std::string& strategy_id);

// ---- Metrics report: CSV rows + JSON summary ----

inline constexpr const char* kReportCsvHeader =
    "strategy,interpolator,level,view_u,view_v,psnr_db,ssim";

std::string report_csv_rows(const MetricsReport& report);
std::string report_summary_json(const MetricsReport& report);
void save_report(const MetricsReport& report,
                 const std::filesystem::path& csv_path,
                 const std::filesystem::path& json_path);

// ---- Synthetic scene spec as JSON ----

SyntheticSceneSpec load_scene_spec(const std::filesystem::path& json_path);

} // namespace lfs
