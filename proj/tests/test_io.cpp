// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <fstream>

#include "lfs/interpolate.hpp"
#include "lfs/io.hpp"
#include "test_helpers.hpp"

using namespace lfs;
using namespace lfs::testing;
namespace fs = std::filesystem;

namespace {

fs::path make_temp_dir(const std::string& tag) {
    const fs::path dir =
        fs::path(::testing::TempDir()) / ("lfs-" + tag + "-" +
                                          std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

void write_text(const fs::path& p, const std::string& s) {
    std::ofstream out(p);
    out << s;
}

} // namespace

TEST(Png, RoundTripIsByteIdentical) {
    const fs::path dir = make_temp_dir("png");
    const ViewImage img = random_image(37, 23, 12);
    write_png(dir / "img.png", img);
    EXPECT_EQ(read_png(dir / "img.png"), img);
    fs::remove_all(dir);
}

TEST(Png, RejectsNonPng) {
    const fs::path dir = make_temp_dir("npng");
    write_text(dir / "bad.png", "definitely not a png");
    EXPECT_THROW(read_png(dir / "bad.png"), Error);
    EXPECT_THROW(read_png(dir / "missing.png"), Error);
    fs::remove_all(dir);
}

TEST(Dataset, SaveLoadRoundTrip) {
    const fs::path dir = make_temp_dir("ds");
    const auto lf = generate_synthetic_lf(layered_scene(0.5, 1.0, 3), 3, 3, 24, 20);
    save_lightfield(lf, dir, "v{u}_{v}.png");

    DatasetConfig config;
    config.root = dir;
    config.rows = 3;
    config.cols = 3;
    config.file_template = "v{u}_{v}.png";
    EXPECT_EQ(load_lightfield(config), lf);
    fs::remove_all(dir);
}

TEST(Dataset, RunningIndexRowMajor) {
    const fs::path dir = make_temp_dir("run");
    const auto lf = generate_synthetic_lf(zero_disparity_scene(), 3, 3, 16, 16);
    save_lightfield(lf, dir, "frame{i}.png");

    DatasetConfig config;
    config.root = dir;
    config.rows = 3;
    config.cols = 3;
    config.file_template = "frame{i}.png";
    EXPECT_EQ(config.path_for({0, 0}).filename(), "frame0.png");
    EXPECT_EQ(config.path_for({0, 2}).filename(), "frame2.png");
    EXPECT_EQ(config.path_for({1, 0}).filename(), "frame3.png");
    EXPECT_EQ(load_lightfield(config), lf);
    fs::remove_all(dir);
}

TEST(Dataset, MissingFileNamesPosition) {
    const fs::path dir = make_temp_dir("miss");
    const auto lf = generate_synthetic_lf(zero_disparity_scene(), 3, 3, 16, 16);
    save_lightfield(lf, dir, "v{u}_{v}.png");
    fs::remove(dir / "v1_2.png");

    DatasetConfig config;
    config.root = dir;
    config.rows = 3;
    config.cols = 3;
    try {
        load_lightfield(config);
        FAIL() << "expected error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("(1,2)"), std::string::npos);
    }
    fs::remove_all(dir);
}

TEST(Dataset, CropAndConfigJson) {
    const fs::path dir = make_temp_dir("crop");
    const auto lf = generate_synthetic_lf(zero_disparity_scene(), 3, 3, 32, 32);
    save_lightfield(lf, dir, "v{u}_{v}.png");

    DatasetConfig config;
    config.root = dir;
    config.rows = 3;
    config.cols = 3;
    config.crop = CropSpec{16, 12};
    save_dataset_config(config, dir / "dataset.json");
    const DatasetConfig loaded = load_dataset_config(dir / "dataset.json");
    EXPECT_EQ(loaded.rows, 3);
    ASSERT_TRUE(loaded.crop);
    EXPECT_EQ(loaded.crop->width, 16);

    const LightField cropped = load_lightfield(loaded);
    EXPECT_EQ(cropped.view_width(), 16);
    EXPECT_EQ(cropped.view_height(), 12);
    EXPECT_EQ(cropped.view({0, 0}), lf.view({0, 0}).center_crop(16, 12));
    fs::remove_all(dir);
}

TEST(Dataset, BadTemplateRejected) {
    DatasetConfig config;
    config.root = ".";
    config.rows = 3;
    config.cols = 3;
    config.file_template = "view_{u}.png";  // no {v}, no {i}
    EXPECT_THROW(config.validate(), Error);
}

TEST(Dataset, IncompleteSaveRejected) {
    LightField lf(3, 3);
    lf.set_view({0, 0}, ViewImage(8, 8));
    const fs::path dir = make_temp_dir("inc");
    EXPECT_THROW(save_lightfield(lf, dir, "v{u}_{v}.png"), Error);
    fs::remove_all(dir);
}

TEST(Mask, TextRoundTrip) {
    const ViewMask mask = generate_pattern(PatternKind::checkerboard(), 5, 5);
    EXPECT_EQ(mask_from_text(mask_to_text(mask)), mask);

    const fs::path dir = make_temp_dir("mask");
    save_mask(mask, dir / "mask.txt");
    EXPECT_EQ(load_mask(dir / "mask.txt"), mask);
    fs::remove_all(dir);
}

TEST(Mask, ParseErrorsCarryLineNumbers) {
    try {
        mask_from_text("3 3\nIOI\nIXI\nIOI\n");
        FAIL() << "expected error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
    EXPECT_THROW(mask_from_text("nonsense\n"), Error);
    EXPECT_THROW(mask_from_text("3 3\nIOI\nIOI\n"), Error);  // missing row
}

TEST(Plan, TextDumpAndRoundTrip) {
    const ReconstructionPlan plan =
        build_recursive_plan(1, CornerStrategy::HV, 9, 9);
    const std::string text = plan_to_text(plan);

    int lines = 0;
    for (char ch : text)
        if (ch == '\n') ++lines;
    EXPECT_EQ(lines, 56);

    const ReconstructionPlan parsed =
        plan_from_text(text, plan.mask, plan.strategy_id);
    ASSERT_EQ(parsed.stages.size(), plan.stages.size());
    for (std::size_t i = 0; i < plan.stages.size(); ++i)
        EXPECT_EQ(parsed.stages[i], plan.stages[i]);
    EXPECT_TRUE(validate_plan(parsed).empty());
}

TEST(Plan, ParseRejectsBadLines) {
    const ViewMask mask = generate_pattern(PatternKind::row_wise(), 3, 3);
    EXPECT_THROW(plan_from_text("0 1 0 pair-x 0 0 2 0\n", mask, "x"), Error);
    EXPECT_THROW(plan_from_text("0 1 0 pair-v 0 0\n", mask, "x"), Error);
}

TEST(Report, CsvAndJsonShape) {
    const auto truth = generate_synthetic_lf(zero_disparity_scene(), 3, 3, 16, 16);
    const ViewMask mask = generate_pattern(PatternKind::checkerboard(), 3, 3);
    MetricsReport report =
        score_reconstruction(truth, truth, mask, EvalMode::SynthesizedOnly);
    report.strategy = "checkerboard";
    report.interpolator = "linear";

    const std::string rows = report_csv_rows(report);
    EXPECT_NE(rows.find("checkerboard,linear,0,0,1,inf,1.000000"),
              std::string::npos);

    const std::string json = report_summary_json(report);
    EXPECT_NE(json.find("\"mean_psnr_db\": \"inf\""), std::string::npos);
    EXPECT_NE(json.find("\"psnr_excluded\": 4"), std::string::npos);

    const fs::path dir = make_temp_dir("rep");
    save_report(report, dir / "report.csv", dir / "summary.json");
    std::ifstream in(dir / "report.csv");
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, kReportCsvHeader);
    fs::remove_all(dir);
}

TEST(SceneSpec, LoadsFromJson) {
    const fs::path dir = make_temp_dir("scene");
    write_text(dir / "scene.json", R"({
      "background": [1, 2, 3],
      "layers": [
        {"disparity": 0.5,
         "texture": {"kind": "noise", "period": 24, "seed": 9}},
        {"disparity": 2.0,
         "texture": {"kind": "checker", "period": 8,
                     "color_a": [250, 0, 0], "color_b": [0, 0, 250]},
         "region": {"kind": "disc", "x": 32, "y": 32, "radius": 10}}
      ]
    })");
    const SyntheticSceneSpec spec = load_scene_spec(dir / "scene.json");
    EXPECT_EQ(spec.background[2], 3);
    ASSERT_EQ(spec.layers.size(), 2u);
    EXPECT_EQ(spec.layers[0].texture.kind, TextureSpec::Kind::Noise);
    EXPECT_EQ(spec.layers[1].region.kind, RegionSpec::Kind::Disc);
    EXPECT_DOUBLE_EQ(spec.layers[1].disparity, 2.0);

    write_text(dir / "bad.json", "{ not json");
    EXPECT_THROW(load_scene_spec(dir / "bad.json"), Error);
    fs::remove_all(dir);
}

// ---- external interpolator contract ----

namespace {

SynthesisStep dummy_step() {
    return {{1, 1}, {{0, 1}, {2, 1}}, InterpMode::PairVertical, 0.5};
}

} // namespace

TEST(External, CopyStubReturnsFirstSource) {
    const ViewImage a = random_image(16, 16, 40);
    const ViewImage b = random_image(16, 16, 41);
    auto spec = InterpolatorSpec::external("cp {src1} {out}");
    spec.scratch_dir = make_temp_dir("ext").string();
    EXPECT_EQ(interpolate_external(dummy_step(), {&a, &b}, spec), a);
    fs::remove_all(spec.scratch_dir);
}

TEST(External, NonzeroExitCarriesDiagnostics) {
    const ViewImage a = uniform_image(8, 8, 1);
    auto spec = InterpolatorSpec::external(
        "echo boom >&2; false # {src1} {out}");
    spec.scratch_dir = make_temp_dir("extf").string();
    try {
        interpolate_external(dummy_step(), {&a, &a}, spec);
        FAIL() << "expected error";
    } catch (const Error& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("status 1"), std::string::npos);
        EXPECT_NE(msg.find("boom"), std::string::npos);
    }
    fs::remove_all(spec.scratch_dir);
}

TEST(External, WrongSizeOutputRejected) {
    const fs::path dir = make_temp_dir("extw");
    const ViewImage wrong = uniform_image(4, 4, 7);
    write_png(dir / "wrong.png", wrong);
    const ViewImage a = uniform_image(8, 8, 1);
    auto spec = InterpolatorSpec::external("cp " + (dir / "wrong.png").string() +
                                           " {out} # {src1}");
    spec.scratch_dir = dir.string();
    try {
        interpolate_external(dummy_step(), {&a, &a}, spec);
        FAIL() << "expected error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("does not match"), std::string::npos);
    }
    fs::remove_all(dir);
}

TEST(External, TimeoutKillsCommand) {
    const ViewImage a = uniform_image(8, 8, 1);
    auto spec = InterpolatorSpec::external("sleep 30 # {src1} {out}");
    spec.timeout_seconds = 0.2;
    spec.scratch_dir = make_temp_dir("extt").string();
    try {
        interpolate_external(dummy_step(), {&a, &a}, spec);
        FAIL() << "expected error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("timed out"), std::string::npos);
    }
    fs::remove_all(spec.scratch_dir);
}

TEST(External, StepErrorsCarryStepId) {
    // through execute_plan the step id is prefixed
    const auto truth = generate_synthetic_lf(zero_disparity_scene(), 3, 3, 16, 16);
    const ViewMask mask = generate_pattern(PatternKind::row_wise(), 3, 3);
    const auto plan = build_basic_plan(PatternKind::row_wise(), mask);
    auto spec = InterpolatorSpec::external("false # {src1} {out}");
    spec.scratch_dir = make_temp_dir("extid").string();
    try {
        execute_plan(subsample(truth, mask), plan, Interpolator{spec});
        FAIL() << "expected error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("stage 0 target (1,0)"),
                  std::string::npos);
    }
    fs::remove_all(spec.scratch_dir);
}
