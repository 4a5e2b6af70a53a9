#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "btof/errors.hpp"
#include "btof/harness.hpp"
#include "btof/synth.hpp"

namespace fs = std::filesystem;

namespace {

btof::RunConfig load_or_default(const std::string& config_path) {
    if (config_path.empty())
        return btof::RunConfig{};
    return btof::load_config(config_path);
}

void print_report_line(const std::string& name, const btof::MetricReport& r) {
    std::printf("%-28s P %.4f  R %.4f  F %.4f  AUC %.4f  MAE %.4f  OR %.4f\n",
                name.c_str(), r.precision, r.recall, r.f_measure, r.auc, r.mae,
                r.or_score);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"BTOF salient object detection pipeline"};
    app.require_subcommand(1);

    std::string input, config_path, out_dir, gt_dir;
    bool export_stages = false, dump_graph = false;
    auto* run_cmd = app.add_subcommand("run", "Run the pipeline on an image or directory");
    run_cmd->add_option("input", input, "Image file or dataset directory")->required();
    run_cmd->add_option("--config", config_path, "Config file (flat key = value)");
    run_cmd->add_option("--out", out_dir, "Output directory for maps and CSVs");
    run_cmd->add_option("--gt", gt_dir, "Directory of ground-truth masks, paired by stem");
    run_cmd->add_flag("--export-stages", export_stages,
                      "Also write S_b1..S_b5, S_BBM, S_FBM and S_dec maps");
    run_cmd->add_flag("--dump-graph", dump_graph,
                      "Write the affinity graph as an (i, j, w) triplet list");

    std::string cal_dir, cal_config, cal_gt;
    auto* cal_cmd = app.add_subcommand(
        "calibrate", "Fit template weights on a validation set and persist them");
    cal_cmd->add_option("dir", cal_dir, "Validation directory (or root with images/ + masks/)")
        ->required();
    cal_cmd->add_option("--config", cal_config, "Config file to update")->required();
    cal_cmd->add_option("--gt", cal_gt, "Mask directory (default: <dir>/masks)");

    std::string synth_kind, synth_out;
    unsigned synth_seed = 1;
    int synth_count = 1;
    auto* synth_cmd =
        app.add_subcommand("synth", "Generate synthetic images with ground truth");
    synth_cmd
        ->add_option("kind", synth_kind,
                     "center-object, boundary-object or two-objects")
        ->required();
    synth_cmd->add_option("--seed", synth_seed, "Base RNG seed");
    synth_cmd->add_option("--count", synth_count, "Number of images (seeds seed..seed+count-1)");
    synth_cmd->add_option("--out", synth_out, "Output root (images/ + masks/)")->required();

    std::string eval_maps, eval_gt, eval_out = ".";
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate saliency maps against masks");
    eval_cmd->add_option("saliency-dir", eval_maps, "Directory of saliency PNGs")->required();
    eval_cmd->add_option("gt-dir", eval_gt, "Directory of ground-truth masks")->required();
    eval_cmd->add_option("--out", eval_out, "Where to write metrics.csv and curves.csv");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) {
            btof::RunConfig cfg = load_or_default(config_path);
            if (!out_dir.empty())
                cfg.out_dir = out_dir;
            if (export_stages)
                cfg.export_stages = true;

            if (fs::is_directory(input)) {
                const btof::DatasetReport report = btof::run_dataset(cfg, input, gt_dir);
                std::printf("evaluated %d image(s), skipped %d\n", report.evaluated,
                            report.skipped);
                if (report.evaluated > 0) {
                    print_report_line("aggregate", report.aggregate);
                    std::printf("metrics written to %s\n",
                                (fs::path(cfg.out_dir) / "metrics.csv").c_str());
                }
            } else {
                btof::DatasetEntry entry{input, ""};
                const std::string stem = fs::path(input).stem().string();
                if (!gt_dir.empty()) {
                    for (const char* ext : {".png", ".jpg", ".jpeg"}) {
                        const fs::path candidate = fs::path(gt_dir) / (stem + ext);
                        if (fs::exists(candidate)) {
                            entry.mask_path = candidate.string();
                            break;
                        }
                    }
                }
                const btof::RunResult result = btof::run_image(cfg, entry, dump_graph);
                std::printf("wrote %s\n",
                            (fs::path(cfg.out_dir) / (stem + "_S_final.png")).c_str());
                if (result.report)
                    print_report_line(stem, *result.report);
            }
        } else if (*cal_cmd) {
            btof::RunConfig cfg = btof::load_config(cal_config);
            std::string image_dir = cal_dir;
            std::string mask_dir = cal_gt;
            if (fs::is_directory(fs::path(cal_dir) / "images"))
                image_dir = (fs::path(cal_dir) / "images").string();
            if (mask_dir.empty() && fs::is_directory(fs::path(cal_dir) / "masks"))
                mask_dir = (fs::path(cal_dir) / "masks").string();
            const btof::TemplateWeights w = btof::calibrate(cfg, image_dir, mask_dir);
            btof::save_config(cfg, cal_config);
            std::printf("lambda = %.6f %.6f %.6f %.6f %.6f (written to %s)\n",
                        w.lambda[0], w.lambda[1], w.lambda[2], w.lambda[3], w.lambda[4],
                        cal_config.c_str());
        } else if (*synth_cmd) {
            const btof::SynthKind kind = btof::parse_synth_kind(synth_kind);
            const auto paths = btof::synth(kind, synth_seed, synth_count, synth_out);
            std::printf("generated %zu image(s) under %s\n", paths.size(),
                        synth_out.c_str());
        } else if (*eval_cmd) {
            const btof::DatasetReport report =
                btof::evaluate_maps(eval_maps, eval_gt, eval_out);
            for (std::size_t i = 0; i < report.per_image.size(); ++i)
                print_report_line(report.names[i], report.per_image[i]);
            print_report_line("aggregate", report.aggregate);
        }
    } catch (const btof::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
