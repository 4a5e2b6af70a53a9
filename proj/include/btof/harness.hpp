#ifndef BTOF_HARNESS_HPP
#define BTOF_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "btof/background.hpp"
#include "btof/config.hpp"
#include "btof/metrics.hpp"
#include "btof/saliency.hpp"

namespace btof {

struct DatasetEntry {
    std::string image_path;
    std::string mask_path; // empty when no ground truth exists
};

struct RunResult {
    SaliencyMap final_map;
    SuperpixelMap segmentation;
    std::optional<MetricReport> report; // present when ground truth exists
};

// Full pipeline on one image. Writes <stem>_S_final.png into
// cfg.out_dir (plus every intermediate stage when cfg.export_stages,
// and the graph weights as <stem>_graph.txt when dump_graph).
RunResult run_image(const RunConfig& cfg, const DatasetEntry& entry,
                    bool dump_graph = false);

// Images from image_dir paired to masks in gt_dir by filename stem,
// sorted by filename. gt_dir may be empty (no metrics).
std::vector<DatasetEntry> discover_dataset(const std::string& image_dir,
                                           const std::string& gt_dir);

struct DatasetReport {
    std::vector<std::string> names; // image stems, sorted
    std::vector<MetricReport> per_image;
    MetricReport aggregate; // arithmetic mean of per-image metrics
    int evaluated = 0;      // entries with ground truth
    int skipped = 0;        // entries that failed and were logged
};

// Batch run; failing entries are reported and skipped. Writes
// metrics.csv and curves.csv into cfg.out_dir when ground truth exists.
DatasetReport run_dataset(const RunConfig& cfg, const std::string& image_dir,
                          const std::string& gt_dir);

// Computes the five template maps per validation image, fits the mixing
// weights against ground truth, and stores them in cfg.lambda.
TemplateWeights calibrate(RunConfig& cfg, const std::string& image_dir,
                          const std::string& gt_dir);

// Metric evaluation of already-rendered saliency maps (a trailing
// "_S_final" in the stem is ignored when pairing).
DatasetReport evaluate_maps(const std::string& saliency_dir,
                            const std::string& gt_dir,
                            const std::string& out_dir);

void write_metrics_csv(const DatasetReport& report, const std::string& path);
void write_curves_csv(const MetricReport& aggregate, const std::string& path);

} // namespace btof

#endif
