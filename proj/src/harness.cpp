#include "btof/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "btof/errors.hpp"
#include "btof/foreground.hpp"
#include "btof/refine.hpp"

namespace fs = std::filesystem;

namespace btof {

namespace {

bool image_extension(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

std::string find_mask_for(const std::string& gt_dir, const std::string& stem) {
    if (gt_dir.empty())
        return "";
    for (const char* ext : {".png", ".jpg", ".jpeg"}) {
        const fs::path candidate = fs::path(gt_dir) / (stem + ext);
        if (fs::exists(candidate))
            return candidate.string();
    }
    return "";
}

void write_stage_png(const fs::path& out_dir, const std::string& stem,
                     const SaliencyMap& map, const SuperpixelMap& sp) {
    const std::string name = stem + "_" + stage_name(map.stage) + ".png";
    save_gray_png((out_dir / name).string(), map.render(sp));
}

std::string csv_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

} // namespace

RunResult run_image(const RunConfig& cfg, const DatasetEntry& entry, bool dump_graph) {
    const RasterImage raw = load_image(entry.image_path);
    const RasterImage pre = cfg.smoother == Smoother::L0Approx
                                ? smooth(raw, cfg.smooth_strength)
                                : raw;
    const LabImage lab = to_lab(pre);
    const SuperpixelMap sp = slic(lab, cfg.superpixels, cfg.compactness);
    const std::vector<RegionDescriptor> descriptors = extract_descriptors(lab, pre, sp);

    const DistanceParams dp{cfg.alpha1, cfg.alpha2};
    const AffinityGraph graph = build_graph(sp, descriptors, cfg.sigma2, dp);
    const RankingParams rp{cfg.mu};

    std::array<SaliencyMap, 5> template_maps;
    const auto& templates = background_templates();
    for (int k = 0; k < 5; ++k)
        template_maps[k] = template_map(graph, templates[k], rp);

    TemplateWeights weights;
    weights.lambda = cfg.lambda;
    const SaliencyMap bbm = aggregate(template_maps, weights);

    const ThresholdParams tp{cfg.threshold_a, cfg.threshold_b, cfg.threshold_c};
    const SaliencyMap fbm = foreground_map(graph, bbm, tp, rp);

    RefineParams refine_params;
    refine_params.highlight = {cfg.gamma1, cfg.gamma2, cfg.k_clusters, cfg.kmeans_seed};
    refine_params.distance = dp;
    refine_params.sigma2 = cfg.sigma2;
    refine_params.max_iters = cfg.max_iters;
    const SaliencyMap final_map = refine_pipeline(fbm, sp, descriptors, refine_params);

    const fs::path out_dir(cfg.out_dir);
    fs::create_directories(out_dir);
    const std::string stem = fs::path(entry.image_path).stem().string();
    write_stage_png(out_dir, stem, final_map, sp);
    if (cfg.export_stages) {
        for (const SaliencyMap& m : template_maps)
            write_stage_png(out_dir, stem, m, sp);
        write_stage_png(out_dir, stem, bbm, sp);
        write_stage_png(out_dir, stem, fbm, sp);
        write_stage_png(out_dir, stem,
                        decrease(fbm, sp, DecreaseParams::for_image(sp.width, sp.height)),
                        sp);
    }
    if (dump_graph) {
        std::ofstream dump(out_dir / (stem + "_graph.txt"));
        write_weight_triplets(graph, dump);
    }

    RunResult result;
    result.final_map = final_map;
    result.segmentation = sp;
    if (!entry.mask_path.empty()) {
        const BinaryMask gt = load_mask(entry.mask_path);
        if (gt.width != raw.width || gt.height != raw.height)
            throw DimensionMismatch("ground truth dimensions differ from image: " +
                                    entry.mask_path);
        result.report = evaluate(final_map.render(sp), gt);
    }
    return result;
}

std::vector<DatasetEntry> discover_dataset(const std::string& image_dir,
                                           const std::string& gt_dir) {
    if (!fs::is_directory(image_dir))
        throw EmptyDataset("not a directory: " + image_dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(image_dir))
        if (entry.is_regular_file() && image_extension(entry.path()))
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<DatasetEntry> out;
    out.reserve(files.size());
    for (const fs::path& f : files)
        out.push_back({f.string(), find_mask_for(gt_dir, f.stem().string())});
    if (out.empty())
        throw EmptyDataset("no PNG or JPEG images in " + image_dir);
    return out;
}

namespace {

MetricReport mean_report(const std::vector<MetricReport>& reports) {
    MetricReport agg;
    if (reports.empty())
        return agg;
    agg.pr_curve.assign(kCurvePoints, {});
    agg.roc_curve.assign(kCurvePoints, {});
    for (const MetricReport& r : reports) {
        agg.precision += r.precision;
        agg.recall += r.recall;
        agg.f_measure += r.f_measure;
        agg.auc += r.auc;
        agg.mae += r.mae;
        agg.or_score += r.or_score;
        for (int t = 0; t < kCurvePoints; ++t) {
            agg.pr_curve[t].precision += r.pr_curve[t].precision;
            agg.pr_curve[t].recall += r.pr_curve[t].recall;
            agg.roc_curve[t].tpr += r.roc_curve[t].tpr;
            agg.roc_curve[t].fpr += r.roc_curve[t].fpr;
        }
    }
    const double n = static_cast<double>(reports.size());
    agg.precision /= n;
    agg.recall /= n;
    agg.f_measure /= n;
    agg.auc /= n;
    agg.mae /= n;
    agg.or_score /= n;
    for (int t = 0; t < kCurvePoints; ++t) {
        agg.pr_curve[t].precision /= n;
        agg.pr_curve[t].recall /= n;
        agg.roc_curve[t].tpr /= n;
        agg.roc_curve[t].fpr /= n;
    }
    return agg;
}

} // namespace

DatasetReport run_dataset(const RunConfig& cfg, const std::string& image_dir,
                          const std::string& gt_dir) {
    const std::vector<DatasetEntry> entries = discover_dataset(image_dir, gt_dir);

    DatasetReport report;
    for (const DatasetEntry& entry : entries) {
        try {
            RunResult result = run_image(cfg, entry);
            if (result.report) {
                report.names.push_back(fs::path(entry.image_path).stem().string());
                report.per_image.push_back(std::move(*result.report));
                ++report.evaluated;
            }
        } catch (const Error& e) {
            std::cerr << "skipping " << entry.image_path << ": " << e.what() << '\n';
            ++report.skipped;
        }
    }
    report.aggregate = mean_report(report.per_image);

    if (report.evaluated > 0) {
        const fs::path out_dir(cfg.out_dir);
        fs::create_directories(out_dir);
        write_metrics_csv(report, (out_dir / "metrics.csv").string());
        write_curves_csv(report.aggregate, (out_dir / "curves.csv").string());
    }
    return report;
}

TemplateWeights calibrate(RunConfig& cfg, const std::string& image_dir,
                          const std::string& gt_dir) {
    std::vector<DatasetEntry> entries;
    try {
        entries = discover_dataset(image_dir, gt_dir);
    } catch (const EmptyDataset& e) {
        throw EmptyValidationSet(e.what());
    }

    std::vector<ValidationPair> pairs;
    for (const DatasetEntry& entry : entries) {
        if (entry.mask_path.empty())
            continue;
        try {
            const RasterImage raw = load_image(entry.image_path);
            const BinaryMask gt = load_mask(entry.mask_path);
            if (gt.width != raw.width || gt.height != raw.height)
                throw DimensionMismatch("ground truth dimensions differ from image");
            const RasterImage pre = cfg.smoother == Smoother::L0Approx
                                        ? smooth(raw, cfg.smooth_strength)
                                        : raw;
            const LabImage lab = to_lab(pre);
            SuperpixelMap sp = slic(lab, cfg.superpixels, cfg.compactness);
            const auto descriptors = extract_descriptors(lab, pre, sp);
            const DistanceParams dp{cfg.alpha1, cfg.alpha2};
            const AffinityGraph graph = build_graph(sp, descriptors, cfg.sigma2, dp);
            const RankingParams rp{cfg.mu};

            ValidationPair pair;
            const auto& templates = background_templates();
            for (int k = 0; k < 5; ++k)
                pair.maps[k] = template_map(graph, templates[k], rp);
            pair.gt = gt;
            pair.segmentation = std::move(sp);
            pairs.push_back(std::move(pair));
        } catch (const Error& e) {
            std::cerr << "skipping " << entry.image_path << ": " << e.what() << '\n';
        }
    }
    if (pairs.empty())
        throw EmptyValidationSet("no validation images with ground truth in " +
                                 image_dir);

    const TemplateWeights fitted = fit_weights(pairs);
    cfg.lambda = fitted.lambda;
    return fitted;
}

DatasetReport evaluate_maps(const std::string& saliency_dir,
                            const std::string& gt_dir,
                            const std::string& out_dir) {
    if (!fs::is_directory(saliency_dir))
        throw EmptyDataset("not a directory: " + saliency_dir);

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(saliency_dir))
        if (entry.is_regular_file() && image_extension(entry.path()))
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw EmptyDataset("no saliency maps in " + saliency_dir);

    DatasetReport report;
    for (const fs::path& f : files) {
        std::string stem = f.stem().string();
        constexpr const char* suffix = "_S_final";
        if (stem.size() > 8 && stem.ends_with(suffix))
            stem = stem.substr(0, stem.size() - 8);
        const std::string mask_path = find_mask_for(gt_dir, stem);
        if (mask_path.empty()) {
            std::cerr << "skipping " << f << ": no ground truth for stem '" << stem
                      << "'\n";
            ++report.skipped;
            continue;
        }
        try {
            const GrayMap map = load_gray(f.string());
            const BinaryMask gt = load_mask(mask_path);
            report.names.push_back(stem);
            report.per_image.push_back(evaluate(map, gt));
            ++report.evaluated;
        } catch (const Error& e) {
            std::cerr << "skipping " << f << ": " << e.what() << '\n';
            ++report.skipped;
        }
    }
    if (report.per_image.empty())
        throw EmptyDataset("no evaluable (map, ground truth) pairs");
    report.aggregate = mean_report(report.per_image);

    fs::create_directories(out_dir);
    write_metrics_csv(report, (fs::path(out_dir) / "metrics.csv").string());
    write_curves_csv(report.aggregate, (fs::path(out_dir) / "curves.csv").string());
    return report;
}

void write_metrics_csv(const DatasetReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    out << "image,precision,recall,fmeasure,auc,mae,or\n";
    auto row = [&](const std::string& name, const MetricReport& r) {
        out << name << ',' << csv_number(r.precision) << ',' << csv_number(r.recall)
            << ',' << csv_number(r.f_measure) << ',' << csv_number(r.auc) << ','
            << csv_number(r.mae) << ',' << csv_number(r.or_score) << '\n';
    };
    for (std::size_t i = 0; i < report.per_image.size(); ++i)
        row(report.names[i], report.per_image[i]);
    row("aggregate", report.aggregate);
}

void write_curves_csv(const MetricReport& aggregate, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    out << "threshold,precision,recall,tpr,fpr\n";
    for (int t = 0; t < kCurvePoints; ++t) {
        out << t << ',' << csv_number(aggregate.pr_curve[t].precision) << ','
            << csv_number(aggregate.pr_curve[t].recall) << ','
            << csv_number(aggregate.roc_curve[t].tpr) << ','
            << csv_number(aggregate.roc_curve[t].fpr) << '\n';
    }
}

} // namespace btof
