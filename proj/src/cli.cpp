#include "owpnf/cli.hpp"

#include "owpnf/filters.hpp"
#include "owpnf/image_io.hpp"
#include "owpnf/manifest.hpp"
#include "owpnf/metrics.hpp"
#include "owpnf/noise.hpp"
#include "owpnf/text.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace owpnf::cli {

namespace {

struct FilterOptions {
    std::string search = "15";
    long patch = 9;
    std::string kernel = "k0";
    long smooth_radius = 2;
    double smooth_bandwidth = 1.0;
    double gamma_threshold = 5.0;
    bool split = false;
    double delta = 0.0;
};

struct Common {
    std::optional<unsigned> threads;
    double scale = 1.0;
    std::string report;
    std::string config;
};

unsigned resolve_threads(const std::optional<unsigned>& flag) {
    if (flag) return std::max(1u, *flag);
    if (const char* env = std::getenv("OWPNF_THREADS"); env && *env) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1) throw std::invalid_argument("OWPNF_THREADS must be a positive integer");
        return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::size_t side_to_radius(long side, const char* name) {
    if (side < 1 || side % 2 == 0)
        throw std::invalid_argument(std::string("--") + name + " must be an odd window side >= 1, got " +
                                    std::to_string(side));
    return static_cast<std::size_t>((side - 1) / 2);
}

long parse_long(const std::string& text, const char* what) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) throw std::invalid_argument(std::string("invalid ") + what + " '" + text + "'");
    return v;
}

// "15" or an inclusive sweep "7..19".
std::vector<long> parse_sides(const std::string& text, long step) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return {parse_long(text, "--M")};
    if (step < 1) throw std::invalid_argument("--step must be positive");
    const long first = parse_long(text.substr(0, dots), "--M");
    const long last = parse_long(text.substr(dots + 2), "--M");
    if (last < first) throw std::invalid_argument("--M range is empty");
    std::vector<long> sides;
    for (long s = first; s <= last; s += step) sides.push_back(s);
    return sides;
}

void apply_kernel(const std::string& text, FilterParams& p) {
    if (text == "k0") {
        p.kernel = KernelKind::k_zero;
    } else if (text == "rect") {
        p.kernel = KernelKind::rectangular;
    } else if (text.rfind("gauss:", 0) == 0) {
        p.kernel = KernelKind::gaussian;
        std::size_t used = 0;
        const auto arg = text.substr(6);
        try {
            p.gaussian_h = std::stod(arg, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != arg.size() || !(p.gaussian_h > 0.0)) throw std::invalid_argument("--kernel gauss:h needs h > 0");
    } else {
        throw std::invalid_argument("--kernel must be k0, rect or gauss:<h>, got '" + text + "'");
    }
}

FilterParams to_params(const FilterOptions& o, long search_side, unsigned threads) {
    FilterParams p;
    p.search_radius_px = side_to_radius(search_side, "M");
    p.patch_radius_px = side_to_radius(o.patch, "m");
    apply_kernel(o.kernel, p);
    if (o.smooth_radius < 0) throw std::invalid_argument("--d must be nonnegative");
    p.smooth_radius_px = static_cast<std::size_t>(o.smooth_radius);
    p.smooth_bandwidth = o.smooth_bandwidth;
    p.gamma_threshold = o.gamma_threshold;
    p.split = o.split ? SplitMode::on : SplitMode::off;
    p.oracle_offset = o.delta;
    p.threads = threads;
    p.validate();
    return p;
}

std::string kernel_name(const FilterParams& p) {
    switch (p.kernel) {
    case KernelKind::k_zero:
        return "k0";
    case KernelKind::rectangular:
        return "rect";
    case KernelKind::gaussian:
        return "gauss:" + shortest(p.gaussian_h);
    }
    return {};
}

std::string side(std::size_t radius) { return std::to_string(window_side(radius)); }

std::string echo_params(const FilterParams& p) {
    return "M=" + side(p.search_radius_px) + " m=" + side(p.patch_radius_px) + " kernel=" + kernel_name(p) +
           " d=" + std::to_string(p.smooth_radius_px) + " H=" + shortest(p.smooth_bandwidth) +
           " gamma_threshold=" + shortest(p.gamma_threshold) + " split=" + (p.split == SplitMode::on ? "on" : "off") +
           " delta=" + shortest(p.oracle_offset);
}

std::vector<std::string> param_columns(const FilterParams& p) {
    return {side(p.search_radius_px), side(p.patch_radius_px), kernel_name(p), std::to_string(p.smooth_radius_px),
            shortest(p.smooth_bandwidth), shortest(p.gamma_threshold), p.split == SplitMode::on ? "on" : "off",
            shortest(p.oracle_offset)};
}

const std::vector<std::string> param_header = {"M", "m", "kernel", "d", "H", "gamma_threshold", "split", "delta"};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

class Csv {
public:
    explicit Csv(std::vector<std::string> header) : header_(std::move(header)) {}
    void add(std::vector<std::string> row) {
        if (row.size() != header_.size()) throw std::logic_error("csv row width mismatch");
        rows_.push_back(std::move(row));
    }
    void write(std::ostream& out) const {
        write_row(out, header_);
        for (const auto& r : rows_) write_row(out, r);
    }
    void write(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
        write(out);
        if (!out.flush()) throw std::runtime_error("failed writing '" + path + "'");
    }

private:
    static void write_row(std::ostream& out, const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << '\n';
    }
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

template <typename... Parts>
std::vector<std::string> concat(std::vector<std::string> a, const Parts&... parts) {
    (a.insert(a.end(), parts.begin(), parts.end()), ...);
    return a;
}

std::pair<std::size_t, std::size_t> parse_size(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos) throw std::invalid_argument("--size must look like 256x256");
    const long rows = parse_long(text.substr(0, x), "--size rows");
    const long cols = parse_long(text.substr(x + 1), "--size cols");
    if (rows < 1 || cols < 1) throw std::invalid_argument("--size dimensions must be positive");
    return {static_cast<std::size_t>(rows), static_cast<std::size_t>(cols)};
}

double mean_of(std::span<const double> values) {
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

double sample_stddev(std::span<const double> values) {
    if (values.size() < 2) return 0.0;
    const double m = mean_of(values);
    double s = 0.0;
    for (double v : values) s += (v - m) * (v - m);
    return std::sqrt(s / static_cast<double>(values.size() - 1));
}

void add_filter_options(CLI::App* sub, FilterOptions& o, const char* search_help) {
    sub->add_option("--M", o.search, search_help)->capture_default_str();
    sub->add_option("--m", o.patch, "Patch side m (odd)")->capture_default_str();
    sub->add_option("--kernel", o.kernel, "Patch kernel: k0, rect or gauss:<h>")->capture_default_str();
    sub->add_option("--d", o.smooth_radius, "Second-step smoothing radius d (0 disables)")->capture_default_str();
    sub->add_option("--H", o.smooth_bandwidth, "Second-step Gaussian bandwidth H")->capture_default_str();
    sub->add_option("--gamma-threshold", o.gamma_threshold, "Smooth only where the local level <= threshold")
        ->capture_default_str();
    sub->add_flag("--split", o.split, "Checkerboard split between weights and averaged pixels");
    sub->add_option("--delta", o.delta, "Offset added to oracle similarities")->capture_default_str();
}

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--threads", c.threads, "Worker threads (default: OWPNF_THREADS or all cores)");
    sub->add_option("--scale", c.scale, "Intensity per PGM gray level")->capture_default_str();
    sub->add_option("--report", c.report, "Write a CSV report");
    sub->add_option("--config", c.config, "Flat 'key = value' file of option defaults");
}

// Inserts "--key=value" tokens from --config/--manifest files right after the
// subcommand so that explicit flags, parsed later, take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    if (args.empty()) return args;
    std::vector<std::string> injected;
    for (std::size_t i = 1; i < args.size(); ++i) {
        std::string path;
        for (const char* name : {"--config", "--manifest"}) {
            const std::string flag = name;
            if (args[i] == flag && i + 1 < args.size()) path = args[i + 1];
            else if (args[i].rfind(flag + "=", 0) == 0) path = args[i].substr(flag.size() + 1);
        }
        if (path.empty()) continue;
        for (const auto& [key, value] : read_key_values(path)) injected.push_back("--" + key + "=" + value);
    }
    std::vector<std::string> out{args.front()};
    out.insert(out.end(), injected.begin(), injected.end());
    out.insert(out.end(), args.begin() + 1, args.end());
    return out;
}

struct Io {
    std::ostream& out;
    std::ostream& err;
};

void log_metrics(Io io, const char* label, const MetricResult& m) {
    io.out << label << " nmise=" << shortest(m.nmise) << " mse=" << shortest(m.mse) << " n_star=" << m.n_star << '\n';
}

// ---- simulate ----

struct SimulateArgs {
    Common common;
    std::string scene = "spots";
    std::string image;
    std::string size = "256x256";
    std::uint64_t seed = 0;
    std::string out;
    std::string truth_out;
};

void run_simulate(const SimulateArgs& a, Io io) {
    const unsigned threads = resolve_threads(a.common.threads);
    IntensityImage truth;
    std::string source;
    if (!a.image.empty()) {
        truth = read_intensity_file(a.image, a.common.scale);
        source = a.image;
    } else {
        const auto [rows, cols] = parse_size(a.size);
        const auto spec = parse_scene(a.scene, rows, cols);
        truth = generate_scene(spec);
        source = to_string(spec);
    }
    const auto counts = sample_poisson(truth, NoiseSeed{a.seed}, threads);
    write_counts_file(a.out, counts);
    if (!a.truth_out.empty()) write_intensity_file(a.truth_out, truth, a.common.scale);

    double total = 0.0;
    for (auto c : counts.values()) total += c;
    const double mean = total / static_cast<double>(counts.size());
    io.out << "# " << tool_version << " simulate source=" << source << " rows=" << counts.rows()
           << " cols=" << counts.cols() << " seed=" << a.seed << " scale=" << shortest(a.common.scale) << '\n';
    io.out << "mean_count=" << shortest(mean) << " total_count=" << shortest(total) << '\n';
    if (!a.common.report.empty()) {
        Csv csv({"tool_version", "command", "source", "rows", "cols", "seed", "scale", "mean_count", "total_count"});
        csv.add({tool_version, "simulate", source, std::to_string(counts.rows()), std::to_string(counts.cols()),
                 std::to_string(a.seed), shortest(a.common.scale), shortest(mean), shortest(total)});
        csv.write(a.common.report);
    }
}

// ---- denoise ----

struct DenoiseArgs {
    Common common;
    FilterOptions filter;
    std::string in;
    std::string out;
    std::string emit_step1;
    std::string truth;
};

void run_denoise(const DenoiseArgs& a, Io io) {
    const auto params = to_params(a.filter, parse_long(a.filter.search, "--M"), resolve_threads(a.common.threads));
    const auto counts = read_counts_file(a.in);
    std::optional<IntensityImage> truth;
    if (!a.truth.empty()) truth = read_intensity_file(a.truth, a.common.scale);

    const auto report = owpnf(counts, params);
    write_intensity_file(a.out, report.output, a.common.scale);
    if (!a.emit_step1.empty()) write_intensity_file(a.emit_step1, *report.step1, a.common.scale);

    io.out << "# " << tool_version << " denoise in=" << a.in << " truth=" << (a.truth.empty() ? "-" : a.truth) << ' '
           << echo_params(params) << " scale=" << shortest(a.common.scale) << '\n';
    std::vector<std::string> metrics_cols(4);
    if (truth) {
        const auto step1 = nmise(*report.step1, *truth);
        const auto final = nmise(report.output, *truth);
        log_metrics(io, "step1", step1);
        log_metrics(io, "owpnf", final);
        metrics_cols = {shortest(step1.nmise), shortest(final.nmise), shortest(final.mse), std::to_string(final.n_star)};
    }
    io.err << "denoise: " << counts.rows() << "x" << counts.cols() << " in " << report.seconds << " s with "
           << params.threads << " thread(s)\n";
    if (!a.common.report.empty()) {
        Csv csv(concat({"tool_version", "command", "input", "truth"}, param_header,
                       std::vector<std::string>{"scale", "nmise_step1", "nmise", "mse", "n_star"}));
        csv.add(concat({tool_version, "denoise", a.in, a.truth}, param_columns(params),
                       std::vector<std::string>{shortest(a.common.scale)}, metrics_cols));
        csv.write(a.common.report);
    }
}

// ---- oracle ----

struct OracleArgs {
    Common common;
    FilterOptions filter;
    long step = 2;
    std::string in;
    std::string truth;
    std::string out;
};

void run_oracle(const OracleArgs& a, Io io) {
    const auto sides = parse_sides(a.filter.search, a.step);
    if (sides.size() > 1 && !a.out.empty()) throw std::invalid_argument("--out needs a single --M, not a sweep");
    const unsigned threads = resolve_threads(a.common.threads);
    const auto truth = read_intensity_file(a.truth, a.common.scale);
    const auto counts = read_counts_file(a.in);

    io.out << "# " << tool_version << " oracle in=" << a.in << " truth=" << a.truth << " M=" << a.filter.search
           << " step=" << a.step << " delta=" << shortest(a.filter.delta) << " scale=" << shortest(a.common.scale)
           << '\n';
    Csv table({"M", "nmise", "mse"});
    Csv report(concat({"tool_version", "command", "input", "truth"}, param_header,
                      std::vector<std::string>{"scale", "nmise", "mse", "n_star"}));
    for (long s : sides) {
        const auto params = to_params(a.filter, s, threads);
        const auto result = oracle_filter(truth, counts, params);
        const auto m = nmise(result.output, truth);
        if (!a.out.empty()) write_intensity_file(a.out, result.output, a.common.scale);
        const std::string label = std::to_string(s) + "x" + std::to_string(s);
        table.add({label, shortest(m.nmise), shortest(m.mse)});
        report.add(concat({tool_version, "oracle", a.in, a.truth}, param_columns(params),
                          std::vector<std::string>{shortest(a.common.scale), shortest(m.nmise), shortest(m.mse),
                                                   std::to_string(m.n_star)}));
        io.err << "oracle: M=" << label << " in " << result.seconds << " s\n";
    }
    table.write(io.out);
    if (!a.common.report.empty()) report.write(a.common.report);
}

// ---- evaluate ----

struct EvaluateArgs {
    Common common;
    std::string estimate;
    std::string truth;
    std::string markdown;
    std::string map;
};

void run_evaluate(const EvaluateArgs& a, Io io) {
    const auto estimate = read_intensity_file(a.estimate, a.common.scale);
    const auto truth = read_intensity_file(a.truth, a.common.scale);
    const auto m = nmise(estimate, truth, !a.map.empty());
    if (!a.map.empty()) write_intensity_file(a.map, *m.per_pixel);
    io.out << "# " << tool_version << " evaluate estimate=" << a.estimate << " truth=" << a.truth
           << " scale=" << shortest(a.common.scale) << '\n';
    log_metrics(io, "result", m);
    Csv csv({"tool_version", "command", "estimate", "truth", "scale", "nmise", "mse", "n_star"});
    csv.add({tool_version, "evaluate", a.estimate, a.truth, shortest(a.common.scale), shortest(m.nmise),
             shortest(m.mse), std::to_string(m.n_star)});
    if (!a.common.report.empty()) csv.write(a.common.report);
    if (!a.markdown.empty()) {
        std::ofstream md(a.markdown, std::ios::binary);
        md << "| estimate | truth | NMISE | MSE | n* |\n|---|---|---|---|---|\n"
           << "| " << a.estimate << " | " << a.truth << " | " << shortest(m.nmise) << " | " << shortest(m.mse) << " | "
           << m.n_star << " |\n";
        if (!md.flush()) throw std::runtime_error("failed writing '" + a.markdown + "'");
    }
}

// ---- benchmark ----

struct BenchmarkArgs {
    Common common;
    FilterOptions filter;
    std::string manifest;
    std::string scenes;
    std::string seeds;
    std::string size = "256x256";
    bool oracle = false;
    std::string out;
    std::string markdown;
};

void run_benchmark(const BenchmarkArgs& a, Io io) {
    const auto scenes = parse_scene_list(a.scenes);
    const auto seeds = parse_seed_list(a.seeds);
    if (scenes.empty()) throw std::invalid_argument("benchmark manifest lists no scenes");
    if (seeds.empty()) throw std::invalid_argument("benchmark manifest lists no seeds");
    const auto params = to_params(a.filter, parse_long(a.filter.search, "--M"), resolve_threads(a.common.threads));
    const auto [rows, cols] = parse_size(a.size);

    io.out << "# " << tool_version << " benchmark scenes=" << a.scenes << " seeds=" << a.seeds << " size=" << a.size
           << ' ' << echo_params(params) << " oracle=" << (a.oracle ? "on" : "off") << '\n';

    Csv csv(concat({"tool_version", "scene", "rows", "cols", "seed"}, param_header,
                   std::vector<std::string>{"nmise_raw", "nmise_step1", "nmise_owpnf", "nmise_oracle", "mse_owpnf"}));
    struct Summary {
        std::string scene;
        std::vector<double> raw, step1, final, oracle;
    };
    std::vector<Summary> summaries;
    for (const auto& text : scenes) {
        const auto spec = parse_scene(text, rows, cols);
        const auto truth = generate_scene(spec);
        Summary summary{to_string(spec), {}, {}, {}, {}};
        for (auto seed : seeds) {
            const auto counts = sample_poisson(truth, NoiseSeed{seed}, params.threads);
            const auto raw = nmise(to_intensity(counts), truth);
            const auto report = owpnf(counts, params);
            const auto step1 = nmise(*report.step1, truth);
            const auto final = nmise(report.output, truth);
            std::string oracle_col;
            if (a.oracle) {
                const auto o = nmise(oracle_filter(truth, counts, params).output, truth);
                summary.oracle.push_back(o.nmise);
                oracle_col = shortest(o.nmise);
            }
            summary.raw.push_back(raw.nmise);
            summary.step1.push_back(step1.nmise);
            summary.final.push_back(final.nmise);
            csv.add(concat({tool_version, summary.scene, std::to_string(rows), std::to_string(cols), std::to_string(seed)},
                           param_columns(params),
                           std::vector<std::string>{shortest(raw.nmise), shortest(step1.nmise), shortest(final.nmise),
                                                    oracle_col, shortest(final.mse)}));
            io.err << "benchmark: " << summary.scene << " seed " << seed << " in " << report.seconds << " s\n";
        }
        summaries.push_back(std::move(summary));
    }
    if (!a.out.empty()) csv.write(a.out);

    std::ostringstream md;
    auto cell = [](const std::vector<double>& v) {
        if (v.empty()) return std::string("-");
        return shortest(mean_of(v)) + " ± " + shortest(sample_stddev(v));
    };
    md << "| scene | runs | NMISE raw | NMISE step 1 | NMISE OWPNF | NMISE oracle |\n"
       << "|---|---|---|---|---|---|\n";
    for (const auto& s : summaries) {
        md << "| " << s.scene << " | " << s.raw.size() << " | " << cell(s.raw) << " | " << cell(s.step1) << " | "
           << cell(s.final) << " | " << cell(s.oracle) << " |\n";
    }
    io.out << md.str();
    if (!a.markdown.empty()) {
        std::ofstream out(a.markdown, std::ios::binary);
        out << md.str();
        if (!out.flush()) throw std::runtime_error("failed writing '" + a.markdown + "'");
    }
}

} // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Poisson noise removal with optimal weights"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Draw Poisson counts from a scene or an intensity image");
    add_common(simulate, sim.common);
    auto* scene_opt = simulate->add_option("--scene", sim.scene, "spots, ridges, constant:<c> or gradient:<lo>:<hi>")
                          ->capture_default_str();
    simulate->add_option("--image", sim.image, "Intensity image (FMAT or PGM) instead of a scene")->excludes(scene_opt);
    simulate->add_option("--size", sim.size, "Scene size ROWSxCOLS")->capture_default_str();
    simulate->add_option("--seed", sim.seed, "Noise seed")->capture_default_str();
    simulate->add_option("--out", sim.out, "Output count image (CMAT, or PGM by extension)")->required();
    simulate->add_option("--truth-out", sim.truth_out, "Also write the noise-free intensities");

    DenoiseArgs den;
    auto* denoise = app.add_subcommand("denoise", "Two-step optimal weights filter");
    add_common(denoise, den.common);
    add_filter_options(denoise, den.filter, "Search window side M (odd)");
    denoise->add_option("--in", den.in, "Count image")->required();
    denoise->add_option("--out", den.out, "Output intensity image")->required();
    denoise->add_option("--emit-step1", den.emit_step1, "Write the first-step output");
    denoise->add_option("--truth", den.truth, "True intensities, enables NMISE logging");

    OracleArgs ora;
    auto* oracle = app.add_subcommand("oracle", "Oracle filter driven by the true intensities");
    add_common(oracle, ora.common);
    add_filter_options(oracle, ora.filter, "Search window side M, or a sweep A..B");
    oracle->add_option("--step", ora.step, "Sweep step for --M A..B")->capture_default_str();
    oracle->add_option("--in", ora.in, "Count image")->required();
    oracle->add_option("--truth", ora.truth, "True intensities")->required();
    oracle->add_option("--out", ora.out, "Output intensity image (single --M only)");

    EvaluateArgs eva;
    auto* evaluate = app.add_subcommand("evaluate", "NMISE and MSE of an estimate against the truth");
    add_common(evaluate, eva.common);
    evaluate->add_option("--estimate", eva.estimate, "Estimated intensities")->required();
    evaluate->add_option("--truth", eva.truth, "True intensities")->required();
    evaluate->add_option("--markdown", eva.markdown, "Write a markdown table");
    evaluate->add_option("--map", eva.map, "Write the per-pixel normalized squared error map");

    BenchmarkArgs ben;
    auto* benchmark = app.add_subcommand("benchmark", "Scenes x seeds NMISE table");
    add_common(benchmark, ben.common);
    add_filter_options(benchmark, ben.filter, "Search window side M (odd)");
    benchmark->add_option("--manifest", ben.manifest, "Flat 'key = value' manifest (scenes, seeds, size, filter keys)");
    benchmark->add_option("--scenes", ben.scenes, "Comma-separated scene specs");
    benchmark->add_option("--seeds", ben.seeds, "Seeds: '1,2,3' or '1..5'");
    benchmark->add_option("--size", ben.size, "Scene size ROWSxCOLS")->capture_default_str();
    benchmark->add_flag("--oracle", ben.oracle, "Also run the oracle filter");
    benchmark->add_option("--out", ben.out, "Per-run CSV");
    benchmark->add_option("--markdown", ben.markdown, "Summary table (mean ± sample stddev)");

    const Io io{out, err};
    try {
        auto args = expand_config(raw_args);
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
        if (simulate->parsed()) run_simulate(sim, io);
        else if (denoise->parsed()) run_denoise(den, io);
        else if (oracle->parsed()) run_oracle(ora, io);
        else if (evaluate->parsed()) run_evaluate(eva, io);
        else if (benchmark->parsed()) run_benchmark(ben, io);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace owpnf::cli
