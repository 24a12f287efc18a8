#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mssom/errors.hpp"

namespace mssom {

inline constexpr int kNumPhases = 6;

// 0=TXI 1=TOF 2=ICL 3=APR 4=LDG 5=ENR; fixed for the whole run and
// serialized with every report.
std::string_view phase_name(int code);
int phase_code(std::string_view name);

// One per-second sensor row. label == -1 means unlabeled.
struct FlightFrame {
    std::vector<double> features;
    int label = -1;
    std::string source_file;
    long row_index = 0;

    bool labeled() const { return label >= 0; }
};

struct Dataset {
    std::vector<FlightFrame> frames;
    std::vector<std::string> feature_names;
    long dropped_rows = 0;

    std::size_t dims() const { return feature_names.size(); }
    bool empty() const { return frames.empty(); }
};

std::array<long, kNumPhases> class_histogram(const Dataset& d);

struct LabelBudget {
    LabelBudget(int per_class, std::uint64_t seed);

    int per_class;
    std::uint64_t seed;
};

struct LabeledSample {
    std::string source_file;
    long row_index = 0;
    std::vector<double> features;
    int label = 0;
};

struct LabelDraw {
    std::vector<LabeledSample> labeled;
    Dataset remainder;
};

// Feature schema for the flight CSVs: the 48 sensor columns, in file order.
const std::vector<std::string>& flight_feature_schema();

Dataset load_flight_csv(const std::string& path, const std::vector<std::string>& schema);

// Reads the header to discover the feature columns (everything except FlPhase).
Dataset load_flight_csv(const std::string& path);

void write_csv(const Dataset& d, const std::string& path);

// Per-class uniform draw without replacement; drawn rows are removed from
// the remainder. Each class uses its own seed stream so adding a class
// never perturbs another class's draw.
LabelDraw sample_labels_per_class(const Dataset& d, const LabelBudget& budget);

// Isotropic unit-variance Gaussian blobs with pairwise center distance
// >= separation.
Dataset generate_synthetic(const std::array<long, kNumPhases>& n_per_class,
                           std::size_t dims, double separation, std::uint64_t seed);

}  // namespace mssom
