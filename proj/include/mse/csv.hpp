#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mse {

struct CsvOptions {
    bool header = true;
    char delimiter = ',';
    // Label column selection: a name (needs a header) or a zero-based
    // index; empty name and negative index mean no label column.
    std::string label_name;
    int label_index = -1;
};

struct LoadedCsv {
    std::vector<std::vector<double>> rows;      // feature columns only
    std::vector<std::string> columns;           // feature column names, empty without header
    std::vector<int> labels;                    // empty when no label column was requested
    std::vector<std::string> label_names;       // category name per label id, when non-numeric
};

// RFC 4180 style parsing: quoted fields may contain delimiters, quotes
// (doubled) and newlines; both \n and \r\n records are accepted. Feature
// fields must parse as finite numbers. Errors carry 1-based row/column
// positions. Numeric label columns keep their integer values; anything
// else is mapped to ids in order of first appearance.
LoadedCsv load_csv(const std::string& path, const CsvOptions& opts = {});
LoadedCsv parse_csv(std::istream& in, const CsvOptions& opts = {});

void write_points_csv(const std::string& path, const std::vector<std::vector<double>>& rows,
                      const std::vector<int>* labels = nullptr);

// Label files pair each row id with its cluster label, header "row,label".
void write_labels_csv(const std::string& path, const std::vector<int>& labels);
void write_labels_csv(std::ostream& out, const std::vector<int>& labels);

// Reads a labels file and checks it covers rows 0..n-1 exactly once
// (any n when expected_n < 0).
std::vector<int> load_labels_csv(const std::string& path, int expected_n = -1);

}  // namespace mse
