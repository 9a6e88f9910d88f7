#include "mse/csv.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "mse/errors.hpp"

namespace mse {

namespace {

// Reads one record; returns false on clean EOF before any character.
bool read_record(std::istream& in, char delim, std::vector<std::string>& fields, int record_no) {
    fields.clear();
    std::string field;
    bool in_quotes = false;
    int c = in.get();
    if (c == EOF) return false;
    while (true) {
        if (c == EOF) {
            if (in_quotes) {
                throw ParseError("unterminated quoted field", record_no, 1);
            }
            fields.push_back(std::move(field));
            return true;
        }
        const char ch = static_cast<char>(c);
        if (in_quotes) {
            if (ch == '"') {
                const int peek = in.peek();
                if (peek == '"') {
                    in.get();
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(ch);
            }
        } else if (ch == '"' && field.empty()) {
            in_quotes = true;
        } else if (ch == delim) {
            fields.push_back(std::move(field));
            field.clear();
        } else if (ch == '\n') {
            fields.push_back(std::move(field));
            return true;
        } else if (ch == '\r') {
            if (in.peek() == '\n') in.get();
            fields.push_back(std::move(field));
            return true;
        } else {
            field.push_back(ch);
        }
        c = in.get();
    }
}

bool parse_int(const std::string& s, long& out) {
    if (s.empty()) return false;
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (errno != 0 || end != s.c_str() + s.size()) return false;
    out = v;
    return true;
}

double parse_feature(const std::string& s, int row, int col) {
    if (s.empty()) throw ParseError("empty feature field", row, col);
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (errno != 0 || end != s.c_str() + s.size()) {
        throw ParseError("field is not a number: \"" + s + "\"", row, col);
    }
    if (!std::isfinite(v)) {
        throw ParseError("feature value is not finite: \"" + s + "\"", row, col);
    }
    return v;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

LoadedCsv parse_csv(std::istream& in, const CsvOptions& opts) {
    LoadedCsv out;
    std::vector<std::string> fields;
    int record_no = 0;
    int width = -1;
    int label_col = -1;
    std::vector<std::string> raw_labels;

    if (opts.header) {
        ++record_no;
        if (!read_record(in, opts.delimiter, fields, record_no)) {
            throw ParseError("empty input: missing header record", record_no, 1);
        }
        width = static_cast<int>(fields.size());
        if (!opts.label_name.empty()) {
            const auto it = std::find(fields.begin(), fields.end(), opts.label_name);
            if (it == fields.end()) {
                throw ParseError("label column \"" + opts.label_name + "\" not found in header",
                                 record_no, 1);
            }
            label_col = static_cast<int>(it - fields.begin());
        } else if (opts.label_index >= 0) {
            label_col = opts.label_index;
        }
        if (label_col >= width) {
            throw ParseError("label column index out of range", record_no, label_col + 1);
        }
        for (int i = 0; i < width; ++i) {
            if (i != label_col) out.columns.push_back(fields[i]);
        }
    } else {
        if (!opts.label_name.empty()) {
            throw InvalidArgument("label column by name needs a header row");
        }
        if (opts.label_index >= 0) label_col = opts.label_index;
    }

    while (true) {
        ++record_no;
        if (!read_record(in, opts.delimiter, fields, record_no)) break;
        if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
        if (width < 0) {
            width = static_cast<int>(fields.size());
            if (label_col >= width) {
                throw ParseError("label column index out of range", record_no, label_col + 1);
            }
        }
        if (static_cast<int>(fields.size()) != width) {
            throw ParseError("record has " + std::to_string(fields.size()) + " fields, expected " +
                                 std::to_string(width),
                             record_no, 1);
        }
        std::vector<double> row;
        row.reserve(static_cast<std::size_t>(width) - (label_col >= 0 ? 1 : 0));
        for (int i = 0; i < width; ++i) {
            if (i == label_col) {
                raw_labels.push_back(fields[i]);
            } else {
                row.push_back(parse_feature(fields[i], record_no, i + 1));
            }
        }
        if (row.empty()) {
            throw ParseError("record has no feature fields", record_no, 1);
        }
        out.rows.push_back(std::move(row));
    }

    if (out.rows.empty()) {
        throw ParseError("no data records", record_no, 1);
    }

    if (label_col >= 0) {
        bool all_int = true;
        std::vector<long> ints(raw_labels.size());
        for (std::size_t i = 0; i < raw_labels.size(); ++i) {
            if (!parse_int(raw_labels[i], ints[i])) {
                all_int = false;
                break;
            }
        }
        out.labels.reserve(raw_labels.size());
        if (all_int) {
            for (long v : ints) out.labels.push_back(static_cast<int>(v));
        } else {
            std::map<std::string, int> seen;
            for (const std::string& s : raw_labels) {
                auto it = seen.find(s);
                if (it == seen.end()) {
                    it = seen.emplace(s, static_cast<int>(out.label_names.size())).first;
                    out.label_names.push_back(s);
                }
                out.labels.push_back(it->second);
            }
        }
    }
    return out;
}

LoadedCsv load_csv(const std::string& path, const CsvOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    return parse_csv(in, opts);
}

void write_points_csv(const std::string& path, const std::vector<std::vector<double>>& rows,
                      const std::vector<int>* labels) {
    if (labels && labels->size() != rows.size()) {
        throw InvalidArgument("label count does not match row count");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    const std::size_t dim = rows.empty() ? 0 : rows.front().size();
    for (std::size_t j = 0; j < dim; ++j) {
        if (j) out << ',';
        out << 'x' << j;
    }
    if (labels) out << ",label";
    out << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != dim) throw InvalidArgument("ragged rows");
        for (std::size_t j = 0; j < dim; ++j) {
            if (j) out << ',';
            out << format_double(rows[i][j]);
        }
        if (labels) out << ',' << (*labels)[i];
        out << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

void write_labels_csv(std::ostream& out, const std::vector<int>& labels) {
    out << "row,label\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out << i << ',' << labels[i] << '\n';
    }
}

void write_labels_csv(const std::string& path, const std::vector<int>& labels) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    write_labels_csv(out, labels);
    if (!out) throw IoError("write failed: " + path);
}

std::vector<int> load_labels_csv(const std::string& path, int expected_n) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);

    std::vector<std::string> fields;
    int record_no = 0;
    std::vector<std::pair<long, long>> pairs;
    bool first = true;
    while (true) {
        ++record_no;
        if (!read_record(in, ',', fields, record_no)) break;
        if (fields.size() == 1 && fields[0].empty()) continue;
        if (first && fields.size() == 2 && fields[0] == "row" && fields[1] == "label") {
            first = false;
            continue;
        }
        first = false;
        if (fields.size() != 2) {
            throw ParseError("label record needs exactly two fields (row, label)", record_no, 1);
        }
        long row = 0, label = 0;
        if (!parse_int(fields[0], row)) {
            throw ParseError("row id is not an integer: \"" + fields[0] + "\"", record_no, 1);
        }
        if (!parse_int(fields[1], label)) {
            throw ParseError("label is not an integer: \"" + fields[1] + "\"", record_no, 2);
        }
        pairs.emplace_back(row, label);
    }
    if (pairs.empty()) throw ParseError("no label records", record_no, 1);

    const long n = (expected_n >= 0) ? expected_n : static_cast<long>(pairs.size());
    if (static_cast<long>(pairs.size()) != n) {
        throw InvalidDataset("label file has " + std::to_string(pairs.size()) +
                             " records, expected " + std::to_string(n));
    }
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const auto& [row, label] : pairs) {
        if (row < 0 || row >= n) {
            throw InvalidDataset("row id " + std::to_string(row) + " outside 0.." +
                                 std::to_string(n - 1));
        }
        if (seen[static_cast<std::size_t>(row)]) {
            throw InvalidDataset("duplicate row id " + std::to_string(row));
        }
        seen[static_cast<std::size_t>(row)] = 1;
        labels[static_cast<std::size_t>(row)] = static_cast<int>(label);
    }
    return labels;
}

}  // namespace mse
