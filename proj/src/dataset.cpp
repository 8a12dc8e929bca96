#include "sbcn/dataset.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sbcn/errors.hpp"

namespace sbcn {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

} // namespace

ObservationMatrix::ObservationMatrix(int m, int k, std::vector<std::string> column_labels)
    : m_(m), k_(k), labels_(std::move(column_labels)) {
    if (m < 1) throw std::invalid_argument("ObservationMatrix: sample count must be >= 1");
    if (k < 2) throw std::invalid_argument("ObservationMatrix: variable count must be >= 2");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != k)
        throw std::invalid_argument("ObservationMatrix: label count does not match variable count");
    words_per_row_ = (k + 63) / 64;
    bits_.assign(static_cast<size_t>(m) * words_per_row_, 0);
}

ObservationMatrix ObservationMatrix::from_rows(const std::vector<std::vector<int>>& rows,
                                               std::vector<std::string> column_labels) {
    if (rows.empty()) throw std::invalid_argument("ObservationMatrix: no rows");
    const int k = static_cast<int>(rows.front().size());
    ObservationMatrix d(static_cast<int>(rows.size()), k, std::move(column_labels));
    for (size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != k)
            throw std::invalid_argument("ObservationMatrix: ragged rows");
        for (int c = 0; c < k; ++c) {
            const int v = rows[r][c];
            if (v != 0 && v != 1)
                throw std::invalid_argument("ObservationMatrix: cell values must be 0 or 1");
            if (v) d.set_cell(static_cast<int>(r), c, true);
        }
    }
    return d;
}

void ObservationMatrix::check_cell(int row, int col) const {
    if (row < 0 || row >= m_ || col < 0 || col >= k_)
        throw std::out_of_range("ObservationMatrix: cell index out of range");
}

void ObservationMatrix::set_cell(int row, int col, bool value) {
    check_cell(row, col);
    uint64_t& w = bits_[static_cast<size_t>(row) * words_per_row_ + (col >> 6)];
    const uint64_t mask = uint64_t{1} << (col & 63);
    if (value)
        w |= mask;
    else
        w &= ~mask;
}

int ObservationMatrix::column_ones(int col) const {
    check_cell(0, col);
    int n = 0;
    for (int r = 0; r < m_; ++r) n += cell(r, col);
    return n;
}

std::string ObservationMatrix::column_label(int col) const {
    check_cell(0, col);
    if (static_cast<int>(labels_.size()) == k_) return labels_[col];
    return "g" + std::to_string(col);
}

ObservationMatrix ObservationMatrix::load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open dataset file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str());
}

ObservationMatrix ObservationMatrix::parse_csv(const std::string& text) {
    std::stringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw DataError("dataset CSV is empty", 1);
    const std::vector<std::string> labels = split_commas(line);
    const int k = static_cast<int>(labels.size());
    if (k < 2) throw DataError("dataset CSV needs at least 2 columns", 1);

    std::vector<std::vector<int>> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::vector<std::string> fields = split_commas(line);
        if (static_cast<int>(fields.size()) != k)
            throw DataError("row has " + std::to_string(fields.size()) + " fields, expected " +
                                std::to_string(k),
                            line_no);
        std::vector<int> row(k);
        for (int c = 0; c < k; ++c) {
            if (fields[c] == "0")
                row[c] = 0;
            else if (fields[c] == "1")
                row[c] = 1;
            else
                throw DataError("non-binary cell '" + fields[c] + "'", line_no, c + 1);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw DataError("dataset CSV has a header but no data rows", 1);
    return from_rows(rows, labels);
}

void ObservationMatrix::save_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write dataset file: " + path);
    out << to_csv();
}

std::string ObservationMatrix::to_csv() const {
    std::string s;
    for (int c = 0; c < k_; ++c) {
        if (c) s += ',';
        s += column_label(c);
    }
    s += '\n';
    for (int r = 0; r < m_; ++r) {
        for (int c = 0; c < k_; ++c) {
            if (c) s += ',';
            s += cell(r, c) ? '1' : '0';
        }
        s += '\n';
    }
    return s;
}

} // namespace sbcn
