#ifndef SBCN_DATASET_HPP
#define SBCN_DATASET_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sbcn {

// M x K binary mutation matrix: rows are samples, columns are variables
// (genes). Bit-packed row-major so scoring can pull whole rows as words.
// Immutable in practice once built; the GA and scorers only read it.
class ObservationMatrix {
public:
    ObservationMatrix(int m, int k, std::vector<std::string> column_labels = {});

    static ObservationMatrix from_rows(const std::vector<std::vector<int>>& rows,
                                       std::vector<std::string> column_labels = {});

    int sample_count() const { return m_; }
    int variable_count() const { return k_; }

    bool cell(int row, int col) const {
        return (bits_[static_cast<size_t>(row) * words_per_row_ + (col >> 6)] >> (col & 63)) & 1u;
    }
    void set_cell(int row, int col, bool value);

    /// Number of ones in a column.
    int column_ones(int col) const;

    // Packed access for the scoring hot path.
    int words_per_row() const { return words_per_row_; }
    const uint64_t* row(int r) const { return bits_.data() + static_cast<size_t>(r) * words_per_row_; }

    const std::vector<std::string>& column_labels() const { return labels_; }
    std::string column_label(int col) const;

    bool operator==(const ObservationMatrix& other) const {
        return m_ == other.m_ && k_ == other.k_ && bits_ == other.bits_;
    }

    // --- CSV: first line = gene names, then M lines of K 0/1 values --------
    static ObservationMatrix load_csv(const std::string& path);
    static ObservationMatrix parse_csv(const std::string& text);
    void save_csv(const std::string& path) const;
    std::string to_csv() const;

private:
    void check_cell(int row, int col) const;

    int m_ = 0;
    int k_ = 0;
    int words_per_row_ = 0;
    std::vector<uint64_t> bits_;
    std::vector<std::string> labels_;
};

} // namespace sbcn

#endif
